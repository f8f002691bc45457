from fractions import Fraction

import pytest

from qzeta import Poly, RatFunc
from qzeta.errors import InputError


def lin(nu, N):
    return Poly.linear_form(Fraction(nu), Fraction(N))


def test_poly_arithmetic():
    p = lin(7, 6) * lin(1, 1)
    assert p.coeffs == (Fraction(7), Fraction(13), Fraction(6))
    q, r = p.divmod(lin(1, 1))
    assert r.is_zero and q == lin(7, 6)
    assert p.eval(Fraction(-1)) == 0
    assert p.derivative() == Poly([13, 12])


def test_poly_gcd_and_roots():
    p = lin(1, 1) * lin(1, 1) * lin(7, 6)
    g = p.gcd(lin(1, 1) * lin(8, 5))
    assert g == lin(1, 1).monic()
    roots = p.rational_roots()
    assert roots == {Fraction(-1): 2, Fraction(-7, 6): 1}


def test_ratfunc_reduction_and_equality():
    z = RatFunc(lin(3, 0) * lin(1, 1), lin(1, 1) * lin(2, 1) * lin(1, 1))
    w = RatFunc(Poly.const(3), lin(2, 1) * lin(1, 1))
    assert z == w
    assert (z - w).is_zero
    assert z + RatFunc.zero() == z


def test_ratfunc_poles_and_residue():
    z = RatFunc(lin(7, 3), lin(1, 1) * lin(7, 6) * Poly.const(4))
    assert z.poles() == {Fraction(-1): 1, Fraction(-7, 6): 1}
    assert z.pole_order(Fraction(-1)) == 1
    assert z.residue(Fraction(-7, 6)) == Fraction(-7, 8)
    assert z.residue(Fraction(-2)) == 0
    with pytest.raises(InputError):
        (RatFunc(Poly.const(1), lin(1, 1) * lin(1, 1))).residue(-1)


def test_render_canonical_fixtures():
    z1 = RatFunc(lin(7, 3), Poly.const(4) * lin(1, 1) * lin(7, 6))
    assert z1.render() == "(3s+7)/(4(s+1)(6s+7))"
    z2 = RatFunc(Poly.const(1), Poly.const(6) * lin(1, 1))
    assert z2.render() == "1/(6(s+1))"
    z3 = RatFunc(lin(32, 29), Poly.const(12) * lin(1, 1) * lin(8, 5))
    assert z3.render() == "(29s+32)/(12(s+1)(5s+8))"
    sq = RatFunc(lin(4, 6), lin(1, 2) * lin(1, 2))
    assert sq.render() == "2(3s+2)/(2s+1)^2"


def test_render_constant_and_zero():
    assert RatFunc.const(Fraction(3, 2)).render() == "3/2"
    assert RatFunc.zero().render() == "0"
    assert RatFunc(Poly.const(4), lin(1, 1) * lin(1, 1)).render() == "4/(s+1)^2"
