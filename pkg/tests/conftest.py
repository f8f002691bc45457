from fractions import Fraction

import pytest

from qzeta import (
    PLANE,
    BranchEntry,
    CClass,
    DivisorSpec,
    DownDivisor,
    QuotientSetup,
    build_quotient,
    weighted_blowup,
)


def cusp_spec(pq, axis_w, n_branches=2):
    """D = product of n branches y^p = c x^q (N=1 each), W = axis_w * {x=0}."""
    branches = tuple(
        BranchEntry(f"b{k}", CClass("c", k), Fraction(1), Fraction(0))
        for k in range(n_branches)
    )
    return DivisorSpec(pq=pq, axis_x=(Fraction(0), Fraction(axis_w)), branches=branches)


@pytest.fixture
def spec_x4y6():
    """x^4 + y^6 with W = 3 {x=0}: the (12,14) example."""
    return cusp_spec((3, 2), 3)


@pytest.fixture
def spec_x4y10():
    """x^4 + y^10 with W = 5 {x=0}: the (20,32) example."""
    return cusp_spec((5, 2), 5)


@pytest.fixture
def graph_x4y6(spec_x4y6):
    return weighted_blowup(PLANE, spec_x4y6)


@pytest.fixture
def graph_x4y10(spec_x4y10):
    return weighted_blowup(PLANE, spec_x4y10)


@pytest.fixture
def setup_mu2():
    return QuotientSetup(2, 1, 1)


@pytest.fixture
def pair_x4y6(setup_mu2):
    dbar = DownDivisor(pq=(3, 2), branches=(("c", Fraction(1)),))
    wbar = DownDivisor(pq=(3, 2), axis_x=Fraction(3))
    return build_quotient(setup_mu2, dbar, wbar)


@pytest.fixture
def pair_x4y10(setup_mu2):
    dbar = DownDivisor(pq=(5, 2), branches=(("c", Fraction(1)),))
    wbar = DownDivisor(pq=(5, 2), axis_x=Fraction(5))
    return build_quotient(setup_mu2, dbar, wbar)
