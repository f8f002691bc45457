from fractions import Fraction

import pytest

from qzeta import (
    NumericalData,
    Poly,
    RatFunc,
    check_alpha_condition,
    classify_poles,
    graph_from_spec,
    insert_hj_chains,
    rupture_components,
    top_residue,
    ztop,
    ztop_nc_quotient,
)
from qzeta.errors import OrderTwo, ZeroDenominatorForm


def lin(nu, N):
    return Poly.linear_form(Fraction(nu), Fraction(N))


def test_ztop_x4y6(graph_x4y6):
    assert ztop(graph_x4y6) == RatFunc(lin(7, 3), Poly.const(4) * lin(1, 1) * lin(7, 6))


def test_ztop_x4y10(graph_x4y10):
    assert ztop(graph_x4y10) == RatFunc(Poly.const(1), Poly.const(6) * lin(1, 1))


def test_ztop_downstairs(pair_x4y6, pair_x4y10):
    assert ztop(pair_x4y6.graph_down) == RatFunc(Poly.const(1), Poly.const(2) * lin(1, 1))
    assert ztop(pair_x4y10.graph_down) == RatFunc(
        lin(32, 29), Poly.const(12) * lin(1, 1) * lin(8, 5)
    )


def test_ztop_invariance_under_chains(graph_x4y6, graph_x4y10, pair_x4y6, pair_x4y10):
    for g in (graph_x4y6, graph_x4y10, pair_x4y6.graph_down, pair_x4y10.graph_down):
        assert ztop(insert_hj_chains(g)) == ztop(g)
        assert g.candidate_poles() <= insert_hj_chains(g).candidate_poles()


def test_ztop_nc_quotient():
    one = ztop_nc_quotient(1, NumericalData(3, 1), NumericalData(0, 1))
    assert one == RatFunc(Poly.const(1), lin(1, 3))
    d = ztop_nc_quotient(5, NumericalData(2, 3), NumericalData(1, 7))
    assert d == RatFunc(Poly.const(5), lin(3, 2) * lin(7, 1))
    four = ztop_nc_quotient(4, NumericalData(1, 1), NumericalData(1, 1))
    assert four == RatFunc(Poly.const(4), lin(1, 1) * lin(1, 1))
    with pytest.raises(ZeroDenominatorForm):
        ztop_nc_quotient(2, NumericalData(0, 0), NumericalData(1, 1))


def test_top_residue_fixtures(graph_x4y6, graph_x4y10):
    assert top_residue(graph_x4y10, Fraction(-8, 5)) == 0
    assert top_residue(graph_x4y6, Fraction(-7, 6)) == Fraction(-7, 8)
    # residues agree with the reduced rational function
    assert ztop(graph_x4y6).residue(Fraction(-7, 6)) == Fraction(-7, 8)


def test_residue_two_point_component_vanishes():
    g = graph_from_spec(
        {
            "components": [
                {"id": "E", "kind": "exceptional", "N": 1, "nu": 1},
                {"id": "A", "kind": "strict_D", "N": 1, "nu": 2},
                {"id": "B", "kind": "strict_D", "N": 1, "nu": 0},
            ],
            "points": [
                {"id": "p", "local_type": (1, 0, 0), "incident": ("E", "A")},
                {"id": "q", "local_type": (1, 0, 0), "incident": ("E", "B")},
            ],
        }
    )
    # alpha values at E are +1 and -1: the contribution of E cancels
    assert top_residue(g, Fraction(-1)) == 0


def test_classify_poles_fixture_sets(graph_x4y6, graph_x4y10, pair_x4y6):
    up = classify_poles(graph_x4y6)
    assert up.motivic_poles() == {Fraction(-1): 1, Fraction(-7, 6): 1}
    down = classify_poles(pair_x4y6.graph_down)
    assert down.motivic_poles() == {Fraction(-1): 1}
    up2 = classify_poles(graph_x4y10)
    assert up2.motivic_poles() == {Fraction(-1): 1, Fraction(-8, 5): 1}
    assert up2.entry(Fraction(-8, 5)).top_order == 0
    assert up2.entry(Fraction(-8, 5)).witnesses == (("E", "rupture"),)


def test_classify_normal_crossing_double_pole():
    # ordinary blow-up of D = {x=0} {y=0}: all ratios -1, order two
    from qzeta import PLANE, DivisorSpec, weighted_blowup

    g = weighted_blowup(PLANE, DivisorSpec(pq=(1, 1), axis_x=(1, 0), axis_y=(1, 0)))
    rep = classify_poles(g)
    assert rep.motivic_poles() == {Fraction(-1): 2}
    assert rep.top_poles() == {Fraction(-1): 2}
    with pytest.raises(OrderTwo):
        top_residue(g, Fraction(-1))


def test_classify_cycle_clause():
    g = graph_from_spec(
        {
            "components": [
                {"id": "E1", "kind": "exceptional", "N": 1, "nu": 1},
                {"id": "E2", "kind": "exceptional", "N": 1, "nu": 1},
            ],
            "points": [
                {"id": "p", "local_type": (1, 0, 0), "incident": ("E1", "E2")},
                {"id": "q", "local_type": (1, 0, 0), "incident": ("E1", "E2")},
            ],
        }
    )
    rep = classify_poles(g)
    assert rep.entry(Fraction(-1)).motivic_order == 2


def test_rupture_components(graph_x4y6, pair_x4y6):
    assert rupture_components(graph_x4y6) == ["E"]
    # downstairs the alpha-value 1 at the order-4 point kills rupture
    assert rupture_components(pair_x4y6.graph_down) == []


def test_alpha_condition(graph_x4y6, graph_x4y10):
    ok, viol = check_alpha_condition(graph_x4y6)
    assert not ok and any("2" in v for v in viol)
    ok2, _ = check_alpha_condition(graph_x4y10)
    assert not ok2


def test_top_order_bounded_by_motivic(graph_x4y6, graph_x4y10, pair_x4y6, pair_x4y10):
    for g in (graph_x4y6, graph_x4y10, pair_x4y6.graph_down, pair_x4y10.graph_down):
        for e in classify_poles(g).entries:
            assert e.top_order <= e.motivic_order


def test_non_rational_clause_motivic_only():
    # genus-one exceptional curve: motivic pole via the non-rational clause,
    # invisible at the topological level, with a nonzero Hodge witness
    from qzeta import euler_specialize, graph_from_spec, hodge_residue

    g = graph_from_spec(
        {
            "components": [
                {"id": "E", "kind": "exceptional", "genus": 1, "N": 2, "nu": 2},
                {"id": "A", "kind": "strict_D", "N": 1, "nu": 2},
                {"id": "B", "kind": "strict_D", "N": 1, "nu": 2},
            ],
            "points": [
                {"id": "p", "local_type": (1, 0, 0), "incident": ("E", "A")},
                {"id": "q", "local_type": (1, 0, 0), "incident": ("E", "B")},
            ],
        }
    )
    rep = classify_poles(g)
    entry = rep.entry(Fraction(-1))
    assert entry.motivic_order == 1 and entry.top_order == 0
    assert entry.witnesses == (("E", "non-rational"),)
    assert top_residue(g, Fraction(-1)) == 0
    witness = hodge_residue(g, Fraction(-1))
    assert not witness.is_zero  # H-image is (u-1)(v-1)/N up to the prefactor
    assert euler_specialize(witness) == RatFunc.zero()
