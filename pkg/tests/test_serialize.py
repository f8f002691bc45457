from fractions import Fraction

import pytest

from qzeta import insert_hj_chains
from qzeta.errors import InputError
from qzeta.serialize import (
    frac_from_str,
    frac_to_str,
    graph_from_json,
    graph_to_json,
    pole_report_to_json,
    table_to_json,
    theorem_report_to_json,
)


def test_fraction_round_trip():
    for x in (Fraction(3, 4), Fraction(-7, 6), Fraction(5), Fraction(0)):
        assert frac_from_str(frac_to_str(x)) == x
    assert frac_to_str(Fraction(-7, 6)) == "-7/6"
    with pytest.raises(InputError):
        frac_from_str("x")
    with pytest.raises(InputError):
        frac_from_str(1.5)


def test_graph_round_trip_plane(graph_x4y6):
    doc = graph_to_json(graph_x4y6)
    back = graph_from_json(doc)
    assert back.components == graph_x4y6.components
    assert back.points == graph_x4y6.points
    assert graph_to_json(back) == doc


def test_graph_round_trip_quotient_and_smooth(pair_x4y10):
    for g in (pair_x4y10.graph_down, insert_hj_chains(pair_x4y10.graph_down)):
        doc = graph_to_json(g)
        back = graph_from_json(doc)
        assert back.components == g.components
        assert back.points == g.points


def test_graph_rejects_unknown_fields(graph_x4y6):
    doc = graph_to_json(graph_x4y6)
    doc["components"][0]["mystery"] = 1
    with pytest.raises(InputError):
        graph_from_json(doc)


def test_report_serialization(pair_x4y6):
    from qzeta import classify_poles, verify_theorem, DownDivisor, QuotientSetup

    rep = pole_report_to_json(classify_poles(pair_x4y6.graph_down))
    assert {e["s0"] for e in rep["entries"]} == {"-1", "-7/6"}
    table = table_to_json(pair_x4y6.table)
    assert table["d"] == 2 and table["exceptional_ramification"] == 1
    trep = verify_theorem(
        "A",
        QuotientSetup(2, 1, 1),
        DownDivisor(pq=(3, 2), branches=(("c", Fraction(1)),)),
        DownDivisor(pq=(3, 2), axis_x=Fraction(3)),
    )
    js = theorem_report_to_json(trep)
    assert js["verdict"] == "holds"
    assert js["evidence"]["motivic_up"] == {"-1": 1, "-7/6": 1}
