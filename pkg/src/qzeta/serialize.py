"""Versioned JSON (de)serialization.

Rational numbers travel as "p/q" strings to avoid float loss; unknown
fields in input documents are rejected.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclic import CyclicType
from .engraph import ENGraph
from .errors import InputError
from .quotient import CorrespondenceTable, QuotientPair, TheoremReport
from .ratfunc import RatFunc
from .resolution import ResolutionGraph, graph_from_spec
from .zeta import PoleReport

GRAPH_SCHEMA = "qres-graph/1"
INSTANCE_SCHEMA = "qres-instance/1"


def frac_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def frac_from_str(s) -> Fraction:
    if isinstance(s, bool):
        raise InputError(f"expected a rational, got {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"invalid rational {s!r}") from exc
    raise InputError(f"expected a rational as 'p/q' string or integer, got {s!r}")


def check_keys(obj: dict, allowed: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise InputError(f"{where}: unknown fields {sorted(unknown)}")


def cyclic_to_json(t: CyclicType) -> dict:
    return {
        "m": t.m,
        "a": t.a,
        "b": t.b,
        "axis_swap": t.axis_swap,
        "e1": t.e1,
        "e2": t.e2,
    }


def cyclic_from_json(obj: dict, where: str = "cyclic_type") -> CyclicType:
    check_keys(obj, {"m", "a", "b", "axis_swap", "e1", "e2"}, where)
    return CyclicType(
        int(obj["m"]),
        int(obj["a"]),
        int(obj["b"]),
        bool(obj.get("axis_swap", False)),
        int(obj.get("e1", 1)),
        int(obj.get("e2", 1)),
    )


def graph_to_json(graph: ResolutionGraph) -> dict:
    return {
        "schema": GRAPH_SCHEMA,
        "ambient": cyclic_to_json(graph.ambient),
        "components": [
            {
                "id": c.id,
                "kind": c.kind,
                "genus": c.genus,
                "N": frac_to_str(c.data.N),
                "nu": frac_to_str(c.data.nu),
                "log_discrepancy": (
                    frac_to_str(c.log_discrepancy) if c.log_discrepancy is not None else None
                ),
                "label": c.label,
                "self_intersection": (
                    frac_to_str(c.self_intersection)
                    if c.self_intersection is not None
                    else None
                ),
            }
            for c in graph.components
        ],
        "points": [
            {
                "id": p.id,
                "local_type": cyclic_to_json(p.local_type),
                "incident": list(p.incident),
            }
            for p in graph.points
        ],
    }


def graph_from_json(obj: dict) -> ResolutionGraph:
    check_keys(obj, {"schema", "ambient", "components", "points"}, "graph")
    if obj.get("schema") != GRAPH_SCHEMA:
        raise InputError(f"unsupported graph schema {obj.get('schema')!r}")
    comps = []
    for c in obj["components"]:
        check_keys(
            c,
            {"id", "kind", "genus", "N", "nu", "log_discrepancy", "label", "self_intersection"},
            f"component {c.get('id')!r}",
        )
        comps.append(
            {
                "id": c["id"],
                "kind": c["kind"],
                "genus": int(c.get("genus", 0)),
                "N": frac_from_str(c["N"]),
                "nu": frac_from_str(c["nu"]),
                "log_discrepancy": (
                    frac_from_str(c["log_discrepancy"])
                    if c.get("log_discrepancy") is not None
                    else None
                ),
                "label": c.get("label", ""),
                "self_intersection": (
                    frac_from_str(c["self_intersection"])
                    if c.get("self_intersection") is not None
                    else None
                ),
            }
        )
    points = []
    for p in obj.get("points", []):
        check_keys(p, {"id", "local_type", "incident"}, f"point {p.get('id')!r}")
        points.append(
            {
                "id": p["id"],
                "local_type": cyclic_from_json(p["local_type"], f"point {p['id']!r}"),
                "incident": p["incident"],
            }
        )
    ambient = cyclic_from_json(obj["ambient"], "ambient") if obj.get("ambient") else None
    return graph_from_spec({"ambient": ambient, "components": comps, "points": points})


def pole_report_to_json(report: PoleReport) -> dict:
    return {
        "entries": [
            {
                "s0": frac_to_str(e.s0),
                "top_order": e.top_order,
                "motivic_order": e.motivic_order,
                "witnesses": [list(w) for w in e.witnesses],
                "residue": frac_to_str(e.residue) if e.residue is not None else None,
            }
            for e in report.entries
        ]
    }


def table_to_json(table: CorrespondenceTable) -> dict:
    return {
        "d": table.d,
        "exceptional_ramification": table.e_exc,
        "components": [
            {"up": list(r.up_ids), "down": r.down_id, "e": r.e, "r": r.r}
            for r in table.components
        ],
        "points": [
            {
                "up": list(r.up_ids),
                "down": r.down_id,
                "n": r.n,
                "m": r.m,
                "m_bar": r.m_bar,
                "r": r.r,
                "e_pair": list(r.e_pair),
            }
            for r in table.points
        ],
    }


def _evidence_to_json(value):
    if isinstance(value, Fraction):
        return frac_to_str(value)
    if isinstance(value, RatFunc):
        return value.render()
    if isinstance(value, dict):
        return {
            (frac_to_str(k) if isinstance(k, Fraction) else str(k)): _evidence_to_json(v)
            for k, v in value.items()
        }
    if isinstance(value, (set, frozenset)):
        return sorted(_evidence_to_json(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_evidence_to_json(v) for v in value]
    return value


def theorem_report_to_json(report: TheoremReport) -> dict:
    return {
        "theorem": report.theorem,
        "verdict": report.verdict,
        "evidence": _evidence_to_json(report.evidence),
    }


def quotient_pair_to_json(pair: QuotientPair) -> dict:
    return {
        "setup": {"d": pair.setup.d, "a": pair.setup.a, "b": pair.setup.b},
        "graph_up": graph_to_json(pair.graph_up),
        "graph_down": graph_to_json(pair.graph_down),
        "table": table_to_json(pair.table),
    }


def engraph_to_json(en: ENGraph) -> dict:
    return {
        "vertices": [
            {
                "id": v.id,
                "style": v.style,
                "ratio": frac_to_str(v.ratio) if v.ratio is not None else "oo",
                "dashed": v.dashed,
            }
            for v in en.vertices
        ],
        "edges": [
            {"v1": e.v1, "v2": e.v2, "order": e.order, "dashed": e.dashed}
            for e in en.edges
        ],
    }
