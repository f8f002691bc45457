"""Instance files: the CLI's JSON input format."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import InputError
from .quotient import DownDivisor, QuotientSetup
from .resolution import BranchEntry, CClass, DivisorSpec, ResolutionGraph
from .serialize import INSTANCE_SCHEMA, check_keys, frac_from_str, graph_from_json


@dataclass(frozen=True)
class Instance:
    path: str
    surface: QuotientSetup | None  # None for the plane
    mode: str  # "weighted_homogeneous" | "explicit_graph"
    spec: DivisorSpec | None
    down_pair: tuple[DownDivisor, DownDivisor] | None
    graph: ResolutionGraph | None

    @property
    def is_quotient(self) -> bool:
        return self.surface is not None


def _parse_axis(obj, where: str):
    if obj is None:
        return (frac_from_str(0), frac_from_str(0))
    check_keys(obj, {"N", "w"}, where)
    return (frac_from_str(obj.get("N", 0)), frac_from_str(obj.get("w", 0)))


def _parse_branches(items, where: str):
    out = []
    for i, b in enumerate(items or []):
        check_keys(b, {"label", "N", "w", "c"}, f"{where}.branches[{i}]")
        label = str(b.get("label", f"b{i}"))
        c = b.get("c")
        if c is None:
            cclass = CClass(label, 0)
        else:
            check_keys(c, {"family", "k"}, f"{where}.branches[{i}].c")
            cclass = CClass(str(c.get("family", label)), int(c.get("k", 0)))
        out.append(
            BranchEntry(label, cclass, frac_from_str(b.get("N", 0)), frac_from_str(b.get("w", 0)))
        )
    return tuple(out)


def load_instance(path: str | Path) -> Instance:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{path}: instance must be a JSON object")
    check_keys(doc, {"schema", "surface", "mode", "divisor", "graph"}, str(path))
    if doc.get("schema") != INSTANCE_SCHEMA:
        raise InputError(f"{path}: unsupported schema {doc.get('schema')!r}")

    surf = doc.get("surface") or {"kind": "plane"}
    check_keys(surf, {"kind", "d", "a", "b"}, f"{path}: surface")
    kind = surf.get("kind")
    if kind == "plane":
        setup = None
    elif kind == "cyclic_quotient":
        setup = QuotientSetup(int(surf["d"]), int(surf["a"]), int(surf["b"]))
    else:
        raise InputError(f"{path}: unknown surface kind {kind!r}")

    mode = doc.get("mode", "weighted_homogeneous")
    if mode == "explicit_graph":
        if "graph" not in doc:
            raise InputError(f"{path}: explicit_graph mode requires a graph")
        graph = graph_from_json(doc["graph"])
        return Instance(str(path), setup, mode, None, None, graph)
    if mode != "weighted_homogeneous":
        raise InputError(f"{path}: unknown mode {mode!r}")

    div = doc.get("divisor")
    if div is None:
        raise InputError(f"{path}: weighted_homogeneous mode requires a divisor")
    check_keys(div, {"pq", "axis_x", "axis_y", "branches"}, f"{path}: divisor")
    pq = div.get("pq", [1, 1])
    if not (isinstance(pq, list) and len(pq) == 2):
        raise InputError(f"{path}: divisor.pq must be a pair")
    pq = (int(pq[0]), int(pq[1]))
    axis_x = _parse_axis(div.get("axis_x"), f"{path}: divisor.axis_x")
    axis_y = _parse_axis(div.get("axis_y"), f"{path}: divisor.axis_y")
    branches = _parse_branches(div.get("branches"), f"{path}: divisor")
    spec = DivisorSpec(pq=pq, axis_x=axis_x, axis_y=axis_y, branches=branches)

    down_pair = None
    if setup is not None:
        dbar = DownDivisor(
            pq=pq,
            axis_x=axis_x[0],
            axis_y=axis_y[0],
            branches=tuple((b.label, b.N) for b in branches),
        )
        wbar = DownDivisor(
            pq=pq,
            axis_x=axis_x[1],
            axis_y=axis_y[1],
            branches=tuple((b.label, b.w) for b in branches),
        )
        down_pair = (dbar, wbar)
    return Instance(str(path), setup, mode, spec, down_pair, None)
