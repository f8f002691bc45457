"""Extended weighted Eisenbud-Neumann decorated graphs.

Vertices are the components of a resolution graph (solid for exceptional
curves, arrows for strict transforms, dashed when the component lies in the
support of W only), each decorated with the ratio nu/N (infinity when
N = 0).  Marked points become edges decorated with their orders; a point on
a single component gets a dashed edge towards an open vertex decorated with
infinity.

``en_analyze`` checks tree-ness, locates the maximal subgraph of vertices
of minimal ratio, matches its shape, and verifies that ratios strictly
increase along paths leaving it.  The last two checks are meaningful only
under the alpha-condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .resolution import ResolutionGraph
from .zeta import check_alpha_condition


@dataclass(frozen=True)
class ENVertex:
    id: str
    style: str  # "solid" | "arrow" | "open"
    ratio: Fraction | None  # None renders as oo
    dashed: bool = False


@dataclass(frozen=True)
class ENEdge:
    v1: str
    v2: str
    order: int
    dashed: bool = False


@dataclass(frozen=True)
class ENGraph:
    vertices: tuple[ENVertex, ...]
    edges: tuple[ENEdge, ...]

    def vertex(self, vid: str) -> ENVertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def adjacency(self) -> dict[str, list[str]]:
        adj: dict[str, list[str]] = {v.id: [] for v in self.vertices}
        for e in self.edges:
            adj[e.v1].append(e.v2)
            adj[e.v2].append(e.v1)
        return adj

    def is_tree(self) -> bool:
        if not self.vertices:
            return True
        adj = self.adjacency()
        seen = set()
        stack = [self.vertices[0].id]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(w for w in adj[v] if w not in seen)
        return len(seen) == len(self.vertices) and len(self.edges) == len(self.vertices) - 1


def en_graph(graph: ResolutionGraph) -> ENGraph:
    vertices = []
    for comp in graph.components:
        if comp.is_exceptional:
            style, dashed = "solid", False
        else:
            style = "arrow"
            dashed = comp.kind in ("strict_W", "branch_curve")
        vertices.append(ENVertex(comp.id, style, comp.data.ratio, dashed))
    edges = []
    for p in graph.points:
        if len(p.incident) == 2:
            dashed = any(
                graph.component(c).kind in ("strict_W", "branch_curve")
                for c in p.incident
            )
            edges.append(ENEdge(p.incident[0], p.incident[1], p.order, dashed))
        elif len(p.incident) == 1:
            open_id = f"oo_{p.id}"
            vertices.append(ENVertex(open_id, "open", None))
            edges.append(ENEdge(p.incident[0], open_id, p.order, True))
    return ENGraph(tuple(vertices), tuple(edges))


def en_analyze(en: ENGraph, graph: ResolutionGraph | None = None) -> dict:
    """Tree-ness, minimal-subgraph shape (1)-(4), and ratio monotonicity.

    Shape and monotonicity are computed only when the underlying resolution
    satisfies the alpha-condition (pass ``graph`` to check it); a cycle
    coexisting with the alpha-condition is reported as a contradiction.
    """
    result: dict = {
        "is_tree": en.is_tree(),
        "alpha_condition": None,
        "minimal_subgraph_shape": None,
        "monotone": None,
        "contradiction": False,
    }
    if graph is not None:
        ok, _ = check_alpha_condition(graph)
        result["alpha_condition"] = ok
        if not ok:
            return result
    if not result["is_tree"]:
        result["contradiction"] = bool(result["alpha_condition"])
        return result

    finite = [v for v in en.vertices if v.ratio is not None]
    if not finite:
        return result
    min_ratio = min(v.ratio for v in finite)
    members = {v.id for v in finite if v.ratio == min_ratio}
    adj = en.adjacency()

    # connectivity of the minimal subgraph
    seen = set()
    stack = [next(iter(members))]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(w for w in adj[v] if w in members and w not in seen)
    if seen != members:
        result["minimal_subgraph_shape"] = "disconnected"
        return result

    result["minimal_subgraph_shape"] = _shape(en, members, adj)

    # ratios strictly increase along any path leaving the minimal subgraph
    monotone = True
    level = {v: Fraction(min_ratio) for v in members}
    frontier = list(members)
    visited = set(members)
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w in visited:
                    continue
                visited.add(w)
                rw = en.vertex(w).ratio
                if rw is not None and rw <= level[v]:
                    monotone = False
                level[w] = level[v] if rw is None else rw
                nxt.append(w)
        frontier = nxt
    result["monotone"] = monotone
    return result


def _shape(en: ENGraph, members: set[str], adj) -> str | int:
    """Match the minimal subgraph against the classified forms.

    Forms 1-4 are a single solid vertex, a solid path, a single arrow, and
    an arrow attached to a solid path.  A path between two arrows occurs
    exactly for pairs that are already Q-normal crossing at the origin
    (resolved here by a non-minimal blow-up); it is reported separately as
    "two-arrows".
    """
    styles = {v: en.vertex(v).style for v in members}
    if len(members) == 1:
        only = next(iter(members))
        return 3 if styles[only] == "arrow" else 1
    inner_deg = {v: sum(1 for w in adj[v] if w in members) for v in members}
    ends = [v for v in members if inner_deg[v] == 1]
    if any(d > 2 for d in inner_deg.values()) or len(ends) != 2:
        return "branched"
    arrow_ends = sum(1 for v in ends if styles[v] == "arrow")
    if arrow_ends == 0:
        return 2
    if arrow_ends == 1:
        return 4
    return "two-arrows"


def en_to_dot(en: ENGraph) -> str:
    """Graphviz rendering; solid/dashed styles follow the decorations."""

    def ratio_label(v: ENVertex) -> str:
        return "oo" if v.ratio is None else str(v.ratio)

    lines = ["graph en {", "  node [fontsize=10];"]
    for v in en.vertices:
        if v.style == "solid":
            attrs = f'shape=circle, style=filled, fillcolor=black, fontcolor=white, label="{ratio_label(v)}"'
        elif v.style == "arrow":
            dash = ", style=dashed" if v.dashed else ""
            attrs = f'shape=rarrow, label="{ratio_label(v)}"{dash}'
        else:
            attrs = 'shape=circle, label="oo"'
        lines.append(f'  "{v.id}" [{attrs}];')
    for e in en.edges:
        style = ' [style=dashed, label="%d"]' % e.order if e.dashed else f' [label="{e.order}"]'
        lines.append(f'  "{e.v1}" -- "{e.v2}"{style};')
    lines.append("}")
    return "\n".join(lines) + "\n"
