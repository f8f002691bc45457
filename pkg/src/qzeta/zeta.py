"""Topological zeta functions, residues, and pole classification.

The topological zeta function of a pair (D, W) read off an embedded
Q-resolution is

    sum_{E_i exceptional} chi(E_i^o) / (nu_i + N_i s)
    + sum_{P marked} m_P / ((nu_1 + N_1 s)(nu_2 + N_2 s)),

with the two linear forms at a point taken from its incident components
(imaginary curvette (0,1) for a missing incidence).  Pole orders of the
reduced rational function are the source of truth on the topological side;
the combinatorial classification below decides the motivic side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import OrderTwo, ZeroAlpha, ZeroDenominatorForm
from .ratfunc import Poly, RatFunc
from .resolution import NumericalData, ResolutionGraph


def _form(data: NumericalData) -> Poly:
    return Poly.linear_form(data.nu, data.N)


def ztop(graph: ResolutionGraph) -> RatFunc:
    """Exact topological zeta function of the pair carried by the graph."""
    for comp in graph.components:
        if comp.data.is_zero_form:
            raise ZeroDenominatorForm(f"component {comp.id!r} has data (0,0)")
    total = RatFunc.zero()
    for comp in graph.exceptional:
        chi = graph.euler_open(comp.id)
        if chi:
            total = total + RatFunc(Poly.const(chi), _form(comp.data))
    for point in graph.points:
        d1, d2 = graph.incident_data(point)
        total = total + RatFunc(Poly.const(point.order), _form(d1) * _form(d2))
    return total


def ztop_nc_quotient(group_order: int, d1: NumericalData, d2: NumericalData) -> RatFunc:
    """|G| / ((nu_1 + N_1 s)(nu_2 + N_2 s)) for a Q-normal-crossing pair.

    Valid for non-small diagonal actions as well; data are the exponents of
    the pair seen through the covering by the plane.
    """
    if d1.is_zero_form or d2.is_zero_form:
        raise ZeroDenominatorForm("normal-crossing datum (0,0)")
    return RatFunc(Poly.const(group_order), _form(d1) * _form(d2))


def realizing_components(graph: ResolutionGraph, s0: Fraction):
    return [
        c
        for c in graph.components
        if c.data.N != 0 and c.data.nu + c.data.N * s0 == 0
    ]


def _has_intersecting_pair(graph: ResolutionGraph, realizing_ids: set[str]) -> bool:
    for p in graph.points:
        if len(p.incident) == 2 and set(p.incident) <= realizing_ids:
            return True
    return False


def top_residue(graph: ResolutionGraph, s0) -> Fraction:
    """Residue of the topological zeta function at a candidate pole s0.

    Exceptional components contribute (1/N)(chi(E^o) + sum_P 1/alpha_P) and
    strict transforms 1/(N alpha) against their adjacent component.  Only
    defined when no two realizing components intersect (order two) and no
    alpha-value at a realizing component vanishes.
    """
    s0 = Fraction(s0)
    realizing = realizing_components(graph, s0)
    ids = {c.id for c in realizing}
    if _has_intersecting_pair(graph, ids):
        raise OrderTwo(f"two intersecting components realize s0 = {s0}")
    total = Fraction(0)
    for comp in realizing:
        alphas = graph.alpha_values(comp.id)
        if any(a == 0 for a in alphas.values()):
            raise ZeroAlpha(f"vanishing alpha-value on {comp.id!r} at s0 = {s0}")
        if comp.is_exceptional:
            total += Fraction(graph.euler_open(comp.id) + sum(Fraction(1) / a for a in alphas.values()), 1) / comp.data.N
        else:
            total += sum(Fraction(1) / a for a in alphas.values()) / comp.data.N
    return total


def rupture_components(graph: ResolutionGraph) -> list[str]:
    """Rational exceptional components with >= 3 marked points of alpha != 1."""
    out = []
    for comp in graph.exceptional:
        if comp.genus != 0 or comp.data.N == 0:
            continue
        alphas = graph.alpha_values(comp.id)
        if sum(1 for a in alphas.values() if a != 1) >= 3:
            out.append(comp.id)
    return out


def check_alpha_condition(graph: ResolutionGraph) -> tuple[bool, list[str]]:
    """nu > 0 on every component and alpha < 1 at every exceptional point."""
    violations = []
    for comp in graph.components:
        if comp.data.nu <= 0:
            violations.append(f"component {comp.id}: nu = {comp.data.nu} <= 0")
    for comp in graph.exceptional:
        if comp.data.N == 0:
            continue
        for pid, a in graph.alpha_values(comp.id).items():
            if a >= 1:
                violations.append(f"alpha({pid}|{comp.id}) = {a} >= 1")
    return (not violations, violations)


def _exceptional_cycle_ids(graph: ResolutionGraph, ids: set[str]) -> bool:
    """Whether the realizing rational exceptional curves contain a cycle."""
    verts = {
        c.id
        for c in graph.exceptional
        if c.id in ids and c.genus == 0
    }
    edges = []
    for p in graph.points:
        if len(p.incident) == 2 and set(p.incident) <= verts:
            edges.append(tuple(p.incident))
    # union-find over multigraph; any edge joining already-connected vertices closes a cycle
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return True
        parent[ra] = rb
    return False


@dataclass(frozen=True)
class PoleEntry:
    s0: Fraction
    top_order: int
    motivic_order: int
    witnesses: tuple[tuple[str, str], ...]  # (component id, clause)
    residue: Fraction | None


@dataclass(frozen=True)
class PoleReport:
    entries: tuple[PoleEntry, ...]

    def motivic_poles(self) -> dict[Fraction, int]:
        return {e.s0: e.motivic_order for e in self.entries if e.motivic_order > 0}

    def top_poles(self) -> dict[Fraction, int]:
        return {e.s0: e.top_order for e in self.entries if e.top_order > 0}

    def entry(self, s0) -> PoleEntry:
        s0 = Fraction(s0)
        for e in self.entries:
            if e.s0 == s0:
                return e
        raise KeyError(s0)


def classify_poles(graph: ResolutionGraph) -> PoleReport:
    """Pole report across the motivic and topological levels.

    Motivic order 2 iff two intersecting components realize s0; order 1 iff
    one of the clauses fires: (i) a strict transform inside D or D cap W,
    (ii) a non-rational exceptional curve, (iii) a cycle of rational
    exceptional curves, (iv) a rupture component.  Topological orders are
    read off the reduced rational function.
    """
    z = ztop(graph)
    top = z.poles()
    rupture = set(rupture_components(graph))
    entries = []
    for s0 in sorted(graph.candidate_poles(), reverse=True):
        realizing = realizing_components(graph, s0)
        ids = {c.id for c in realizing}
        witnesses: list[tuple[str, str]] = []
        if _has_intersecting_pair(graph, ids):
            mot = 2
            witnesses = [(c.id, "intersecting-pair") for c in realizing]
        else:
            mot = 0
            for comp in realizing:
                if comp.kind in ("strict_D", "strict_DW"):
                    witnesses.append((comp.id, "strict-transform"))
                elif comp.is_exceptional and comp.genus > 0:
                    witnesses.append((comp.id, "non-rational"))
                elif comp.id in rupture:
                    witnesses.append((comp.id, "rupture"))
            if _exceptional_cycle_ids(graph, ids):
                witnesses.append((sorted(ids)[0], "cycle"))
            if witnesses:
                mot = 1
        residue = None
        if mot < 2:
            try:
                residue = top_residue(graph, s0)
            except (OrderTwo, ZeroAlpha):
                residue = None
        entry = PoleEntry(
            s0=s0,
            top_order=top.get(s0, 0),
            motivic_order=mot,
            witnesses=tuple(witnesses),
            residue=residue,
        )
        if entry.top_order > entry.motivic_order:
            raise AssertionError(
                f"topological order exceeds motivic order at s0 = {s0}"
            )
        # order-two poles coincide on both levels: the coefficient of the
        # squared factor is a sum of positive point multiplicities
        if (entry.top_order == 2) != (entry.motivic_order == 2):
            raise AssertionError(f"order-two sets disagree at s0 = {s0}")
        entries.append(entry)
    return PoleReport(tuple(entries))
