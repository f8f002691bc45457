"""Exact Q-resolutions and zeta functions on cyclic quotient surface germs."""

from .cyclic import (
    PLANE,
    ActionSpec,
    CyclicType,
    HJChain,
    delta,
    hj_expand,
    normalize_type,
    smallify_action,
)
from .hodge import HodgeExpr, SFactor, euler_specialize, hodge_residue, hodge_zeta, s_factor
from .engraph import ENGraph, en_analyze, en_graph, en_to_dot
from .quotient import (
    CorrespondenceTable,
    DownDivisor,
    QuotientPair,
    QuotientSetup,
    TheoremReport,
    branch_orbit_analysis,
    build_quotient,
    exceptional_ramification,
    lift_pair,
    minus_branch_divisor,
    pathological_zeta,
    verify_correspondence,
    verify_theorem,
)
from .ratfunc import Poly, RatFunc
from .resolution import (
    BranchEntry,
    CClass,
    Component,
    DivisorSpec,
    MarkedPoint,
    NumericalData,
    ResolutionGraph,
    graph_from_spec,
    insert_hj_chains,
    validate_divisor,
    weighted_blowup,
)
from .zeta import (
    PoleEntry,
    PoleReport,
    check_alpha_condition,
    classify_poles,
    rupture_components,
    top_residue,
    ztop,
    ztop_nc_quotient,
)

__version__ = "0.1.0"

__all__ = [
    "ActionSpec",
    "BranchEntry",
    "CClass",
    "Component",
    "CorrespondenceTable",
    "CyclicType",
    "DivisorSpec",
    "DownDivisor",
    "ENGraph",
    "HJChain",
    "HodgeExpr",
    "MarkedPoint",
    "NumericalData",
    "PLANE",
    "PoleEntry",
    "PoleReport",
    "Poly",
    "QuotientPair",
    "QuotientSetup",
    "RatFunc",
    "ResolutionGraph",
    "SFactor",
    "TheoremReport",
    "branch_orbit_analysis",
    "build_quotient",
    "check_alpha_condition",
    "classify_poles",
    "delta",
    "en_analyze",
    "en_graph",
    "en_to_dot",
    "euler_specialize",
    "exceptional_ramification",
    "graph_from_spec",
    "hj_expand",
    "hodge_residue",
    "hodge_zeta",
    "insert_hj_chains",
    "lift_pair",
    "minus_branch_divisor",
    "normalize_type",
    "pathological_zeta",
    "rupture_components",
    "s_factor",
    "smallify_action",
    "top_residue",
    "validate_divisor",
    "verify_correspondence",
    "verify_theorem",
    "weighted_blowup",
    "ztop",
    "ztop_nc_quotient",
]
