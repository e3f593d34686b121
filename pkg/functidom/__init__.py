"""Domination in functigraphs C(G, f).

Exact domination numbers, the constructive dominating sets for cycle
functigraphs, and enumeration-based verification of their bounds.
"""
from .config import FUNCTIDOM_VERSION as __version__
from .constructions import Witness, certify
from .domsolve import DominationResult, SolveBudget, domination_number, gamma_exact, gamma_with_constraints
from .errors import (
    ConstructionError,
    FunctidomError,
    InfeasibleError,
    InvalidParameterError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
    UnsupportedSizeError,
)
from .functigraph import Functigraph, ThreeTranslate, VertexMap, build_functigraph, cycle_functigraph
from .graphcore import Graph, VertexSet, build_cycle, build_path, is_dominating
from .theorems import TheoremVerdict

__all__ = [
    "__version__",
    "ConstructionError",
    "DominationResult",
    "Functigraph",
    "FunctidomError",
    "Graph",
    "InfeasibleError",
    "InvalidParameterError",
    "ParseError",
    "PreconditionError",
    "ResourceLimitError",
    "SolveBudget",
    "TheoremVerdict",
    "ThreeTranslate",
    "UnsupportedSizeError",
    "VertexMap",
    "VertexSet",
    "Witness",
    "build_cycle",
    "build_functigraph",
    "build_path",
    "certify",
    "cycle_functigraph",
    "domination_number",
    "gamma_exact",
    "gamma_with_constraints",
    "is_dominating",
]
