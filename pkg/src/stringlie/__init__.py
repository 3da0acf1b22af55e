"""Exact string bracket of closed curves carried by an oriented ribbon graph."""

from .algebra import StringSum, bracket, dot_product, is_simple, jacobi_residual, self_linked_count
from .complex import (
    GraphError,
    GraphParseError,
    RibbonGraph,
    cyclic_order,
    parse_graph,
    sign_of_branch,
    trivalent_resolution,
    validate_graph,
)
from .cover import (
    axis_of,
    bracket_self_inverse_via_cover,
    c_curves,
    check_formula2,
    orientation_class,
    t0_elements,
    t1_elements,
)
from .linked import LinkedPair, classify_pair, lp1, lp2
from .words import (
    StringClass,
    canonical_string,
    concat,
    cyclic_reduce,
    invert,
    is_primitive,
    length,
    power,
    reduce,
)

__all__ = [
    "GraphError", "GraphParseError", "LinkedPair", "RibbonGraph", "StringClass", "StringSum",
    "axis_of", "bracket", "bracket_self_inverse_via_cover", "c_curves", "canonical_string",
    "check_formula2", "classify_pair", "concat", "cyclic_order", "cyclic_reduce", "dot_product",
    "invert", "is_primitive", "is_simple", "jacobi_residual", "length", "lp1", "lp2",
    "orientation_class", "parse_graph", "power", "reduce", "self_linked_count", "sign_of_branch",
    "t0_elements", "t1_elements", "trivalent_resolution", "validate_graph",
]
