"""Exact enumeration and construction of binary words avoiding a factor."""

from .pattern import (
    Pattern,
    autocorrelation,
    avoider_table,
    avoiding_words,
    correlation_polynomial,
    count_by_automaton,
    count_by_enumeration,
)
from .paths import (
    AnnotatedPath,
    ConstructionNode,
    build_tree,
    copies_census,
    survivors,
    zero1_forward,
    zero1_inverse,
)
from .riordan import (
    RiordanTriangle,
    family_a,
    family_d,
    family_h,
    family_triangle,
    family_z,
    from_dh,
    triangles_from_table,
)
from .rules import (
    Label,
    LevelCensus,
    RuleSpec,
    avoid_rule,
    catalan_marked_rule,
    catalan_plain_rule,
    expand,
    motzkin_jump_rule,
)
from .series import BSeries, USeries, solve_polynomial
from .verify import CheckResult, run_checks

__all__ = [
    "AnnotatedPath",
    "BSeries",
    "CheckResult",
    "ConstructionNode",
    "Label",
    "LevelCensus",
    "Pattern",
    "RiordanTriangle",
    "RuleSpec",
    "USeries",
    "autocorrelation",
    "avoid_rule",
    "avoider_table",
    "avoiding_words",
    "build_tree",
    "catalan_marked_rule",
    "catalan_plain_rule",
    "copies_census",
    "correlation_polynomial",
    "count_by_automaton",
    "count_by_enumeration",
    "expand",
    "family_a",
    "family_d",
    "family_h",
    "family_triangle",
    "family_z",
    "from_dh",
    "motzkin_jump_rule",
    "run_checks",
    "solve_polynomial",
    "survivors",
    "triangles_from_table",
    "zero1_forward",
    "zero1_inverse",
]

__version__ = "0.1.0"
