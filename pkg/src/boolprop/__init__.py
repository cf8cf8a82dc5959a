"""Boolean analogical proportions a:b::c:d in structures (B, F, B0)."""

from boolprop.axioms import AXIOM_IDS, AxiomReport, audit, check_axiom, check_monotonicity
from boolprop.clone import (
    TermFunctionSet,
    common_generalizations,
    enumerate_term_functions,
    generalizations,
)
from boolprop.engine import (
    QUADRUPLES,
    Engine,
    Justification,
    JustificationSet,
    ProportionVerdict,
    directed_proportion,
    explain,
    functional_solution,
    justification_set,
    proportion,
    solve,
    stable_arity_check,
)
from boolprop.formula import FunctionTable, evaluate, lower, parse_formula
from boolprop.reference import comparison_table, klein, miclet
from boolprop.structure import ARITY_CAP, DEFAULT_ARITY, StructureSpec, all_structures, parse_structure

__all__ = [
    "ARITY_CAP",
    "AXIOM_IDS",
    "AxiomReport",
    "DEFAULT_ARITY",
    "Engine",
    "FunctionTable",
    "Justification",
    "JustificationSet",
    "ProportionVerdict",
    "QUADRUPLES",
    "StructureSpec",
    "TermFunctionSet",
    "all_structures",
    "audit",
    "check_axiom",
    "check_monotonicity",
    "common_generalizations",
    "comparison_table",
    "directed_proportion",
    "enumerate_term_functions",
    "evaluate",
    "explain",
    "functional_solution",
    "generalizations",
    "justification_set",
    "klein",
    "lower",
    "miclet",
    "parse_formula",
    "parse_structure",
    "proportion",
    "solve",
    "stable_arity_check",
]
