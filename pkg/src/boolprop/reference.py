"""Closed-form boolean proportions of Klein and of Miclet and Prade, and the comparison table.

These are computed straight from their defining formulas with Python integer
arithmetic so that agreement with the engine is an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass

from boolprop.engine import QUADRUPLES, Engine, Quadruple
from boolprop.structure import DEFAULT_ARITY, StructureSpec


def _equiv(x: int, y: int) -> int:
    return 1 if x == y else 0


def klein(a: int, b: int, c: int, d: int) -> int:
    """(a ≡ b) ≡ (c ≡ d)."""
    return _equiv(_equiv(a, b), _equiv(c, d))


def miclet(a: int, b: int, c: int, d: int) -> int:
    """Klein's form conjoined with (a xor b) ⊃ (a ≡ c)."""
    changes = a ^ b
    same_sense = (1 - changes) | _equiv(a, c)
    return klein(a, b, c, d) & same_sense


NEG_STRUCTURE = StructureSpec(frozenset({"neg"}), frozenset({0, 1}))
FULL_STRUCTURE = StructureSpec(frozenset({"or", "neg"}), frozenset({0, 1}))


@dataclass(frozen=True)
class ComparisonRow:
    quadruple: Quadruple
    miclet: bool
    klein: bool
    neg_structure: bool
    full_structure: bool


def comparison_table(n: int = DEFAULT_ARITY) -> list[ComparisonRow]:
    """The 16 rows in standard row order, engine columns taken with constants {0, 1}."""
    neg = Engine(NEG_STRUCTURE, n).relation()
    full = Engine(FULL_STRUCTURE, n).relation()
    return [
        ComparisonRow(q, bool(miclet(*q)), bool(klein(*q)), neg[q], full[q]) for q in QUADRUPLES
    ]
