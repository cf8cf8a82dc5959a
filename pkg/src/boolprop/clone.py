"""Term functions of a boolean structure at a fixed arity.

The term functions of (B, F, B0) at arity n are the smallest set of n-ary
tables containing the projections and the constants in B0, closed under the
pointwise operations in F.  Each table gets a representative term of minimal
size; ties go to the smallest term under the order
constants < variables < negations < disjunctions, then children left to right.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from boolprop.formula import Const, Formula, FunctionTable, Neg, Or, Var, full_mask
from boolprop.structure import ARITY_CAP, DEFAULT_ARITY, ArityError, StructureSpec, check_arity

__all__ = [
    "ARITY_CAP",
    "DEFAULT_ARITY",
    "ArityError",
    "TermFunctionSet",
    "enumerate_term_functions",
    "generalizations",
    "common_generalizations",
    "term_key",
]

_KIND_RANK = {Const: 0, Var: 1, Neg: 2, Or: 3}


def term_key(f: Formula) -> tuple:
    """Total order on primitive terms: size first, then kind, then children."""
    if isinstance(f, Const):
        return (1, 0, f.value)
    if isinstance(f, Var):
        return (1, 1, f.index)
    if isinstance(f, Neg):
        k = term_key(f.child)
        return (k[0] + 1, 2, k)
    if isinstance(f, Or):
        kl, kr = term_key(f.left), term_key(f.right)
        return (kl[0] + kr[0] + 1, 3, kl, kr)
    raise TypeError(f"term_key expects a primitive term, got {type(f).__name__}")


@dataclass(frozen=True)
class TermFunctionSet:
    structure: StructureSpec
    arity: int
    tables: frozenset[FunctionTable]
    representative: dict[FunctionTable, Formula] = field(compare=False, repr=False)

    @property
    def ordered(self) -> tuple[FunctionTable, ...]:
        """Tables sorted by their representative terms."""
        return tuple(sorted(self.tables, key=lambda t: term_key(self.representative[t])))

    def __len__(self) -> int:
        return len(self.tables)

    def __contains__(self, t: object) -> bool:
        return t in self.tables

    def __iter__(self):
        return iter(self.ordered)


def _closure(s: StructureSpec, seeds: set[int], n: int) -> set[int]:
    full = full_mask(n)
    closed = set(seeds)
    frontier = set(seeds)
    while frontier:
        new: set[int] = set()
        if s.has_neg:
            new |= {full & ~t for t in frontier}
        if s.has_or:
            new |= {t | u for t in frontier for u in closed}
        frontier = new - closed
        closed |= frontier
    return closed


def enumerate_term_functions(
    s: StructureSpec, n: int = DEFAULT_ARITY, *, cap: int = ARITY_CAP
) -> TermFunctionSet:
    check_arity(n, minimum=1, cap=cap)
    full = full_mask(n)

    atoms: list[Formula] = [Const(c) for c in sorted(s.consts)]
    atoms += [Var(i) for i in range(n)]
    atom_bits = {a: _atom_bits(a, n) for a in atoms}
    target = _closure(s, set(atom_bits.values()), n)

    # levels[k]: newly reached tables with minimal term size k, as (bits, term)
    reps: dict[int, Formula] = {}
    levels: dict[int, list[tuple[int, Formula]]] = {}

    def settle(k: int, candidates: list[tuple[int, Formula]]) -> None:
        best: dict[int, tuple[tuple, Formula]] = {}
        for bits, term in candidates:
            if bits in reps:
                continue
            key = term_key(term)
            if bits not in best or key < best[bits][0]:
                best[bits] = (key, term)
        level = sorted(((b, t) for b, (_, t) in best.items()), key=lambda bt: term_key(bt[1]))
        for bits, term in level:
            reps[bits] = term
        levels[k] = level

    settle(1, [(atom_bits[a], a) for a in atoms])
    k = 1
    while len(reps) < len(target):
        k += 1
        candidates: list[tuple[int, Formula]] = []
        if s.has_neg:
            candidates += [(full & ~b, Neg(t)) for b, t in levels[k - 1]]
        if s.has_or:
            for i in range(1, k - 1):
                for bl, tl in levels[i]:
                    for br, tr in levels[k - 1 - i]:
                        candidates.append((bl | br, Or(tl, tr)))
        settle(k, candidates)

    representative = {FunctionTable(n, b): t for b, t in reps.items()}
    return TermFunctionSet(s, n, frozenset(representative), representative)


def _atom_bits(a: Formula, n: int) -> int:
    if isinstance(a, Const):
        return FunctionTable.constant(n, a.value).bits
    return FunctionTable.projection(n, a.index).bits


def generalizations(s: StructureSpec, a: int, n: int = DEFAULT_ARITY) -> frozenset[FunctionTable]:
    """Term functions that take the value ``a`` at some assignment."""
    return frozenset(t for t in enumerate_term_functions(s, n).tables if t.attains(a))


def common_generalizations(
    s: StructureSpec, a: int, c: int, n: int = DEFAULT_ARITY
) -> frozenset[FunctionTable]:
    return generalizations(s, a, n) & generalizations(s, c, n)
