"""Exhaustive audit of a structure's proportion relation against the axiom battery."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Mapping

from boolprop.engine import QUADRUPLES, Engine, Quadruple
from boolprop.structure import BOOLS, DEFAULT_ARITY, StructureSpec

Relation = Mapping[Quadruple, bool]

AXIOM_IDS = (
    "symmetry",
    "reflexivity",
    "outer_reflexivity",
    "determinism",
    "outer_transitivity",
    "outer_symmetry",
    "central_permutation",
    "strong_reflexivity",
    "strong_outer_reflexivity",
)


class UnknownAxiomError(KeyError):
    pass


class NotSubstructureError(ValueError):
    pass


@dataclass(frozen=True)
class AxiomEntry:
    axiom: str
    holds: bool
    counterexamples: tuple[tuple[int, ...], ...]

    def as_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "holds": self.holds,
            "counterexamples": [list(t) for t in self.counterexamples],
        }


@dataclass(frozen=True)
class AxiomReport:
    structure: StructureSpec
    arity: int
    entries: tuple[AxiomEntry, ...]

    def __getitem__(self, axiom: str) -> AxiomEntry:
        for e in self.entries:
            if e.axiom == axiom:
                return e
        raise UnknownAxiomError(axiom)

    @property
    def all_hold(self) -> bool:
        return all(e.holds for e in self.entries)


def _paired(image: Callable[[Quadruple], Quadruple]) -> Callable[[Relation], list]:
    """Biconditional axiom P(q) <=> P(image(q)); every quadruple where the two differ."""

    def check(rel: Relation) -> list:
        return [q for q in QUADRUPLES if rel[q] != rel[image(q)]]

    return check


def _reflexivity(rel: Relation) -> list:
    return [(a, a, c, c) for a in BOOLS for c in BOOLS if not rel[a, a, c, c]]


def _outer_reflexivity(rel: Relation) -> list:
    return [(a, b, a, b) for a in BOOLS for b in BOOLS if not rel[a, b, a, b]]


def _determinism(rel: Relation) -> list:
    return [(a, a, a, d) for a in BOOLS for d in BOOLS if rel[a, a, a, d] != (d == a)]


def _strong_reflexivity(rel: Relation) -> list:
    return [(a, b, c, d) for a, b, c, d in QUADRUPLES if a == b and rel[a, b, c, d] and d != c]


def _strong_outer_reflexivity(rel: Relation) -> list:
    return [(a, b, c, d) for a, b, c, d in QUADRUPLES if a == c and rel[a, b, c, d] and d != b]


def _outer_transitivity(rel: Relation) -> list:
    out = []
    for a, b, c, d, e, f in itertools.product(BOOLS, repeat=6):
        if rel[a, b, c, d] and rel[c, d, e, f] and not rel[a, b, e, f]:
            out.append((a, b, c, d, e, f))
    return out


_CHECKS: dict[str, Callable[[Relation], list]] = {
    "symmetry": _paired(lambda q: (q[1], q[0], q[3], q[2])),
    "reflexivity": _reflexivity,
    "outer_reflexivity": _outer_reflexivity,
    "determinism": _determinism,
    "outer_transitivity": _outer_transitivity,
    "outer_symmetry": _paired(lambda q: (q[2], q[3], q[0], q[1])),
    "central_permutation": _paired(lambda q: (q[0], q[2], q[1], q[3])),
    "strong_reflexivity": _strong_reflexivity,
    "strong_outer_reflexivity": _strong_outer_reflexivity,
}


def axiom_counterexamples(axiom_id: str, rel: Relation) -> tuple[tuple[int, ...], ...]:
    """Violations of one axiom by an arbitrary relation on the 16 quadruples.

    For the biconditional axioms (symmetry, outer symmetry, central permutation)
    a quadruple is listed when its verdict differs from its image's, so both
    members of a violating pair appear.  Outer transitivity lists sextuples.
    """
    try:
        check = _CHECKS[axiom_id]
    except KeyError:
        raise UnknownAxiomError(f"unknown axiom {axiom_id!r}; expected one of {AXIOM_IDS}") from None
    return tuple(check(rel))


def _entry(axiom_id: str, rel: Relation) -> AxiomEntry:
    cex = axiom_counterexamples(axiom_id, rel)
    return AxiomEntry(axiom_id, not cex, cex)


def check_axiom(s: StructureSpec, axiom_id: str, n: int = DEFAULT_ARITY) -> AxiomEntry:
    if axiom_id not in _CHECKS:
        raise UnknownAxiomError(f"unknown axiom {axiom_id!r}; expected one of {AXIOM_IDS}")
    return _entry(axiom_id, Engine(s, n).relation())


def check_monotonicity(s: StructureSpec, s_prime: StructureSpec, n: int = DEFAULT_ARITY) -> AxiomEntry:
    """Quadruples in proportion in ``s`` but not in the larger ``s_prime``."""
    if not s <= s_prime:
        raise NotSubstructureError(f"{s.name} is not a substructure of {s_prime.name}")
    small = Engine(s, n).relation()
    large = small if s == s_prime else Engine(s_prime, n).relation()
    cex = tuple(q for q in QUADRUPLES if small[q] and not large[q])
    return AxiomEntry("monotonicity", not cex, cex)


def audit(s: StructureSpec, n: int = DEFAULT_ARITY) -> AxiomReport:
    rel = Engine(s, n).relation()
    return AxiomReport(s, n, tuple(_entry(a, rel) for a in AXIOM_IDS))
