"""Boolean structures (B, F, B0) and the arity limits shared by all modules."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

BOOLS = (0, 1)
FUNCTION_SYMBOLS = ("or", "neg")

DEFAULT_ARITY = 2
ARITY_CAP = 3


class ArityError(ValueError):
    """Requested arity is outside 0..ARITY_CAP (or 1..ARITY_CAP where required)."""


class StructureSpecError(ValueError):
    """Malformed structure text such as ``"neg,B"`` or ``"B,0,0"``."""


def check_arity(n: int, *, minimum: int = 0, cap: int = ARITY_CAP) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ArityError(f"arity must be an int, got {n!r}")
    if n < minimum:
        raise ArityError(f"arity {n} is below the minimum {minimum}")
    if n > cap:
        raise ArityError(f"arity {n} exceeds the cap {cap}")
    return n


@dataclass(frozen=True)
class StructureSpec:
    """A boolean structure: the universe {0, 1} with function symbols and constants.

    ``funcs`` is a subset of ``{"or", "neg"}``; ``consts`` a subset of ``{0, 1}``.
    Structures are partially ordered by componentwise inclusion.
    """

    funcs: frozenset[str] = frozenset()
    consts: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "funcs", frozenset(self.funcs))
        object.__setattr__(self, "consts", frozenset(self.consts))
        bad = self.funcs - set(FUNCTION_SYMBOLS)
        if bad:
            raise StructureSpecError(f"unknown function symbols: {sorted(bad)}")
        if not self.consts <= set(BOOLS):
            raise StructureSpecError(f"constants must be among 0, 1: {sorted(self.consts)}")

    @classmethod
    def of(cls, *tokens) -> StructureSpec:
        """``StructureSpec.of("neg", 0)`` builds (B, neg, 0)."""
        funcs = {t for t in tokens if isinstance(t, str)}
        consts = {t for t in tokens if not isinstance(t, str)}
        return cls(frozenset(funcs), frozenset(consts))

    @property
    def has_or(self) -> bool:
        return "or" in self.funcs

    @property
    def has_neg(self) -> bool:
        return "neg" in self.funcs

    def __le__(self, other: StructureSpec) -> bool:
        return self.funcs <= other.funcs and self.consts <= other.consts

    def __lt__(self, other: StructureSpec) -> bool:
        return self <= other and self != other

    def _ordered_tokens(self) -> list[str]:
        toks = [f for f in FUNCTION_SYMBOLS if f in self.funcs]
        toks += [str(c) for c in BOOLS if c in self.consts]
        return toks

    @property
    def text(self) -> str:
        """Machine form accepted by :func:`parse_structure`, e.g. ``"B,or,neg,0"``."""
        return ",".join(["B", *self._ordered_tokens()])

    @property
    def name(self) -> str:
        """Display form, e.g. ``"(𝔹,∨,¬,0)"``."""
        sym = {"or": "∨", "neg": "¬"}
        toks = [sym.get(t, t) for t in self._ordered_tokens()]
        return "(" + ",".join(["𝔹", *toks]) + ")"

    def __str__(self) -> str:
        return self.name


def parse_structure(text: str) -> StructureSpec:
    """Parse comma-separated tokens from {B, or, neg, 0, 1}; ``B`` must come first."""
    tokens = [t.strip() for t in text.split(",")]
    if not tokens or tokens[0] != "B":
        raise StructureSpecError(f"structure {text!r} must start with the token 'B'")
    seen: set[str] = set()
    funcs: set[str] = set()
    consts: set[int] = set()
    for tok in tokens[1:]:
        if tok in seen or tok == "B":
            raise StructureSpecError(f"duplicate token {tok!r} in structure {text!r}")
        seen.add(tok)
        if tok in FUNCTION_SYMBOLS:
            funcs.add(tok)
        elif tok in ("0", "1"):
            consts.add(int(tok))
        else:
            raise StructureSpecError(f"unknown token {tok!r} in structure {text!r}")
    return StructureSpec(frozenset(funcs), frozenset(consts))


def all_structures() -> list[StructureSpec]:
    """All 16 structures (every function-symbol subset times every constant subset)."""
    func_sets = [(), ("neg",), ("or",), ("or", "neg")]
    const_sets = [(), (0,), (1,), (0, 1)]
    return [
        StructureSpec(frozenset(f), frozenset(c))
        for f, c in itertools.product(func_sets, const_sets)
    ]
