"""Boolean formulas over variables z0, z1, ..., constants, negation and disjunction.

Conjunction, implication, equivalence and exclusive or are kept in the AST as
written and expand to negation and disjunction only when evaluated, lowered
or checked for admissibility.

Grammar (loosest to tightest)::

    equiv   := implies ("<->" implies)*
    implies := xor ("->" xor)*
    xor     := or ("^" or)*
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "~" unary | atom
    atom    := "z" DIGITS | "0" | "1" | "(" equiv ")"

All binary operators are left-associative.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from boolprop.structure import ARITY_CAP, ArityError, StructureSpec, check_arity


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownSymbolError(FormulaSyntaxError):
    pass


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Var:
    index: int


@dataclass(frozen=True, slots=True)
class Const:
    value: int


@dataclass(frozen=True, slots=True)
class Neg:
    child: Formula


@dataclass(frozen=True, slots=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Implies:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Equiv:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Xor:
    left: Formula
    right: Formula


Formula = Union[Var, Const, Neg, Or, And, Implies, Equiv, Xor]
_BINARY = (Or, And, Implies, Equiv, Xor)
_DERIVED = (And, Implies, Equiv, Xor)


def children(f: Formula) -> tuple[Formula, ...]:
    if isinstance(f, Neg):
        return (f.child,)
    if isinstance(f, _BINARY):
        return (f.left, f.right)
    return ()


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    for c in children(f):
        yield from subformulas(c)


def arity(f: Formula) -> int:
    """1 + the largest variable index, or 0 for a variable-free formula."""
    return max((g.index + 1 for g in subformulas(f) if isinstance(g, Var)), default=0)


def size(f: Formula) -> int:
    return 1 + sum(size(c) for c in children(f))


def expand_step(f: Formula) -> Formula:
    """Rewrite a derived connective at the root into negation and disjunction."""
    if isinstance(f, And):
        return Neg(Or(Neg(f.left), Neg(f.right)))
    if isinstance(f, Implies):
        return Or(Neg(f.left), f.right)
    if isinstance(f, Equiv):
        return expand_step(And(Implies(f.left, f.right), Implies(f.right, f.left)))
    if isinstance(f, Xor):
        return Or(And(f.left, Neg(f.right)), And(Neg(f.left), f.right))
    return f


def expand(f: Formula) -> Formula:
    """Fully expand derived connectives; the result uses only Var, Const, Neg, Or."""
    if isinstance(f, (Var, Const)):
        return f
    if isinstance(f, Neg):
        return Neg(expand(f.child))
    if isinstance(f, Or):
        return Or(expand(f.left), expand(f.right))
    return expand(expand_step(f))


def constants_of(f: Formula) -> frozenset[int]:
    return frozenset(g.value for g in subformulas(f) if isinstance(g, Const))


def connectives_of(f: Formula) -> frozenset[str]:
    """Primitive function symbols used after expansion."""
    used = set()
    for g in subformulas(expand(f)):
        if isinstance(g, Neg):
            used.add("neg")
        elif isinstance(g, Or):
            used.add("or")
    return frozenset(used)


def is_admissible(f: Formula, s: StructureSpec) -> bool:
    return constants_of(f) <= s.consts and connectives_of(f) <= s.funcs


# ---------------------------------------------------------------------------
# Semantics
# ---------------------------------------------------------------------------


def evaluate(f: Formula, e: Sequence[int] = ()) -> int:
    """Classical valuation of ``f`` under the assignment ``e`` (e[i] is the value of z_i)."""
    n = arity(f)
    if len(e) < n:
        raise ValueError(f"assignment of length {len(e)} is shorter than the formula arity {n}")
    return _eval(f, e)


def _eval(f: Formula, e: Sequence[int]) -> int:
    if isinstance(f, Var):
        return int(e[f.index])
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Neg):
        return 1 if _eval(f.child, e) == 0 else 0
    if isinstance(f, Or):
        return 0 if _eval(f.left, e) == 0 and _eval(f.right, e) == 0 else 1
    return _eval(expand_step(f), e)


def assignment(index: int, n: int) -> tuple[int, ...]:
    """Bits of ``index`` with variable 0 least significant."""
    return tuple((index >> i) & 1 for i in range(n))


def assignment_index(e: Sequence[int]) -> int:
    return sum(int(b) << i for i, b in enumerate(e))


@dataclass(frozen=True, slots=True)
class FunctionTable:
    """An n-ary boolean function stored as a 2^n-bit integer.

    Bit ``i`` of ``bits`` is the value at the assignment whose binary reading is
    ``i`` (variable 0 least significant).
    """

    arity: int
    bits: int

    def __post_init__(self) -> None:
        if self.arity < 0:
            raise ValueError("arity must be non-negative")
        if not 0 <= self.bits < (1 << (1 << self.arity)):
            raise ValueError(f"bits {self.bits:#x} do not fit 2^{self.arity} entries")

    @classmethod
    def from_values(cls, values: Sequence[int]) -> FunctionTable:
        n = len(values).bit_length() - 1
        if len(values) != 1 << n:
            raise ValueError(f"table length {len(values)} is not a power of two")
        if any(v not in (0, 1) for v in values):
            raise ValueError("table entries must be 0 or 1")
        return cls(n, sum(int(v) << i for i, v in enumerate(values)))

    @classmethod
    def constant(cls, n: int, value: int) -> FunctionTable:
        return cls(n, full_mask(n) if value else 0)

    @classmethod
    def projection(cls, n: int, i: int) -> FunctionTable:
        if not 0 <= i < n:
            raise ValueError(f"projection z{i} needs arity > {i}")
        return cls(n, sum(1 << k for k in range(1 << n) if (k >> i) & 1))

    @property
    def size(self) -> int:
        return 1 << self.arity

    @property
    def values(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.size))

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.size:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __invert__(self) -> FunctionTable:
        return FunctionTable(self.arity, full_mask(self.arity) & ~self.bits)

    def __or__(self, other: FunctionTable) -> FunctionTable:
        if other.arity != self.arity:
            raise ValueError("arity mismatch")
        return FunctionTable(self.arity, self.bits | other.bits)

    def attains(self, value: int) -> bool:
        return bool(self.bits) if value else self.bits != full_mask(self.arity)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.values)) + "]"


def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


def lower(f: Formula, n: int, *, cap: int = ARITY_CAP) -> FunctionTable:
    """The value table of ``f`` at arity ``n`` (extra variables are ignored by ``f``)."""
    check_arity(n, cap=cap)
    if arity(f) > n:
        raise ArityError(f"formula of arity {arity(f)} cannot be lowered to arity {n}")
    return FunctionTable.from_values([_eval(f, assignment(i, n)) for i in range(1 << n)])


# ---------------------------------------------------------------------------
# Concrete syntax
# ---------------------------------------------------------------------------

_TOKEN_SYMBOLS = ("<->", "->", "~", "&", "|", "^", "(", ")", "0", "1")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "z":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise UnknownSymbolError("variable 'z' needs an index", i)
            tokens.append(("var", text[i + 1 : j], i))
            i = j
            continue
        for sym in _TOKEN_SYMBOLS:
            if text.startswith(sym, i):
                tokens.append((sym, sym, i))
                i += len(sym)
                break
        else:
            j = i + 1
            while j < len(text) and text[j].isalnum():
                j += 1
            raise UnknownSymbolError(f"unknown symbol {text[i:j]!r}", i)
    tokens.append(("end", "", len(text)))
    return tokens


_LEVELS: list[tuple[str, type]] = [
    ("<->", Equiv),
    ("->", Implies),
    ("^", Xor),
    ("|", Or),
    ("&", And),
]


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise FormulaSyntaxError(f"expected {kind!r}, found {found}", tok[2])
        self.pos += 1
        return tok

    def binary(self, level: int) -> Formula:
        if level == len(_LEVELS):
            return self.unary()
        sym, node = _LEVELS[level]
        left = self.binary(level + 1)
        while self.peek()[0] == sym:
            self.pos += 1
            left = node(left, self.binary(level + 1))
        return left

    def unary(self) -> Formula:
        kind, value, where = self.peek()
        if kind == "~":
            self.pos += 1
            return Neg(self.unary())
        if kind == "var":
            self.pos += 1
            return Var(int(value))
        if kind in ("0", "1"):
            self.pos += 1
            return Const(int(kind))
        if kind == "(":
            self.pos += 1
            inner = self.binary(0)
            self.take(")")
            return inner
        found = "end of input" if kind == "end" else repr(value)
        raise FormulaSyntaxError(f"unexpected {found}", where)


def parse_formula(text: str) -> Formula:
    """Parse ASCII formula syntax, e.g. ``"~z0 | (z1 <-> 0)"``."""
    p = _Parser(text)
    f = p.binary(0)
    p.take("end")
    return f


_PREC = {Equiv: 1, Implies: 2, Xor: 3, Or: 4, And: 5, Neg: 6, Var: 7, Const: 7}
_ASCII = {Equiv: " <-> ", Implies: " -> ", Xor: " ^ ", Or: " | ", And: " & ", Neg: "~"}
_PRETTY = {Equiv: "≡", Implies: "⊃", Xor: " xor ", Or: "∨", And: "∧", Neg: "¬"}


def to_text(f: Formula) -> str:
    """ASCII rendering that :func:`parse_formula` reads back to the same AST."""
    return _render(f, _ASCII, lambda i: f"z{i}")


def pretty(f: Formula, n: int | None = None) -> str:
    """Display rendering with ¬ and ∨; a single variable at arity 1 prints as ``z``."""
    name = (lambda i: "z") if n == 1 else (lambda i: f"z{i}")
    return _render(f, _PRETTY, name)


def _render(f: Formula, symbols: dict, var_name) -> str:
    if isinstance(f, Var):
        return var_name(f.index)
    if isinstance(f, Const):
        return str(f.value)
    if isinstance(f, Neg):
        inner = _render(f.child, symbols, var_name)
        if _PREC[type(f.child)] < _PREC[Neg]:
            inner = f"({inner})"
        return symbols[Neg] + inner
    prec = _PREC[type(f)]
    left = _render(f.left, symbols, var_name)
    right = _render(f.right, symbols, var_name)
    if _PREC[type(f.left)] < prec:
        left = f"({left})"
    if _PREC[type(f.right)] <= prec:
        right = f"({right})"
    return left + symbols[type(f)] + right
