"""Justification sets, proportion verdicts, solutions and explanations.

A justification is a pair of term functions (phi, psi) of the same arity.  It
justifies the pair (a, b) when some assignment e gives phi(e) = a and
psi(e) = b, and it justifies a -> b :: c -> d when it justifies both (a, b)
and (c, d), with independent assignments.  d is a directed solution of
a -> b :: c -> z when no d' has a strictly larger justification set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from boolprop.clone import enumerate_term_functions
from boolprop.formula import (
    Formula,
    FunctionTable,
    assignment,
    assignment_index,
    pretty,
)
from boolprop.structure import ARITY_CAP, BOOLS, DEFAULT_ARITY, StructureSpec, check_arity

Quadruple = tuple[int, int, int, int]

# Standard row order: a varies fastest, d slowest.
QUADRUPLES: tuple[Quadruple, ...] = tuple(
    (i & 1, (i >> 1) & 1, (i >> 2) & 1, (i >> 3) & 1) for i in range(16)
)

ALL_PAIRS = ((0, 0), (0, 1), (1, 0), (1, 1))


def _check_bits(*values: int) -> None:
    for v in values:
        if v not in BOOLS:
            raise ValueError(f"expected a boolean 0 or 1, got {v!r}")


@dataclass(frozen=True)
class Justification:
    phi: FunctionTable
    psi: FunctionTable

    def __post_init__(self) -> None:
        if self.phi.arity != self.psi.arity:
            raise ValueError("justification sides must have the same arity")

    @property
    def arity(self) -> int:
        return self.phi.arity

    def witness(self, a: int, b: int) -> tuple[int, ...] | None:
        """First assignment e (in index order) with phi(e) = a and psi(e) = b."""
        for i in range(self.phi.size):
            if self.phi[i] == a and self.psi[i] == b:
                return assignment(i, self.arity)
        return None

    def justifies(self, a: int, b: int) -> bool:
        return self.witness(a, b) is not None

    def justifies_quadruple(self, a: int, b: int, c: int, d: int) -> bool:
        return self.justifies(a, b) and self.justifies(c, d)

    @property
    def trivial(self) -> bool:
        """True when the rule justifies every (a, b), hence every quadruple."""
        return all(self.justifies(a, b) for a, b in ALL_PAIRS)


@dataclass(frozen=True, eq=False)
class JustificationSet:
    """Jus(a -> b :: c -> d) at a fixed arity.

    Members are stored as pair ids into the owning :class:`Engine`; equality and
    the subset operators compare members only, so Jus sets of different
    quadruples can be compared the way the definitions do.
    """

    structure: StructureSpec
    arity: int
    quadruple: Quadruple
    ids: frozenset[int]
    engine: Engine = field(repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JustificationSet):
            return NotImplemented
        return (self.structure, self.arity, self.ids) == (other.structure, other.arity, other.ids)

    def __hash__(self) -> int:
        return hash((self.structure, self.arity, self.ids))

    def __le__(self, other: JustificationSet) -> bool:
        return self.ids <= other.ids

    def __lt__(self, other: JustificationSet) -> bool:
        return self.ids < other.ids

    def __len__(self) -> int:
        return len(self.ids)

    def __contains__(self, j: object) -> bool:
        if not isinstance(j, Justification):
            return False
        try:
            return self.engine.pair_id(j) in self.ids
        except ValueError:
            return False

    @property
    def members(self) -> frozenset[Justification]:
        return frozenset(self.engine.justification(p) for p in self.ids)

    def without_trivial(self) -> frozenset[int]:
        return self.ids - self.engine.trivial_ids

    def sorted_members(
        self, *, show_trivial: bool = False, modulo_renaming: bool = True
    ) -> list[Justification]:
        ids = self.ids if show_trivial else self.without_trivial()
        if modulo_renaming:
            ids = {p for p in ids if self.engine.canonical_id(p) == p}
        return [self.engine.justification(p) for p in sorted(ids)]

    def render(self, **kwargs) -> str:
        """Set notation, e.g. ``{z→0, z→z}``; ``∅`` when empty."""
        members = self.sorted_members(**kwargs)
        if not members:
            return "∅"
        return "{" + ", ".join(self.engine.render(j) for j in members) + "}"


@dataclass(frozen=True)
class Maximal:
    """Jus(..d) is not strictly below the rival Jus(..d'); ``characteristic`` = Jus(..d) minus Jus(..d')."""

    jus: JustificationSet
    rival: JustificationSet
    characteristic: tuple[Justification, ...]

    @property
    def tie(self) -> bool:
        return self.jus == self.rival


@dataclass(frozen=True)
class StrictInclusion:
    """Jus(..d) strictly inside Jus(..d'); ``distinguishing`` lies in the larger set only."""

    lower: JustificationSet
    upper: JustificationSet
    distinguishing: Justification


@dataclass(frozen=True)
class FunctionalEvidence:
    """Certificate from a characteristic rule z -> psi(z) (and psi(z) -> z for the full case)."""

    forward: Justification
    backward: Justification | None


Evidence = Maximal | StrictInclusion | FunctionalEvidence


@dataclass(frozen=True)
class ProportionVerdict:
    holds: bool
    mode: str  # "directed" or "full"
    structure: StructureSpec
    quadruple: Quadruple
    arity: int
    evidence: Evidence
    parts: tuple[ProportionVerdict, ...] = ()

    def __bool__(self) -> bool:
        return self.holds


class Engine:
    """All justifications of a structure at one arity, with proportion queries on top.

    Building an engine enumerates the term functions once and classifies every
    pair (phi, psi) by which (a, b) it justifies.  Instances are immutable after
    construction.
    """

    def __init__(self, s: StructureSpec, n: int = DEFAULT_ARITY, *, cap: int = ARITY_CAP) -> None:
        check_arity(n, minimum=1, cap=cap)
        self.structure = s
        self.arity = n
        self.terms = enumerate_term_functions(s, n, cap=cap)
        self.tables: tuple[FunctionTable, ...] = self.terms.ordered
        self._index = {t: i for i, t in enumerate(self.tables)}

        size = len(self.tables)
        full = (1 << (1 << n)) - 1
        by_pair: dict[tuple[int, int], list[int]] = {ab: [] for ab in ALL_PAIRS}
        for i, phi in enumerate(self.tables):
            p = phi.bits
            for j, psi in enumerate(self.tables):
                q = psi.bits
                pid = i * size + j
                if full & ~p & ~q:
                    by_pair[0, 0].append(pid)
                if ~p & q:
                    by_pair[0, 1].append(pid)
                if p & ~q & full:
                    by_pair[1, 0].append(pid)
                if p & q:
                    by_pair[1, 1].append(pid)
        self._jus_pair = {ab: frozenset(ids) for ab, ids in by_pair.items()}
        self.trivial_ids: frozenset[int] = frozenset.intersection(*self._jus_pair.values())
        self._perms = [
            self._permutation_map(perm) for perm in itertools.permutations(range(n))
        ]

    # -- pair ids ---------------------------------------------------------

    def _permutation_map(self, perm: tuple[int, ...]) -> list[int]:
        """Index map sending each table t to t with variable i read from position perm[i]."""
        n = self.arity
        out = []
        for t in self.tables:
            vals = []
            for k in range(1 << n):
                e = assignment(k, n)
                vals.append(t[assignment_index([e[perm[i]] for i in range(n)])])
            out.append(self._index[FunctionTable.from_values(vals)])
        return out

    def pair_id(self, j: Justification) -> int:
        try:
            return self._index[j.phi] * len(self.tables) + self._index[j.psi]
        except KeyError:
            raise ValueError("justification is not built from term functions of this structure")

    def justification(self, pid: int) -> Justification:
        i, j = divmod(pid, len(self.tables))
        return Justification(self.tables[i], self.tables[j])

    def canonical_id(self, pid: int) -> int:
        """Smallest id among all variable renamings of the pair."""
        size = len(self.tables)
        i, j = divmod(pid, size)
        return min(m[i] * size + m[j] for m in self._perms)

    def term(self, t: FunctionTable) -> Formula:
        return self.terms.representative[t]

    def render(self, j: Justification) -> str:
        return f"{pretty(self.term(j.phi), self.arity)}→{pretty(self.term(j.psi), self.arity)}"

    # -- justification sets and verdicts ----------------------------------

    def justification_set(self, a: int, b: int, c: int, d: int) -> JustificationSet:
        _check_bits(a, b, c, d)
        ids = self._jus_pair[a, b] & self._jus_pair[c, d]
        return JustificationSet(self.structure, self.arity, (a, b, c, d), ids, self)

    def directed(self, a: int, b: int, c: int, d: int) -> ProportionVerdict:
        own = self.justification_set(a, b, c, d)
        rival = self.justification_set(a, b, c, 1 - d)
        if own < rival:
            extra = min(rival.ids - own.ids)
            evidence: Evidence = StrictInclusion(own, rival, self.justification(extra))
            holds = False
        else:
            chars = tuple(self.justification(p) for p in sorted(own.ids - rival.ids))
            evidence = Maximal(own, rival, chars)
            holds = True
        return ProportionVerdict(holds, "directed", self.structure, (a, b, c, d), self.arity, evidence)

    def proportion(self, a: int, b: int, c: int, d: int) -> ProportionVerdict:
        forward = self.directed(a, b, c, d)
        backward = self.directed(b, a, d, c)
        holds = forward.holds and backward.holds
        if not forward.holds:
            evidence = forward.evidence
        elif not backward.holds:
            evidence = backward.evidence
        else:
            evidence = forward.evidence
        return ProportionVerdict(
            holds, "full", self.structure, (a, b, c, d), self.arity, evidence, (forward, backward)
        )

    def holds(self, a: int, b: int, c: int, d: int) -> bool:
        return self.proportion(a, b, c, d).holds

    def solve(self, a: int, b: int, c: int) -> frozenset[int]:
        return frozenset(d for d in BOOLS if self.holds(a, b, c, d))

    def relation(self) -> dict[Quadruple, bool]:
        """The proportion relation on all 16 quadruples."""
        return {q: self.holds(*q) for q in QUADRUPLES}

    def explain(self, a: int, b: int, c: int, d: int, *, show_trivial: bool = False) -> Explanation:
        verdict = self.proportion(a, b, c, d)
        directions = tuple(
            self._explain_directed(part, show_trivial=show_trivial) for part in verdict.parts
        )
        return Explanation(self.structure, self.arity, (a, b, c, d), verdict.holds, directions)

    def _witnessed(self, j: Justification, q: Quadruple) -> WitnessedJustification:
        a, b, c, d = q
        return WitnessedJustification(
            j, self.term(j.phi), self.term(j.psi), j.witness(a, b), j.witness(c, d), self.arity
        )

    def _explain_directed(self, v: ProportionVerdict, *, show_trivial: bool) -> DirectedExplanation:
        ev = v.evidence
        if isinstance(ev, StrictInclusion):
            members = ev.lower.sorted_members(show_trivial=show_trivial)
            return DirectedExplanation(
                v.quadruple,
                False,
                tuple(self._witnessed(j, v.quadruple) for j in members),
                ev.upper.quadruple,
                "strict_inclusion",
                self._witnessed(ev.distinguishing, ev.upper.quadruple),
            )
        members = ev.jus.sorted_members(show_trivial=show_trivial)
        relation = "equal" if ev.tie else ("strict_superset" if ev.rival < ev.jus else "incomparable")
        distinguishing = None
        if ev.characteristic:
            distinguishing = self._witnessed(ev.characteristic[0], v.quadruple)
        return DirectedExplanation(
            v.quadruple,
            True,
            tuple(self._witnessed(j, v.quadruple) for j in members),
            ev.rival.quadruple,
            relation,
            distinguishing,
        )


# ---------------------------------------------------------------------------
# Explanations
# ---------------------------------------------------------------------------


def _render_assignment(e: tuple[int, ...]) -> str:
    if len(e) == 1:
        return f"z/{e[0]}"
    names = ",".join(f"z{i}" for i in range(len(e)))
    return f"({names})/({','.join(map(str, e))})"


def render_quadruple(q: Quadruple, directed: bool = False) -> str:
    a, b, c, d = q
    arrow = "⇢" if directed else ":"
    return f"{a}{arrow}{b}::{c}{arrow}{d}"


@dataclass(frozen=True)
class WitnessedJustification:
    justification: Justification
    phi_term: Formula
    psi_term: Formula
    first: tuple[int, ...] | None
    second: tuple[int, ...] | None
    arity: int

    @property
    def rule(self) -> str:
        return f"{pretty(self.phi_term, self.arity)}→{pretty(self.psi_term, self.arity)}"

    def render(self) -> str:
        if self.first is None or self.second is None:
            return self.rule
        return f"{self.rule}  [{_render_assignment(self.first)} → {_render_assignment(self.second)}]"


@dataclass(frozen=True)
class DirectedExplanation:
    quadruple: Quadruple
    holds: bool
    members: tuple[WitnessedJustification, ...]
    rival: Quadruple
    relation: str  # equal | strict_superset | incomparable | strict_inclusion
    distinguishing: WitnessedJustification | None


@dataclass(frozen=True)
class Explanation:
    structure: StructureSpec
    arity: int
    quadruple: Quadruple
    holds: bool
    directions: tuple[DirectedExplanation, ...]

    def render(self) -> str:
        verb = "⊨" if self.holds else "⊭"
        lines = [f"{self.structure.name} {verb} {render_quadruple(self.quadruple)}  (arity {self.arity})"]
        for part in self.directions:
            q, r = part.quadruple, part.rival
            status = "holds" if part.holds else "fails"
            lines.append(f"  {render_quadruple(q, True)}: {status}")
            if part.members:
                lines.append(f"    Jus({render_quadruple(q, True)}):")
                lines += [f"      {m.render()}" for m in part.members]
            else:
                lines.append(f"    Jus({render_quadruple(q, True)}) = ∅")
            if part.relation == "strict_inclusion":
                lines.append(
                    f"    Jus({render_quadruple(q, True)}) ⊊ Jus({render_quadruple(r, True)})"
                )
                lines.append(
                    f"    distinguishing: {part.distinguishing.render()} justifies "
                    f"{render_quadruple(r, True)} only"
                )
            elif part.relation == "equal":
                lines.append(f"    tie: Jus({render_quadruple(r, True)}) is the same set")
            else:
                lines.append(
                    f"    not below Jus({render_quadruple(r, True)}); e.g. "
                    f"{part.distinguishing.render()} is missing there"
                )
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Functional solutions (independent characteristic-rule check)
# ---------------------------------------------------------------------------


class NotAdmissibleError(ValueError):
    pass


def _lift_unary(psi: FunctionTable, n: int) -> FunctionTable:
    return FunctionTable.from_values([psi[i & 1] for i in range(1 << n)])


def _realizes(phi: FunctionTable, psi: FunctionTable, a: int, b: int) -> bool:
    return any(x == a and y == b for x, y in zip(phi.values, psi.values))


def functional_solution(
    s: StructureSpec, psi: FunctionTable, a: int, c: int, n: int = DEFAULT_ARITY
) -> ProportionVerdict:
    """Certify a -> psi(a) :: c -> psi(c) through the characteristic rule z -> psi(z).

    The rule justifies the quadruple and fails for the rival c -> not psi(c), so
    that rival's set cannot contain this one.  When c is the only preimage of
    psi(c), the reverse rule psi(z) -> z certifies psi(a) -> a :: psi(c) -> c too,
    and the verdict is returned in "full" mode.  Nothing here consults Engine.
    """
    _check_bits(a, c)
    check_arity(n, minimum=1)
    if psi.arity != 1:
        raise ValueError("psi must be a unary function table")
    if psi not in enumerate_term_functions(s, 1).tables:
        raise NotAdmissibleError(f"{psi} is not a term function of {s.name}")

    z = FunctionTable.projection(n, 0)
    lifted = _lift_unary(psi, n)
    pa, pc = psi[a], psi[c]
    forward = Justification(z, lifted)
    if not (_realizes(z, lifted, a, pa) and _realizes(z, lifted, c, pc)):
        raise AssertionError("characteristic rule fails to justify its own quadruple")
    if _realizes(z, lifted, c, 1 - pc):
        raise AssertionError("characteristic rule unexpectedly justifies the rival")

    backward = Justification(lifted, z)
    # psi(z) -> z misses the rival psi(c) -> not c exactly when c is psi(c)'s only preimage
    full = not _realizes(lifted, z, pc, 1 - c)
    return ProportionVerdict(
        True,
        "full" if full else "directed",
        s,
        (a, pa, c, pc),
        n,
        FunctionalEvidence(forward, backward if full else None),
    )


# ---------------------------------------------------------------------------
# Module-level API
# ---------------------------------------------------------------------------


def justification_set(s: StructureSpec, a: int, b: int, c: int, d: int, n: int = DEFAULT_ARITY) -> JustificationSet:
    return Engine(s, n).justification_set(a, b, c, d)


def directed_proportion(s: StructureSpec, a: int, b: int, c: int, d: int, n: int = DEFAULT_ARITY) -> ProportionVerdict:
    return Engine(s, n).directed(a, b, c, d)


def proportion(s: StructureSpec, a: int, b: int, c: int, d: int, n: int = DEFAULT_ARITY) -> ProportionVerdict:
    return Engine(s, n).proportion(a, b, c, d)


def solve(s: StructureSpec, a: int, b: int, c: int, n: int = DEFAULT_ARITY) -> frozenset[int]:
    return Engine(s, n).solve(a, b, c)


def explain(
    s: StructureSpec, a: int, b: int, c: int, d: int, n: int = DEFAULT_ARITY, *, show_trivial: bool = False
) -> Explanation:
    return Engine(s, n).explain(a, b, c, d, show_trivial=show_trivial)


@dataclass(frozen=True)
class StabilityReport:
    structure: StructureSpec
    arities: tuple[int, ...]
    verdicts: dict[int, tuple[bool, ...]]
    disagreements: tuple[tuple[Quadruple, dict[int, bool]], ...]

    @property
    def stable(self) -> bool:
        return not self.disagreements


def stable_arity_check(s: StructureSpec, n_lo: int = 1, n_hi: int = ARITY_CAP) -> StabilityReport:
    """Compare the 16 proportion verdicts at every arity in n_lo..n_hi."""
    check_arity(n_lo, minimum=1)
    check_arity(n_hi, minimum=1)
    if n_lo >= n_hi:
        raise ValueError(f"need n_lo < n_hi, got {n_lo} and {n_hi}")
    arities = tuple(range(n_lo, n_hi + 1))
    verdicts = {}
    for n in arities:
        rel = Engine(s, n).relation()
        verdicts[n] = tuple(rel[q] for q in QUADRUPLES)
    disagreements = []
    for k, q in enumerate(QUADRUPLES):
        row = {n: verdicts[n][k] for n in arities}
        if len(set(row.values())) > 1:
            disagreements.append((q, row))
    return StabilityReport(s, arities, verdicts, tuple(disagreements))
