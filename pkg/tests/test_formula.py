import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boolprop.clone import enumerate_term_functions
from boolprop.formula import (
    And,
    Const,
    Equiv,
    FormulaSyntaxError,
    FunctionTable,
    Implies,
    Neg,
    Or,
    UnknownSymbolError,
    Var,
    Xor,
    arity,
    assignment,
    evaluate,
    expand,
    is_admissible,
    lower,
    parse_formula,
    pretty,
    subformulas,
    to_text,
)
from boolprop.structure import ArityError, StructureSpec, all_structures


def formulas(max_var=2, primitive_only=False):
    leaves = st.one_of(
        st.builds(Var, st.integers(0, max_var)),
        st.builds(Const, st.sampled_from([0, 1])),
    )
    binaries = [Or] if primitive_only else [Or, And, Implies, Equiv, Xor]

    def extend(children):
        return st.one_of(
            st.builds(Neg, children),
            *[st.builds(op, children, children) for op in binaries],
        )

    return st.recursive(leaves, extend, max_leaves=8)


# -- parser ------------------------------------------------------------------


def test_parse_negation():
    assert parse_formula("~z0") == Neg(Var(0))


def test_parse_excluded_middle():
    assert parse_formula("(z0 | ~z0)") == Or(Var(0), Neg(Var(0)))


def test_parse_xor_and_its_expansion():
    f = parse_formula("z0 ^ z1")
    assert f == Xor(Var(0), Var(1))
    expected = expand(Or(And(Var(0), Neg(Var(1))), And(Neg(Var(0)), Var(1))))
    assert expand(f) == expected


@pytest.mark.parametrize(
    "text, expected",
    [
        ("z0 | z1 & z2", Or(Var(0), And(Var(1), Var(2)))),
        ("z0 ^ z1 | z2", Xor(Var(0), Or(Var(1), Var(2)))),
        ("z0 -> z1 ^ z2", Implies(Var(0), Xor(Var(1), Var(2)))),
        ("z0 <-> z1 -> z2", Equiv(Var(0), Implies(Var(1), Var(2)))),
        ("z0 -> z1 -> z2", Implies(Implies(Var(0), Var(1)), Var(2))),
        ("z0 | z1 | z2", Or(Or(Var(0), Var(1)), Var(2))),
        ("~~z3", Neg(Neg(Var(3)))),
        ("~(z0 & 1)", Neg(And(Var(0), Const(1)))),
        ("z10", Var(10)),
    ],
)
def test_precedence_and_associativity(text, expected):
    assert parse_formula(text) == expected


@pytest.mark.parametrize("text, position", [("z0 |", 4), ("(z0", 3), ("z0 z1", 3), ("", 0), ("z0 & & z1", 5)])
def test_syntax_errors_carry_position(text, position):
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula(text)
    assert info.value.position == position


@pytest.mark.parametrize("text", ["x", "z", "z0 + z1", "true", "z0 and z1"])
def test_unknown_symbols(text):
    with pytest.raises(UnknownSymbolError):
        parse_formula(text)


@given(formulas(max_var=3))
def test_text_round_trip(f):
    assert parse_formula(to_text(f)) == f


# -- evaluation --------------------------------------------------------------


def test_truth_clauses():
    assert evaluate(Neg(Const(0))) == 1
    assert evaluate(Neg(Const(1))) == 0
    assert evaluate(Or(Var(0), Var(1)), (0, 0)) == 0
    for e in [(0, 1), (1, 0), (1, 1)]:
        assert evaluate(Or(Var(0), Var(1)), e) == 1


def test_equivalence_evaluates_true_on_equal_inputs():
    assert evaluate(parse_formula("z0 <-> z1"), (1, 1)) == 1


def test_assignment_too_short():
    with pytest.raises(ValueError):
        evaluate(Var(2), (0, 1))


def test_arity_counts_largest_index():
    assert arity(parse_formula("z0 | z4")) == 5
    assert arity(parse_formula("~(0 | 1)")) == 0


# -- lowering ----------------------------------------------------------------


def test_lower_examples():
    assert lower(Var(0), 1).values == (0, 1)
    assert lower(Neg(Var(0)), 1).values == (1, 0)
    assert lower(parse_formula("z0 | ~z0"), 1).values == (1, 1)


def test_lower_is_little_endian():
    # index 1 is z0=1, z1=0
    assert lower(Var(0), 2).values == (0, 1, 0, 1)
    assert lower(Var(1), 2).values == (0, 0, 1, 1)


def test_lower_errors():
    with pytest.raises(ArityError):
        lower(Var(0), 4)
    with pytest.raises(ArityError):
        lower(Var(2), 2)


@settings(max_examples=200)
@given(formulas(max_var=2), st.integers(3, 3))
def test_lower_agrees_with_evaluate(f, n):
    table = lower(f, n)
    for i in range(1 << n):
        assert table[i] == evaluate(f, assignment(i, n))


@given(formulas(max_var=2))
def test_expansion_preserves_meaning_and_is_primitive(f):
    g = expand(f)
    assert all(isinstance(h, (Var, Const, Neg, Or)) for h in subformulas(g))
    assert lower(g, 3) == lower(f, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_derived_connectives_match_pointwise_tables(n):
    # all pairs of n-ary tables, realised as formulas in disjunctive normal form
    def dnf(values):
        terms = []
        for i, v in enumerate(values):
            if v:
                lits = [Var(k) if (i >> k) & 1 else Neg(Var(k)) for k in range(n)]
                term = lits[0]
                for lit in lits[1:]:
                    term = And(term, lit)
                terms.append(term)
        if not terms:
            return And(Var(0), Neg(Var(0)))
        out = terms[0]
        for t in terms[1:]:
            out = Or(out, t)
        return out

    rows = list(itertools.product((0, 1), repeat=1 << n))
    if n == 3:
        rows = rows[::17]
    for xs in rows:
        for ys in rows[::5]:
            fx, fy = dnf(xs), dnf(ys)
            assert lower(fx, n).values == xs
            assert lower(And(fx, fy), n).values == tuple(min(x, y) for x, y in zip(xs, ys))
            assert lower(Equiv(fx, fy), n).values == tuple(int(x == y) for x, y in zip(xs, ys))
            assert lower(Xor(fx, fy), n).values == tuple(x ^ y for x, y in zip(xs, ys))
            assert lower(Implies(fx, fy), n).values == tuple(int(x <= y) for x, y in zip(xs, ys))


# -- admissibility -----------------------------------------------------------


def test_admissibility():
    neg0 = StructureSpec.of("neg", 0)
    assert is_admissible(parse_formula("~z0"), neg0)
    assert is_admissible(parse_formula("~0"), neg0)
    assert not is_admissible(parse_formula("1"), neg0)
    assert not is_admissible(parse_formula("z0 & z1"), neg0)
    assert is_admissible(parse_formula("z0 & z1"), StructureSpec.of("or", "neg"))
    assert not is_admissible(parse_formula("z0 | z1"), StructureSpec.of("neg"))


@settings(max_examples=300)
@given(formulas(max_var=1), st.sampled_from(all_structures()))
def test_admissible_formulas_lower_into_the_clone(f, s):
    if is_admissible(f, s):
        assert lower(f, 2) in enumerate_term_functions(s, 2)


# -- tables ------------------------------------------------------------------


def test_function_table_validation():
    with pytest.raises(ValueError):
        FunctionTable.from_values([0, 1, 1])
    with pytest.raises(ValueError):
        FunctionTable.from_values([0, 2])
    with pytest.raises(ValueError):
        FunctionTable(1, 4)
    t = FunctionTable.from_values([1, 0, 0, 1])
    assert t.arity == 2 and t.values == (1, 0, 0, 1)
    assert (~t).values == (0, 1, 1, 0)
    assert t.attains(0) and t.attains(1)
    assert not FunctionTable.constant(2, 1).attains(0)


def test_pretty_printing():
    assert pretty(parse_formula("~(z0 | ~z0)"), 1) == "¬(z∨¬z)"
    assert pretty(parse_formula("z0 | z1 | z2")) == "z0∨z1∨z2"
    assert pretty(parse_formula("z0 | (z1 | z2)")) == "z0∨(z1∨z2)"
