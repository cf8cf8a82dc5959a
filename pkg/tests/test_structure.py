import pytest

from boolprop.structure import StructureSpec, StructureSpecError, all_structures, parse_structure


@pytest.mark.parametrize(
    "text, funcs, consts",
    [
        ("B", set(), set()),
        ("B,neg,0", {"neg"}, {0}),
        ("B, or, neg, 0, 1", {"or", "neg"}, {0, 1}),
        ("B,1,or", {"or"}, {1}),
    ],
)
def test_parse(text, funcs, consts):
    s = parse_structure(text)
    assert s.funcs == funcs and s.consts == consts


@pytest.mark.parametrize("text", ["", "neg,B", "B,B", "B,0,0", "B,and", "B,2", "b"])
def test_parse_rejects(text):
    with pytest.raises(StructureSpecError):
        parse_structure(text)


def test_text_round_trip():
    for s in all_structures():
        assert parse_structure(s.text) == s


def test_names():
    assert parse_structure("B").name == "(𝔹)"
    assert parse_structure("B,0,neg,or").name == "(𝔹,∨,¬,0)"
    assert parse_structure("B,0,neg,or").text == "B,or,neg,0"


def test_inclusion_order():
    b, b0, bneg0 = parse_structure("B"), parse_structure("B,0"), parse_structure("B,neg,0")
    assert b <= b0 <= bneg0
    assert b < bneg0
    assert not bneg0 <= b0
    assert not parse_structure("B,1") <= b0


def test_sixteen_distinct_structures():
    structures = all_structures()
    assert len(set(structures)) == 16


def test_constructor_validates():
    with pytest.raises(StructureSpecError):
        StructureSpec(frozenset({"and"}), frozenset())
    with pytest.raises(StructureSpecError):
        StructureSpec(frozenset(), frozenset({2}))
