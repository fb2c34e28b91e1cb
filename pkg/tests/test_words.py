import warnings

import pytest
from hypothesis import given, strategies as st

from twisthom.words import (
    ParseError,
    Presentation,
    Relation,
    TrivialRelationWarning,
    Word,
    format_presentation,
    format_word,
    free_reduce,
    invert,
    parse_presentation,
    parse_word,
)

GENS = ("a1", "a2", "e1", "e2", "d1", "d2", "b1", "b2", "b3", "u")
A1, A2, E1, E2, U = 0, 1, 2, 3, 9

letters = st.tuples(st.integers(0, len(GENS) - 1), st.sampled_from((1, -1)))
raw_words = st.lists(letters, max_size=20)
words = raw_words.map(lambda ls: Word(tuple(ls)))


def w(text):
    return parse_word(text, GENS)


def test_free_reduce_cancels():
    assert free_reduce([(A1, 1), (A1, -1), (U, 1)]) == ((U, 1),)


def test_free_reduce_empty():
    assert free_reduce([]) == ()
    assert Word() == Word.identity()


def test_free_reduce_leaves_reduced_word():
    seq = [(A1, 1), (U, 1), (A1, 1), (U, -1), (A1, -1), (U, 1), (A1, -1)]
    assert all(seq[k] != (seq[k + 1][0], -seq[k + 1][1]) for k in range(len(seq) - 1))
    assert free_reduce(seq) == tuple(seq)


def test_free_reduce_nested_cancellation():
    assert free_reduce([(A1, 1), (U, 1), (U, -1), (A1, -1), (E1, 1)]) == ((E1, 1),)


def test_invert():
    assert invert(w("a1 u")) == w("u^-1 a1^-1")
    assert invert(Word()) == Word()
    assert invert(w("(e1 u)^2")) == w("u^-1 e1^-1 u^-1 e1^-1")


def test_parse_examples():
    assert w("(e1 u)^2").letters == ((E1, 1), (U, 1), (E1, 1), (U, 1))
    assert w("a1^-1").letters == ((A1, -1),)
    block = w("(a2 e2 a1^2)^3")
    assert len(block) == 12
    assert block.letters == ((A2, 1), (E2, 1), (A1, 1), (A1, 1)) * 3


def test_parse_identity_and_powers():
    assert w("1") == Word()
    assert w("a1^1") == w("a1")
    assert w("a1^+2") == w("a1 a1")
    assert w("(a1 u)^-2") == w("u^-1 a1^-1 u^-1 a1^-1")
    assert w("a1 a1^-1") == Word()


def test_case_sensitive_names():
    assert parse_word("A1 a1", {"A1": 0, "a1": 1}).letters == ((0, 1), (1, 1))


@pytest.mark.parametrize("text, fragment, col", [
    ("a1 x7", "unknown generator", 4),
    ("a1^0", "zero exponent", 4),
    ("(a1 u", "unbalanced", 1),
    ("a1 u)", "unbalanced", 5),
    ("()^2", "empty atom", 1),
    ("^2", "empty atom", 1),
    ("a1^", "expected integer", 4),
    ("", "empty word", 1),
    ("a1 $", "unexpected character", 4),
])
def test_parse_errors_with_position(text, fragment, col):
    with pytest.raises(ParseError) as info:
        w(text)
    assert fragment in info.value.message
    assert info.value.column == col


@given(words)
def test_reduce_idempotent(word):
    assert free_reduce(word.letters) == word.letters


@given(raw_words)
def test_reduce_length_nonincreasing(ls):
    assert len(free_reduce(ls)) <= len(ls)


@given(words, words, words)
def test_concat_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(words)
def test_word_times_inverse_is_identity(word):
    assert word * invert(word) == Word()
    assert invert(word) * word == Word()


@given(words)
def test_print_parse_round_trip(word):
    assert parse_word(format_word(word, GENS), GENS) == word


def test_format_word():
    assert format_word(w("a1 a1 u^-1"), GENS) == "a1^2 u^-1"
    assert format_word(Word(), GENS) == "1"


TWO_RELATIONS = """
# two relations
generators: a1 u   # trailing comment

rel (3): a1 u a1 = u
rel: (a1 u)^2 = 1
"""


def test_parse_presentation():
    pres = parse_presentation(TWO_RELATIONS)
    assert pres.generators == ("a1", "u")
    assert [r.label for r in pres.relations] == ["3", "2"]
    assert pres.relations[1].rhs == Word()
    assert pres.relations[1].lhs == pres.word("a1 u a1 u")


def test_free_group_one_generator():
    pres = parse_presentation("generators: x\n")
    assert pres.generators == ("x",)
    assert pres.relations == ()


def test_presentation_round_trip():
    pres = parse_presentation(TWO_RELATIONS)
    again = parse_presentation(format_presentation(pres))
    assert again == pres


@pytest.mark.parametrize("text, fragment, line", [
    ("generators: x x\n", "duplicate generator", 1),
    ("generators: x\nrel: x = y\n", "unknown generator", 2),
    ("generators: x\nrelation x = x\n", "expected", 2),
    ("generators: x\nrel: x\n", "exactly one '='", 2),
    ("generators: x\nrel: x = x = x\n", "exactly one '='", 2),
    ("generators: x\ngenerators: y\n", "second generators", 2),
    ("rel: x = x\n", "missing 'generators:'", None),
    ("generators: 1x\n", "invalid generator", 1),
])
def test_presentation_errors(text, fragment, line):
    with pytest.raises(ParseError) as info:
        parse_presentation(text)
    assert fragment in info.value.message
    assert info.value.line == line


def test_relation_error_column_points_into_line():
    with pytest.raises(ParseError) as info:
        parse_presentation("generators: x\nrel: x = x q\n")
    assert info.value.column == 12


def test_identical_sides_kept_with_warning():
    with pytest.warns(TrivialRelationWarning):
        pres = parse_presentation("generators: x y\nrel: x y = x y\n")
    assert len(pres.relations) == 1
    assert pres.warnings


def test_presentation_rejects_out_of_range_index():
    with pytest.raises(ValueError):
        Presentation(("x",), (Relation(Word(((1, 1),)), Word()),))


def test_relator_form():
    rel = Relation(w("a1 u a1"), w("u"))
    assert rel.relator() == w("a1 u a1 u^-1")
    assert rel.swapped().lhs == w("u")


def test_no_warning_for_ordinary_relations():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        parse_presentation(TWO_RELATIONS)
