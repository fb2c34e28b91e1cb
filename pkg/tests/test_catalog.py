import pytest

from twisthom import catalog
from twisthom.catalog import UnknownEntry, load, load_dictionary, parse_dictionary, substitute
from twisthom.homology import class_of, h1
from twisthom.intlat import AbelianGroup
from twisthom.representation import check_relations
from twisthom.words import ParseError, Relation, Word, parse_word

from reference_data import H1_GENERATORS_N32, KERNEL_GROUPS

D_ONLY = {"8", "11", "12", "13a", "13b", "13c", "13d", "13e"}


def test_entries_listed():
    assert set(catalog.entries()) == {"n32", "n3p2", "n32-szep"}


def test_load_n32(n32):
    assert n32.presentation.generators == ("a1", "a2", "e1", "e2", "d1", "d2", "b1", "b2", "b3", "u")
    assert len(n32.presentation.relations) == 22
    assert n32.representation.dimension == 4
    assert n32.representation.basis_labels == ("γ1", "γ2", "γ3", "δ1")
    assert n32.notes


def test_load_n3p2(n3p2):
    pres = n3p2.presentation
    assert pres.generators == ("a1", "a2", "e1", "e2", "b1", "b2", "b3", "u")
    labels = [r.label for r in pres.relations]
    assert labels == ["1a", "1b", "1c", "2a", "2b", "2c", "3", "4", "5", "6", "7",
                      "9a", "9b", "10", "8'", "11'", "12'"]


def test_load_unknown():
    with pytest.raises(UnknownEntry):
        load("bogus")


@pytest.mark.parametrize("entry_id", ["n32", "n3p2", "n32-szep"])
def test_entries_satisfy_relations(entry_id):
    entry = load(entry_id)
    assert all(c.ok for c in check_relations(entry.presentation, entry.representation))


def test_named_classes_are_cycles(n32, n32_h1):
    for label, vec in n32.named_classes.items():
        assert not any(n32_h1.boundary @ vec), label
    assert list(n32.h1_generators) == H1_GENERATORS_N32


def test_named_class_table_contents(n32, n3p2):
    names = set(n32.named_classes)
    assert {"u[1] + u[2]", "e2[1] + 2 a2[2] - u[1]"} <= names
    assert set(KERNEL_GROUPS["K8"]) | set(KERNEL_GROUPS["K9"]) <= names
    assert not any(n.startswith("d") for n in n3p2.named_classes)
    with pytest.raises(TypeError):
        n32.named_classes["x"] = ()


def test_named_classes_n3p2_are_cycles(n3p2, n3p2_h1):
    for label, vec in n3p2.named_classes.items():
        class_of(n3p2_h1, vec)


def _strip_d(pres):
    d = {pres.index("d1"), pres.index("d2")}
    keep = [g for g in pres.generators if g not in ("d1", "d2")]
    images = [Word() if k in d else Word(((keep.index(g), 1),)) for k, g in enumerate(pres.generators)]
    return keep, images


def test_n3p2_is_n32_with_d_killed(n32, n3p2):
    full = n32.presentation
    keep, images = _strip_d(full)
    assert tuple(keep) == n3p2.presentation.generators
    rels = {r.label: r for r in n3p2.presentation.relations}
    for rel in full.relations:
        image = Relation(rel.lhs.substitute(images), rel.rhs.substitute(images), rel.label)
        if rel.label in D_ONLY:
            if rel.label.startswith("13"):
                assert image.lhs == image.rhs
            else:
                primed = rels[rel.label + "'"]
                assert (image.lhs, image.rhs) == (primed.lhs, primed.rhs)
        else:
            assert (image.lhs, image.rhs) == (rels[rel.label].lhs, rels[rel.label].rhs)
    assert len(rels) == len(full.relations) - len(D_ONLY) + 3


def test_dictionary_images():
    d = load_dictionary()
    gens = load("n32").presentation.generators
    assert d["A1"] == parse_word("a1^-1", gens)
    assert d["C2"] == parse_word("d2^-1", gens)
    assert len(d.source) == 10


def test_substitute_examples():
    d = load_dictionary()
    szep = load("n32-szep").presentation
    gens = load("n32").presentation.generators
    assert substitute(d, szep.word("A1")) == parse_word("a1^-1", gens)
    assert substitute(d, Word()) == Word()
    assert substitute(d, szep.word("U A1 U^-1")) == parse_word("u^-1 a1^-1 u", gens)
    assert substitute(d, szep.word("A1 A1^-1")) == Word()


def test_parse_dictionary_errors():
    with pytest.raises(ParseError, match="unmapped"):
        parse_dictionary("X -> a\n", ("X", "Y"), ("a",))
    with pytest.raises(ParseError, match="twice"):
        parse_dictionary("X -> a\nX -> a\n", ("X",), ("a",))
    with pytest.raises(ParseError, match="not a source"):
        parse_dictionary("Z -> a\n", ("X",), ("a",))
    with pytest.raises(ParseError, match="NAME -> word"):
        parse_dictionary("X a\n", ("X",), ("a",))
    with pytest.raises(ParseError, match="unknown generator"):
        parse_dictionary("X -> b\n", ("X",), ("a",))


def test_szep_consistency_all_pass():
    report = catalog.verify_szep_consistency()
    assert len(report) == 34
    assert all(c.ok for c in report), [c.label for c in report if not c.ok]
    labels = {c.label for c in report}
    assert {"S3", "S7", "S9a", "S9b"} <= labels


def test_szep_entry_has_same_h1():
    entry = load("n32-szep")
    assert h1(entry.presentation, entry.representation).group == AbelianGroup(0, (2,) * 6)
