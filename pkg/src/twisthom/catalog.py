"""Built-in presentations and representations.

Entries:

``n32``
    mapping class group of the genus-3 non-orientable surface with two
    boundary components, acting on its first homology; H_1 is (Z/2)^6.
``n3p2``
    the orientation-preserving-at-punctures subgroup for two punctures, the
    quotient of ``n32`` by ``d1 = d2 = 1``; H_1 is (Z/2)^5.
``n32-szep``
    the same group on the uppercase generating set, with the representation
    pulled back along ``dictionary.map``.

All data lives in ``data/`` in the ordinary file formats, so loading an entry
goes through the same parsers as user files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from types import MappingProxyType
from typing import Mapping

from .homology import GeneratorTensorBasis, parse_combination
from .representation import (
    Representation,
    check_identity_under_rep,
    check_relations,
    parse_representation,
)
from .words import ParseError, Presentation, Relation, Word, parse_presentation, parse_word

__all__ = [
    "UnknownEntry",
    "CatalogEntry",
    "GeneratorDictionary",
    "SubstitutionCheck",
    "entries",
    "load",
    "load_dictionary",
    "substitute",
    "verify_szep_consistency",
]

ENTRIES = {
    "n32": "genus 3, two boundary components; expected H1 = (Z/2)^6",
    "n3p2": "genus 3, two punctures (pure, orientation-preserving at punctures); expected H1 = (Z/2)^5",
    "n32-szep": "genus 3, two boundary components on the uppercase generators (consistency checks only)",
}


class UnknownEntry(KeyError):
    pass


def read_data(name: str) -> str:
    return resources.files(__package__).joinpath("data").joinpath(name).read_text(encoding="utf-8")


@dataclass(frozen=True)
class GeneratorDictionary:
    """Homomorphism from a free group on ``source`` to words over ``target``."""

    source: tuple[str, ...]
    target: tuple[str, ...]
    images: tuple[Word, ...]

    def __getitem__(self, name: str) -> Word:
        return self.images[self.source.index(name)]

    def substitute(self, w: Word) -> Word:
        return w.substitute(self.images)


def parse_dictionary(text: str, source: tuple[str, ...], target: tuple[str, ...]) -> GeneratorDictionary:
    """Parse ``NAME -> word`` lines; every name in ``source`` must be mapped once."""
    found: dict[str, Word] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, body = line.partition("->")
        name = name.strip()
        if not sep:
            raise ParseError("expected 'NAME -> word'", lineno, 1)
        if name not in source:
            raise ParseError(f"{name!r} is not a source generator", lineno, 1)
        if name in found:
            raise ParseError(f"{name!r} mapped twice", lineno, 1)
        found[name] = parse_word(body, target, line=lineno, offset=raw.index("->") + 2)
    missing = [g for g in source if g not in found]
    if missing:
        raise ParseError(f"unmapped generators {missing}")
    return GeneratorDictionary(source, target, tuple(found[g] for g in source))


def substitute(dictionary: GeneratorDictionary, w: Word) -> Word:
    return dictionary.substitute(w)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    presentation: Presentation
    representation: Representation
    named_classes: Mapping[str, tuple[int, ...]] = field(default_factory=dict)
    h1_generators: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def basis(self) -> GeneratorTensorBasis:
        return GeneratorTensorBasis.of(self.representation)


def _parse_classes(text: str, basis: GeneratorTensorBasis):
    named: dict[str, tuple[int, ...]] = {}
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, _, expr = line.partition(" ")
        if kind not in ("generator", "symbol"):
            raise ParseError(f"unknown class kind {kind!r}", lineno, 1)
        label = " ".join(expr.split())
        try:
            named[label] = parse_combination(expr, basis)
        except ParseError as exc:
            raise ParseError(exc.message, lineno, exc.column) from None
        if kind == "generator":
            gens.append(label)
    return named, tuple(gens)


def entries() -> dict[str, str]:
    return dict(ENTRIES)


@lru_cache(maxsize=None)
def load_dictionary() -> GeneratorDictionary:
    szep = parse_presentation(read_data("szep.pres"))
    n32 = parse_presentation(read_data("n32.pres"))
    return parse_dictionary(read_data("dictionary.map"), szep.generators, n32.generators)


@lru_cache(maxsize=None)
def load(entry_id: str) -> CatalogEntry:
    """Load and verify a catalog entry; raises :class:`UnknownEntry`."""
    if entry_id not in ENTRIES:
        raise UnknownEntry(entry_id)
    if entry_id == "n32-szep":
        base = load("n32")
        pres = parse_presentation(read_data("szep.pres"))
        dictionary = load_dictionary()
        rep = Representation(
            pres.generators,
            tuple(base.representation.evaluate(w) for w in dictionary.images),
            base.representation.basis_labels,
        )
        entry = CatalogEntry(entry_id, pres, rep, notes=(ENTRIES[entry_id],))
    else:
        pres = parse_presentation(read_data(f"{entry_id}.pres"))
        rep = parse_representation(read_data(f"{entry_id}.rep"), pres)
        named, gens = _parse_classes(read_data(f"{entry_id}.classes"), GeneratorTensorBasis.of(rep))
        entry = CatalogEntry(entry_id, pres, rep, MappingProxyType(named), gens, (ENTRIES[entry_id],))
    bad = [c.label for c in check_relations(entry.presentation, entry.representation) if not c.ok]
    if bad:
        raise ValueError(f"catalog entry {entry_id}: representation violates relations {bad}")
    return entry


@dataclass(frozen=True)
class SubstitutionCheck:
    relation: Relation
    lhs: Word
    rhs: Word
    ok: bool

    @property
    def label(self) -> str:
        return self.relation.label


def verify_szep_consistency() -> list[SubstitutionCheck]:
    """Rewrite each uppercase relation through the dictionary and compare both
    sides under the ``n32`` representation.

    Passing is a necessary condition for the rewritten relations to hold in
    the group, not a proof.
    """
    szep = parse_presentation(read_data("szep.pres"))
    dictionary = load_dictionary()
    rep = load("n32").representation
    out = []
    for rel in szep.relations:
        lhs, rhs = dictionary.substitute(rel.lhs), dictionary.substitute(rel.rhs)
        out.append(SubstitutionCheck(rel, lhs, rhs, check_identity_under_rep(rep, lhs, rhs)))
    return out
