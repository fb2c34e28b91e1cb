"""Integer matrix representations of presented groups.

Note that agreement of two words under a representation is only a necessary
condition for them to be equal in the group; representations here are never
assumed faithful.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .intlat import IntMatrix, hnf
from .words import NAME_RE, ParseError, Presentation, Relation, Word, format_word

__all__ = [
    "NotUnimodular",
    "Representation",
    "RelationCheck",
    "invert_matrix",
    "evaluate",
    "check_relations",
    "check_identity_under_rep",
    "trivial_representation",
    "parse_representation",
    "format_representation",
]


class NotUnimodular(ValueError):
    """Matrix determinant is not +1 or -1."""


def invert_matrix(M: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix."""
    if not M.is_square():
        raise NotUnimodular(f"{M.rows}x{M.cols} matrix is not square")
    d = M.det()
    if d not in (1, -1):
        raise NotUnimodular(f"determinant {d}")
    # row HNF of a unimodular matrix is the identity, so U is the inverse
    H, U = hnf(M)
    assert H == IntMatrix.identity(M.rows)
    return U


@dataclass(frozen=True)
class Representation:
    """Images of the generators of a presentation in ``GL(n, Z)``.

    ``images[j]`` is the matrix of generator ``generators[j]``.  Inverses are
    computed when the object is built; a non-invertible image is rejected.
    """

    generators: tuple[str, ...]
    images: tuple[IntMatrix, ...]
    basis_labels: tuple[str, ...] = ()
    inverses: tuple[IntMatrix, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.generators) != len(self.images):
            raise ValueError(f"{len(self.generators)} generators but {len(self.images)} images")
        n = self.images[0].rows if self.images else len(self.basis_labels)
        if n <= 0:
            raise ValueError("representation dimension must be positive")
        labels = tuple(self.basis_labels) or default_labels(n)
        if len(labels) != n:
            raise ValueError(f"{len(labels)} basis labels for dimension {n}")
        object.__setattr__(self, "basis_labels", labels)
        inverses = []
        for name, M in zip(self.generators, self.images):
            if M.shape != (n, n):
                raise ValueError(f"image of {name} has shape {M.shape}, expected {(n, n)}")
            try:
                inverses.append(invert_matrix(M))
            except NotUnimodular as exc:
                raise NotUnimodular(f"image of {name}: {exc}") from None
        object.__setattr__(self, "inverses", tuple(inverses))

    @classmethod
    def from_mapping(cls, pres: Presentation, images: Mapping[str, IntMatrix],
                     basis_labels: Sequence[str] = ()) -> "Representation":
        missing = [g for g in pres.generators if g not in images]
        extra = [g for g in images if g not in pres.generators]
        if missing or extra:
            raise ValueError(f"generator mismatch: missing {missing}, unexpected {extra}")
        return cls(pres.generators, tuple(images[g] for g in pres.generators), tuple(basis_labels))

    @property
    def dimension(self) -> int:
        return len(self.basis_labels)

    def image(self, name: str) -> IntMatrix:
        return self.images[self.generators.index(name)]

    def letter(self, gen: int, sign: int) -> IntMatrix:
        return self.images[gen] if sign > 0 else self.inverses[gen]

    def evaluate(self, w: Word) -> IntMatrix:
        out = IntMatrix.identity(self.dimension)
        for g, s in w:
            out = out @ self.letter(g, s)
        return out

    def matches(self, pres: Presentation) -> bool:
        return self.generators == pres.generators


def evaluate(rep: Representation, w: Word) -> IntMatrix:
    """Product of the letter images of ``w``, left to right."""
    return rep.evaluate(w)


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"ξ{i + 1}" for i in range(n))


def trivial_representation(pres: Presentation, n: int = 1) -> Representation:
    ident = IntMatrix.identity(n)
    return Representation(pres.generators, (ident,) * pres.ngens, default_labels(n))


@dataclass(frozen=True)
class RelationCheck:
    index: int
    relation: Relation
    ok: bool
    difference: IntMatrix | None = None

    @property
    def label(self) -> str:
        return self.relation.label or str(self.index + 1)


def check_relations(pres: Presentation, rep: Representation) -> list[RelationCheck]:
    """Evaluate both sides of every relation; ``difference`` is lhs minus rhs on failure."""
    if not rep.matches(pres):
        raise ValueError("representation generators do not match the presentation")
    report = []
    for k, rel in enumerate(pres.relations):
        left, right = rep.evaluate(rel.lhs), rep.evaluate(rel.rhs)
        ok = left == right
        report.append(RelationCheck(k, rel, ok, None if ok else left - right))
    return report


def check_identity_under_rep(rep: Representation, w1: Word, w2: Word) -> bool:
    """True iff ``w1`` and ``w2`` have the same image (necessary condition only)."""
    return rep.evaluate(w1) == rep.evaluate(w2)


def parse_representation(text: str, pres: Presentation | None = None) -> Representation:
    """Parse a representation file.

    Format::

        dimension: 4
        basis: g1 g2 g3 d1        # optional
        matrix a1:
        0 1 0 0
        ...

    Each ``matrix NAME:`` block holds ``dimension`` rows of integers.  With
    ``pres`` given, the matrix names must be exactly its generators and the
    result is ordered like them.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))

    dim = None
    labels: tuple[str, ...] = ()
    matrices: dict[str, IntMatrix] = {}
    order: list[str] = []
    k = 0
    while k < len(lines):
        lineno, line = lines[k]
        head, sep, rest = line.partition(":")
        head = head.strip()
        if not sep:
            raise ParseError("expected 'dimension:', 'basis:' or 'matrix NAME:'", lineno, 1)
        if head == "dimension":
            if dim is not None:
                raise ParseError("second dimension line", lineno, 1)
            try:
                dim = int(rest)
            except ValueError:
                raise ParseError(f"bad dimension {rest.strip()!r}", lineno) from None
            if dim <= 0:
                raise ParseError("dimension must be positive", lineno)
            k += 1
        elif head == "basis":
            labels = tuple(rest.split())
            k += 1
        elif head.startswith("matrix"):
            if dim is None:
                raise ParseError("matrix block before dimension line", lineno, 1)
            name = head[len("matrix"):].strip()
            if not NAME_RE.match(name) or rest.strip():
                raise ParseError("malformed matrix header", lineno, 1)
            if name in matrices:
                raise ParseError(f"duplicate matrix {name!r}", lineno, 1)
            rows = []
            for r in range(dim):
                if k + 1 + r >= len(lines):
                    raise ParseError(f"matrix {name!r} ends after {r} rows", lineno)
                rlineno, rline = lines[k + 1 + r]
                try:
                    row = [int(x) for x in rline.split()]
                except ValueError:
                    raise ParseError(f"non-integer entry in matrix {name!r}", rlineno) from None
                if len(row) != dim:
                    raise ParseError(f"row has {len(row)} entries, expected {dim}", rlineno)
                rows.append(row)
            matrices[name] = IntMatrix.from_rows(rows, dim)
            order.append(name)
            k += 1 + dim
        else:
            raise ParseError(f"unknown key {head!r}", lineno, 1)

    if dim is None:
        raise ParseError("missing dimension line")
    if labels and len(labels) != dim:
        raise ParseError(f"{len(labels)} basis labels for dimension {dim}")
    if pres is not None:
        missing = [g for g in pres.generators if g not in matrices]
        extra = [g for g in order if g not in pres.generators]
        if missing or extra:
            raise ParseError(f"generator mismatch with presentation: missing {missing}, unexpected {extra}")
        order = list(pres.generators)
    labels = labels or default_labels(dim)
    return Representation(tuple(order), tuple(matrices[g] for g in order), labels)


def format_representation(rep: Representation) -> str:
    lines = [f"dimension: {rep.dimension}", "basis: " + " ".join(rep.basis_labels)]
    for name, M in zip(rep.generators, rep.images):
        lines.append(f"matrix {name}:")
        lines.extend(" ".join(str(x) for x in M.row(i)) for i in range(M.rows))
    return "\n".join(lines) + "\n"


def describe_failure(pres: Presentation, check: RelationCheck) -> str:
    return f"({check.label}) {format_word(check.relation.lhs, pres.generators)} = " \
           f"{format_word(check.relation.rhs, pres.generators)}"
