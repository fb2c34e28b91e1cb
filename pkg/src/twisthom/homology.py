"""H_0 and H_1 of a finitely presented group with coefficients in Z^n.

Chains in degree one are spanned by symbols ``[x] (x) e_i`` for generators
``x`` and module basis vectors ``e_i``; symbol ``(j, i)`` sits at flat index
``j * n + i``.  A group element ``g`` acts on the module side of the tensor
product through ``psi(g)^-1``, so

* the boundary of ``[x] (x) e_i`` is ``(psi(x)^-1 - I) e_i``;
* a relation ``x_1 ... x_k = y_1 ... y_n`` gives, for each ``e_i``, the vector
  ``sum_i x_1...x_{i-1}[x_i] (x) e_i`` minus the same sum over the ``y``,
  with an inverse letter rewritten by ``[g^-1] (x) m = -[g] (x) psi(g) m``.

H_1 is the kernel of the boundary modulo the span of those relation vectors.
"""

from __future__ import annotations

import re
from math import gcd
from dataclasses import dataclass
from typing import Mapping, Sequence

from .intlat import (
    AbelianGroup,
    IntMatrix,
    SNFResult,
    cokernel,
    kernel_lattice,
    snf,
    solve_in_lattice,
)
from .representation import RelationCheck, Representation, check_relations
from .words import ParseError, Presentation, Relation

__all__ = [
    "RelationInconsistency",
    "NotInKernel",
    "GeneratorTensorBasis",
    "FoxVector",
    "HomologyResult",
    "HomologyClass",
    "boundary1_matrix",
    "fox_blocks",
    "fox_vector",
    "relation_vectors",
    "h1",
    "h0",
    "abelianization",
    "class_of",
    "parse_combination",
    "format_combination",
]


class RelationInconsistency(ValueError):
    """The representation does not respect a relation of the presentation."""

    def __init__(self, message: str, check: RelationCheck):
        super().__init__(message)
        self.check = check


class NotInKernel(ValueError):
    """Vector is not a cycle: its boundary is nonzero."""

    def __init__(self, message: str, boundary: tuple[int, ...]):
        super().__init__(message)
        self.boundary = boundary


@dataclass(frozen=True)
class GeneratorTensorBasis:
    generators: tuple[str, ...]
    module_labels: tuple[str, ...]

    @classmethod
    def of(cls, rep: Representation) -> "GeneratorTensorBasis":
        return cls(rep.generators, rep.basis_labels)

    @property
    def n(self) -> int:
        return len(self.module_labels)

    def __len__(self) -> int:
        return len(self.generators) * self.n

    def index(self, gen: int | str, i: int) -> int:
        """Flat index of ``[gen] (x) e_i`` (``i`` zero-based)."""
        j = self.generators.index(gen) if isinstance(gen, str) else gen
        if not (0 <= j < len(self.generators) and 0 <= i < self.n):
            raise IndexError((gen, i))
        return j * self.n + i

    def symbol(self, k: int) -> tuple[int, int]:
        return divmod(k, self.n)

    def label(self, k: int) -> str:
        j, i = self.symbol(k)
        return f"{self.generators[j]}⊗{self.module_labels[i]}"

    def short_label(self, k: int) -> str:
        j, i = self.symbol(k)
        return f"{self.generators[j]}[{i + 1}]"


@dataclass(frozen=True)
class FoxVector:
    coords: tuple[int, ...]
    relation: int
    basis_index: int


def _check(pres: Presentation, rep: Representation):
    if not rep.matches(pres):
        raise ValueError("representation generators do not match the presentation")


def boundary1_matrix(pres: Presentation, rep: Representation) -> IntMatrix:
    """``n x (|X| n)`` matrix; column ``(j, i)`` is ``(psi(x_j)^-1 - I) e_i``."""
    _check(pres, rep)
    n = rep.dimension
    ident = IntMatrix.identity(n)
    if not pres.ngens:
        return IntMatrix.zeros(n, 0)
    return (rep.inverses[0] - ident).hstack(*(inv - ident for inv in rep.inverses[1:]))


def fox_blocks(pres: Presentation, rep: Representation, rel: Relation) -> list[IntMatrix]:
    """Coefficient matrix of each generator in the relation's rewriting.

    Block ``j`` is the ``n x n`` matrix ``C_j`` such that the relation read at
    ``e_i`` equals ``sum_j [x_j] (x) C_j e_i``.
    """
    _check(pres, rep)
    n = rep.dimension
    acc = [[0] * (n * n) for _ in range(pres.ngens)]
    for side, sign in ((rel.lhs, 1), (rel.rhs, -1)):
        prefix_inv = IntMatrix.identity(n)  # psi(prefix)^-1
        for g, s in side:
            if s > 0:
                term = prefix_inv
                prefix_inv = rep.inverses[g] @ prefix_inv
            else:
                prefix_inv = rep.images[g] @ prefix_inv
                term = -prefix_inv
            block = acc[g]
            for k, x in enumerate(term.entries):
                if x:
                    block[k] += sign * x
    return [IntMatrix(n, n, tuple(b)) for b in acc]


def _blocks_to_vectors(blocks: Sequence[IntMatrix], n: int) -> list[tuple[int, ...]]:
    return [tuple(x for b in blocks for x in b.col(i)) for i in range(n)]


def fox_vector(pres: Presentation, rep: Representation, rel: Relation | int, i: int) -> FoxVector:
    """Relation vector of ``rel`` at module basis vector ``e_i`` (zero-based)."""
    index = rel if isinstance(rel, int) else pres.relations.index(rel)
    relation = pres.relations[index] if isinstance(rel, int) else rel
    if not 0 <= i < rep.dimension:
        raise IndexError(i)
    coords = _blocks_to_vectors(fox_blocks(pres, rep, relation), rep.dimension)[i]
    return FoxVector(coords, index, i)


def relation_vectors(pres: Presentation, rep: Representation) -> list[FoxVector]:
    """All relation vectors, ordered by (relation, basis index)."""
    out = []
    for k, rel in enumerate(pres.relations):
        for i, coords in enumerate(_blocks_to_vectors(fox_blocks(pres, rep, rel), rep.dimension)):
            out.append(FoxVector(coords, k, i))
    return out


@dataclass(frozen=True)
class HomologyClass:
    """Image of a cycle in ``Z^r + Z/t_1 + ... + Z/t_k``.

    ``coords`` lists the free coordinates first, then the torsion ones, each
    torsion coordinate reduced into ``[0, t)``.
    """

    coords: tuple[int, ...]
    group: AbelianGroup

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def order(self) -> int | None:
        """Additive order, or ``None`` for an element of infinite order."""
        r = self.group.free_rank
        if any(self.coords[:r]):
            return None
        out = 1
        for c, t in zip(self.coords[r:], self.group.torsion):
            if c:
                k = t // gcd(c, t)
                out = out * k // gcd(out, k)
        return out

    def __str__(self) -> str:
        if self.is_zero:
            return "zero"
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class HomologyResult:
    group: AbelianGroup
    basis: GeneratorTensorBasis
    boundary: IntMatrix
    kernel_basis: IntMatrix
    relation_vectors: tuple[FoxVector, ...]
    relation_coords: IntMatrix
    relation_matrix_snf: SNFResult
    projection: IntMatrix
    moduli: tuple[int, ...]

    @property
    def kernel_rank(self) -> int:
        return self.kernel_basis.cols

    def kernel_coords(self, v: Sequence[int]) -> tuple[int, ...]:
        return solve_in_lattice(self.kernel_basis, [v]).col(0)


def _projection(d: Sequence[int], u: IntMatrix) -> tuple[IntMatrix, tuple[int, ...]]:
    k = u.rows
    diag = list(d) + [0] * (k - len(d))
    free = [i for i in range(k) if diag[i] == 0]
    tors = [i for i in range(k) if diag[i] > 1]
    rows = [u.row(i) for i in free + tors]
    moduli = tuple([0] * len(free) + [diag[i] for i in tors])
    return IntMatrix.from_rows(rows, k), moduli


def h1(pres: Presentation, rep: Representation) -> HomologyResult:
    """First homology with coefficients in the module given by ``rep``.

    Raises :class:`RelationInconsistency` naming the first relation that the
    representation does not satisfy.
    """
    for check in check_relations(pres, rep):
        if not check.ok:
            raise RelationInconsistency(
                f"representation violates relation ({check.label}) {pres.format_relation(check.relation)}",
                check,
            )
    B = boundary1_matrix(pres, rep)
    K = kernel_lattice(B)
    vectors = tuple(relation_vectors(pres, rep))
    C = solve_in_lattice(K, [fv.coords for fv in vectors])
    res = snf(C)
    proj, moduli = _projection(res.d, res.u)
    group = AbelianGroup.from_diagonal(res.d, K.cols)
    return HomologyResult(group, GeneratorTensorBasis.of(rep), B, K, vectors, C, res, proj, moduli)


def h0(pres: Presentation, rep: Representation) -> AbelianGroup:
    """Coinvariants ``Z^n / <(psi(x)^-1 - I) m>``."""
    return cokernel(boundary1_matrix(pres, rep))


def exponent_sum_matrix(pres: Presentation) -> IntMatrix:
    cols = [rel.relator().exponent_sums(pres.ngens) for rel in pres.relations]
    return IntMatrix.from_columns(cols, pres.ngens)


def abelianization(pres: Presentation) -> AbelianGroup:
    return cokernel(exponent_sum_matrix(pres))


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coef>\d+)\s*\*?\s*)?(?P<name>[A-Za-z][A-Za-z0-9_]*)\s*\[\s*(?P<idx>\d+)\s*\]\s*"
)


def parse_combination(text: str, basis: GeneratorTensorBasis) -> tuple[int, ...]:
    """Parse ``a1[3] + 2 a2[2] - u[1]`` into a chain vector.

    Indices in brackets are 1-based module basis positions.  The single
    token ``0`` is the zero vector.
    """
    vec = [0] * len(basis)
    if text.strip() == "0":
        return tuple(vec)
    pos = 0
    first = True
    if not text.strip():
        raise ParseError("empty combination", None, 1)
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError("expected a term like 'a1[3]'", None, pos + 1)
        if m.group("sign") is None and not first:
            raise ParseError("missing '+' or '-' between terms", None, pos + 1)
        name = m.group("name")
        if name not in basis.generators:
            raise ParseError(f"unknown generator {name!r}", None, m.start("name") + 1)
        idx = int(m.group("idx"))
        if not 1 <= idx <= basis.n:
            raise ParseError(f"index {idx} outside 1..{basis.n}", None, m.start("idx") + 1)
        coef = int(m.group("coef") or 1)
        if m.group("sign") == "-":
            coef = -coef
        vec[basis.index(name, idx - 1)] += coef
        pos = m.end()
        first = False
    return tuple(vec)


def format_combination(v: Sequence[int], basis: GeneratorTensorBasis, short: bool = False) -> str:
    """Signed sum of labelled symbols; ``0`` for the zero vector."""
    label = basis.short_label if short else basis.label
    parts = []
    for k, c in enumerate(v):
        if not c:
            continue
        mag = "" if abs(c) == 1 else f"{abs(c)} "
        if not parts:
            parts.append(("-" if c < 0 else "") + mag + label(k))
        else:
            parts.append(("- " if c < 0 else "+ ") + mag + label(k))
    return " ".join(parts) if parts else "0"


def class_of(result: HomologyResult, v: Sequence[int] | str | Mapping[str, int]) -> HomologyClass:
    """Homology class of the cycle ``v``.

    ``v`` is a chain vector, a combination string (see
    :func:`parse_combination`) or a mapping from short labels like ``"a1[3]"``
    to coefficients.  Raises :class:`NotInKernel` if ``v`` is not a cycle.
    """
    if isinstance(v, str):
        vec = parse_combination(v, result.basis)
    elif isinstance(v, Mapping):
        acc = [0] * len(result.basis)
        for label, c in v.items():
            for k, x in enumerate(parse_combination(label, result.basis)):
                acc[k] += c * x
        vec = tuple(acc)
    else:
        vec = tuple(v)
    if len(vec) != len(result.basis):
        raise ValueError(f"vector of length {len(vec)}, expected {len(result.basis)}")
    bd = result.boundary @ vec
    if any(bd):
        raise NotInKernel(f"boundary is {bd}, not zero", bd)
    x = result.kernel_coords(vec)
    y = result.projection @ x
    coords = tuple(c % t if t else c for c, t in zip(y, result.moduli))
    return HomologyClass(coords, result.group)
