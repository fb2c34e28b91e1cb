"""Exact integer matrices and lattices.

Everything here uses Python integers, so there is no overflow however large the
intermediate entries grow.  Matrices act on column vectors.

Elimination is deterministic: the pivot is always the entry of smallest
nonzero absolute value, ties going to the lowest ``(row, col)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "IntMatrix",
    "SNFResult",
    "AbelianGroup",
    "MembershipError",
    "hnf",
    "snf",
    "kernel_lattice",
    "cokernel",
    "solve_in_lattice",
    "quotient_in_sublattice",
]


class MembershipError(ValueError):
    """A vector is not an integer combination of a lattice basis."""


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        entries = tuple(int(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    # construction

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty row list")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int | None = None) -> "IntMatrix":
        columns = [list(c) for c in columns]
        if rows is None:
            if not columns:
                raise ValueError("cannot infer row count of an empty column list")
            rows = len(columns[0])
        if not columns:
            return cls.zeros(rows, 0)
        return cls.from_rows(columns, rows).T

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diag(cls, values: Sequence[int], rows: int | None = None, cols: int | None = None) -> "IntMatrix":
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for k, x in enumerate(values):
            out[k][k] = x
        return cls.from_rows(out, cols)

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.cols)]

    # arithmetic

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(self.entries[i * self.cols + j]
                                                     for j in range(self.cols)
                                                     for i in range(self.rows)))

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            ocols = [other.col(j) for j in range(other.cols)]
            out = []
            for i in range(self.rows):
                r = self.row(i)
                out.extend(sum(a * b for a, b in zip(r, c) if a) for c in ocols)
            return IntMatrix(self.rows, other.cols, tuple(out))
        vec = tuple(other)
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} for {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(self.row(i), vec) if a) for i in range(self.rows))

    def _check_same(self, other: "IntMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same(other)
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same(other)
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __rmul__(self, k: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(k * a for a in self.entries))

    def hstack(self, *others: "IntMatrix") -> "IntMatrix":
        rows = self.to_rows()
        for o in others:
            if o.rows != self.rows:
                raise ValueError("hstack needs equal row counts")
            for i in range(self.rows):
                rows[i].extend(o.row(i))
        return IntMatrix.from_rows(rows, self.cols + sum(o.cols for o in others)) if self.rows else \
            IntMatrix.zeros(0, self.cols + sum(o.cols for o in others))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __str__(self) -> str:
        if not self.rows or not self.cols:
            return f"[{self.rows}x{self.cols} matrix]"
        width = max(len(str(x)) for x in self.entries)
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in self.row(i)) + "]"
                         for i in range(self.rows))


def _identity_rows(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _hnf_inplace(a: list[list[int]], u: list[list[int]], ncols: int) -> int:
    """Row-reduce ``a`` to Hermite form, applying the same operations to ``u``.

    Returns the rank.
    """
    m = len(a)
    r = 0
    for c in range(ncols):
        if r == m:
            break
        while True:
            cand = [i for i in range(r, m) if a[i][c]]
            if not cand:
                break
            p = min(cand, key=lambda i: (abs(a[i][c]), i))
            if p != r:
                a[r], a[p] = a[p], a[r]
                u[r], u[p] = u[p], u[r]
            piv = a[r][c]
            clean = True
            for i in range(r + 1, m):
                if a[i][c]:
                    q = a[i][c] // piv
                    ai, ar, ui, ur = a[i], a[r], u[i], u[r]
                    for j in range(c, ncols):
                        ai[j] -= q * ar[j]
                    for j in range(len(ur)):
                        ui[j] -= q * ur[j]
                    if ai[c]:
                        clean = False
            if clean:
                break
        if not any(a[i][c] for i in range(r, m)):
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        piv = a[r][c]
        for i in range(r):
            q = a[i][c] // piv
            if q:
                ai, ar, ui, ur = a[i], a[r], u[i], u[r]
                for j in range(c, ncols):
                    ai[j] -= q * ar[j]
                for j in range(len(ur)):
                    ui[j] -= q * ur[j]
        r += 1
    return r


def hnf(A: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form: returns ``(H, U)`` with ``U @ A == H``.

    Pivots are positive and entries above a pivot lie in ``[0, pivot)``; zero
    rows are at the bottom.
    """
    a = A.to_rows()
    u = _identity_rows(A.rows)
    _hnf_inplace(a, u, A.cols)
    H = IntMatrix.from_rows(a, A.cols) if A.rows else IntMatrix.zeros(0, A.cols)
    U = IntMatrix.from_rows(u, A.rows) if A.rows else IntMatrix.zeros(0, 0)
    return H, U


@dataclass(frozen=True)
class SNFResult:
    """``u @ A @ v`` is diagonal with diagonal ``d``; ``d[k]`` divides ``d[k+1]``."""

    d: tuple[int, ...]
    u: IntMatrix
    v: IntMatrix

    def diagonal_matrix(self) -> IntMatrix:
        return IntMatrix.diag(self.d, self.u.rows, self.v.cols)

    @property
    def rank(self) -> int:
        return sum(1 for x in self.d if x)


def snf(A: IntMatrix) -> SNFResult:
    """Smith normal form with unimodular transforms.

    The product ``u @ A @ v`` is recomputed and compared against the diagonal
    before returning.
    """
    m, n = A.shape
    a = A.to_rows()
    u = _identity_rows(m)
    v = _identity_rows(n)  # stored as rows of v; column ops act on v's columns

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):
        # row dst -= q * row src
        ad, as_, ud, us = a[dst], a[src], u[dst], u[src]
        for j in range(n):
            if as_[j]:
                ad[j] -= q * as_[j]
        for j in range(m):
            if us[j]:
                ud[j] -= q * us[j]

    def add_col(dst, src, q):
        # col dst -= q * col src
        for row in a:
            if row[src]:
                row[dst] -= q * row[src]
        for row in v:
            if row[src]:
                row[dst] -= q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        if i != t:
            swap_rows(i, t)
        if j != t:
            swap_cols(j, t)
        while True:
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, a[i][t] // piv)
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, a[t][j] // piv)
                    dirty = dirty or a[t][j] != 0
            if dirty:
                best = None
                for i in range(t, m):
                    x = a[i][t]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, t)
                for j in range(t, n):
                    x = a[t][j]
                    if x and (best is None or (abs(x), t, j) < best):
                        best = (abs(x), t, j)
                _, i, j = best
                if i != t:
                    swap_rows(i, t)
                if j != t:
                    swap_cols(j, t)
                continue
            bad = None
            for i in range(t + 1, m):
                row = a[i]
                for j in range(t + 1, n):
                    if row[j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    d = tuple(a[k][k] for k in range(min(m, n)))
    U = IntMatrix.from_rows(u, m) if m else IntMatrix.zeros(0, 0)
    V = IntMatrix.from_rows(v, n) if n else IntMatrix.zeros(0, 0)
    result = SNFResult(d, U, V)
    if U @ A @ V != result.diagonal_matrix():
        raise ArithmeticError("Smith form reconstruction failed")
    return result


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group ``Z^free_rank + Z/t1 + ... + Z/tk``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        torsion = tuple(int(t) for t in self.torsion)
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for k, t in enumerate(torsion):
            if t < 2:
                raise ValueError(f"invariant factor {t} < 2")
            if k and t % torsion[k - 1]:
                raise ValueError(f"invariant factors {torsion} do not form a divisibility chain")
        object.__setattr__(self, "torsion", torsion)

    @classmethod
    def from_diagonal(cls, d: Iterable[int], rows: int) -> "AbelianGroup":
        """Cokernel of a diagonal map into ``Z^rows`` with diagonal ``d``."""
        d = [abs(x) for x in d]
        nonzero = [x for x in d if x]
        return cls(rows - len(nonzero), tuple(sorted(x for x in nonzero if x > 1)))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        k = 0
        while k < len(self.torsion):
            t = self.torsion[k]
            run = 1
            while k + run < len(self.torsion) and self.torsion[k + run] == t:
                run += 1
            parts.append(f"Z/{t}" if run == 1 else f"(Z/{t})^{run}")
            k += run
        return " + ".join(parts)


def kernel_lattice(A: IntMatrix) -> IntMatrix:
    """Saturated basis of ``{v : A v = 0}`` as the columns of the result.

    The basis is in column Hermite form, so it depends only on the lattice.
    """
    n = A.cols
    h = A.T.to_rows()
    u = _identity_rows(n)
    rank = _hnf_inplace(h, u, A.rows)
    basis = u[rank:]
    if not basis:
        return IntMatrix.zeros(n, 0)
    k = len(basis)
    _hnf_inplace(basis, _identity_rows(k), n)
    return IntMatrix.from_rows(basis, n).T


def cokernel(A: IntMatrix) -> AbelianGroup:
    """``Z^rows`` modulo the column span of ``A``."""
    if A.cols == 0 or A.rows == 0:
        return AbelianGroup(A.rows)
    return AbelianGroup.from_diagonal(snf(A).d, A.rows)


def solve_in_lattice(K: IntMatrix, vectors: Sequence[Sequence[int]]) -> IntMatrix:
    """Coordinates of each vector against the columns of ``K``.

    ``K`` must have independent columns.  Returns the ``K.cols x len(vectors)``
    matrix ``X`` with ``K @ X`` equal to the vectors laid out as columns.
    Raises :class:`MembershipError` when a vector is not an integer
    combination of the columns.
    """
    n, k = K.shape
    H, U = hnf(K)
    for i in range(k):
        if H[i, i] == 0:
            raise ValueError("lattice basis columns are linearly dependent")
    out = []
    for idx, vec in enumerate(vectors):
        vec = tuple(vec)
        if len(vec) != n:
            raise ValueError(f"vector {idx} has length {len(vec)}, expected {n}")
        w = U @ vec
        if any(w[k:]):
            raise MembershipError(f"vector {idx} is not in the rational span of the lattice")
        x = [0] * k
        for i in range(k - 1, -1, -1):
            s = w[i] - sum(H[i, j] * x[j] for j in range(i + 1, k))
            q, r = divmod(s, H[i, i])
            if r:
                raise MembershipError(f"vector {idx} is not an integer combination of the lattice basis")
            x[i] = q
        out.append(x)
    return IntMatrix.from_columns(out, k)


def quotient_in_sublattice(K: IntMatrix, L: Sequence[Sequence[int]]) -> AbelianGroup:
    """The group ``span(K) / span(L)`` for vectors ``L`` inside ``span(K)``."""
    return cokernel(solve_in_lattice(K, L))
