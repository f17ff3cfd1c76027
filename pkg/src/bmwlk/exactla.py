"""Dense exact linear algebra over Q(l, r) and Q.

Matrix entries are field elements: :class:`~bmwlk.exact.RatFunc` for
symbolic work, :class:`fractions.Fraction` (or ``int``) for numeric
specializations.  Every routine is exact.  When all entries of an input are
rational constants the elimination runs over :class:`Fraction` directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import RatFunc

__all__ = [
    "DimensionMismatch",
    "SingularMatrix",
    "Matrix",
    "Subspace",
    "mat_mul",
    "det",
    "rank",
    "rref",
    "kernel",
    "subspace_intersect",
    "solve_linear",
    "mat_inverse",
]


class DimensionMismatch(ValueError):
    pass


class SingularMatrix(ArithmeticError):
    pass


def _is_rational(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return True
    return isinstance(x, RatFunc) and x.is_constant()


def _to_fraction(x) -> Fraction:
    if isinstance(x, RatFunc):
        return x.to_fraction()
    return Fraction(x)


def _weight(x) -> int:
    if isinstance(x, RatFunc):
        return x.size()
    if isinstance(x, Fraction):
        return x.numerator.bit_length() + x.denominator.bit_length()
    return int(x).bit_length()


class Matrix:
    """Immutable dense matrix, row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Sequence[Sequence], cols: int | None = None):
        self._data = [list(row) for row in data]
        self.rows = len(self._data)
        self.cols = len(self._data[0]) if self._data else (cols or 0)
        if any(len(row) != self.cols for row in self._data):
            raise DimensionMismatch("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if not columns:
            return cls.zeros(rows or 0, 0)
        return cls([list(r) for r in zip(*columns)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> list:
        return list(self._data[i])

    def column(self, j: int) -> list:
        return [row[j] for row in self._data]

    def tolist(self) -> list[list]:
        return [list(row) for row in self._data]

    def transpose(self) -> "Matrix":
        return Matrix([list(c) for c in zip(*self._data)], cols=self.rows)

    def map(self, f) -> "Matrix":
        return Matrix([[f(x) for x in row] for row in self._data], cols=self.cols)

    def is_zero(self) -> bool:
        return not any(x for row in self._data for x in row)

    def trace(self):
        if self.rows != self.cols:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self._data[i][i] for i in range(self.rows)), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self._data, other._data) for a, b in zip(ra, rb)
        )

    __hash__ = None

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)],
            cols=self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return Matrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._data, other._data)],
            cols=self.cols,
        )

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def scale(self, c) -> "Matrix":
        if not c:
            return Matrix.zeros(self.rows, self.cols)
        return self.map(lambda x: c * x if x else 0)

    def __rmul__(self, c) -> "Matrix":
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        return self.apply(other)

    def apply(self, vec: Sequence) -> list:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise DimensionMismatch(f"{self.shape} @ vector of length {len(vec)}")
        nz = [(j, x) for j, x in enumerate(vec) if x]
        out = []
        for row in self._data:
            acc = 0
            for j, x in nz:
                a = row[j]
                if a:
                    acc = acc + a * x
            out.append(acc)
        return out

    def __repr__(self) -> str:
        body = "\n".join("  [" + ", ".join(str(x) for x in row) + "]" for row in self._data)
        return f"Matrix({self.rows}x{self.cols},\n{body})"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact product, skipping structural zeros."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"{a.shape} @ {b.shape}")
    brows = [[(j, x) for j, x in enumerate(row) if x] for row in b._data]
    out = []
    for row in a._data:
        acc = [0] * b.cols
        for k, aik in enumerate(row):
            if not aik:
                continue
            for j, bkj in brows[k]:
                acc[j] = acc[j] + aik * bkj
        out.append(acc)
    return Matrix(out, cols=b.cols)


def vstack(mats: Iterable[Matrix], cols: int) -> Matrix:
    rows = [row for m in mats for row in m._data]
    return Matrix(rows, cols=cols)


# ---------------------------------------------------------------------------
# elimination


def _prepare(rows: list[list]) -> tuple[list[list], bool]:
    numeric = all(_is_rational(x) for row in rows for x in row)
    if numeric:
        return [[_to_fraction(x) for x in row] for row in rows], True
    return [[x if isinstance(x, RatFunc) else RatFunc(x) for x in row] for row in rows], False


def _rref_rows(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """Gauss-Jordan in place; returns (nonzero reduced rows, pivot columns)."""
    rows = [row for row in rows if any(row)]
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        if top >= len(rows):
            break
        cands = [i for i in range(top, len(rows)) if rows[i][col]]
        if not cands:
            continue
        best = min(cands, key=lambda i: _weight(rows[i][col]))
        rows[top], rows[best] = rows[best], rows[top]
        prow = rows[top]
        inv = 1 / prow[col]
        prow = [x * inv if x else x for x in prow]
        rows[top] = prow
        nzp = [(j, prow[j]) for j in range(col + 1, ncols) if prow[j]]
        for i in range(len(rows)):
            if i == top:
                continue
            f = rows[i][col]
            if not f:
                continue
            r = rows[i]
            for j, pj in nzp:
                r[j] = r[j] - f * pj
            r[col] = 0
        pivots.append(col)
        top += 1
    return rows[:top], pivots


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns."""
    rows, _ = _prepare(a._data)
    red, piv = _rref_rows(rows, a.cols)
    return Matrix(red, cols=a.cols), piv


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def det(a: Matrix):
    """Exact determinant.

    Symbolic matrices are lifted to polynomial matrices by clearing row
    denominators and reduced with fraction-free (Bareiss) elimination.
    """
    if a.rows != a.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    rows, numeric = _prepare(a._data)
    if numeric:
        return _det_fraction(rows)
    polys = []
    scale = None
    for row in rows:
        dens = [x.mpoly_pair()[1] for x in row if x]
        if not dens:
            return RatFunc(0)
        d = dens[0]
        for q in dens[1:]:
            d = d * q / d.gcd(q)
        polys.append([x.mpoly_pair()[0] * (d / x.mpoly_pair()[1]) if x else None for x in row])
        scale = d if scale is None else scale * d
    num = _bareiss(polys)
    return RatFunc(num, scale)


def _det_fraction(rows: list[list[Fraction]]) -> Fraction:
    rows = [list(r) for r in rows]
    n = len(rows)
    out = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            out = -out
        p = rows[col][col]
        out *= p
        for i in range(col + 1, n):
            f = rows[i][col] / p
            if f:
                for j in range(col, n):
                    rows[i][j] -= f * rows[col][j]
    return out


def _bareiss(m: list[list]):
    """Bareiss elimination on FLINT polynomials; ``None`` marks zero."""
    n = len(m)
    zero = next(x for row in m for x in row if x is not None) * 0
    a = [[zero if x is None else x for x in row] for row in m]
    sign = 1
    prev = zero + 1
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return zero
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                t = akk * a[i][j] - aik * a[k][j]
                a[i][j] = t if prev.is_one() else t / prev
            a[i][k] = zero
        prev = akk
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """Subspace of a coordinate space, stored as a reduced echelon basis.

    Each basis vector has a pivot coordinate equal to 1 where every other
    basis vector is 0, so equality of subspaces is equality of bases.
    """

    ambient_dim: int
    basis: tuple[tuple, ...]
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in dimension {ambient_dim}")
        if not vectors:
            return cls(ambient_dim, (), ())
        rows, _ = _prepare(vectors)
        red, piv = _rref_rows(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in red), tuple(piv))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.span(Matrix.identity(ambient_dim).tolist(), ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and all(a == b for u, v in zip(self.basis, other.basis) for a, b in zip(u, v))
        )

    __hash__ = None

    def coordinates(self, v: Sequence) -> list | None:
        """Coordinates of ``v`` in the basis, or ``None`` if ``v`` is not in the span."""
        coords = [v[p] for p in self.pivots]
        rest = list(v)
        for c, b in zip(coords, self.basis):
            if c:
                rest = [x - c * y if y else x for x, y in zip(rest, b)]
        if any(rest):
            return None
        return coords

    def contains(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def matrix(self) -> Matrix:
        """Basis vectors as the columns of an ``ambient_dim x dim`` matrix."""
        return Matrix.from_columns(self.basis, rows=self.ambient_dim) if self.basis else Matrix.zeros(self.ambient_dim, 0)

    def annihilator(self) -> "Subspace":
        """Row vectors ``y`` with ``y . v = 0`` for every ``v`` in the subspace."""
        if not self.basis:
            return Subspace.full(self.ambient_dim)
        return kernel(Matrix(self.basis, cols=self.ambient_dim))

    def is_invariant(self, mat: Matrix) -> bool:
        return all(self.contains(mat.apply(list(b))) for b in self.basis)

    def restrict(self, mat: Matrix) -> Matrix:
        """Matrix of ``mat`` acting on the subspace, in the stored basis.

        Raises ``ValueError`` if the subspace is not invariant.
        """
        cols = []
        for b in self.basis:
            c = self.coordinates(mat.apply(list(b)))
            if c is None:
                raise ValueError("subspace is not invariant")
            cols.append(c)
        if not cols:
            return Matrix.zeros(0, 0)
        return Matrix.from_columns(cols)


def kernel(a: Matrix) -> Subspace:
    """Right null space of ``a``."""
    if a.rows == 0:
        return Subspace.full(a.cols)
    red, piv = rref(a)
    free = [j for j in range(a.cols) if j not in set(piv)]
    vecs = []
    for f in free:
        v: list = [0] * a.cols
        v[f] = 1
        for i, p in enumerate(piv):
            x = red[i, f]
            if x:
                v[p] = -x
        vecs.append(v)
    return Subspace.span(vecs, a.cols)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("subspaces of different ambient spaces")
    n = a.ambient_dim
    if not a.basis or not b.basis:
        return Subspace.zero(n)
    ann = list(a.annihilator().basis) + list(b.annihilator().basis)
    if not ann:
        return Subspace.full(n)
    return kernel(Matrix(ann, cols=n))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("subspaces of different ambient spaces")
    return Subspace.span(list(a.basis) + list(b.basis), a.ambient_dim)


def solve_linear(a: Matrix, rhs: Sequence) -> list | None:
    """A particular solution of ``a x = rhs`` (free variables set to 0), or ``None``."""
    if a.rows != len(rhs):
        raise DimensionMismatch(f"{a.shape} system with right-hand side of length {len(rhs)}")
    aug = [list(row) + [b] for row, b in zip(a._data, rhs)]
    rows, _ = _prepare(aug)
    red, piv = _rref_rows(rows, a.cols + 1)
    if piv and piv[-1] == a.cols:
        return None
    x: list = [0] * a.cols
    for row, p in zip(red, piv):
        x[p] = row[a.cols]
    return x


def mat_inverse(a: Matrix) -> Matrix:
    if a.rows != a.cols:
        raise DimensionMismatch("inverse of a non-square matrix")
    n = a.rows
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(a._data)]
    rows, _ = _prepare(aug)
    red, piv = _rref_rows(rows, 2 * n)
    if piv[:n] != list(range(n)) or len(red) < n:
        raise SingularMatrix("matrix is singular")
    return Matrix([row[n:] for row in red], cols=n)
