"""Dense exact matrices.

Entries are :class:`fractions.Fraction` for numerical work; the arithmetic
methods also accept :class:`~solvlie.poly.MPoly` entries so the same class
carries symbolic matrices (pivoting methods still require a field).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

Vector = tuple  # tuple of Fraction


def Q(x) -> Fraction:
    """Coerce ``x`` to an exact rational; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s or any(c in s for c in ".eE"):
            raise ValueError(f"not an exact rational: {x!r}")
        num, _, den = s.partition("/")
        if _ and int(den) == 0:
            raise ZeroDivisionError(f"zero denominator in {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def _coerce(x):
    if isinstance(x, (Fraction, int, str)) and not isinstance(x, bool):
        return Q(x)
    if hasattr(x, "terms"):  # MPoly
        return x
    raise TypeError(f"unsupported matrix entry {x!r}")


def vec(*xs) -> Vector:
    return tuple(Q(x) for x in xs)


def unit(n: int, i: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(n))


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def vadd(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def lincomb(coeffs: Sequence, vectors: Sequence[Sequence]) -> Vector:
    n = len(vectors[0])
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k in range(n):
                out[k] += c * v[k]
    return tuple(out)


def is_zero_vector(v: Sequence) -> bool:
    return all(a == 0 for a in v)


class Matrix:
    """Immutable dense matrix, row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(_coerce(x) for x in row) for row in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged matrix")
        self.rows = len(data)
        self.cols = cols
        self._data = data

    # -- construction ---------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def diag(cls, *entries) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if not columns:
            return cls([[] for _ in range(rows or 0)], 0)
        return cls(zip(*columns), len(columns))

    @classmethod
    def from_flat(cls, n: int, entries: Sequence) -> "Matrix":
        return cls([entries[i * n:(i + 1) * n] for i in range(n)], n)

    # -- access -----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def flat(self) -> tuple:
        return tuple(x for r in self._data for x in r)

    def map(self, f) -> "Matrix":
        return Matrix([[f(x) for x in r] for r in self._data], self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic -------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)], self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)], self.cols)

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            return NotImplemented
        if isinstance(c, float):
            raise TypeError("floats are not allowed")
        return self.map(lambda x: x * c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            ocols = other.columns()
            return Matrix([[_sum(a * b for a, b in zip(r, c)) for c in ocols] for r in self._data], other.cols)
        if len(other) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(_sum(a * b for a, b in zip(r, other)) for r in self._data)

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square or k < 0:
            raise ValueError("only non-negative powers of square matrices")
        out = Matrix.identity(self.rows)
        for _ in range(k):
            out = out @ self
        return out

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self._data), self.rows) if self.rows else Matrix.zeros(self.cols, 0)

    def trace(self):
        self._need_square()
        return _sum(self._data[i][i] for i in range(self.rows))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.T

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return Matrix([r + s for r, s in zip(self._data, other._data)], self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return Matrix(self._data + other._data, self.cols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix([[self._data[i][j] for j in cols] for i in rows], len(cols))

    # -- exact linear algebra (field entries) ---------------------------
    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and pivot columns.

        Pivot rule: scan columns left to right; the pivot is the first
        nonzero entry at or below the current row.
        """
        m = [list(r) for r in self._data]
        pivots = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            p = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if p is None:
                continue
            m[r], m[p] = m[p], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return Matrix(m, self.cols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list[Vector]:
        """Basis of the right null space, one vector per free column."""
        R, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for i, p in enumerate(pivots):
                v[p] = -R[i, f]
            basis.append(tuple(v))
        return basis

    def det(self):
        self._need_square()
        n = self.rows
        if n == 0:
            return Fraction(1)
        if n <= 4 and any(not isinstance(x, Fraction) for x in self.flat()):
            return _leibniz_det(self)
        m = [list(r) for r in self._data]
        sign = Fraction(1)
        acc = Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c] != 0), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                sign = -sign
            acc *= m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] / m[c][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return sign * acc

    def inverse(self) -> "Matrix":
        self._need_square()
        n = self.rows
        R, pivots = self.hstack(Matrix.identity(n)).rref()
        if tuple(pivots[:n]) != tuple(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return R.submatrix(range(n), range(n, 2 * n))

    def solve(self, b: Sequence) -> tuple[Vector, list[Vector]] | None:
        """Affine solution set of ``self @ x = b`` as (particular, kernel basis), or None."""
        return solve_affine(self, b)

    # -- helpers ----------------------------------------------------------
    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def _need_square(self):
        if not self.is_square:
            raise ValueError(f"square matrix required, got {self.shape}")

    def __repr__(self) -> str:
        return f"Matrix({[[str(x) for x in r] for r in self._data]})"

    def __str__(self) -> str:
        cells = [[str(x) for x in r] for r in self._data]
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)


def _sum(it):
    it = iter(it)
    try:
        acc = next(it)
    except StopIteration:
        return Fraction(0)
    for x in it:
        acc = acc + x
    return acc


def _perm_sign(p) -> int:
    sign, seen = 1, list(p)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


def _leibniz_det(m: Matrix):
    n = m.rows
    total = Fraction(0)
    for p in permutations(range(n)):
        term = _perm_sign(p)
        for i in range(n):
            term = term * m[i, p[i]]
            if term == 0:
                break
        total = total + term
    return total


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def rat_kernel(m: Matrix) -> list[Vector]:
    return m.kernel()


def solve_affine(a: Matrix, b: Sequence) -> tuple[Vector, list[Vector]] | None:
    if len(b) != a.rows:
        raise ValueError("right-hand side length mismatch")
    aug = a.hstack(Matrix.from_columns([tuple(Q(x) for x in b)], a.rows) if a.rows else Matrix.zeros(0, 1))
    R, pivots = aug.rref()
    if a.cols in pivots:
        return None
    x = [Fraction(0)] * a.cols
    for i, p in enumerate(pivots):
        x[p] = R[i, a.cols]
    return tuple(x), a.kernel()


def inconsistency_certificate(a: Matrix, b: Sequence) -> Vector | None:
    """A vector y with y·A = 0 and y·b = 1 when ``A x = b`` has no solution."""
    for y in a.T.kernel():
        s = dot(y, b)
        if s != 0:
            return vscale(1 / s, y)
    return None


def char_poly(m: Matrix) -> list:
    """Characteristic polynomial det(xI - m), coefficients lowest degree first.

    Faddeev–LeVerrier recursion; the result is monic of degree n.
    """
    m._need_square()
    n = m.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    ident = Matrix.identity(n)
    mk = Matrix.zeros(n)
    for k in range(1, n + 1):
        mk = m @ mk + ident * coeffs[n - k + 1]
        coeffs[n - k] = -(m @ mk).trace() * Fraction(1, k)
    return coeffs


def is_nilpotent(m: Matrix) -> bool:
    return all(c == 0 for c in char_poly(m)[:-1])


def congruence_diagonalize(gram: Matrix) -> tuple[Matrix, list[Fraction]]:
    """Return (C, d) with C^T gram C = diag(d) by symmetric elimination.

    When no diagonal pivot is left but some off-diagonal g_ij is nonzero,
    the basis vector e_i is replaced by e_i + e_j.
    """
    if not gram.is_symmetric():
        raise ValueError("symmetric matrix required")
    n = gram.rows
    a = [list(r) for r in gram.tolist()]
    c = [list(r) for r in Matrix.identity(n).tolist()]  # columns are the new basis
    active = list(range(n))
    diag: list[Fraction] = [Fraction(0)] * n
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            for k in range(n):
                c[k][i] += c[k][j]
            piv = i
        p = a[piv][piv]
        for j in active:
            if j == piv or a[j][piv] == 0:
                continue
            f = a[j][piv] / p
            for k in range(n):
                a[j][k] -= f * a[piv][k]
            for k in range(n):
                a[k][j] -= f * a[k][piv]
            for k in range(n):
                c[k][j] -= f * c[k][piv]
        diag[piv] = p
        active.remove(piv)
    return Matrix(c, n), diag


def sym_signature(gram: Matrix) -> tuple[int, int, int]:
    """Sylvester inertia (positive, negative, zero) of a symmetric matrix."""
    _, d = congruence_diagonalize(gram)
    p = sum(1 for x in d if x > 0)
    q = sum(1 for x in d if x < 0)
    return p, q, gram.rows - p - q


def independent_columns(vectors: Sequence[Sequence]) -> list[Vector]:
    """Greedy subset of ``vectors`` that is linearly independent, order kept."""
    out: list[Vector] = []
    for v in vectors:
        cand = out + [tuple(v)]
        if Matrix.from_columns(cand).rank() == len(cand):
            out = cand
    return out
