from __future__ import annotations

from typing import Iterable, Sequence

from .algebra import LieAlgebra, format_vector
from .linalg import Matrix, Q, Vector, unit


class Subspace:
    """Subspace of a Lie algebra, spanned by the columns of ``basis``."""

    __slots__ = ("algebra", "basis")

    def __init__(self, algebra: LieAlgebra, vectors: Iterable[Sequence] = ()):
        vs = [tuple(Q(x) for x in v) for v in vectors]
        if any(len(v) != algebra.dim for v in vs):
            raise ValueError("vector length does not match algebra dimension")
        if vs and Matrix.from_columns(vs).rank() != len(vs):
            raise ValueError("basis vectors are linearly dependent")
        self.algebra = algebra
        self.basis = Matrix.from_columns(vs, algebra.dim) if vs else Matrix.zeros(algebra.dim, 0)

    @classmethod
    def span(cls, algebra: LieAlgebra, vectors: Iterable[Sequence]) -> "Subspace":
        """Subspace spanned by ``vectors``, with the reduced echelon basis."""
        vs = [tuple(Q(x) for x in v) for v in vectors]
        vs = [v for v in vs if any(v)]
        if not vs:
            return cls(algebra, [])
        R, piv = Matrix(vs, algebra.dim).rref()
        return cls(algebra, [R.row(i) for i in range(len(piv))])

    @classmethod
    def coordinate(cls, algebra: LieAlgebra, indices: Iterable[int]) -> "Subspace":
        """Span of e_i for the given 0-based indices."""
        return cls(algebra, [unit(algebra.dim, i) for i in indices])

    @classmethod
    def whole(cls, algebra: LieAlgebra) -> "Subspace":
        return cls(algebra, algebra.basis())

    @classmethod
    def zero(cls, algebra: LieAlgebra) -> "Subspace":
        return cls(algebra, [])

    @property
    def dim(self) -> int:
        return self.basis.cols

    @property
    def vectors(self) -> list[Vector]:
        return self.basis.columns()

    def contains(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def coordinates(self, v: Sequence) -> Vector | None:
        if not self.dim:
            return () if not any(v) else None
        sol = self.basis.solve(tuple(v))
        return None if sol is None else sol[0]

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.dim == other.dim and self.contains_space(other)

    def __hash__(self):
        return hash(self.canonical())

    def canonical(self) -> tuple[Vector, ...]:
        """Row-reduced spanning set; equal for equal spans."""
        if not self.dim:
            return ()
        R, piv = self.basis.T.rref()
        return tuple(R.row(i) for i in range(len(piv)))

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.algebra, self.vectors + other.vectors)

    def __repr__(self) -> str:
        return "Span{" + ", ".join(format_vector(v) for v in self.vectors) + "}"


def bracket_span(alg: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    return Subspace.span(alg, [alg.bracket(x, y) for x in a.vectors for y in b.vectors])


def restrict_endo(m: Matrix, s: Subspace) -> Matrix:
    """Matrix of an endomorphism on an invariant subspace, in the subspace basis."""
    cols = []
    for v in s.vectors:
        c = s.coordinates(m @ v)
        if c is None:
            raise ValueError(f"subspace {s} is not invariant")
        cols.append(c)
    return Matrix.from_columns(cols, s.dim) if cols else Matrix.zeros(0)


def subalgebra(alg: LieAlgebra, s: Subspace) -> LieAlgebra:
    """The subalgebra ``s`` as an abstract Lie algebra in the basis of ``s``."""
    vs = s.vectors
    brackets = {}
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            c = s.coordinates(alg.bracket(vs[i], vs[j]))
            if c is None:
                raise ValueError(f"{s} is not a subalgebra")
            brackets[(i, j)] = c
    return LieAlgebra(len(vs), brackets)
