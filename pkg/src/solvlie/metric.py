"""Pseudo-Riemannian inner products on Lie algebras."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .algebra import LieAlgebra
from .errors import DegenerateMetricError
from .linalg import Matrix, Q, Vector, dot, sym_signature, vscale, vsub
from .subspace import Subspace


class Metric:
    """Symmetric bilinear form g(e_i, e_j) = gram[i, j] on a Lie algebra."""

    __slots__ = ("algebra", "gram", "_inv")

    def __init__(self, algebra: LieAlgebra, gram, *, allow_degenerate: bool = False):
        gram = gram if isinstance(gram, Matrix) else Matrix(gram)
        if gram.shape != (algebra.dim, algebra.dim):
            raise ValueError(f"Gram matrix shape {gram.shape} does not match dimension {algebra.dim}")
        if not gram.is_symmetric():
            raise ValueError("Gram matrix is not symmetric")
        self.algebra = algebra
        self.gram = gram
        self._inv = None
        if not allow_degenerate and gram.det() == 0:
            raise DegenerateMetricError("metric is degenerate")

    @classmethod
    def identity(cls, algebra: LieAlgebra) -> "Metric":
        return cls(algebra, Matrix.identity(algebra.dim))

    @classmethod
    def diagonal(cls, algebra: LieAlgebra, *entries) -> "Metric":
        return cls(algebra, Matrix.diag(*entries))

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def nondegenerate(self) -> bool:
        return self.gram.det() != 0

    @property
    def inverse_gram(self) -> Matrix:
        if self._inv is None:
            if not self.nondegenerate:
                raise DegenerateMetricError("metric is degenerate")
            self._inv = self.gram.inverse()
        return self._inv

    def __call__(self, x: Sequence, y: Sequence) -> Fraction:
        return dot(x, self.gram @ tuple(y))

    def signature(self) -> tuple[int, int, int]:
        return sym_signature(self.gram)

    def flat(self, v: Sequence) -> Vector:
        return self.gram @ tuple(v)

    def sharp(self, alpha: Sequence) -> Vector:
        return self.inverse_gram @ tuple(alpha)

    def adjoint(self, a: Matrix) -> Matrix:
        """The operator a* with g(a* x, y) = g(x, a y)."""
        return self.inverse_gram @ a.T @ self.gram

    def change_basis(self, p: Matrix) -> "Metric":
        return Metric(self.algebra.change_basis(p), p.T @ self.gram @ p)

    def __eq__(self, other) -> bool:
        return isinstance(other, Metric) and self.algebra == other.algebra and self.gram == other.gram

    def __repr__(self) -> str:
        return f"Metric(signature={self.signature()}, gram={self.gram!r})"


def signature(m: Metric) -> tuple[int, int, int]:
    return m.signature()


def flat(m: Metric, v: Sequence) -> Vector:
    return m.flat(v)


def sharp(m: Metric, alpha: Sequence) -> Vector:
    return m.sharp(alpha)


def metric_adjoint(m: Metric, a: Matrix) -> Matrix:
    return m.adjoint(a)


def form_inner(m: Metric, alpha: Matrix, beta: Matrix) -> Fraction:
    """Inner product of 2-forms given as antisymmetric matrices alpha[i, j] = alpha(e_i, e_j).

    Normalized so that e^1 ^ e^2 has unit length for the identity metric.
    """
    gi = m.inverse_gram
    return (alpha.T @ gi @ beta @ gi).trace() / 2


def endo_inner(m: Metric, a: Matrix, b: Matrix):
    """<a, b> = tr(a b*)."""
    return (a @ m.adjoint(b)).trace()


def induced_inner(m: Metric, a: Matrix, b: Matrix, *, kind: str = "endo"):
    if kind == "form":
        return form_inner(m, a, b)
    if kind == "endo":
        return endo_inner(m, a, b)
    raise ValueError(f"unknown kind {kind!r}")


@dataclass(frozen=True)
class Restriction:
    gram: Matrix
    complement: Subspace
    signature: tuple[int, int, int]
    nondegenerate: bool
    definite: bool


def restrict_and_complement(m: Metric, s: Subspace) -> Restriction:
    b = s.basis
    gram = b.T @ m.gram @ b
    pairing = b.T @ m.gram
    complement = Subspace(m.algebra, pairing.kernel()) if s.dim else Subspace.whole(m.algebra)
    sig = sym_signature(gram)
    k = s.dim
    nondeg = sig[2] == 0
    definite = nondeg and (sig[0] == k or sig[1] == k)
    return Restriction(gram, complement, sig, nondeg, definite)


def induced_metric(m: Metric, s: Subspace) -> Metric:
    """Restriction of ``m`` to a subalgebra, as a metric on that subalgebra."""
    from .subspace import subalgebra

    return Metric(subalgebra(m.algebra, s), s.basis.T @ m.gram @ s.basis)


def _integer_scale(v: Sequence[Fraction]) -> Vector:
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    g = g or 1
    if next((x for x in ints if x), 1) < 0:
        g = -g
    return tuple(Fraction(x, g) for x in ints)


def orthogonalize(m: Metric, basis: Sequence[Sequence] | None = None, gram: Matrix | None = None) -> list[tuple[Vector, Fraction]]:
    """Gram–Schmidt without square roots; returns (vector, g(v, v)) pairs.

    ``gram`` overrides the metric's Gram matrix (e.g. a restriction in
    subspace coordinates).  A null working vector is replaced by its sum (or
    difference) with the first later vector it pairs with nontrivially.
    Vectors are rescaled to coprime integers with a positive leading entry.
    """
    g = gram if gram is not None else m.gram
    n = g.rows
    if g.det() == 0:
        raise DegenerateMetricError("orthogonalization needs a nondegenerate form")
    vs = [tuple(Q(x) for x in v) for v in (basis if basis is not None else Matrix.identity(n).columns())]
    if len(vs) != n or Matrix.from_columns(vs).rank() != n:
        raise ValueError("basis must consist of n independent vectors")

    def ip(x, y):
        return dot(x, g @ y)

    done: list[Vector] = []
    todo = list(vs)
    while todo:
        v = todo.pop(0)
        for w in done:
            v = vsub(v, vscale(ip(v, w) / ip(w, w), w))
        if ip(v, v) == 0:
            rest = []
            for u in todo:
                for w in done:
                    u = vsub(u, vscale(ip(u, w) / ip(w, w), w))
                rest.append(u)
            k = next((i for i, u in enumerate(rest) if ip(v, u) != 0), None)
            if k is None:
                raise DegenerateMetricError("no partner for a null vector")
            u = rest[k]
            cand = tuple(a + b for a, b in zip(v, u))
            if ip(cand, cand) == 0:
                cand = tuple(a - b for a, b in zip(v, u))
            todo = rest
            v = cand
        done.append(_integer_scale(v))
    return [(v, ip(v, v)) for v in done]
