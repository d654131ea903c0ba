"""Derivations of a Lie algebra."""

from __future__ import annotations

from fractions import Fraction

from .algebra import LieAlgebra
from .linalg import Matrix, is_zero_vector, vsub


def derivation_space(alg: LieAlgebra) -> list[Matrix]:
    """Basis of Der(alg) = {D : D[x,y] = [Dx,y] + [x,Dy]}.

    The unknown D is flattened row-major (entry (a, b) at index a*n + b); one
    equation per pair e_i, e_j with i < j and output coordinate k.
    """
    n = alg.dim
    c = alg.structure_constant
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                row = [Fraction(0)] * (n * n)
                for a in range(n):
                    row[k * n + a] += c(a, i, j)  # (D[e_i, e_j])_k
                    row[a * n + i] -= c(k, a, j)  # ([D e_i, e_j])_k
                    row[a * n + j] -= c(k, i, a)  # ([e_i, D e_j])_k
                rows.append(row)
    system = Matrix(rows, n * n) if rows else Matrix.zeros(0, n * n)
    return [Matrix.from_flat(n, v) for v in system.kernel()]


def leibniz_defect(alg: LieAlgebra, d: Matrix) -> dict[tuple[int, int], tuple]:
    """Nonzero values of D[e_i,e_j] - [De_i,e_j] - [e_i,De_j] for i < j.

    Works for symbolic (polynomial) matrices too.
    """
    n = alg.dim
    e = alg.basis()
    cols = d.columns()
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            lhs = d @ alg.bracket(e[i], e[j])
            rhs = tuple(a + b for a, b in zip(alg.bracket(cols[i], e[j]), alg.bracket(e[i], cols[j])))
            r = vsub(lhs, rhs)
            if not is_zero_vector(r):
                out[(i, j)] = r
    return out


def is_derivation(alg: LieAlgebra, d: Matrix) -> bool:
    if d.shape != (alg.dim, alg.dim):
        raise ValueError("derivation must be a square matrix of the algebra's dimension")
    return not leibniz_defect(alg, d)


def in_span(m: Matrix, basis: list[Matrix]) -> bool:
    if not basis:
        return m.is_zero()
    return Matrix.from_columns([b.flat() for b in basis]).solve(m.flat()) is not None
