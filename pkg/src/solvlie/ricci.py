"""Ricci curvature of left-invariant metrics.

Two independent routes: a closed formula in terms of d, ad and the Killing
form (``ricci_formula``), and the Levi-Civita connection from the Koszul
formula followed by the curvature tensor and its trace (``ricci_koszul``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix, commutator
from .metric import Metric, endo_inner, form_inner
from .structure import killing_form


@dataclass(frozen=True)
class RicciData:
    ric: Matrix  # ric(e_i, e_j)
    ric_op: Matrix  # Ric = g^{-1} ric
    scalar: Fraction


def _ricci_data(m: Metric, ric: Matrix) -> RicciData:
    op = m.inverse_gram @ ric
    return RicciData(ric, op, op.trace())


def d_covector(m: Metric, alpha) -> Matrix:
    """The 2-form d(alpha)(e_i, e_j) = -alpha([e_i, e_j])."""
    alg = m.algebra
    n = alg.dim
    return Matrix([[-sum((a * c for a, c in zip(alpha, alg.bracket_basis(i, j))), Fraction(0))
                    for j in range(n)] for i in range(n)], n)


def ricci_formula(m: Metric) -> RicciData:
    alg = m.algebra
    n = alg.dim
    e = alg.basis()
    ads = [alg.ad(v) for v in e]
    tr_ad = [a.trace() for a in ads]
    killing = killing_form(alg)
    dflat = [d_covector(m, m.flat(v)) for v in e]

    def contract(i, form):  # e_i ⌟ form
        return form.row(i)

    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            term1 = form_inner(m, dflat[i], dflat[j]) / 2
            term2 = endo_inner(m, ads[i], ads[j]) / 2
            cov = tuple(a + b for a, b in zip(contract(i, dflat[j]), contract(j, dflat[i])))
            vec = m.sharp(cov)
            term3 = sum((x * t for x, t in zip(vec, tr_ad)), Fraction(0)) / 2
            row.append(term1 - term2 - term3 - killing[i, j] / 2)
        rows.append(row)
    return _ricci_data(m, Matrix(rows, n))


def levi_civita(m: Metric) -> list[Matrix]:
    """Matrices N_i of z -> nabla_{e_i} z from the Koszul formula."""
    alg = m.algebra
    n = alg.dim
    e = alg.basis()
    g = m

    def lower(i, j, l):
        return (g(alg.bracket(e[i], e[j]), e[l])
                - g(alg.bracket(e[j], e[l]), e[i])
                + g(alg.bracket(e[l], e[i]), e[j])) / 2

    gi = m.inverse_gram
    out = []
    for i in range(n):
        cols = []
        for j in range(n):
            low = tuple(lower(i, j, l) for l in range(n))
            cols.append(gi @ low)
        out.append(Matrix.from_columns(cols, n))
    return out


def ricci_koszul(m: Metric) -> RicciData:
    alg = m.algebra
    n = alg.dim
    nabla = levi_civita(m)

    def nab(x):
        acc = Matrix.zeros(n)
        for a, c in enumerate(x):
            if c:
                acc = acc + nabla[a] * c
        return acc

    # R(e_a, e_b) = [N_a, N_b] - N_[e_a, e_b]
    curv = [[commutator(nabla[a], nabla[b]) - nab(alg.bracket_basis(a, b)) for b in range(n)] for a in range(n)]
    rows = []
    for b in range(n):
        # ric(e_b, e_c) = tr(z -> R(z, e_b) e_c) = sum_a (R(e_a, e_b) e_c)_a
        rows.append([sum((curv[a][b][a, c] for a in range(n)), Fraction(0)) for c in range(n)])
    return _ricci_data(m, Matrix(rows, n))


@dataclass(frozen=True)
class EinsteinVerdict:
    kind: str  # "Einstein", "RicciFlat" or "NotEinstein"
    lam: Fraction
    scalar: Fraction
    residual: Matrix  # Ric - lam Id
    tensor_residual: Matrix  # ric - lam g

    @property
    def holds(self) -> bool:
        return self.kind != "NotEinstein"


def einstein_check(m: Metric, ricci: RicciData | None = None) -> EinsteinVerdict:
    data = ricci or ricci_formula(m)
    n = m.dim
    lam = data.scalar / n if n else Fraction(0)
    residual = data.ric_op - Matrix.identity(n) * lam
    tensor_residual = data.ric - m.gram * lam
    if not residual.is_zero():
        kind = "NotEinstein"
    elif lam == 0:
        kind = "RicciFlat"
    else:
        kind = "Einstein"
    if residual.is_zero() != tensor_residual.is_zero():
        raise AssertionError("operator and tensor forms of the Einstein condition disagree")
    return EinsteinVerdict(kind, lam, data.scalar, residual, tensor_residual)
