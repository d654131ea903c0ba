"""Linear search for the derivation correcting ad X to a self-adjoint action.

Given a metric nilpotent algebra, an operator C and an operator B, find the
derivations X with [X, C] = 0 and X + X* = B + B*, i.e. X - B is
antisymmetric for the metric.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import LieAlgebra
from .derivations import derivation_space
from .linalg import Matrix, Vector, commutator, inconsistency_certificate, solve_affine
from .metric import Metric
from .poly import MPoly


def _combine(coeffs: Sequence, basis: Sequence[Matrix], n: int) -> Matrix:
    out = Matrix.zeros(n)
    for c, b in zip(coeffs, basis):
        if c:
            out = out + b * c
    return out


def commuting_derivations(alg: LieAlgebra, commute_with: Matrix) -> list[Matrix]:
    """Basis of the derivations X with [X, commute_with] = 0."""
    n = alg.dim
    der = derivation_space(alg)
    if not der:
        return []
    system = Matrix.from_columns([commutator(d, commute_with).flat() for d in der], n * n)
    return [_combine(k, der, n) for k in system.kernel()]


@dataclass(frozen=True)
class CorrectionSolution:
    particular: Matrix
    directions: tuple[Matrix, ...]
    constrained_basis: tuple[Matrix, ...]
    target: Matrix  # B + B*

    kind = "Affine"

    @property
    def dimension(self) -> int:
        return len(self.directions)


@dataclass(frozen=True)
class CorrectionEmpty:
    constrained_basis: tuple[Matrix, ...]
    target: Matrix
    certificate: Vector  # y with y . (X + X*) = 0 for every admissible X but y . target = 1
    witness: tuple[str, ...]  # entries the certificate combines

    kind = "Empty"


def aw_correction_solve(alg: LieAlgebra, m: Metric, commute_with: Matrix,
                        match_sym_of: Matrix) -> CorrectionSolution | CorrectionEmpty:
    n = alg.dim
    constrained = commuting_derivations(alg, commute_with)
    target = match_sym_of + m.adjoint(match_sym_of)
    if constrained:
        system = Matrix.from_columns([(x + m.adjoint(x)).flat() for x in constrained], n * n)
    else:
        system = Matrix.zeros(n * n, 0)
    sol = solve_affine(system, target.flat())
    if sol is None:
        y = inconsistency_certificate(system, target.flat())
        witness = tuple(f"{c} * entry ({k // n + 1},{k % n + 1})" for k, c in enumerate(y) if c)
        return CorrectionEmpty(tuple(constrained), target, y, witness)
    x, kernel = sol
    return CorrectionSolution(_combine(x, constrained, n),
                              tuple(_combine(k, constrained, n) for k in kernel),
                              tuple(constrained), target)


def parametrize_by_entries(basis: Sequence[Matrix], positions: Sequence[tuple[int, int]],
                           names: Sequence[str]) -> Matrix:
    """Generic member of span(basis) written in terms of its entries at ``positions``.

    Requires that those entries determine the member uniquely.
    """
    n = basis[0].rows
    coords = Matrix([[b[i, j] for b in basis] for i, j in positions], len(basis))
    if len(positions) != len(basis) or coords.det() == 0:
        raise ValueError("entries at the given positions do not coordinatize the span")
    inv = coords.inverse()
    gens = MPoly.gens(*names)
    # coefficient of basis k as a linear form in the named entries
    coeffs = [sum((g * inv[k, p] for p, g in enumerate(gens)), MPoly.const(0, names)) for k in range(len(basis))]
    rows = []
    for i in range(n):
        rows.append([sum((c * b[i, j] for c, b in zip(coeffs, basis)), MPoly.const(0, names)) for j in range(n)])
    return Matrix(rows, n)


def symbolic_adjoint_sum(m: Metric, x: Matrix) -> Matrix:
    """X + X* for a (possibly symbolic) operator."""
    return x + m.adjoint(x)

