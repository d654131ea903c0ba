"""Nilsolitons and generalized nilsolitons."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import LieAlgebra
from .derivations import derivation_space, is_derivation
from .errors import NotDerivationError, NotNilpotentError, UnsupportedError
from .linalg import Matrix, Vector, commutator, inconsistency_certificate, solve_affine
from .metric import Metric
from .poly import MPoly, symbolic_combination
from .polysolve import SolutionSet, sign_witness, solve_poly_system_2var
from .ricci import ricci_formula
from .structure import classify

MAX_FAMILY_SIZE = 2


@dataclass(frozen=True)
class SolitonSolution:
    lam: Fraction
    derivation: Matrix
    solution_space_dim: int = 0

    kind = "SolitonSolution"


@dataclass(frozen=True)
class NoSolution:
    witness: Vector  # y with y . (system) = 0 and y . ric = 1

    kind = "NoSolution"


@dataclass(frozen=True)
class SolutionFamily:
    lam: Fraction  # one particular solution
    derivation: Matrix
    dimension: int
    directions: tuple[tuple[Fraction, Matrix], ...]  # (d lambda, dD) per free parameter

    kind = "SolutionFamily"


def _require_nilpotent(alg: LieAlgebra) -> None:
    if not classify(alg).nilpotent:
        raise NotNilpotentError("nilsoliton equations are only defined on nilpotent algebras")


def nilsoliton_solve(alg: LieAlgebra, m: Metric) -> SolitonSolution | NoSolution | SolutionFamily:
    """Solve Ric = lambda Id + D for a scalar lambda and a derivation D."""
    _require_nilpotent(alg)
    n = alg.dim
    ric = ricci_formula(m).ric_op
    der = derivation_space(alg)
    # unknowns (lambda, c_1..c_k) with lambda vec(Id) + sum c_i vec(D_i) = vec(Ric)
    cols = [Matrix.identity(n).flat()] + [d.flat() for d in der]
    system = Matrix.from_columns(cols, n * n)
    sol = solve_affine(system, ric.flat())
    if sol is None:
        return NoSolution(inconsistency_certificate(system, ric.flat()))
    x, kernel = sol

    def unpack(v):
        d = Matrix.zeros(n)
        for c, basis in zip(v[1:], der):
            if c:
                d = d + basis * c
        return v[0], d

    lam, d = unpack(x)
    if not is_derivation(alg, d) or ric != Matrix.identity(n) * lam + d:
        raise AssertionError("nilsoliton solution failed re-verification")
    if kernel:
        return SolutionFamily(lam, d, len(kernel), tuple(unpack(k) for k in kernel))
    return SolitonSolution(lam, d, 0)


@dataclass(frozen=True)
class GenNilsolitonRhs:
    rhs: Matrix
    trace_residuals: tuple  # tr(ad e_i o D*) per basis vector
    adjoint: Matrix
    symmetric_part: Matrix


def gen_nilsoliton_rhs(alg: LieAlgebra, m: Metric, d: Matrix, tau: int) -> GenNilsolitonRhs:
    """tau(-tr((D^s)^2) Id - 1/2 [D, D*] + tr(D) D^s) with D^s = (D + D*)/2.

    ``d`` may have polynomial entries.
    """
    if tau not in (1, -1):
        raise ValueError("tau must be +1 or -1")
    _require_nilpotent(alg)
    if not is_derivation(alg, d):
        raise NotDerivationError("D is not a derivation")
    n = alg.dim
    ds = m.adjoint(d)
    sym = (d + ds) * Fraction(1, 2)
    rhs = (Matrix.identity(n) * -(sym @ sym).trace()
           - commutator(d, ds) * Fraction(1, 2)
           + sym * d.trace()) * tau
    residuals = tuple((alg.ad_basis(i) @ ds).trace() for i in range(n))
    return GenNilsolitonRhs(rhs, residuals, ds, sym)


@dataclass(frozen=True)
class FamilySystem:
    parameters: tuple[str, ...]
    tau: int
    equations: tuple  # MPoly (or constants when the family is empty)
    labels: tuple[str, ...]  # which entry or trace each equation comes from
    verdict: SolutionSet | None
    witness: str | None  # sign contradiction on a single labelled equation, if any
    rhs: Matrix | None

    @property
    def solvable(self) -> bool:
        if self.verdict is None:
            return all(e == 0 for e in self.equations)
        return self.verdict.kind in ("RationalPoints", "PositiveDimensional")


def family_names(k: int) -> tuple[str, ...]:
    if k > MAX_FAMILY_SIZE:
        raise UnsupportedError(f"families with more than {MAX_FAMILY_SIZE} generators are not supported")
    return (("t",), ("alpha", "beta"))[k - 1] if k else ()


def gen_nilsoliton_family_check(alg: LieAlgebra, m: Metric, family: Sequence[Matrix],
                                taus: Sequence[int] = (1, -1)) -> list[FamilySystem]:
    """Search D = sum of parameters times generators solving the generalized nilsoliton equation."""
    names = family_names(len(family))
    for g in family:
        if not is_derivation(alg, g):
            raise NotDerivationError("family generator is not a derivation")
    n = alg.dim
    ric = ricci_formula(m).ric_op
    if family:
        d = symbolic_combination(list(family), names)
    else:
        d = Matrix.zeros(n)
    out = []
    for tau in taus:
        data = gen_nilsoliton_rhs(alg, m, d, tau)
        eqs, labels = [], []
        for i in range(n):
            for j in range(n):
                eqs.append(data.rhs[i, j] - ric[i, j])
                labels.append(f"entry ({i + 1},{j + 1})")
        for i, r in enumerate(data.trace_residuals):
            eqs.append(r)
            labels.append(f"trace with ad e{i + 1}")
        witness = None
        for e, label in zip(eqs, labels):
            w = sign_witness(e) if isinstance(e, MPoly) else None
            if w:
                witness = f"{label}: {w}"
                break
        verdict = solve_poly_system_2var(eqs, names) if names else None
        out.append(FamilySystem(names, tau, tuple(eqs), tuple(labels), verdict, witness, data.rhs))
    return out
