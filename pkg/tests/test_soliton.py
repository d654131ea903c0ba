from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solvlie import Matrix, Metric, NotDerivationError, NotNilpotentError, UnsupportedError, parse_salamon
from solvlie.correction import (aw_correction_solve, commuting_derivations, parametrize_by_entries,
                                symbolic_adjoint_sum)
from solvlie.derivations import derivation_space, in_span, is_derivation, leibniz_defect
from solvlie.linalg import commutator
from solvlie.poly import MPoly
from solvlie.ricci import ricci_formula, ricci_koszul
from solvlie.soliton import gen_nilsoliton_family_check, gen_nilsoliton_rhs, nilsoliton_solve

from conftest import HEIS_GRAM, invertible

F = Fraction
A = Matrix([[0, -1, 0], [1, 0, 0], [0, 0, 0]])  # ad e4 on the nilradical
B = Matrix([[-1, 0, 0], [0, -1, 0], [1, 0, -2]])  # ad e5 on the nilradical


@pytest.fixture(scope="module")
def hmetric(heis):
    return Metric(heis, Matrix(HEIS_GRAM))


def sym(rows, names):
    return Matrix([[x if isinstance(x, MPoly) else MPoly.const(x, names) for x in row] for row in rows], len(rows[0]))


# -- derivations ------------------------------------------------------------

def test_heisenberg_derivation_pattern(heis):
    der = derivation_space(heis)
    assert len(der) == 6
    for d in der:
        assert d[0, 2] == d[1, 2] == 0
        assert d[2, 2] == d[0, 0] + d[1, 1]
        assert is_derivation(heis, d)


def test_abelian_derivations_are_everything():
    assert len(derivation_space(parse_salamon("(0,0)"))) == 4


@pytest.mark.parametrize("text", ["(0,0,e12)", "(e42+e51-e54, -e41+e52, e12-e51+2*e53-7/12*e54, 0, 0)",
                                  "(0,0,e12,e13)", "(0,-e12)"])
def test_derivations_closed_under_commutator(text):
    alg = parse_salamon(text)
    der = derivation_space(alg)
    for i, x in enumerate(der):
        for y in der[i + 1:]:
            assert in_span(commutator(x, y), der)


def test_inner_derivations(main_alg):
    for i in range(5):
        assert is_derivation(main_alg, main_alg.ad_basis(i))


def test_leibniz_defect_reports_entries(heis):
    d = Matrix.diag(1, 0, 0)
    assert not is_derivation(heis, d)
    assert leibniz_defect(heis, d)


# -- nilsolitons --------------------------------------------------------------

def test_heisenberg_identity_nilsoliton(heis):
    s = nilsoliton_solve(heis, Metric.identity(heis))
    assert s.kind == "SolitonSolution"
    assert s.lam == F(-3, 2)
    assert s.derivation == Matrix.diag(1, 1, 2)


def test_heisenberg_restricted_nilsoliton(hmetric):
    s = nilsoliton_solve(hmetric.algebra, hmetric)
    a = F(73728, 1715)
    assert s.kind == "SolitonSolution" and s.solution_space_dim == 0
    assert s.lam == F(-110592, 1715)
    assert s.derivation.tolist() == [[a, 0, 0], [0, a, 0], [F(-6144, 245), 0, 2 * a]]
    assert ricci_koszul(hmetric).ric_op == Matrix.identity(3) * s.lam + s.derivation


def test_abelian_nilsoliton_family():
    alg = parse_salamon("(0,0,0)")
    s = nilsoliton_solve(alg, Metric.diagonal(alg, 1, -1, 2))
    assert s.kind == "SolutionFamily" and s.dimension == 1
    dl, dd = s.directions[0]
    assert dd == Matrix.identity(3) * -dl


def test_nilsoliton_rejects_solvable(main_metric):
    with pytest.raises(NotNilpotentError):
        nilsoliton_solve(main_metric.algebra, main_metric)


# -- generalized nilsoliton right-hand side -----------------------------------

def test_rhs_of_zero_derivation(hmetric):
    r = gen_nilsoliton_rhs(hmetric.algebra, hmetric, Matrix.zeros(3), 1)
    assert r.rhs.is_zero() and not any(r.trace_residuals)


def test_rhs_heisenberg_identity_half(heis):
    m = Metric.identity(heis)
    r = gen_nilsoliton_rhs(heis, m, Matrix.diag(F(1, 2), F(1, 2), 1), 1)
    assert r.rhs == Matrix.diag(F(-1, 2), F(-1, 2), F(1, 2)) == ricci_koszul(m).ric_op
    assert not any(r.trace_residuals)


def test_rhs_rejects_non_derivation(heis):
    with pytest.raises(NotDerivationError):
        gen_nilsoliton_rhs(heis, Metric.identity(heis), Matrix.diag(1, 0, 0), 1)


def test_symbolic_rhs_of_two_parameter_family(hmetric):
    names = ("alpha", "beta")
    al, be = MPoly.gens(*names)
    d = A * al + B * be
    r = gen_nilsoliton_rhs(hmetric.algebra, hmetric, d, 1).rhs
    expected = sym([
        [be ** 2 * F(14, 3) - al ** 2 * F(50, 21), al * be * F(8, 15), (al ** 2 - be ** 2 * 5) * F(16, 7)],
        [al * be * F(176, 21), -al ** 2 * F(2, 5) - be ** 2 * F(62, 21), al * be * F(-96, 7)],
        [al ** 2 * F(49, 120) + be ** 2 * F(13, 8), al * be * F(-259, 180), (al ** 2 * 73 + be ** 2 * 345) * F(-2, 105)],
    ], names)
    assert r == expected


def test_restricted_ricci_operator(hmetric):
    a = F(36864, 1715)
    assert ricci_formula(hmetric).ric_op.tolist() == [[-a, 0, 0], [0, -a, 0], [F(-6144, 245), 0, a]]


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_rhs_for_symmetric_derivation(heis, data):
    # symmetric derivations of the Heisenberg algebra with the identity metric
    p, q, r = (data.draw(st.fractions(min_value=-3, max_value=3, max_denominator=4)) for _ in range(3))
    d = Matrix([[p, r, 0], [r, q, 0], [0, 0, p + q]])
    tau = data.draw(st.sampled_from([1, -1]))
    m = Metric.identity(heis)
    out = gen_nilsoliton_rhs(heis, m, d, tau).rhs
    assert out == (Matrix.identity(3) * -(d @ d).trace() + d * d.trace()) * tau


# -- family checks -------------------------------------------------------------

def test_family_of_one_generator(heis):
    plus, minus = gen_nilsoliton_family_check(heis, Metric.identity(heis), [Matrix.diag(1, 1, 2)])
    assert plus.parameters == ("t",)
    assert plus.solvable and plus.verdict.kind == "RationalPoints"
    assert sorted(p["t"] for p in plus.verdict.points) == [F(-1, 2), F(1, 2)]
    assert not minus.solvable and minus.verdict.kind == "NoRationalSolution"


def test_empty_family(heis):
    for fs in gen_nilsoliton_family_check(heis, Metric.identity(heis), []):
        assert not fs.solvable


def test_two_parameter_family_has_no_solution(hmetric):
    plus, minus = gen_nilsoliton_family_check(hmetric.algebra, hmetric, [A, B])
    for fs in (plus, minus):
        assert fs.parameters == ("alpha", "beta")
        assert not fs.solvable
        assert fs.verdict.kind == "NoRationalSolution"
        assert fs.witness
    assert plus.witness.startswith("entry (3,1)")
    assert minus.witness.startswith("entry (2,2)")


def test_family_size_cap(heis):
    with pytest.raises(UnsupportedError):
        gen_nilsoliton_family_check(heis, Metric.identity(heis), [Matrix.diag(1, 1, 2)] * 3)


# -- correction search ----------------------------------------------------------

def test_correction_pattern_and_symmetrization(hmetric):
    names = ("x11", "x12")
    x11, x12 = MPoly.gens(*names)
    basis = commuting_derivations(hmetric.algebra, A)
    x = parametrize_by_entries(basis, [(0, 0), (0, 1)], names)
    assert x == sym([[x11, x12, 0], [-x12, x11, 0], [0, 0, x11 * 2]], names)
    assert hmetric.adjoint(x) == sym([
        [x11 * F(-41, 15), x12 * F(-7, 5), x11 * F(32, 5)],
        [x12 * F(71, 21), x11, x12 * F(-32, 7)],
        [x11 * F(-497, 180), x12 * F(-49, 60), x11 * F(86, 15)],
    ], names)
    assert symbolic_adjoint_sum(hmetric, x) == sym([
        [x11 * F(-26, 15), x12 * F(-2, 5), x11 * F(32, 5)],
        [x12 * F(50, 21), x11 * 2, x12 * F(-32, 7)],
        [x11 * F(-497, 180), x12 * F(-49, 60), x11 * F(116, 15)],
    ], names)


def test_correction_is_empty(hmetric):
    out = aw_correction_solve(hmetric.algebra, hmetric, A, B)
    assert out.kind == "Empty"
    assert out.target == B + hmetric.adjoint(B)
    flat = out.target.flat()
    assert sum(c * t for c, t in zip(out.certificate, flat)) != 0
    for x in out.constrained_basis:
        s = (x + hmetric.adjoint(x)).flat()
        assert sum(c * t for c, t in zip(out.certificate, s)) == 0


@settings(max_examples=15, deadline=None)
@given(invertible(3))
def test_correction_empty_under_basis_change(hmetric, c):
    alg = hmetric.algebra.change_basis(c)
    m = hmetric.change_basis(c)
    ci = c.inverse()
    assert is_derivation(alg, ci @ A @ c) and is_derivation(alg, ci @ B @ c)
    assert m.adjoint(ci @ B @ c) == ci @ hmetric.adjoint(B) @ c
    out = aw_correction_solve(alg, m, ci @ A @ c, ci @ B @ c)
    assert out.kind == "Empty"


def test_correction_contains_symmetric_derivation(heis):
    m = Metric.identity(heis)
    d = Matrix.diag(1, 1, 2)
    out = aw_correction_solve(heis, m, Matrix.zeros(3), d)
    assert out.kind == "Affine"
    assert in_span(d - out.particular, list(out.directions)) or d == out.particular


def test_correction_commuting_with_identity(hmetric):
    alg = hmetric.algebra
    free = aw_correction_solve(alg, hmetric, Matrix.zeros(3), B)
    ident = aw_correction_solve(alg, hmetric, Matrix.identity(3), B)
    assert free.kind == ident.kind
    assert len(free.constrained_basis) == len(ident.constrained_basis) == 6
