from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from solvlie import DegenerateMetricError, Matrix, Metric, Subspace, load_corpus, parse_salamon
from solvlie.linalg import dot, sym_signature
from solvlie.metric import endo_inner, induced_metric, orthogonalize, restrict_and_complement
from solvlie.ricci import einstein_check, ricci_formula, ricci_koszul

from conftest import HEIS_GRAM, MAIN_GRAM, gram_from, invertible, matrices, small_ints

F = Fraction


def corpus_metrics():
    out = []
    for name in ("paper", "heis3", "aff1", "abelian3", "rank1_extension"):
        ws = load_corpus(name)
        out.extend((f"{name}:{k}", m) for k, m in ws.metrics.items())
    return out


CORPUS_METRICS = corpus_metrics()


def test_main_metric_is_einstein(main_metric):
    data = ricci_formula(main_metric)
    assert data.ric_op == Matrix.identity(5) * F(4096, 175)
    v = einstein_check(main_metric)
    assert (v.kind, v.lam, v.scalar) == ("Einstein", F(4096, 175), 5 * F(4096, 175))


def test_restricted_heisenberg_ricci(heis_restricted):
    a, c = F(36864, 1715), F(-6144, 245)
    assert ricci_formula(heis_restricted).ric_op.tolist() == [[-a, 0, 0], [0, -a, 0], [c, 0, a]]


def test_restricted_metric_matches_gram(heis_restricted):
    assert heis_restricted.gram == Matrix(HEIS_GRAM)


def test_heisenberg_identity(heis):
    m = Metric.identity(heis)
    assert ricci_koszul(m).ric == Matrix.diag(F(-1, 2), F(-1, 2), F(1, 2))
    v = einstein_check(m)
    assert v.kind == "NotEinstein"
    assert v.lam == F(-1, 6)
    assert v.residual == Matrix.diag(F(-1, 3), F(-1, 3), F(2, 3))


def test_abelian_is_flat():
    alg = parse_salamon("(0,0,0)")
    m = Metric(alg, Matrix([[1, 2, 0], [2, 0, 0], [0, 0, -3]]))
    assert ricci_koszul(m).ric.is_zero()
    assert einstein_check(m).kind == "RicciFlat"


@pytest.mark.parametrize("label, m", CORPUS_METRICS, ids=[x[0] for x in CORPUS_METRICS])
def test_two_ricci_routes_agree_on_corpus(label, m):
    a, b = ricci_formula(m), ricci_koszul(m)
    assert a == b
    assert a.ric.is_symmetric()
    assert a.ric_op == m.inverse_gram @ a.ric
    assert a.scalar == a.ric_op.trace()


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.sampled_from(sorted(MAIN_GRAM) + [(0, 1), (3, 4), (1, 4)]),
                          st.fractions(min_value=-1, max_value=1, max_denominator=8)), max_size=3))
def test_two_ricci_routes_agree_on_perturbations(main_alg, perturb):
    entries = dict(MAIN_GRAM)
    for key, delta in perturb:
        entries[key] = entries.get(key, F(0)) + delta
    gram = gram_from(entries, 5)
    assume(gram.det() != 0)
    m = Metric(main_alg, gram)
    assert ricci_formula(m) == ricci_koszul(m)


@settings(max_examples=40, deadline=None)
@given(invertible(3))
def test_ricci_transforms_as_a_tensor(heis, c):
    m = Metric(heis, Matrix(HEIS_GRAM))
    ric = ricci_formula(m).ric
    moved = m.change_basis(c)
    assert moved.gram == c.T @ m.gram @ c
    assert ricci_koszul(moved).ric == c.T @ ric @ c


@settings(max_examples=60, deadline=None)
@given(matrices(3), matrices(3))
def test_adjoint_properties(heis, a, b):
    m = Metric(heis, Matrix(HEIS_GRAM))
    assert m.adjoint(m.adjoint(a)) == a
    assert m.adjoint(a @ b) == m.adjoint(b) @ m.adjoint(a)
    assert endo_inner(m, a, b) == endo_inner(m, b, a)
    assert endo_inner(m, a, b) == endo_inner(m, m.adjoint(a), m.adjoint(b))
    assert m(a @ (1, 2, 3), (0, 1, -1)) == m((1, 2, 3), m.adjoint(a) @ (0, 1, -1))


def test_degenerate_metric_rejected(heis):
    with pytest.raises(DegenerateMetricError):
        Metric(heis, Matrix.diag(1, 0, 1))


def test_main_nilradical_complement(main_metric, nil):
    r = restrict_and_complement(main_metric, nil)
    assert r.complement == Subspace.coordinate(main_metric.algebra, [3, 4])
    assert r.nondegenerate and r.definite and r.signature == (3, 0, 0)


def test_euclidean_complement(heis):
    s = Subspace.span(heis, [(1, 1, 0)])
    r = restrict_and_complement(Metric.identity(heis), s)
    assert r.complement == Subspace.span(heis, [(1, -1, 0), (0, 0, 1)])


def test_null_line_restriction():
    alg = parse_salamon("(0,0)")
    m = Metric(alg, Matrix([[0, 1], [1, 0]]))
    s = Subspace.coordinate(alg, [0])
    r = restrict_and_complement(m, s)
    assert not r.nondegenerate and not r.definite
    assert r.complement == s


def test_orthogonalize_restricted_metric(heis_restricted):
    out = orthogonalize(heis_restricted)
    assert out[2][0] == (96, 0, 71)
    assert out[2][1] == 2130
    assert all(norm > 0 for _, norm in out)


def test_orthogonalize_identity(heis):
    out = orthogonalize(Metric.identity(heis))
    assert out == [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1)]


def test_orthogonalize_hyperbolic_plane():
    alg = parse_salamon("(0,0)")
    out = orthogonalize(Metric(alg, Matrix([[0, 1], [1, 0]])))
    assert out == [((1, 1), 2), ((1, -1), -2)]


@settings(max_examples=80, deadline=None)
@given(matrices(4, small_ints))
def test_orthogonalize_properties(a):
    gram = a + a.T
    assume(gram.det() != 0)
    alg = parse_salamon("(0,0,0,0)")
    out = orthogonalize(Metric(alg, gram))
    g = lambda x, y: dot(x, gram @ y)
    for i, (v, norm) in enumerate(out):
        assert g(v, v) == norm != 0
        for w, _ in out[i + 1:]:
            assert g(v, w) == 0
    pos = sum(1 for _, n in out if n > 0)
    neg = sum(1 for _, n in out if n < 0)
    assert (pos, neg, 0) == sym_signature(gram)


def test_induced_metric_keeps_brackets(main_metric, nil):
    h = induced_metric(main_metric, nil)
    assert h.algebra == parse_salamon("(0,0,e12)")
