import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solvlie import NotSolvableError, Subspace, classify, killing_form, nilradical, nilradical_search, parse_salamon
from solvlie.linalg import dot, is_nilpotent
from solvlie.structure import classify_subspace, series

from test_algebra import CORPUS_SALAMON
from conftest import vectors


def test_heisenberg_profile(heis):
    lcs, der = series(heis)
    assert [s.dim for s in lcs] == [3, 1, 0]
    p = classify(heis)
    assert (p.nilpotent, p.step, p.unimodular) == (True, 2, True)
    # rank is the codimension of the derived algebra Span{e3}
    assert p.rank == p.derived_series_dims[0] - p.derived_series_dims[1] == 2


def test_main_profile(main_alg):
    p = classify(main_alg)
    assert p.derived_series_dims == (5, 3, 1, 0)
    assert p.solvable and not p.nilpotent and not p.unimodular
    assert p.rank == 2
    assert main_alg.ad_basis(4).trace() == -4
    _, der = series(main_alg)
    assert der[1] == Subspace.coordinate(main_alg, [0, 1, 2])
    assert der[2] == Subspace.coordinate(main_alg, [2])


def test_abelian_series_stabilize_at_once():
    alg = parse_salamon("(0,0,0)")
    lcs, der = series(alg)
    assert [s.dim for s in lcs] == [3, 0]
    assert [s.dim for s in der] == [3, 0]


def test_aff_profile():
    p = classify(parse_salamon("(0,-e12)"))
    assert p.solvable and not p.nilpotent and not p.unimodular


def test_killing_forms(heis, main_alg):
    assert killing_form(heis).is_zero()
    assert killing_form(main_alg)[3, 3] == -2
    assert killing_form(parse_salamon("(0,-e12)")).tolist() == [[1, 0], [0, 0]]


def test_subspace_flags(main_alg):
    h = classify_subspace(main_alg, Subspace.coordinate(main_alg, [3, 4]))
    assert not h.subalgebra and not h.abelian
    n = classify_subspace(main_alg, Subspace.coordinate(main_alg, [0, 1, 2]))
    assert n.nilpotent_ideal and not n.abelian
    z = classify_subspace(main_alg, Subspace.zero(main_alg))
    assert z.ideal and z.abelian


def test_main_nilradical(main_alg):
    s = nilradical_search(main_alg)
    assert s.nilradical == Subspace.coordinate(main_alg, [0, 1, 2])
    assert s.locus == ()
    assert len(s.variables) == 2
    assert any("only the zero coset direction" in line for line in s.trace)


def test_nilpotent_nilradical_is_everything(heis):
    assert nilradical(heis) == Subspace.whole(heis)


def test_aff_nilradical():
    alg = parse_salamon("(0,-e12)")
    assert nilradical(alg) == Subspace.coordinate(alg, [1])


def test_nilradical_with_hidden_direction():
    # [e1,e3] = [e1,e4] = -e1, so e2 and e3 - e4 act trivially
    alg = parse_salamon("(e13+e14,0,0,0)")
    nil = nilradical(alg)
    assert nil == Subspace.span(alg, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, -1)])
    for v in nil.vectors:
        assert is_nilpotent(alg.ad(v))


def test_not_solvable():
    sl2 = parse_salamon("(e23,-2*e13,e12)")
    with pytest.raises(NotSolvableError):
        nilradical(sl2)


solvable = st.sampled_from([t for t in CORPUS_SALAMON]).map(parse_salamon)


@pytest.mark.parametrize("text", CORPUS_SALAMON)
def test_nilradical_properties(text):
    alg = parse_salamon(text)
    nil = nilradical(alg)
    _, der = series(alg)
    assert nil.contains_space(der[1] if len(der) > 1 else der[0])
    assert classify_subspace(alg, nil).nilpotent_ideal
    for v in nil.vectors:
        assert is_nilpotent(alg.ad(v))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_killing_associativity(data):
    alg = data.draw(solvable)
    x, y, z = (data.draw(vectors(alg.dim)) for _ in range(3))
    b = killing_form(alg)
    assert dot(alg.bracket(x, y), b @ z) == dot(x, b @ alg.bracket(y, z))
