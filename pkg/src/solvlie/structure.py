"""Series, classification, Killing form and nilradical of a Lie algebra."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import LieAlgebra, format_vector
from .errors import NotSolvableError, UnsupportedError
from .linalg import Matrix, Vector, independent_columns, is_nilpotent, lincomb
from .poly import MPoly, factor_binary_form, symbolic_combination
from .subspace import Subspace, bracket_span

MAX_NILRADICAL_RANK = 3


@dataclass(frozen=True)
class AlgebraProfile:
    nilpotent: bool
    solvable: bool
    unimodular: bool
    step: int | None
    derived_series_dims: tuple[int, ...]
    lower_central_dims: tuple[int, ...]
    rank: int


@dataclass(frozen=True)
class SubspaceProfile:
    subalgebra: bool
    ideal: bool
    abelian: bool
    nilpotent_ideal: bool
    bracket_span: Subspace


def _stabilize(alg: LieAlgebra, step) -> list[Subspace]:
    out = [Subspace.whole(alg)]
    while out[-1].dim:
        nxt = step(out[-1])
        if nxt.dim == out[-1].dim:
            break
        out.append(nxt)
    return out


def lower_central_series(alg: LieAlgebra) -> list[Subspace]:
    g = Subspace.whole(alg)
    return _stabilize(alg, lambda s: bracket_span(alg, g, s))


def derived_series(alg: LieAlgebra) -> list[Subspace]:
    return _stabilize(alg, lambda s: bracket_span(alg, s, s))


def series(alg: LieAlgebra) -> tuple[list[Subspace], list[Subspace]]:
    """(lower central series, derived series), each ending where it stabilizes."""
    return lower_central_series(alg), derived_series(alg)


def classify(alg: LieAlgebra) -> AlgebraProfile:
    lcs, der = series(alg)
    nilpotent = lcs[-1].dim == 0
    solvable = der[-1].dim == 0
    unimodular = all(alg.ad_basis(i).trace() == 0 for i in range(alg.dim))
    derived_dim = der[1].dim if len(der) > 1 else der[0].dim
    return AlgebraProfile(
        nilpotent=nilpotent,
        solvable=solvable,
        unimodular=unimodular,
        step=len(lcs) - 1 if nilpotent else None,
        derived_series_dims=tuple(s.dim for s in der),
        lower_central_dims=tuple(s.dim for s in lcs),
        rank=alg.dim - derived_dim if alg.dim else 0,
    )


def killing_form(alg: LieAlgebra) -> Matrix:
    ads = [alg.ad_basis(i) for i in range(alg.dim)]
    return Matrix([[(a @ b).trace() for b in ads] for a in ads], alg.dim)


def _is_nilpotent_subspace_algebra(alg: LieAlgebra, s: Subspace) -> bool:
    cur = s
    while cur.dim:
        nxt = bracket_span(alg, s, cur)
        if nxt.dim == cur.dim:
            return False
        cur = nxt
    return True


def classify_subspace(alg: LieAlgebra, s: Subspace) -> SubspaceProfile:
    span = bracket_span(alg, s, s)
    subalgebra = s.contains_space(span)
    ideal = s.contains_space(bracket_span(alg, Subspace.whole(alg), s))
    nilpotent_ideal = ideal and _is_nilpotent_subspace_algebra(alg, s)
    return SubspaceProfile(subalgebra, ideal, span.dim == 0, nilpotent_ideal, span)


# -- nilradical ---------------------------------------------------------------

@dataclass(frozen=True)
class NilradicalSearch:
    nilradical: Subspace
    derived: Subspace
    complement: tuple[Vector, ...]  # coset representatives f_1..f_r
    variables: tuple[str, ...]
    power_traces: tuple[MPoly, ...]  # p_k(t) = tr(ad(sum t_a f_a)^k), k = 1..n
    locus: tuple[Vector, ...]  # basis (in t-coordinates) of the ad-nilpotent coset directions
    trace: tuple[str, ...] = field(default=())


def _power_traces(alg: LieAlgebra, vectors, names) -> list[MPoly]:
    a = symbolic_combination([alg.ad(v) for v in vectors], names)
    out = []
    power = a
    for k in range(1, alg.dim + 1):
        out.append(power.trace())
        if k < alg.dim:
            power = power @ a
    return [p if isinstance(p, MPoly) else MPoly.const(p, names) for p in out]


def _vanishes(polys, names, point) -> bool:
    env = dict(zip(names, point))
    return all(p(**env) == 0 for p in polys)


def nilradical_search(alg: LieAlgebra) -> NilradicalSearch:
    """Maximal nilpotent ideal of a solvable algebra, with the search certificate.

    For solvable algebras over a field of characteristic zero, the nilradical
    contains the derived algebra and consists of the x with ad x nilpotent;
    ad-nilpotency depends only on x modulo the derived algebra.  On the
    quotient, parameterized by t, ad x is nilpotent iff every power trace
    tr(ad(x)^k) vanishes.
    """
    prof = classify(alg)
    if not prof.solvable:
        raise NotSolvableError("nilradical is only computed for solvable algebras")
    lcs, der = series(alg)
    derived = der[1] if len(der) > 1 else der[0]
    trace = [f"derived algebra {derived!r} (dim {derived.dim})"]
    if prof.rank > MAX_NILRADICAL_RANK:
        raise UnsupportedError(f"rank {prof.rank} exceeds the supported maximum {MAX_NILRADICAL_RANK}")
    full = independent_columns(derived.vectors + alg.basis())
    comp = tuple(full[derived.dim:])
    names = tuple(f"t{a + 1}" for a in range(len(comp)))
    if not comp:
        trace.append("derived algebra is everything: rank 0")
        return NilradicalSearch(derived, derived, (), (), (), (), tuple(trace))
    trace.append("coset representatives " + ", ".join(f"{n} -> {format_vector(v)}" for n, v in zip(names, comp)))
    ptr = _power_traces(alg, comp, names)
    trace.append(f"p1 = {ptr[0]}")

    # kernel of the linear form p1 in t-space
    lin = Matrix([[ptr[0].coefficient({n: 1}) for n in names]], len(names))
    kernel = lin.kernel()
    trace.append(f"kernel of p1 has dimension {len(kernel)}")
    locus: list[Vector]
    if not kernel:
        locus = []
    else:
        sub_names = tuple(f"s{j + 1}" for j in range(len(kernel)))
        gens = [lincomb(k, list(comp)) for k in kernel]
        restricted = _power_traces(alg, gens, sub_names)[1:]
        nonzero = [p for p in restricted if not p.is_zero()]
        if not nonzero:
            trace.append("all higher power traces vanish on the kernel of p1")
            locus = list(kernel)
        elif len(kernel) == 1:
            k = next(i + 2 for i, p in enumerate(restricted) if not p.is_zero())
            trace.append(f"p{k} = {restricted[k - 2]} on the kernel of p1; only s1 = 0 survives")
            locus = []
        elif len(kernel) == 2:
            locus = _binary_locus(restricted, sub_names, kernel, trace)
        else:
            raise UnsupportedError("three-dimensional residual locus with nonvanishing power traces")
    lifted = [lincomb(t, list(comp)) for t in locus]
    if locus:
        trace.append("ad-nilpotent coset directions: " + ", ".join(format_vector(v) for v in lifted))
    else:
        trace.append("only the zero coset direction " + "(" + ", ".join(names) + ") = 0 is ad-nilpotent")
    nil = Subspace.span(alg, derived.vectors + lifted)
    _verify_nilradical(alg, nil)
    trace.append(f"nilradical {nil!r}")
    return NilradicalSearch(nil, derived, comp, names, tuple(ptr), tuple(locus), tuple(trace))


def _binary_locus(restricted, sub_names, kernel, trace) -> list[Vector]:
    nonzero = [p for p in restricted if not p.is_zero()]
    facts = []
    for p in nonzero:
        p = p.drop_unused() if len(p.used_vars()) == 2 else p
        facts.append(factor_binary_form(MPoly(sub_names, _terms_onto(p, sub_names))))
    first = facts[0]
    found = []
    for s in first.lines():
        if _vanishes(restricted, sub_names, s):
            found.append(s)
    if not found and all(f.remainder_has_real_roots for f in facts):
        raise UnsupportedError("power traces share a possible irrational real line; not decided")
    if not found:
        trace.append(f"no rational line of {sub_names} annihilates every power trace")
        return []
    s = found[0]
    trace.append(f"line {sub_names} ~ {s} annihilates every power trace")
    return [tuple(s[0] * a + s[1] * b for a, b in zip(kernel[0], kernel[1]))]


def _terms_onto(p: MPoly, names):
    idx = {v: i for i, v in enumerate(p.vars)}
    return {tuple(e[idx[v]] if v in idx else 0 for v in names): c for e, c in p.terms.items()}


def _verify_nilradical(alg: LieAlgebra, nil: Subspace) -> None:
    prof = classify_subspace(alg, nil)
    if not prof.nilpotent_ideal:
        raise AssertionError(f"computed nilradical {nil!r} is not a nilpotent ideal")
    for v in nil.vectors:
        if not is_nilpotent(alg.ad(v)):
            raise AssertionError(f"ad({format_vector(v)}) is not nilpotent")


def nilradical(alg: LieAlgebra) -> Subspace:
    return nilradical_search(alg).nilradical
