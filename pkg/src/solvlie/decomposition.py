"""Orthogonal splittings g~ = g (+) a into a nilpotent ideal and an abelian subalgebra."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import LieAlgebra, format_vector
from .linalg import Matrix, Q, Vector, sym_signature
from .metric import Metric, restrict_and_complement
from .structure import classify_subspace, derived_series, nilradical_search
from .subspace import Subspace, restrict_endo


@dataclass(frozen=True)
class Decomposition:
    algebra: LieAlgebra
    metric: Metric
    g_part: Subspace
    a_part: Subspace


@dataclass(frozen=True)
class DecompositionVerdict:
    kind: str  # "Standard", "StandardPseudoIwasawa" or "Fails"
    reasons: tuple[str, ...] = ()

    @property
    def standard(self) -> bool:
        return self.kind != "Fails"

    @property
    def pseudo_iwasawa(self) -> bool:
        return self.kind == "StandardPseudoIwasawa"


def bracket_witness(alg: LieAlgebra, s: Subspace) -> str | None:
    """First nonzero bracket among basis vectors of ``s``, oriented to a positive leading coefficient."""
    vs = s.vectors
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            b = alg.bracket(vs[i], vs[j])
            if any(b):
                x, y = format_vector(vs[i]), format_vector(vs[j])
                lead = next(c for c in b if c)
                if lead < 0:
                    x, y, b = y, x, tuple(-c for c in b)
                return f"[{x},{y}] = {format_vector(b)}"
    return None


def verify_decomposition(d: Decomposition) -> DecompositionVerdict:
    alg, m, g, a = d.algebra, d.metric, d.g_part, d.a_part
    reasons = []
    gp = classify_subspace(alg, g)
    if not gp.ideal:
        reasons.append(f"{g!r} is not an ideal")
    elif not gp.nilpotent_ideal:
        reasons.append(f"{g!r} is an ideal but not nilpotent")
    ap = classify_subspace(alg, a)
    if not ap.subalgebra:
        reasons.append(f"{a!r} is not a subalgebra: bracket span {ap.bracket_span!r}")
    if not ap.abelian:
        reasons.append(f"{a!r} is not abelian: {bracket_witness(alg, a)}")
    for x in g.vectors:
        for y in a.vectors:
            v = m(x, y)
            if v:
                reasons.append(f"g({format_vector(x)}, {format_vector(y)}) = {v} is not zero")
    if (g + a).dim != alg.dim or g.dim + a.dim != alg.dim:
        reasons.append(f"{g!r} and {a!r} do not span the algebra as a direct sum")
    if reasons:
        return DecompositionVerdict("Fails", tuple(reasons))
    for y in a.vectors:
        ad = alg.ad(y)
        if m.adjoint(ad) != ad:
            return DecompositionVerdict("Standard", (f"ad({format_vector(y)}) is not self-adjoint",))
    return DecompositionVerdict("StandardPseudoIwasawa")


# -- obstruction -----------------------------------------------------------

@dataclass(frozen=True)
class ObstructionVerdict:
    kind: str  # "NoneExists", "Found" or "Unknown"
    trace: tuple[str, ...]
    decomposition: Decomposition | None = None
    reason: str | None = None


def standard_obstruction(alg: LieAlgebra, m: Metric) -> ObstructionVerdict:
    """Decide existence of a standard decomposition when the nilradical restriction is definite.

    Any nilpotent ideal lies in the nilradical N.  If m restricted to N is
    definite, every such ideal has nondegenerate restriction and its
    orthogonal complement contains the complement of N; if the latter is not
    abelian there is no standard decomposition.
    """
    nil = nilradical_search(alg).nilradical
    trace = [f"nilradical N = {nil!r}"]
    res = restrict_and_complement(m, nil)
    perp = Subspace.span(alg, res.complement.vectors)
    trace.append(f"restriction to N has signature {res.signature}")
    if res.nondegenerate:
        trace.append(f"orthogonal complement of N = {perp!r}")
        if classify_subspace(alg, perp).abelian:
            dec = Decomposition(alg, m, nil, perp)
            verdict = verify_decomposition(dec)
            if verdict.standard:
                trace.append(f"(N, complement) verifies as {verdict.kind}")
                return ObstructionVerdict("Found", tuple(trace), dec)
            trace.extend(verdict.reasons)
    if res.definite:
        word = "positive" if res.signature[0] == nil.dim else "negative"
        trace.append(f"nilradical restriction {word} definite")
        trace.append("every nilpotent ideal lies in N and has nondegenerate restriction, "
                     "so its orthogonal complement contains the complement of N")
        witness = bracket_witness(alg, perp)
        if witness is not None:
            trace.append(f"complement of N is not abelian: {witness}")
            trace.append("no abelian complement can exist, so there is no standard decomposition")
            return ObstructionVerdict("NoneExists", tuple(trace))
    reason = ("restriction to the nilradical is degenerate" if not res.nondegenerate
              else "restriction to the nilradical is indefinite")
    trace.append(reason + "; the definiteness argument does not apply")
    return ObstructionVerdict("Unknown", tuple(trace), reason=reason)


# -- Iwasawa type ----------------------------------------------------------

@dataclass(frozen=True)
class IwasawaFlags:
    iw1: bool
    iw2: bool
    iw3: str  # "holds", "fails" or "not established"
    witness_h: Vector | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def all_hold(self) -> bool:
        return self.iw1 and self.iw2 and self.iw3 == "holds"


def _positive_on(alg: LieAlgebra, m: Metric, derived: Subspace, h: Sequence) -> bool:
    gram = derived.basis.T @ m.gram @ derived.basis
    op = restrict_endo(alg.ad(h), derived)
    sym = (gram @ op + op.T @ gram) * Q("1/2")
    return sym_signature(sym) == (derived.dim, 0, 0)


def iwasawa_classify(d: Decomposition, h_candidate: Sequence | None = None) -> IwasawaFlags:
    alg, m, a = d.algebra, d.metric, d.a_part
    notes = []
    verdict = verify_decomposition(d)
    iw1 = verdict.standard
    if not iw1:
        notes.extend(verdict.reasons)
    ads = [alg.ad(x) for x in a.vectors]
    symmetric = all(m.adjoint(x) == x for x in ads)
    injective = bool(ads) and Matrix([x.flat() for x in ads]).rank() == len(ads)
    iw2 = symmetric and injective
    if not symmetric:
        notes.append("some ad X with X in a is not self-adjoint")
    if not injective:
        notes.append("X -> ad X is not injective on a")
    der = derived_series(alg)
    derived = der[1] if len(der) > 1 else der[0]
    if not derived.dim:
        notes.append("derived algebra is zero; positivity holds vacuously")
        return IwasawaFlags(iw1, iw2, "holds", None, tuple(notes))
    candidates = [tuple(Q(x) for x in h_candidate)] if h_candidate is not None else []
    if a.dim == 1:
        # some multiple of the generator works iff +X or -X does
        x = a.vectors[0]
        candidates += [x, tuple(-c for c in x)]
    elif h_candidate is None:
        candidates += a.vectors
        if a.dim > 1:
            candidates.append(tuple(sum(c) for c in zip(*a.vectors)))
    for h in candidates:
        if _positive_on(alg, m, derived, h):
            return IwasawaFlags(iw1, iw2, "holds", h, tuple(notes))
    if a.dim <= 1:
        notes.append("no element of a has positive definite symmetrized action on the derived algebra")
        return IwasawaFlags(iw1, iw2, "fails", None, tuple(notes))
    notes.append("no tested candidate certifies positivity")
    return IwasawaFlags(iw1, iw2, "not established", None, tuple(notes))
