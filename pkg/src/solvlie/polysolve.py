"""Exact solving of small polynomial systems over Q.

At most two unknowns and total degree at most two per equation; anything
larger is reported as :class:`Unsupported` instead of being approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .linalg import Matrix, congruence_diagonalize
from .poly import (
    MPoly,
    count_real_roots,
    deg,
    rational_roots,
    squarefree,
    upoly_gcd,
)


@dataclass(frozen=True)
class RationalPoints:
    variables: tuple[str, ...]
    points: tuple[dict, ...]
    # True when further real (irrational) solutions certainly exist,
    # None when that could not be decided.
    irrational_real: bool | None = False

    kind = "RationalPoints"


@dataclass(frozen=True)
class NoRationalSolution:
    variables: tuple[str, ...]
    witness: str
    # False: certified no real solution; True: real irrational solutions exist.
    real_solutions: bool | None = False

    kind = "NoRationalSolution"


@dataclass(frozen=True)
class PositiveDimensional:
    variables: tuple[str, ...]
    reason: str

    kind = "PositiveDimensional"


@dataclass(frozen=True)
class Unsupported:
    variables: tuple[str, ...]
    reason: str

    kind = "Unsupported"


SolutionSet = RationalPoints | NoRationalSolution | PositiveDimensional | Unsupported


def _as_poly(e, variables) -> MPoly:
    if isinstance(e, MPoly):
        return e
    return MPoly.const(Fraction(e), variables)


def solve_poly_system_2var(equations: Sequence, variables: Sequence[str] | None = None) -> SolutionSet:
    """Solve ``e = 0`` for every ``e`` in ``equations``."""
    eqs = [e for e in equations]
    if variables is None:
        names: list[str] = []
        for e in eqs:
            if isinstance(e, MPoly):
                names += [v for v in e.used_vars() if v not in names]
        variables = tuple(names)
    variables = tuple(variables)
    eqs = [_as_poly(e, variables) for e in eqs]
    names = list(variables)
    for e in eqs:
        names += [v for v in e.used_vars() if v not in names]
    names = tuple(names)
    if len(names) > 2:
        return Unsupported(names, f"more than two unknowns: {', '.join(names)}")
    for e in eqs:
        if e.total_degree() > 2:
            return Unsupported(names, f"equation {e} = 0 has degree {e.total_degree()} > 2")
    return _solve([_onto(e, names) for e in eqs], names)


def _onto(p: MPoly, names: tuple[str, ...]) -> MPoly:
    """Re-express ``p`` over exactly the variables ``names``."""
    if set(p.used_vars()) - set(names):
        raise ValueError(f"{p} uses variables outside {names}")
    idx = {v: i for i, v in enumerate(p.vars)}
    terms = {tuple(e[idx[v]] if v in idx else 0 for v in names): c for e, c in p.terms.items()}
    return MPoly(names, terms)


def _solve(eqs: list[MPoly], names: tuple[str, ...]) -> SolutionSet:
    eqs = _dedupe([e for e in eqs if not e.is_zero()])
    for e in eqs:
        if e.is_constant():
            return NoRationalSolution(names, f"{e} = 0 is impossible (nonzero constant)", False)
    for e in eqs:
        w = sign_witness(e)
        if w:
            return NoRationalSolution(names, w, False)
    used = tuple(v for v in names if any(e.degree(v) > 0 for e in eqs))
    free = tuple(v for v in names if v not in used)
    if not used:
        sol = RationalPoints(names, ({},))
    else:
        sol = _solve_used(eqs, used)
    if free and isinstance(sol, RationalPoints):
        return PositiveDimensional(names, f"{', '.join(free)} unconstrained")
    return _rename(sol, names)


def _rename(sol: SolutionSet, names) -> SolutionSet:
    if isinstance(sol, RationalPoints):
        return RationalPoints(names, sol.points, sol.irrational_real)
    if isinstance(sol, NoRationalSolution):
        return NoRationalSolution(names, sol.witness, sol.real_solutions)
    return type(sol)(names, sol.reason)


def _dedupe(eqs: list[MPoly]) -> list[MPoly]:
    out, seen = [], set()
    for e in eqs:
        lead = next(iter(e.terms.values()))
        key = tuple((k, c / lead) for k, c in e.terms.items())
        if key not in seen:
            seen.add(key)
            out.append(e)
    return out


def _quadratic_parts(e: MPoly, names: tuple[str, ...]):
    n = len(names)
    A = [[Fraction(0)] * n for _ in range(n)]
    b = [Fraction(0)] * n
    for i, v in enumerate(names):
        A[i][i] = e.coefficient({v: 2})
        b[i] = e.coefficient({v: 1})
        for j in range(i + 1, n):
            h = e.coefficient({v: 1, names[j]: 1}) / 2
            A[i][j] = A[j][i] = h
    return Matrix(A, n), b, e.constant()


def sign_witness(e: MPoly) -> str | None:
    """Explain why ``e = 0`` has no real point, if its quadratic part is definite."""
    names = e.used_vars()
    if not names or e.total_degree() != 2:
        return None
    A, b, c = _quadratic_parts(e, names)
    _, d = congruence_diagonalize(A)
    if all(x > 0 for x in d):
        sign = 1
    elif all(x < 0 for x in d):
        sign = -1
    else:
        return None
    x0 = A.inverse() @ tuple(-bi / 2 for bi in b)
    extreme = e(**dict(zip(names, x0)))
    if sign * extreme <= 0:
        return None
    if not any(b):
        kind = "positive" if sign > 0 else "negative"
        return f"{e} = 0 has no real solution: {kind} definite quadratic part and {kind} constant"
    word = "minimum" if sign > 0 else "maximum"
    return f"{e} = 0 has no real solution: definite quadratic part with {word} {extreme}"


def _solve_used(eqs: list[MPoly], names: tuple[str, ...]) -> SolutionSet:
    # linear elimination first
    for e in eqs:
        if e.total_degree() == 1:
            v = next(x for x in names if e.degree(x) == 1)
            coeff = e.coefficient({v: 1})
            expr = -(e - MPoly.var(v, e.vars) * coeff) / coeff
            others = tuple(x for x in names if x != v)
            rest = [_onto(f.subs({v: expr}), others) for f in eqs if f is not e]
            sub = _solve(rest, others)
            if isinstance(sub, RationalPoints):
                pts = []
                for p in sub.points:
                    q = dict(p)
                    q[v] = expr(**{k: p[k] for k in expr.used_vars()})
                    pts.append({k: q[k] for k in names})
                return RationalPoints(names, tuple(pts), sub.irrational_real)
            return _rename(sub, names)
    if len(names) == 1:
        return _solve_univariate(eqs, names[0])
    return _solve_bivariate(eqs, names)


def _solve_univariate(eqs: list[MPoly], v: str) -> SolutionSet:
    g: list[Fraction] = []
    for e in eqs:
        g = upoly_gcd(g, e.to_upoly(v)) if g else e.to_upoly(v)
    g = squarefree(g)
    if deg(g) < 1:
        return NoRationalSolution((v,), "the equations have no common root (polynomial gcd is constant)", False)
    roots = rational_roots(g)
    nreal = count_real_roots(g)
    if not roots:
        if nreal:
            return NoRationalSolution((v,), f"common factor {MPoly.from_upoly(g, v)} has only irrational real roots", True)
        return NoRationalSolution((v,), f"common factor {MPoly.from_upoly(g, v)} has no real roots", False)
    return RationalPoints((v,), tuple({v: r} for r in roots), nreal > len(roots))


def resultant(f: MPoly, g: MPoly, v: str) -> MPoly:
    """Sylvester resultant eliminating ``v``."""
    fc, gc = f.as_univariate(v), g.as_univariate(v)
    m, n = len(fc) - 1, len(gc) - 1
    rest = fc[0].vars
    if m == 0:
        return fc[0] ** n
    if n == 0:
        return gc[0] ** m
    size = m + n
    zero = MPoly.const(0, rest)
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(fc)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(gc)):
            row[i + k] = c
        rows.append(row)
    return Matrix(rows, size).det()


def _solve_bivariate(eqs: list[MPoly], names: tuple[str, ...]) -> SolutionSet:
    if len(eqs) == 1:
        return _single_conic(eqs[0], names)
    for x, y in (names, names[::-1]):
        elim = []
        for e in eqs:
            if e.degree(y) <= 0:
                elim.append(e.drop_unused())
        with_y = [e for e in eqs if e.degree(y) > 0]
        for f, h in combinations(with_y, 2):
            r = resultant(f, h, y)
            if not r.is_zero():
                elim.append(r.drop_unused())
        if not elim:
            continue
        R: list[Fraction] = []
        for r in elim:
            up = r.to_upoly(x)
            R = upoly_gcd(R, up) if R else up
        R = squarefree(R)
        if deg(R) < 1:
            return NoRationalSolution(names, f"resultants in {x} have no common root", False)
        return _back_substitute(eqs, names, x, y, R)
    return Unsupported(names, "all equations share a common factor")


def _back_substitute(eqs, names, x, y, R) -> SolutionSet:
    roots = rational_roots(R)
    irrational_x = count_real_roots(R) > len(roots)
    points = []
    real_flags = []
    for r in roots:
        sub = [e.subs({x: r}) for e in eqs]
        sub = [_onto(s, (y,)) for s in sub]
        s = _solve(sub, (y,))
        if isinstance(s, RationalPoints):
            for p in s.points:
                points.append({x: r, y: p[y]} if names == (x, y) else {y: p[y], x: r})
            real_flags.append(s.irrational_real)
        elif isinstance(s, NoRationalSolution):
            real_flags.append(s.real_solutions)
        else:
            return _rename(s, names)
    if irrational_x:
        real_flags.append(None)
    if any(f is True for f in real_flags):
        real: bool | None = True
    elif any(f is None for f in real_flags):
        real = None
    else:
        real = False
    points = [{k: p[k] for k in names} for p in points]
    if points:
        return RationalPoints(names, tuple(points), real)
    if real is False:
        return NoRationalSolution(names, f"no rational root of the {x}-resultant {MPoly.from_upoly(R, x)} extends to a solution", False)
    return NoRationalSolution(names, f"the {x}-resultant {MPoly.from_upoly(R, x)} has no rational root that extends to a solution", real)


def _single_conic(e: MPoly, names: tuple[str, ...]) -> SolutionSet:
    A, b, c = _quadratic_parts(e, names)
    detA = A.det()
    if detA != 0:
        _, d = congruence_diagonalize(A)
        if detA < 0:
            return PositiveDimensional(names, f"{e} = 0 is a real conic of indefinite type")
        x0 = A.inverse() @ tuple(-bi / 2 for bi in b)
        if e(**dict(zip(names, x0))) == 0:
            return RationalPoints(names, ({k: v for k, v in zip(names, x0)},))
        return PositiveDimensional(names, f"{e} = 0 is a real ellipse")
    # rank one quadratic part: k*(w.x)^2 + b.x + c
    a11, a12, a22 = A[0, 0], A[0, 1], A[1, 1]
    w = (a11, a12) if a11 else (a12, a22)
    k = 1 / a11 if a11 else 1 / a22
    if b[0] * w[1] - b[1] * w[0] != 0:
        return PositiveDimensional(names, f"{e} = 0 is a parabola")
    m = b[0] / w[0] if w[0] else b[1] / w[1]
    disc = m * m - 4 * k * c
    if disc < 0:
        return NoRationalSolution(names, f"{e} = 0 reduces to a quadratic in one linear form with negative discriminant {disc}", False)
    return PositiveDimensional(names, f"{e} = 0 is a union of parallel lines")
