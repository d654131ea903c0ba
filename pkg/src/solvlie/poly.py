"""Small exact polynomials.

``MPoly`` is a sparse multivariate polynomial over Q in at most three named
variables.  Univariate work uses plain coefficient lists, lowest degree first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Mapping, Sequence

MAX_VARS = 3


def _merge_vars(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[str, ...]:
    out = list(a) + [v for v in b if v not in a]
    if len(out) > MAX_VARS:
        raise ValueError(f"at most {MAX_VARS} variables supported, got {out}")
    return tuple(out)


class MPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str] = (), terms: Mapping[tuple, Fraction] | None = None):
        variables = tuple(variables)
        if len(variables) > MAX_VARS:
            raise ValueError(f"at most {MAX_VARS} variables supported")
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        self.vars = variables
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != len(variables) or any(k < 0 for k in e):
                raise ValueError(f"bad exponent {e}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        self.terms = {e: c for e, c in sorted(clean.items(), key=_order_key) if c}

    # -- constructors -----------------------------------------------------
    @classmethod
    def var(cls, name: str, variables: Sequence[str] | None = None) -> "MPoly":
        variables = tuple(variables) if variables is not None else (name,)
        e = tuple(int(v == name) for v in variables)
        return cls(variables, {e: 1})

    @classmethod
    def const(cls, c, variables: Sequence[str] = ()) -> "MPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def gens(cls, *names: str) -> tuple["MPoly", ...]:
        return tuple(cls.var(n, names) for n in names)

    # -- coercion ---------------------------------------------------------
    def _lift(self, variables: tuple[str, ...]) -> "MPoly":
        if variables == self.vars:
            return self
        idx = [variables.index(v) for v in self.vars]
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for k, i in enumerate(idx):
                ne[i] = e[k]
            terms[tuple(ne)] = c
        return MPoly(variables, terms)

    def _coerce(self, other) -> tuple["MPoly", "MPoly"]:
        if isinstance(other, MPoly):
            vs = _merge_vars(self.vars, other.vars)
            return self._lift(vs), other._lift(vs)
        if isinstance(other, float):
            raise TypeError("floats are not allowed")
        if isinstance(other, (int, Fraction)):
            return self, MPoly.const(other, self.vars)
        return NotImplemented  # type: ignore[return-value]

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MPoly(a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        return pair[0] + (-pair[1])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        terms: dict[tuple, Fraction] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MPoly(a.vars, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        out = MPoly.const(1, self.vars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * len(self.vars): Fraction(other)}
        if isinstance(other, MPoly):
            a, b = self._coerce(other)
            return a.terms == b.terms
        return NotImplemented

    def __hash__(self):
        used = self.used_vars()
        p = self._restrict_to(used)
        return hash((p.vars, tuple(p.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, name: str) -> int:
        if name not in self.vars:
            return 0 if self.terms else -1
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def used_vars(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, monomial: Mapping[str, int]) -> Fraction:
        e = tuple(monomial.get(v, 0) for v in self.vars)
        return self.terms.get(e, Fraction(0))

    def _restrict_to(self, variables: tuple[str, ...]) -> "MPoly":
        idx = [self.vars.index(v) for v in variables]
        return MPoly(variables, {tuple(e[i] for i in idx): c for e, c in self.terms.items()})

    def drop_unused(self) -> "MPoly":
        return self._restrict_to(self.used_vars())

    # -- evaluation -------------------------------------------------------
    def subs(self, values: Mapping[str, object]):
        """Substitute rationals or polynomials for some variables."""
        result = MPoly.const(0, tuple(v for v in self.vars if v not in values))
        for e, c in self.terms.items():
            term = MPoly.const(c, result.vars)
            for v, k in zip(self.vars, e):
                if not k:
                    continue
                if v in values:
                    term = term * (values[v] ** k)
                else:
                    term = term * (MPoly.var(v, result.vars) ** k)
            result = result + term
        return result

    def __call__(self, **values) -> Fraction:
        missing = [v for v in self.used_vars() if v not in values]
        if missing:
            raise ValueError(f"missing values for {missing}")
        out = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(self.vars, e):
                if k:
                    t *= Fraction(values[v]) ** k
            out += t
        return out

    def as_univariate(self, name: str) -> list["MPoly"]:
        """Coefficients in ``name`` (lowest first) as polynomials in the other variables."""
        rest = tuple(v for v in self.vars if v != name)
        if name not in self.vars:
            return [self._restrict_to(rest)]
        i = self.vars.index(name)
        out = [MPoly(rest) for _ in range(max(self.degree(name), 0) + 1)]
        for e, c in self.terms.items():
            ne = tuple(x for k, x in enumerate(e) if k != i)
            out[e[i]] = out[e[i]] + MPoly(rest, {ne: c})
        return out

    def to_upoly(self, name: str | None = None) -> list[Fraction]:
        used = self.used_vars()
        if len(used) > 1 or (name is not None and used and used != (name,)):
            raise ValueError(f"{self} is not univariate in {name}")
        if not used:
            return trim([self.constant()])
        i = self.vars.index(used[0])
        out = [Fraction(0)] * (self.degree(used[0]) + 1)
        for e, c in self.terms.items():
            out[e[i]] += c
        return out

    @classmethod
    def from_upoly(cls, coeffs: Sequence, name: str, variables: Sequence[str] | None = None) -> "MPoly":
        variables = tuple(variables) if variables is not None else (name,)
        i = variables.index(name)
        terms = {}
        for k, c in enumerate(coeffs):
            e = [0] * len(variables)
            e[i] = k
            terms[tuple(e)] = c
        return cls(variables, terms)

    # -- printing ---------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"MPoly({str(self)!r}, vars={self.vars})"


def _order_key(item):
    e = item[0]
    # graded, then lexicographic with earlier variables first
    return (-sum(e), tuple(-x for x in e))


def symbolic_combination(matrices, names: Sequence[str]):
    """Matrix sum(names[k] * matrices[k]) with MPoly entries."""
    from .linalg import Matrix

    names = tuple(names)
    if len(matrices) != len(names):
        raise ValueError("one name per matrix")
    if not matrices:
        raise ValueError("need at least one matrix")
    gens = MPoly.gens(*names) if names else ()
    r, c = matrices[0].shape
    rows = []
    for i in range(r):
        row = []
        for j in range(c):
            e = MPoly.const(0, names)
            for g, m in zip(gens, matrices):
                if m[i, j]:
                    e = e + g * m[i, j]
            row.append(e)
        rows.append(row)
    return Matrix(rows, c)


# -- univariate helpers (coefficient lists, lowest degree first) ---------

def trim(p: Sequence) -> list[Fraction]:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def deg(p: Sequence) -> int:
    return len(trim(p)) - 1


def upoly_eval(p: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def upoly_mul(p: Sequence, q: Sequence) -> list[Fraction]:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def upoly_divmod(p: Sequence, q: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    r = list(p)
    while len(r) >= len(q) and r:
        k = len(r) - len(q)
        f = r[-1] / q[-1]
        quot[k] = f
        for i, c in enumerate(q):
            r[i + k] -= f * c
        r = trim(r)
    return trim(quot), r


def monic(p: Sequence) -> list[Fraction]:
    p = trim(p)
    return [c / p[-1] for c in p] if p else []


def upoly_gcd(p: Sequence, q: Sequence) -> list[Fraction]:
    a, b = trim(p), trim(q)
    while b:
        a, b = b, upoly_divmod(a, b)[1]
    return monic(a)


def derivative(p: Sequence) -> list[Fraction]:
    return trim([k * c for k, c in enumerate(p)][1:])


def squarefree(p: Sequence) -> list[Fraction]:
    p = trim(p)
    if deg(p) < 1:
        return monic(p)
    g = upoly_gcd(p, derivative(p))
    return monic(upoly_divmod(p, g)[0])


def integer_primitive(p: Sequence) -> list[int]:
    """Scale to coprime integer coefficients with positive leading term."""
    p = trim(p)
    if not p:
        return []
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _sign_at(p, x) -> int:
    v = upoly_eval(p, x)
    return (v > 0) - (v < 0)


def sturm_sequence(p: Sequence) -> list[list[Fraction]]:
    seq = [trim(p), derivative(p)]
    while seq[-1]:
        r = upoly_divmod(seq[-2], seq[-1])[1]
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _variations(seq, x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def root_bound(p: Sequence) -> Fraction:
    p = trim(p)
    return 1 + max((abs(c / p[-1]) for c in p[:-1]), default=Fraction(0))


def count_real_roots(p: Sequence, lo=None, hi=None) -> int:
    """Number of distinct real roots in (lo, hi] (whole line by default)."""
    p = trim(p)
    if deg(p) < 1:
        return 0
    seq = sturm_sequence(p)
    if lo is None or hi is None:
        b = root_bound(p) + 1
        lo, hi = -b, b
    return _variations(seq, lo) - _variations(seq, hi)


def isolate_real_roots(p: Sequence) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (lo, hi], each holding exactly one real root of p."""
    sf = squarefree(p)
    if deg(sf) < 1:
        return []
    seq = sturm_sequence(sf)
    b = root_bound(sf) + 1
    out = []
    stack = [(-b, b)]
    while stack:
        lo, hi = stack.pop()
        n = _variations(seq, lo) - _variations(seq, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    return sorted(out)


def rational_roots(p: Sequence) -> list[Fraction]:
    """All distinct rational roots, ascending.

    Each real root is isolated by Sturm bisection until its interval is
    narrower than the minimum spacing of fractions with denominator dividing
    the leading coefficient; the single candidate is then tested exactly.
    """
    sf = squarefree(p)
    if deg(sf) < 1:
        return []
    ints = integer_primitive(sf)
    lead = abs(ints[-1])
    roots = []
    seq = sturm_sequence(sf)
    width = Fraction(1, 4 * lead * lead)
    for lo, hi in isolate_real_roots(sf):
        if upoly_eval(sf, hi) == 0:
            roots.append(hi)
            continue
        while hi - lo > width:
            mid = (lo + hi) / 2
            if upoly_eval(sf, mid) == 0:
                lo = hi = mid
                break
            if _variations(seq, lo) - _variations(seq, mid) == 1:
                hi = mid
            else:
                lo = mid
        if lo == hi:
            roots.append(lo)
            continue
        cand = ((lo + hi) / 2).limit_denominator(lead)
        if upoly_eval(sf, cand) == 0:
            roots.append(cand)
    return sorted(roots)


def is_square_rational(x: Fraction) -> bool:
    if x < 0:
        return False
    return isqrt(x.numerator) ** 2 == x.numerator and isqrt(x.denominator) ** 2 == x.denominator


# -- binary forms ---------------------------------------------------------

@dataclass(frozen=True)
class BinaryFactorization:
    """f = constant * prod(factor**mult) * remainder.

    Each factor is an integer pair (a, b) standing for a*t1 + b*t2.
    """

    variables: tuple[str, str]
    constant: Fraction
    factors: tuple[tuple[tuple[int, int], int], ...]
    remainder: MPoly
    remainder_has_real_roots: bool

    def factor_polys(self) -> list[MPoly]:
        t1, t2 = MPoly.gens(*self.variables)
        return [t1 * a + t2 * b for (a, b), _ in self.factors]

    def expand(self) -> MPoly:
        out = self.remainder * self.constant
        for p, (_, m) in zip(self.factor_polys(), self.factors):
            out = out * p ** m
        return out

    def lines(self) -> list[tuple[int, int]]:
        """Zero directions (t1, t2) of the linear factors."""
        return [(b, -a) if b or a else (0, 0) for (a, b), _ in self.factors]


def factor_binary_form(f: MPoly, variables: Sequence[str] | None = None) -> BinaryFactorization:
    """Split off every rational linear factor of a homogeneous binary form."""
    if variables is None:
        variables = f.vars
    variables = tuple(variables)
    if len(variables) != 2 or any(v not in f.vars for v in f.used_vars()) or set(f.used_vars()) - set(variables):
        raise ValueError(f"expected a binary form in exactly two variables, got {variables}")
    if f.is_zero():
        raise ValueError("zero form has no factorization")
    if not f.is_homogeneous():
        raise ValueError(f"{f} is not homogeneous")
    t1, t2 = variables
    d = f.total_degree()
    f = f._lift(_merge_vars(variables, f.vars))._restrict_to(variables)
    # u(x) = f(x, 1); coefficient of x^i is that of t1^i t2^(d-i)
    u = [f.coefficient({t1: i, t2: d - i}) for i in range(d + 1)]
    u = trim(u)
    factors: list[tuple[tuple[int, int], int]] = []
    mult_t2 = d - deg(u)
    rest = list(u)
    for r in rational_roots(u):
        m = 0
        lin = [-r, Fraction(1)]
        while True:
            q, rem = upoly_divmod(rest, lin)
            if rem:
                break
            rest, m = q, m + 1
        a, b = r.denominator, -r.numerator  # root x = t1/t2 = r  <=>  q*t1 - p*t2 = 0
        factors.append(((a, b), m))
    if mult_t2:
        factors.append(((0, 1), mult_t2))
    prim = integer_primitive(rest)
    const = rest[-1] / prim[-1]
    for (a, b), m in factors:
        # each linear factor (a*x + b) carries leading coefficient a (or 1 for t2)
        if a:
            const /= Fraction(a) ** m
    rdeg = deg(prim)
    remainder = MPoly(variables, {(i, rdeg - i): c for i, c in enumerate(prim)})
    has_real = count_real_roots(prim) > 0 if rdeg >= 1 else False
    factors.sort(key=lambda fm: (-abs(fm[0][0]), fm[0]))
    return BinaryFactorization(variables, const, tuple(factors), remainder, has_real)
