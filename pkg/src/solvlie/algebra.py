"""Lie algebras given by rational structure constants.

Brackets follow the Chevalley–Eilenberg sign convention
``d alpha(x, y) = -alpha([x, y])``: the entry ``de^3 = e12`` means
``[e_1, e_2] = -e_3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import JacobiError, ParseError
from .linalg import Matrix, Q, Vector, is_zero_vector, lincomb, unit, vadd, zero_vector

MAX_DIM = 9


@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple[int, int, int]  # 0-based basis indices i < j < k
    residual: Vector

    def __str__(self) -> str:
        i, j, k = (x + 1 for x in self.triple)
        return f"(e{i}, e{j}, e{k}): cyclic sum = {format_vector(self.residual)}"


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q with basis e_1..e_n."""

    __slots__ = ("dim", "_c")

    def __init__(self, dim: int, brackets: Mapping[tuple[int, int], Sequence] | None = None, *, check: bool = True):
        if not 0 <= dim <= MAX_DIM:
            raise ValueError(f"dimension must be between 0 and {MAX_DIM}")
        self.dim = dim
        c = [[zero_vector(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in (brackets or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index ({i}, {j}) out of range")
            v = tuple(Q(x) for x in v)
            if len(v) != dim:
                raise ValueError("bracket vector has wrong length")
            if i == j:
                if not is_zero_vector(v):
                    raise ValueError("[e_i, e_i] must vanish")
                continue
            neg = tuple(-x for x in v)
            if not is_zero_vector(c[i][j]) and c[i][j] != v:
                raise ValueError(f"conflicting values for [e{i + 1}, e{j + 1}]")
            c[i][j], c[j][i] = v, neg
        self._c = tuple(tuple(row) for row in c)
        if check:
            bad = jacobi_check(self)
            if bad is not None:
                raise JacobiError(bad)

    @classmethod
    def unchecked(cls, dim: int, brackets: Mapping[tuple[int, int], Sequence] | None = None) -> "LieAlgebra":
        """Build without validating the Jacobi identity (for testing the validator)."""
        return cls(dim, brackets, check=False)

    @classmethod
    def from_structure_constants(cls, c: Sequence, *, check: bool = True) -> "LieAlgebra":
        """``c[k][i][j]`` is the coefficient of e_k in [e_i, e_j]."""
        n = len(c)
        brackets = {}
        for i in range(n):
            for j in range(n):
                v = tuple(Q(c[k][i][j]) for k in range(n))
                if v != tuple(-Q(c[k][j][i]) for k in range(n)):
                    raise ValueError(f"structure constants not antisymmetric at ({i + 1}, {j + 1})")
                if i < j:
                    brackets[(i, j)] = v
        return cls(n, brackets, check=check)

    # -- basic operations -------------------------------------------------
    def basis(self) -> list[Vector]:
        return [unit(self.dim, i) for i in range(self.dim)]

    def structure_constant(self, k: int, i: int, j: int) -> Fraction:
        return self._c[i][j][k]

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self._c[i][j]

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        out = zero_vector(self.dim)
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if b and i != j:
                    out = vadd(out, tuple(a * b * t for t in self._c[i][j]))
        return out

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of y -> [x, y]; column j is [x, e_j]."""
        cols = [lincomb(x, [self._c[i][j] for i in range(self.dim)]) for j in range(self.dim)]
        return Matrix.from_columns(cols, self.dim) if self.dim else Matrix.zeros(0)

    def ad_basis(self, i: int) -> Matrix:
        return self.ad(unit(self.dim, i))

    def nonzero_brackets(self) -> dict[tuple[int, int], Vector]:
        return {(i, j): self._c[i][j] for i in range(self.dim) for j in range(i + 1, self.dim)
                if not is_zero_vector(self._c[i][j])}

    def is_abelian(self) -> bool:
        return not self.nonzero_brackets()

    def change_basis(self, p: Matrix) -> "LieAlgebra":
        """Same algebra written in the basis given by the columns of ``p``."""
        pinv = p.inverse()
        cols = p.columns()
        brackets = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                brackets[(i, j)] = pinv @ self.bracket(cols[i], cols[j])
        return LieAlgebra(self.dim, brackets, check=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self.dim == other.dim and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.dim, self._c))

    def __repr__(self) -> str:
        return f"LieAlgebra({print_salamon(self)!r})"


def ad_matrix(alg: LieAlgebra, x: Sequence) -> Matrix:
    return alg.ad(x)


def jacobi_check(alg: LieAlgebra) -> JacobiViolation | None:
    """First triple i < j < k whose cyclic Jacobi sum is nonzero, else None."""
    n = alg.dim
    e = alg.basis()
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                r = vadd(vadd(alg.bracket(alg.bracket(e[i], e[j]), e[k]),
                              alg.bracket(alg.bracket(e[j], e[k]), e[i])),
                         alg.bracket(alg.bracket(e[k], e[i]), e[j]))
                if not is_zero_vector(r):
                    return JacobiViolation((i, j, k), r)
    return None


# -- formatting -------------------------------------------------------------

def format_coeff_term(c: Fraction, name: str, first: bool) -> str:
    mag = abs(c)
    body = name if mag == 1 else f"{mag} {name}"
    if first:
        return ("-" if c < 0 else "") + body
    return (" - " if c < 0 else " + ") + body


def format_vector(v: Sequence, prefix: str = "e") -> str:
    parts = []
    for k, c in enumerate(v):
        if c:
            parts.append(format_coeff_term(Fraction(c), f"{prefix}{k + 1}", not parts))
    return "".join(parts) if parts else "0"


# -- Salamon notation -------------------------------------------------------

class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            got = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {got!r}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self.ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])


def _parse_term(sc: _Scanner, sign: int, n: int) -> tuple[tuple[int, int], Fraction, int]:
    coeff = Fraction(sign)
    start = sc.pos
    if sc.peek().isdigit():
        num = sc.integer()
        den = 1
        if sc.peek() == "/":
            sc.pos += 1
            at = sc.pos
            den = sc.integer()
            if den == 0:
                raise ParseError("zero denominator", at)
        coeff *= Fraction(num, den)
        if sc.peek() == "*":
            sc.pos += 1
    if sc.peek() != "e":
        raise ParseError("expected a term of the form eIJ", sc.pos)
    sc.pos += 1
    at = sc.pos
    digits = sc.text[sc.pos:sc.pos + 2]
    if len(digits) != 2 or not digits.isdigit():
        raise ParseError("expected two index digits after 'e'", at)
    sc.pos += 2
    if sc.pos < len(sc.text) and sc.text[sc.pos].isdigit():
        raise ParseError("expected exactly two index digits", sc.pos)
    i, j = int(digits[0]), int(digits[1])
    for idx in (i, j):
        if not 1 <= idx <= n:
            raise ParseError(f"index {idx} out of range 1..{n}", at)
    if i == j:
        raise ParseError(f"repeated index in e{i}{j}", at)
    return (i - 1, j - 1), coeff, start


def parse_salamon(text: str, *, check: bool = True) -> LieAlgebra:
    """Parse ``(de^1, ..., de^n)``, e.g. ``"(0,0,e12,e13)"``."""
    sc = _Scanner(text)
    sc.expect("(")
    # count entries first so index range checks know n
    depth_free = text[sc.pos:]
    n = depth_free.count(",") + 1 if ")" in depth_free else None
    if n is None:
        raise ParseError("missing closing ')'", len(text))
    if n > MAX_DIM:
        raise ParseError(f"at most {MAX_DIM} entries supported", 0)
    entries: list[dict[tuple[int, int], Fraction]] = []
    while True:
        entry: dict[tuple[int, int], Fraction] = {}
        ch = sc.peek()
        if ch == "0":
            save = sc.pos
            sc.pos += 1
            if sc.peek() in (",", ")"):
                entries.append(entry)
            else:
                sc.pos = save
                ch = "1"
        if ch != "0":
            sign = 1
            if sc.peek() in "+-" and sc.peek():
                sign = -1 if sc.peek() == "-" else 1
                sc.pos += 1
            while True:
                (i, j), c, at = _parse_term(sc, sign, n)
                key = (min(i, j), max(i, j))
                if key in entry:
                    raise ParseError(f"duplicate index pair e{key[0] + 1}{key[1] + 1}", at)
                entry[key] = c if i < j else -c
                nxt = sc.peek()
                if nxt in ("+", "-") and nxt:
                    sign = -1 if nxt == "-" else 1
                    sc.pos += 1
                    continue
                break
            entries.append(entry)
        nxt = sc.peek()
        if nxt == ",":
            sc.pos += 1
            continue
        if nxt == ")":
            sc.pos += 1
            break
        raise ParseError(f"unexpected {nxt or 'end of input'!r}", sc.pos)
    if sc.peek():
        raise ParseError("trailing characters after ')'", sc.pos)
    if len(entries) != n:
        raise ParseError("malformed entry list", sc.pos)
    brackets: dict[tuple[int, int], list[Fraction]] = {}
    for k, entry in enumerate(entries):
        for (i, j), coeff in entry.items():
            # de^k = coeff e^{ij}  =>  c^k_{ij} = -coeff
            brackets.setdefault((i, j), [Fraction(0)] * n)[k] -= coeff
    return LieAlgebra(n, {ij: tuple(v) for ij, v in brackets.items()}, check=check)


def print_salamon(alg: LieAlgebra) -> str:
    """Canonical Salamon string: terms e^{ij} with i < j in increasing order."""
    n = alg.dim
    entries = []
    for k in range(n):
        parts = []
        for i in range(n):
            for j in range(i + 1, n):
                coeff = -alg.structure_constant(k, i, j)
                if not coeff:
                    continue
                mag = abs(coeff)
                body = f"e{i + 1}{j + 1}" if mag == 1 else f"{mag}*e{i + 1}{j + 1}"
                if parts:
                    parts.append(("-" if coeff < 0 else "+") + body)
                else:
                    parts.append(("-" if coeff < 0 else "") + body)
        entries.append("".join(parts) if parts else "0")
    return "(" + ",".join(entries) + ")"
