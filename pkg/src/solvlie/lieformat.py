"""Reader for ``.lie`` workspace files.

Line oriented, ``#`` starts a comment::

    algebra heis
      dim 3
      salamon (0,0,e12)
    metric id on heis
      g 1 1 1
      g 2 2 1
      g 3 3 1
    subspace center on heis
      span 0,0,1
    expect einstein -m id => NotEinstein

Metric entries are 1-based Gram entries; ``g i j q`` sets both (i, j) and
(j, i), unspecified entries are zero.  ``expect`` lines record the verdict a
command should produce and are kept verbatim for the test-suite.
"""

from __future__ import annotations

import shlex
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .algebra import LieAlgebra, parse_salamon
from .errors import DegenerateMetricError, JacobiError, ParseError
from .linalg import Matrix, Q
from .metric import Metric
from .subspace import Subspace


@dataclass(frozen=True)
class Expectation:
    command: str
    flags: tuple[str, ...]
    verdict: str
    values: dict  # key -> expected string value
    line: int


@dataclass
class Workspace:
    algebras: dict[str, LieAlgebra] = field(default_factory=dict)
    metrics: dict[str, Metric] = field(default_factory=dict)
    subspaces: dict[str, Subspace] = field(default_factory=dict)
    expectations: list[Expectation] = field(default_factory=list)
    metric_algebra: dict[str, str] = field(default_factory=dict)
    subspace_algebra: dict[str, str] = field(default_factory=dict)
    source: str | None = None
    title: str | None = None  # first comment line of the file

    def is_empty(self) -> bool:
        return not (self.algebras or self.metrics or self.subspaces)


def _rational(text: str, line: int, col: int) -> Fraction:
    try:
        return Q(text)
    except ZeroDivisionError:
        raise ParseError("zero denominator", col, line) from None
    except (ValueError, TypeError):
        raise ParseError(f"expected an exact rational, found {text!r}", col, line) from None


def _index(text: str, n: int, line: int, col: int) -> int:
    if not text.isdigit():
        raise ParseError(f"expected an index, found {text!r}", col, line)
    k = int(text)
    if not 1 <= k <= n:
        raise ParseError(f"index {k} out of range 1..{n}", col, line)
    return k - 1


class _Block:
    def __init__(self, kind: str, name: str, line: int, target: str | None = None):
        self.kind, self.name, self.line, self.target = kind, name, line, target
        self.dim: int | None = None
        self.salamon: tuple[str, int] | None = None
        self.entries: dict[tuple[int, int], Fraction] = {}
        self.vectors: list[tuple[Fraction, ...]] = []


def parse_text(text: str, source: str | None = None) -> Workspace:
    ws = Workspace(source=source)
    block: _Block | None = None

    def finish(b: _Block | None):
        if b is None:
            return
        if b.kind == "algebra":
            if b.salamon is None:
                raise ParseError(f"algebra {b.name!r} has no salamon line", line=b.line)
            body, at = b.salamon
            try:
                alg = parse_salamon(body)
            except ParseError as e:
                raise ParseError(e.message, e.pos, at) from None
            except JacobiError as e:
                raise ParseError(f"algebra {b.name!r}: {e}", line=at) from None
            if b.dim is not None and b.dim != alg.dim:
                raise ParseError(f"algebra {b.name!r} declares dim {b.dim} but has {alg.dim} entries", line=at)
            ws.algebras[b.name] = alg
        elif b.kind == "metric":
            alg = ws.algebras[b.target]
            n = alg.dim
            gram = Matrix([[b.entries.get((i, j), 0) for j in range(n)] for i in range(n)], n)
            try:
                ws.metrics[b.name] = Metric(alg, gram)
            except DegenerateMetricError:
                raise ParseError(f"metric {b.name!r} is degenerate", line=b.line) from None
            ws.metric_algebra[b.name] = b.target
        else:
            alg = ws.algebras[b.target]
            try:
                ws.subspaces[b.name] = Subspace(alg, b.vectors)
            except ValueError as e:
                raise ParseError(f"subspace {b.name!r}: {e}", line=b.line) from None
            ws.subspace_algebra[b.name] = b.target

    for lineno, raw in enumerate(text.splitlines(), 1):
        content, hash_, comment = raw.partition("#")
        stripped = content.strip()
        if not stripped:
            if hash_ and ws.title is None and comment.strip():
                ws.title = comment.strip()
            continue
        col = len(content) - len(content.lstrip()) + 1
        head, _, rest = stripped.partition(" ")
        rest = rest.strip()
        if head in ("algebra", "metric", "subspace"):
            finish(block)
            words = rest.split()
            if head == "algebra":
                if len(words) != 1:
                    raise ParseError("expected 'algebra NAME'", col, lineno)
                if words[0] in ws.algebras:
                    raise ParseError(f"duplicate algebra name {words[0]!r}", col, lineno)
                block = _Block("algebra", words[0], lineno)
            else:
                if len(words) != 3 or words[1] != "on":
                    raise ParseError(f"expected '{head} NAME on ALGEBRA'", col, lineno)
                name, target = words[0], words[2]
                if target not in ws.algebras:
                    raise ParseError(f"unknown algebra {target!r}", col, lineno)
                pool = ws.metrics if head == "metric" else ws.subspaces
                if name in pool:
                    raise ParseError(f"duplicate {head} name {name!r}", col, lineno)
                block = _Block(head, name, lineno, target)
        elif head == "expect":
            finish(block)
            block = None
            ws.expectations.append(_parse_expect(rest, lineno, col))
        elif block is None:
            raise ParseError(f"unexpected {head!r} outside a block", col, lineno)
        elif block.kind == "algebra" and head == "dim":
            if not rest.isdigit():
                raise ParseError("expected a dimension", col, lineno)
            block.dim = int(rest)
        elif block.kind == "algebra" and head == "salamon":
            block.salamon = (rest, lineno)
        elif block.kind == "metric" and head == "g":
            parts = rest.split()
            if len(parts) != 3:
                raise ParseError("expected 'g i j value'", col, lineno)
            n = ws.algebras[block.target].dim
            i = _index(parts[0], n, lineno, col)
            j = _index(parts[1], n, lineno, col)
            v = _rational(parts[2], lineno, col)
            for key in ((i, j), (j, i)):
                if key in block.entries and block.entries[key] != v:
                    raise ParseError(f"conflicting values for g {i + 1} {j + 1}", col, lineno)
                block.entries[key] = v
        elif block.kind == "subspace" and head == "span":
            n = ws.algebras[block.target].dim
            for chunk in rest.split(";"):
                chunk = chunk.strip()
                if not chunk:
                    continue
                vec = tuple(_rational(x.strip(), lineno, col) for x in chunk.split(","))
                if len(vec) != n:
                    raise ParseError(f"vector has {len(vec)} entries, expected {n}", col, lineno)
                block.vectors.append(vec)
        else:
            raise ParseError(f"unexpected {head!r} in {block.kind} block", col, lineno)
    finish(block)
    return ws


def _parse_expect(rest: str, line: int, col: int) -> Expectation:
    lhs, sep, rhs = rest.partition("=>")
    if not sep:
        raise ParseError("expected 'expect COMMAND [FLAGS] => VERDICT [key=value ...]'", col, line)
    words = shlex.split(lhs)
    outcome = rhs.split()
    if not words or not outcome:
        raise ParseError("incomplete expect line", col, line)
    values = {}
    for item in outcome[1:]:
        key, eq, val = item.partition("=")
        if not eq:
            raise ParseError(f"expected key=value, found {item!r}", col, line)
        values[key] = val
    return Expectation(words[0], tuple(words[1:]), outcome[0], values, line)


def parse_file(path: str | Path) -> Workspace:
    p = Path(path)
    return parse_text(p.read_text(encoding="utf-8"), str(p))


# -- bundled examples ---------------------------------------------------------

def corpus() -> list[str]:
    """Names of the bundled example files."""
    root = resources.files("solvlie") / "corpus"
    return sorted(f.name for f in root.iterdir() if f.name.endswith(".lie"))


def corpus_text(name: str) -> str:
    if not name.endswith(".lie"):
        name += ".lie"
    return (resources.files("solvlie") / "corpus" / name).read_text(encoding="utf-8")


def load_corpus(name: str) -> Workspace:
    return parse_text(corpus_text(name), name if name.endswith(".lie") else name + ".lie")


def load(path_or_name: str) -> Workspace:
    """Read a workspace from a path, falling back to a bundled example of that name."""
    p = Path(path_or_name)
    if p.exists():
        return parse_file(p)
    if p.name in corpus() or p.name + ".lie" in corpus():
        return load_corpus(p.name)
    raise FileNotFoundError(f"no such file or bundled example: {path_or_name}")
