"""Command results with a lossless JSON form (rationals as strings)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Matrix


def render(x):
    """Nested values to JSON-safe data: numbers become "p/q" strings."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    if isinstance(x, float):
        raise TypeError("floating-point values are not allowed in reports")
    if isinstance(x, Matrix):
        return [[render(c) for c in row] for row in x.tolist()]
    if isinstance(x, dict):
        return {str(k): render(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [render(v) for v in x]
    if hasattr(x, "terms"):  # polynomial entry
        return str(x)
    raise TypeError(f"cannot render {type(x).__name__}")


def parse_matrix(rows) -> Matrix:
    """Inverse of ``render`` for rational matrices."""
    return Matrix([[Fraction(c) for c in row] for row in rows], len(rows[0]) if rows else 0)


@dataclass
class Report:
    command: str
    verdict: str
    exit: int = 0
    lam: Fraction | None = None
    values: dict = field(default_factory=dict)
    matrices: dict = field(default_factory=dict)
    trace: list = field(default_factory=list)
    anchor: str | None = None

    def to_dict(self) -> dict:
        out = {"command": self.command, "verdict": self.verdict}
        if self.lam is not None:
            out["lambda"] = render(self.lam)
        if self.values:
            out["values"] = render(self.values)
        if self.matrices:
            out["matrices"] = render(self.matrices)
        if self.trace:
            out["trace"] = list(self.trace)
        if self.anchor:
            out["anchor"] = self.anchor
        out["exit"] = self.exit
        return out

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        """Rebuild a report; matrices of rationals come back as Matrix objects."""
        d = json.loads(text)
        matrices = {}
        for k, rows in d.get("matrices", {}).items():
            try:
                matrices[k] = parse_matrix(rows)
            except (ValueError, ZeroDivisionError):
                matrices[k] = rows  # symbolic entries stay as strings
        lam = d.get("lambda")
        return cls(command=d["command"], verdict=d["verdict"], exit=d["exit"],
                   lam=Fraction(lam) if lam is not None else None,
                   values=d.get("values", {}), matrices=matrices,
                   trace=d.get("trace", []), anchor=d.get("anchor"))

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.verdict}"]
        if self.lam is not None:
            lines.append(f"lambda = {self.lam}")
        for k, v in self.values.items():
            lines.append(f"{k} = {_plain(v)}")
        for k, m in self.matrices.items():
            lines.append(f"{k} =")
            lines.append(_matrix_text(m))
        for t in self.trace:
            lines.append(f"  - {t}")
        if self.anchor:
            lines.append(f"({self.anchor})")
        return "\n".join(lines)


def _plain(v) -> str:
    r = render(v)
    if isinstance(r, list):
        return "[" + ", ".join(_plain(x) for x in r) + "]"
    if isinstance(r, dict):
        return "{" + ", ".join(f"{k}: {_plain(x)}" for k, x in r.items()) + "}"
    return str(r).lower() if isinstance(r, bool) else str(r)


def _matrix_text(m) -> str:
    cells = render(m)
    if not cells:
        return "  []"
    w = max(len(c) for row in cells for c in row)
    return "\n".join("  [" + " ".join(c.rjust(w) for c in row) + "]" for row in cells)
