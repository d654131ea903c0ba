"""Command-line front end.

Exit codes: 0 the property holds or the computation succeeded, 1 the property
fails, 2 usage or input error, 3 the question lies outside the supported scope.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .algebra import LieAlgebra, format_vector, print_salamon
from .correction import aw_correction_solve
from .decomposition import Decomposition, iwasawa_classify, standard_obstruction, verify_decomposition
from .derivations import derivation_space
from .errors import NotNilpotentError, NotSolvableError, SolvlieError, UnsupportedError
from .lieformat import Workspace, load
from .linalg import Matrix, Q
from .metric import Metric, induced_metric, orthogonalize, restrict_and_complement
from .report import Report
from .ricci import einstein_check, ricci_formula, ricci_koszul
from .soliton import gen_nilsoliton_family_check, nilsoliton_solve
from .structure import classify, killing_form, nilradical_search
from .subspace import Subspace, restrict_endo, subalgebra

COMMANDS = ("check", "info", "ricci", "einstein", "derivations", "nilradical", "nilsoliton",
            "gen-nilsoliton", "standard", "iwasawa", "aw-correct", "orthogonalize", "adjoint")

# verdicts reported with exit status 0, per command
SUCCESS = {
    "check": {"OK"},
    "info": {"Nilpotent", "Solvable", "NotSolvable"},
    "ricci": {"Computed"},
    "einstein": {"Einstein", "RicciFlat"},
    "derivations": {"Computed"},
    "nilradical": {"Computed"},
    "nilsoliton": {"SolitonSolution", "SolutionFamily"},
    "gen-nilsoliton": {"Solvable"},
    "standard": {"Found"},
    "iwasawa": {"IwasawaType"},
    "aw-correct": {"Affine"},
    "orthogonalize": {"Computed"},
    "adjoint": {"Computed"},
}
UNSUPPORTED = {"Unknown", "Unsupported", "NotEstablished"}


class UsageError(SolvlieError):
    pass


def exit_code(command: str, verdict: str) -> int:
    if verdict in SUCCESS[command]:
        return 0
    if verdict in UNSUPPORTED:
        return 3
    return 1


# -- argument resolution -----------------------------------------------------

class Context:
    """Algebra, metric and subspaces selected by the command-line flags."""

    def __init__(self, ws: Workspace, args):
        self.ws = ws
        self.args = args
        self.metric: Metric | None = None
        self.algebra: LieAlgebra | None = None
        self.algebra_name: str | None = None
        name = args.metric
        if name is not None:
            if name in ws.metrics:
                self.metric = ws.metrics[name]
                self.algebra_name = ws.metric_algebra[name]
            elif name in ws.algebras:
                self.algebra_name = name
            else:
                raise UsageError(f"no metric or algebra named {name!r}")
        elif len(ws.metrics) == 1:
            (mname,) = ws.metrics
            self.metric = ws.metrics[mname]
            self.algebra_name = ws.metric_algebra[mname]
        elif len(ws.algebras) == 1:
            (self.algebra_name,) = ws.algebras
        if self.algebra_name is not None:
            self.algebra = ws.algebras[self.algebra_name]

    def need_algebra(self) -> LieAlgebra:
        if self.algebra is None:
            raise UsageError("select an algebra or metric with -m NAME")
        return self.algebra

    def need_metric(self) -> Metric:
        if self.metric is None:
            raise UsageError("select a metric with -m NAME")
        return self.metric

    def subspace(self, name: str) -> Subspace:
        ws = self.ws
        if name not in ws.subspaces:
            raise UsageError(f"no subspace named {name!r}")
        if ws.subspace_algebra[name] != self.algebra_name:
            raise UsageError(f"subspace {name!r} lives on another algebra")
        return ws.subspaces[name]

    def ideal(self) -> Subspace | None:
        return self.subspace(self.args.ideal) if self.args.ideal else None

    def operator(self, token: str, on: Subspace | None) -> Matrix:
        """``adE4`` (ad e_4), restricted to ``on`` when given."""
        alg = self.need_algebra()
        t = token.strip()
        if t.lower().startswith("ade") and t[3:].isdigit():
            k = int(t[3:])
            if not 1 <= k <= alg.dim:
                raise UsageError(f"{t}: index out of range")
            op = alg.ad_basis(k - 1)
        else:
            raise UsageError(f"unknown operator {token!r}; use adE<k>")
        if on is None:
            return op
        try:
            return restrict_endo(op, on)
        except ValueError:
            raise UsageError(f"{t} does not preserve the selected ideal") from None

    def family(self, on: Subspace | None) -> list[Matrix]:
        text = self.args.family
        if not text:
            return []
        return [self.operator(tok, on) for tok in text.split(",") if tok.strip()]

    def restricted(self) -> tuple[LieAlgebra, Metric, Subspace | None]:
        """Algebra and metric, restricted to --ideal when given."""
        m = self.need_metric()
        ideal = self.ideal()
        if ideal is None:
            return m.algebra, m, None
        res = restrict_and_complement(m, ideal)
        if not res.nondegenerate:
            raise UsageError("metric restricted to the ideal is degenerate")
        sub = induced_metric(m, ideal)
        return sub.algebra, sub, ideal


def _vec(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Q(x) for x in text.split(","))
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad vector {text!r}: {e}") from None


# -- commands --------------------------------------------------------------

def cmd_check(ctx: Context) -> Report:
    ws = ctx.ws
    values = {
        "algebras": {k: print_salamon(a) for k, a in ws.algebras.items()},
        "metrics": {k: {"algebra": ws.metric_algebra[k], "signature": list(m.signature())}
                    for k, m in ws.metrics.items()},
        "subspaces": {k: repr(s) for k, s in ws.subspaces.items()},
    }
    return Report("check", "OK", values=values)


def cmd_info(ctx: Context) -> Report:
    alg = ctx.need_algebra()
    prof = classify(alg)
    verdict = "Nilpotent" if prof.nilpotent else "Solvable" if prof.solvable else "NotSolvable"
    values = {
        "dim": alg.dim,
        "salamon": print_salamon(alg),
        "nilpotent": prof.nilpotent,
        "solvable": prof.solvable,
        "unimodular": prof.unimodular,
        "rank": prof.rank,
        "derived_series_dims": list(prof.derived_series_dims),
        "lower_central_dims": list(prof.lower_central_dims),
        "brackets": [f"[e{i + 1},e{j + 1}] = {format_vector(v)}" for (i, j), v in alg.nonzero_brackets().items()],
    }
    if prof.step is not None:
        values["step"] = prof.step
    if ctx.metric is not None:
        values["signature"] = list(ctx.metric.signature())
    return Report("info", verdict, values=values, matrices={"killing": killing_form(alg)})


def cmd_ricci(ctx: Context) -> Report:
    m = ctx.need_metric()
    data = ricci_formula(m)
    trace = []
    if ctx.args.oracle:
        other = ricci_koszul(m)
        if other != data:
            raise AssertionError("Ricci formula and Koszul oracle disagree")
        trace.append("Koszul-formula oracle agrees entry for entry")
    return Report("ricci", "Computed", values={"scalar": data.scalar},
                  matrices={"ric": data.ric, "ric_op": data.ric_op}, trace=trace)


def cmd_einstein(ctx: Context) -> Report:
    m = ctx.need_metric()
    data = ricci_formula(m)
    trace = []
    if ctx.args.oracle:
        if ricci_koszul(m) != data:
            raise AssertionError("Ricci formula and Koszul oracle disagree")
        trace.append("Koszul-formula oracle agrees entry for entry")
    v = einstein_check(m, data)
    matrices = {"ric_op": data.ric_op}
    if not v.holds:
        matrices["residual"] = v.residual
    return Report("einstein", v.kind, lam=v.lam, values={"scalar": v.scalar}, matrices=matrices, trace=trace)


def cmd_derivations(ctx: Context) -> Report:
    alg = ctx.need_algebra()
    ideal = ctx.ideal()
    if ideal is not None:
        alg = subalgebra(alg, ideal)
    basis = derivation_space(alg)
    return Report("derivations", "Computed", values={"dim": len(basis)},
                  matrices={f"D{k + 1}": d for k, d in enumerate(basis)})


def cmd_nilradical(ctx: Context) -> Report:
    s = nilradical_search(ctx.need_algebra())
    return Report("nilradical", "Computed",
                  values={"nilradical": [format_vector(v) for v in s.nilradical.vectors],
                          "dim": s.nilradical.dim},
                  trace=list(s.trace))


def cmd_nilsoliton(ctx: Context) -> Report:
    alg, m, _ = ctx.restricted()
    sol = nilsoliton_solve(alg, m)
    if sol.kind == "NoSolution":
        return Report("nilsoliton", "NoSolution", values={"certificate": list(sol.witness)})
    values = {}
    if sol.kind == "SolutionFamily":
        values["dimension"] = sol.dimension
    return Report("nilsoliton", sol.kind, lam=sol.lam, values=values, matrices={"D": sol.derivation})


def cmd_gen_nilsoliton(ctx: Context) -> Report:
    alg, m, ideal = ctx.restricted()
    fam = ctx.family(ideal)
    systems = gen_nilsoliton_family_check(alg, m, fam)
    values, trace, matrices = {}, [], {}
    solvable = False
    for fs in systems:
        key = f"tau{fs.tau:+d}"
        if fs.verdict is None:
            kind = "Solvable" if fs.solvable else "NoSolution"
        else:
            kind = fs.verdict.kind
        if kind == "Unsupported":
            return Report("gen-nilsoliton", "Unsupported", trace=[fs.verdict.reason])
        values[key] = kind
        solvable = solvable or fs.solvable
        if fs.witness:
            trace.append(f"{key}: {fs.witness}")
        elif fs.verdict is not None and hasattr(fs.verdict, "witness"):
            trace.append(f"{key}: {fs.verdict.witness}")
        if fs.verdict is not None and fs.verdict.kind == "RationalPoints":
            values[key + " points"] = [dict(p) for p in fs.verdict.points]
        matrices[f"rhs {key}"] = fs.rhs
    values["parameters"] = list(systems[0].parameters)
    if solvable:
        verdict = "Solvable"
    else:
        kinds = {values[f"tau{fs.tau:+d}"] for fs in systems}
        verdict = kinds.pop() if len(kinds) == 1 else "NoSolution"
    matrices["ric_op"] = ricci_formula(m).ric_op
    return Report("gen-nilsoliton", verdict, values=values, matrices=matrices, trace=trace)


def cmd_standard(ctx: Context) -> Report:
    m = ctx.need_metric()
    v = standard_obstruction(m.algebra, m)
    values = {}
    if v.decomposition is not None:
        values["g_part"] = repr(v.decomposition.g_part)
        values["a_part"] = repr(v.decomposition.a_part)
    return Report("standard", v.kind, values=values, trace=list(v.trace))


def _decomposition(ctx: Context) -> Decomposition:
    m = ctx.need_metric()
    if ctx.args.decomp:
        parts = ctx.args.decomp.split(",")
        if len(parts) != 2:
            raise UsageError("--decomp expects GNAME,ANAME")
        return Decomposition(m.algebra, m, ctx.subspace(parts[0]), ctx.subspace(parts[1]))
    nil = nilradical_search(m.algebra).nilradical
    comp = restrict_and_complement(m, nil).complement
    return Decomposition(m.algebra, m, nil, Subspace.span(m.algebra, comp.vectors))


def cmd_iwasawa(ctx: Context) -> Report:
    d = _decomposition(ctx)
    h = _vec(ctx.args.candidate_H) if ctx.args.candidate_H else None
    if h is not None and len(h) != d.algebra.dim:
        raise UsageError("--candidate-H has the wrong length")
    flags = iwasawa_classify(d, h)
    dv = verify_decomposition(d)
    if flags.all_hold:
        verdict = "IwasawaType"
    elif flags.iw1 and flags.iw2 and flags.iw3 == "not established":
        verdict = "NotEstablished"
    else:
        verdict = "NotIwasawaType"
    values = {"decomposition": dv.kind, "Iw1": flags.iw1, "Iw2": flags.iw2, "Iw3": flags.iw3,
              "g_part": repr(d.g_part), "a_part": repr(d.a_part)}
    if flags.witness_h is not None:
        values["H"] = format_vector(flags.witness_h)
    return Report("iwasawa", verdict, values=values, trace=list(flags.notes))


def cmd_aw_correct(ctx: Context) -> Report:
    alg, m, ideal = ctx.restricted()
    fam = ctx.family(ideal)
    if len(fam) != 2:
        raise UsageError("--family needs two operators: COMMUTE_WITH,MATCH_SYM_OF")
    r = aw_correction_solve(alg, m, fam[0], fam[1])
    matrices = {"target": r.target}
    for k, b in enumerate(r.constrained_basis):
        matrices[f"constrained{k + 1}"] = b
    if r.kind == "Empty":
        return Report("aw-correct", "Empty", values={"certificate": list(r.certificate)},
                      matrices=matrices, trace=["inconsistent combination: " + " + ".join(r.witness)])
    matrices["particular"] = r.particular
    return Report("aw-correct", "Affine", values={"dimension": r.dimension}, matrices=matrices)


def cmd_orthogonalize(ctx: Context) -> Report:
    _, m, ideal = ctx.restricted()
    pairs = orthogonalize(m)
    if ideal is not None:
        vectors = [format_vector(ideal.basis @ v) for v, _ in pairs]
    else:
        vectors = [format_vector(v) for v, _ in pairs]
    return Report("orthogonalize", "Computed",
                  values={"vectors": vectors, "norms": [n for _, n in pairs]})


def cmd_adjoint(ctx: Context) -> Report:
    _, m, ideal = ctx.restricted()
    ops = ctx.args.family.split(",") if ctx.args.family else []
    if not ops:
        raise UsageError("adjoint needs --family OP[,OP...]")
    matrices = {}
    for tok in ops:
        a = ctx.operator(tok, ideal)
        matrices[tok.strip()] = a
        matrices[tok.strip() + "*"] = m.adjoint(a)
    return Report("adjoint", "Computed", matrices=matrices)


HANDLERS = {
    "check": cmd_check, "info": cmd_info, "ricci": cmd_ricci, "einstein": cmd_einstein,
    "derivations": cmd_derivations, "nilradical": cmd_nilradical, "nilsoliton": cmd_nilsoliton,
    "gen-nilsoliton": cmd_gen_nilsoliton, "standard": cmd_standard, "iwasawa": cmd_iwasawa,
    "aw-correct": cmd_aw_correct, "orthogonalize": cmd_orthogonalize, "adjoint": cmd_adjoint,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="solvlie", description="Exact computations on metric Lie algebras.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file", help="a .lie file, or the name of a bundled example")
    p.add_argument("-m", dest="metric", metavar="NAME", help="metric (or algebra) to use")
    p.add_argument("--ideal", metavar="NAME", help="restrict to this subspace")
    p.add_argument("--family", metavar="LIST", help="operators such as adE4,adE5")
    p.add_argument("--decomp", metavar="GNAME,ANAME", help="subspaces of a decomposition")
    p.add_argument("--candidate-H", dest="candidate_H", metavar="VEC", help="comma-separated rationals")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.add_argument("--oracle", action="store_true", help="cross-check Ricci with the Koszul formula")
    return p


def run(command: str, ws: Workspace, args) -> Report:
    ctx = Context(ws, args)
    try:
        report = HANDLERS[command](ctx)
    except (UnsupportedError, NotSolvableError, NotNilpotentError) as e:
        report = Report(command, "Unsupported", trace=[str(e)])
    report.exit = exit_code(command, report.verdict)
    if report.anchor is None:
        report.anchor = ws.title
    return report


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ws = load(args.file)
        report = run(args.command, ws, args)
    except (SolvlieError, FileNotFoundError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(report.to_json() if args.json else report.to_text())
    return report.exit


if __name__ == "__main__":
    sys.exit(main())
