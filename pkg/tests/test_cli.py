import json
import re
from fractions import Fraction

import pytest

from solvlie import ParseError, Report, corpus, load_corpus, parse_text
from solvlie.cli import COMMANDS, SUCCESS, build_parser, exit_code, main, run
from solvlie.report import render

EXPECTATIONS = [(name, e) for name in corpus() for e in load_corpus(name).expectations]
FLOAT = re.compile(r"(?<![\w\"/])-?\d+\.\d+")


def invoke(name, command, *flags):
    args = build_parser().parse_args([command, name, *flags])
    return run(command, load_corpus(name), args)


def as_text(v):
    if isinstance(v, bool):
        return str(v).lower()
    return str(render(v))


def test_corpus_contents():
    assert {"paper.lie", "heis3.lie", "aff1.lie", "abelian3.lie", "rank1_extension.lie"} <= set(corpus())
    ws = load_corpus("paper")
    assert len(ws.algebras) == 1 and len(ws.metrics) == 1
    assert ws.algebras["main"].dim == 5
    assert set(ws.subspaces) == {"nil", "h"}
    assert ws.subspaces["nil"].dim == 3 and ws.subspaces["h"].dim == 2


@pytest.mark.parametrize("name, exp", EXPECTATIONS,
                         ids=[f"{n}:{e.line}:{e.command}" for n, e in EXPECTATIONS])
def test_corpus_expectation(name, exp):
    r = invoke(name, exp.command, *exp.flags)
    assert r.verdict == exp.verdict
    assert r.exit == exit_code(exp.command, exp.verdict)
    for key, want in exp.values.items():
        got = r.lam if key == "lambda" else r.values[key]
        assert as_text(got) == want, key


@pytest.mark.parametrize("name, exp", EXPECTATIONS,
                         ids=[f"{n}:{e.line}:{e.command}" for n, e in EXPECTATIONS])
def test_json_is_exact_and_round_trips(name, exp):
    r = invoke(name, exp.command, *exp.flags)
    text = r.to_json()
    assert not FLOAT.search(text)
    assert all(not isinstance(x, float) for x in _leaves(json.loads(text)))
    back = Report.from_json(text)
    assert back.to_dict() == r.to_dict()
    assert (back.verdict, back.lam, back.exit) == (r.verdict, r.lam, r.exit)


def _leaves(x):
    if isinstance(x, dict):
        for v in x.values():
            yield from _leaves(v)
    elif isinstance(x, list):
        for v in x:
            yield from _leaves(v)
    else:
        yield x


@pytest.mark.parametrize("name, exp", [(n, e) for n, e in EXPECTATIONS if e.command in ("ricci", "einstein")],
                         ids=lambda x: getattr(x, "command", x))
def test_oracle_does_not_change_verdict(name, exp):
    plain = invoke(name, exp.command, *exp.flags)
    checked = invoke(name, exp.command, *exp.flags, "--oracle")
    assert plain.verdict == checked.verdict and plain.lam == checked.lam
    assert any("oracle" in t for t in checked.trace)


def test_exit_code_matches_success_sets():
    for cmd in COMMANDS:
        for v in SUCCESS[cmd]:
            assert exit_code(cmd, v) == 0
        assert exit_code(cmd, "Unsupported") == 3
        assert exit_code(cmd, "SomethingElse") == 1


def test_einstein_json(capsys):
    assert main(["einstein", "paper", "-m", "main", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["verdict"] == "Einstein" and out["lambda"] == "4096/175" and out["exit"] == 0
    assert out["matrices"]["ric_op"][0] == ["4096/175", "0", "0", "0", "0"]


def test_standard_text(capsys):
    assert main(["standard", "paper", "-m", "main"]) == 1
    out = capsys.readouterr().out
    assert "NoneExists" in out
    assert "nilradical restriction positive definite" in out
    assert "[e5,e4] = e1 + 7/12 e3" in out


def test_gen_nilsoliton_exit(capsys):
    assert main(["gen-nilsoliton", "paper", "-m", "main", "--ideal", "nil", "--family", "adE4,adE5", "--json"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["values"]["tau+1"] == out["values"]["tau-1"] == "NoRationalSolution"


def test_adjoint_command():
    r = invoke("paper", "adjoint", "-m", "main", "--ideal", "nil", "--family", "adE5")
    assert r.matrices["adE5"].tolist() == [[-1, 0, 0], [0, -1, 0], [1, 0, -2]]
    assert r.matrices["adE5*"].tolist() == [[Fraction(-11, 3), 0, Fraction(32, 7)], [0, -1, 0],
                                            [Fraction(-35, 36), 0, Fraction(2, 3)]]


def test_orthogonalize_command():
    r = invoke("paper", "orthogonalize", "-m", "main", "--ideal", "nil")
    assert r.values["vectors"][2] == "96 e1 + 71 e3"
    assert all(n > 0 for n in r.values["norms"])


def test_file_path(tmp_path, capsys):
    p = tmp_path / "t.lie"
    p.write_text("algebra a\n  salamon (0,0,e12)\nmetric id on a\n  g 1 1 1\n  g 2 2 1\n  g 3 3 1\n")
    assert main(["einstein", str(p)]) == 1
    assert "NotEinstein" in capsys.readouterr().out


@pytest.mark.parametrize("body, fragment", [
    ("algebra a\n  salamon (0,0)\nmetric m on a\n  g 1 2 1/0\n", "zero denominator at line 4"),
    ("algebra a\n  salamon (0,0,e12,e34)\n", "Jacobi"),
    ("metric m on b\n", "unknown algebra"),
    ("algebra a\n  salamon (0,0)\nmetric m on a\n  g 1 1 1\n", "degenerate"),
    ("algebra a\n  salamon (0,0)\nalgebra a\n  salamon (0,0)\n", "duplicate"),
    ("algebra a\n  dim 3\n  salamon (0,0)\n", "declares dim 3"),
])
def test_parse_errors(body, fragment, tmp_path, capsys):
    with pytest.raises(ParseError) as info:
        parse_text(body)
    assert fragment in str(info.value)
    p = tmp_path / "bad.lie"
    p.write_text(body)
    assert main(["check", str(p)]) == 2
    assert fragment in capsys.readouterr().err


def test_empty_file():
    ws = parse_text("")
    assert ws.is_empty()
    args = build_parser().parse_args(["check", "x"])
    assert run("check", ws, args).exit == 0


def test_usage_errors(capsys):
    assert main(["einstein", "paper", "-m", "nosuch"]) == 2
    assert main(["einstein", "no/such/file.lie"]) == 2
    assert main(["adjoint", "paper", "-m", "main", "--family", "adE9"]) == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate", "paper"])
    assert info.value.code == 2


def test_unsupported_exit(capsys):
    assert main(["nilsoliton", "aff1", "-m", "id"]) == 3


def test_anchor_is_file_title():
    r = invoke("paper", "einstein", "-m", "main")
    assert r.anchor and r.anchor.startswith("Five-dimensional")
