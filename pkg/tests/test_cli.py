import io
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gnumbers import GNum
from gnumbers._golden import BATCH_CASE, GOLDEN
from gnumbers.acceptance import run_cli
from gnumbers.cli import DomainError, Evaluator, ParseError, parse, unparse
from gnumbers.cli.formatting import fmt_gnum, fmt_scalar
from gnumbers.cli.lexer import tokenize
from gnumbers.cli.main import main
from gnumbers.cli.parser import BinOp, Call, Name, Neg, Num, Pow

from helpers import close


def evaluate(text, **kw):
    return Evaluator(**kw).run(parse(text)).value


# -- lexer and parser -------------------------------------------------------------------

def test_tokens():
    kinds = [t.kind for t in tokenize("2.5e-3*a + 3i")]
    assert kinds == ["NUMBER", "OP", "IDENT", "OP", "IMAG", "EOF"]
    assert [t.text for t in tokenize("2·a × b − 1")][:-1] == ["2", "*", "a", "*", "b", "-", "1"]


def test_precedence():
    assert parse("1 + 2 * a") == BinOp("+", Num(1.0, "1"), BinOp("*", Num(2.0, "2"), Name("a")))
    assert parse("-a^2") == Neg(Pow(Name("a"), 2))
    assert parse("a - b - e") == BinOp("-", BinOp("-", Name("a"), Name("b")), Name("e"))
    assert parse("f(a, b)") == Call("f", (Name("a"), Name("b")))


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse("a *")
    assert (info.value.line, info.value.column) == (1, 4)
    with pytest.raises(ParseError) as info:
        parse("a ^ 1.5")
    assert info.value.column == 5
    with pytest.raises(ParseError):
        parse("a $ b")


@pytest.mark.parametrize("text", [
    "a*b + b*a",
    "det(1 + a + b + 2*wedge(a,b))",
    "-(a + b)^2 - -e",
    "a - (b - e)",
    "(a*b)^-3",
    "let x = conj(e, a) / 2",
    "interpret(1 + e, G30)",
])
def test_unparse_fixed_point(text):
    once = unparse(parse(text))
    assert unparse(parse(once)) == once
    assert parse(once) == parse(text) or "let" in text


_atoms = st.sampled_from(["a", "b", "e", "2", "0.5", "3i"])


def _exprs():
    def extend(children):
        return st.one_of(
            st.tuples(children, st.sampled_from("+-*/"), children).map(lambda t: f"({t[0]} {t[1]} {t[2]})"),
            children.map(lambda c: f"-{c}"),
            st.tuples(children, st.integers(-3, 3)).map(lambda t: f"({t[0]})^{t[1]}"),
            st.tuples(children, children).map(lambda t: f"sym({t[0]}, {t[1]})"),
        )
    return st.recursive(_atoms, extend, max_leaves=8)


@settings(max_examples=200)
@given(_exprs())
def test_parse_print_parse(text):
    printed = unparse(parse(text))
    assert parse(printed) == parse(text)
    assert unparse(parse(printed)) == printed


# -- evaluation -----------------------------------------------------------------------------

def test_eval_examples():
    assert evaluate("a*b + b*a") == GNum(1, 0, 0, 1)
    assert evaluate("det(1 + a + b + 2*wedge(a,b))") == -1
    assert evaluate("conj(1+a+b+2*wedge(a,b), a)") == GNum(-2, 1, -4, 2)
    assert evaluate("e1*e2*e3").coords == (1j, 0, 0, 1j)


def test_domain_errors_name_subexpression():
    with pytest.raises(DomainError) as info:
        evaluate("1 + inverse(a)")
    assert info.value.kind == "SingularGNumber"
    assert unparse(info.value.expr) == "inverse(a)"
    for text, kind in [("nope", "UnknownName"), ("nope(a)", "UnknownFunction"),
                       ("det(a, b)", "TypeError"), ("nilpotent(1, 1, 1)", "NotNilpotent"),
                       ("interpret(a, G99)", "TypeError"), ("vec(1, 2, i)", "TypeError")]:
        with pytest.raises(DomainError) as info:
            evaluate(text)
        assert info.value.kind == kind, text


def test_let_bindings():
    ev = Evaluator()
    ev.run(parse("let h = -ba + b - 2*a + ab"))
    assert ev.run(parse("h*h")).value == GNum(-1, 0, 0, -1)
    with pytest.raises(DomainError):
        ev.run(parse("let e = 1"))
    with pytest.raises(DomainError):
        ev.run(parse("let det = 1"))


def test_function_coverage():
    for text in ["rev(ab)", "inv(a)", "star(e)", "odd(1+a)", "even(1+a)", "tr(e)", "sym(a,b)",
                 "skew(a,b)", "dot(a,b)", "classify(e)", "euler(2+e)", "eig(f)", "spectral(e)",
                 "eigenpotents(e)", "matrix(a)", "idempotent(1, 0, 1)", "regrade(e)", "canon(ab)",
                 "isnil(a)", "isidem(ab)", "charpoly(e)", "exp(f, pi)", "pauli(2)", "adj(e2)",
                 "hermitian(0, 0, 0, 1)", "sdot(e, f)", "cross(e, fe)", "triple(e, fe, f)",
                 "clifford(interpret(e, G30), interpret(f, G30))", "uninterpret(interpret(e, G12))",
                 "rebuild(euler(2+e))", "sandwich(e)", "scalar(2+e)", "vector(2+e)"]:
        evaluate(text)


# -- formatting ---------------------------------------------------------------------------

def test_scalar_formatting():
    assert fmt_scalar(0.1 + 0.2) == "0.3"
    assert fmt_scalar(2 - 3j) == "2-3i"
    assert fmt_scalar(1e-17) == "0"
    assert fmt_scalar(-0.0) == "0"
    assert fmt_scalar(1 / 3) == "0.333333333333"


def test_printed_gnumbers_parse_back():
    for g in (GNum(0.5, -1, 2, -3e-5), GNum(1, 0, 0, 1)):
        for fmt in ("coords", "std"):
            assert close(evaluate(fmt_gnum(g, fmt)), g)
    z = evaluate("2i*a + (1+2i)*b")
    assert evaluate(fmt_gnum(z)) == z


# -- command line ------------------------------------------------------------------------

@pytest.mark.parametrize("argv, code, out, err", GOLDEN, ids=[" ".join(g[0]) for g in GOLDEN])
def test_golden(argv, code, out, err):
    assert run_cli(argv) == (code, out, err)


def test_batch_recovery():
    stdin, code, out, err = BATCH_CASE
    assert run_cli(["batch", "-"], stdin) == (code, out, err)
    assert err.count("\n") == 4 and out.count("\n") == 4


def test_batch_file(tmp_path):
    path = tmp_path / "input.gn"
    path.write_text("# comment\nlet x = a + b\nx^2\n", encoding="utf-8")
    assert run_cli(["batch", str(path)]) == (0, "x = 0·ba + 1·b + 1·a + 0·ab\n1·ba + 0·b + 0·a + 1·ab\n", "")


def test_batch_exit_code_is_first_failure():
    assert run_cli(["batch", "-"], "a +\ninverse(a)\n")[0] == 1
    assert run_cli(["batch", "-"], "inverse(a)\na +\n")[0] == 2


def test_json_output():
    code, out, _ = run_cli(["eval", "--json", "a"])
    assert code == 0 and json.loads(out) == {"g11": 0.0, "g12": 0.0, "g21": 1.0, "g22": 0.0}
    _, out, _ = run_cli(["eval", "--json", "--format", "std", "1+e"])
    assert json.loads(out) == {"a0": 1.0, "a1": 1.0, "a2": 0.0, "a3": 0.0}
    _, out, _ = run_cli(["eval", "--json", "spectral(3 + b)"])
    assert json.loads(out)["tag"] == "Jordan"


def test_tol_flag_controls_zero_snapping():
    assert run_cli(["eval", "1e-6"])[1] == "1e-06\n"
    assert run_cli(["eval", "--tol", "1e-5", "1e-6"])[1] == "0\n"


def test_repl_keeps_bindings():
    code, out, err = run_cli(["repl"], "let x = 2*a\nx + b\nbad(\n:quit\nnever\n")
    assert code == 0
    assert out == "x = 0·ba + 0·b + 2·a + 0·ab\n0·ba + 1·b + 2·a + 0·ab\n"
    assert err.startswith("parse error")


def test_nullcone_map_all_families():
    code, out, _ = run_cli(["nullcone-map"])
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("family,t,A11")
    assert len(lines) == 1 + 3 * 41
    for family in ("hyperbolic", "parabolic", "euclidean"):
        assert f"{family},0,0,0,1,0,0,1,0,0" in lines


def test_usage_error_is_parse_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"], stdout=io.StringIO(), stderr=io.StringIO())
    assert info.value.code == 1
