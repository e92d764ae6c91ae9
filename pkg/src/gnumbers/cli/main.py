"""``gnum`` command: eval, batch, repl, nullcone-map and selftest.

Exit codes: 0 success, 1 parse error, 2 domain error, 3 selftest failure.
"""
from __future__ import annotations

import argparse
import csv
import sys

from ..core import DEFAULT_TOL
from ..structure import NULLCONE_AXES, nullcone_rows
from .evaluator import DomainError, Evaluator
from .formatting import FORMATS, fmt_json, fmt_real, fmt_value
from .lexer import ParseError
from .parser import parse

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_SELFTEST = 0, 1, 2, 3

NULLCONE_TS = [k / 10 for k in range(-20, 21)]


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="coords",
                   help="how to render g-number results (default: coords)")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                   help=f"numerical tolerance (default: {DEFAULT_TOL:g})")


class _ArgParser(argparse.ArgumentParser):
    # a malformed command line is a parse error, not a domain error
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgParser(prog="gnum", description="Evaluate g-number expressions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one expression")
    p.add_argument("expr")
    _add_output_flags(p)

    p = sub.add_parser("batch", help="evaluate one expression per line of a file ('-' for stdin)")
    p.add_argument("file")
    _add_output_flags(p)

    p = sub.add_parser("repl", help="interactive read-eval-print loop")
    _add_output_flags(p)

    p = sub.add_parser("nullcone-map", help="CSV of the regraded null pair along a mapping family")
    p.add_argument("--family", choices=(*NULLCONE_AXES, "all"), default="all")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)

    sub.add_parser("selftest", help="run the acceptance checks")
    return parser


class _Session:
    """Evaluates statements and renders results; bindings persist for its lifetime."""

    def __init__(self, fmt: str, as_json: bool, tol: float, out, err):
        self.fmt, self.as_json, self.tol = fmt, as_json, tol
        self.evaluator = Evaluator(tol=tol)
        self.out, self.err = out, err

    def render(self, result) -> str:
        if self.as_json:
            text = fmt_json(result.value, self.fmt, self.tol)
        else:
            text = fmt_value(result.value, self.fmt, self.tol)
        return f"{result.binding} = {text}" if result.binding and not self.as_json else text

    def execute(self, text: str, where: str = "") -> int:
        prefix = f"{where}: " if where else ""
        try:
            node = parse(text)
            result = self.evaluator.run(node)
            rendered = self.render(result)
        except ParseError as exc:
            if where:
                found = f", found {exc.found}" if exc.found else ""
                self.err.write(f"{prefix}parse error at column {exc.column}: expected {exc.expected}{found}\n")
            else:
                self.err.write(f"parse error: {exc}\n")
            return EXIT_PARSE
        except DomainError as exc:
            self.err.write(f"{prefix}domain error: {exc}\n")
            return EXIT_DOMAIN
        self.out.write(rendered + "\n")
        return EXIT_OK


def _is_blank(line: str) -> bool:
    stripped = line.strip()
    return not stripped or stripped.startswith("#")


def cmd_batch(session: _Session, lines) -> int:
    status = EXIT_OK
    for lineno, line in enumerate(lines, start=1):
        if _is_blank(line):
            continue
        code = session.execute(line.rstrip("\n"), f"line {lineno}")
        if code and status == EXIT_OK:
            status = code
    return status


def cmd_repl(session: _Session, stdin, interactive: bool) -> int:
    while True:
        if interactive:
            session.out.write("gnum> ")
            session.out.flush()
        line = stdin.readline()
        if not line or line.strip() in (":q", ":quit", "quit", "exit"):
            break
        if not _is_blank(line):
            session.execute(line.rstrip("\n"))
    return EXIT_OK


def cmd_nullcone(family: str, tol: float, out) -> int:
    families = list(NULLCONE_AXES) if family == "all" else [family]
    header = ["t", "A11", "A12", "A21", "A22", "B11", "B12", "B21", "B22"]
    if family == "all":
        header.insert(0, "family")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for fam in families:
        for row in nullcone_rows(fam, NULLCONE_TS):
            scale = max(abs(x) for x in row[1:])
            cells = [format(row[0], "g")] + [fmt_real(x, scale, tol) for x in row[1:]]
            writer.writerow([fam, *cells] if family == "all" else cells)
    return EXIT_OK


def cmd_selftest(out, results=None) -> int:
    if results is None:
        from ..acceptance import run_all

        results = run_all(parallel=True)
    for r in results:
        out.write(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}\n")
    failed = sum(not r.passed for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return EXIT_SELFTEST if failed else EXIT_OK


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)

    if args.command == "nullcone-map":
        return cmd_nullcone(args.family, args.tol, stdout)
    if args.command == "selftest":
        return cmd_selftest(stdout)

    session = _Session(args.format, args.json, args.tol, stdout, stderr)
    if args.command == "eval":
        return session.execute(args.expr)
    if args.command == "batch":
        if args.file == "-":
            return cmd_batch(session, stdin)
        with open(args.file, encoding="utf-8") as fh:
            return cmd_batch(session, fh)
    return cmd_repl(session, stdin, interactive=stdin.isatty())


if __name__ == "__main__":
    sys.exit(main())
