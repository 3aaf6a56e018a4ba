"""Command-line front end.

Exit codes: 0 success, 2 usage or input error, 3 enumeration guard
exceeded, 4 ``--verify`` found the historical and oracle results differ.
Nothing is written to stdout when a command fails.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Optional, TextIO

from . import oracle, render
from .binomial import bhaskara_ncr, bhaskara_steps, lagakriya_table, meru
from .core import parse_sequence
from .counting import (
    adhvayoga,
    sankhya_kedara_lagakriya,
    sankhya_kedara_uddishta,
    sankhya_pingala,
)
from .errors import ChandasError, GuardExceeded, InvalidArgs
from .indexing import BaseBNumeral, nashtam, rank_base_b, uddishtam_kedara, uddishtam_pingala
from .pataka import pataka, pataka_column
from .prastara import DEFAULT_GUARD, kedara_prastara, pingala_prastara, prastara_stream

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_DISAGREE = 4


class UsageError(Exception):
    pass


class _Disagree(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class Result:
    """Rendered output plus the (historical, oracle) pair checked by --verify."""

    def __init__(self, text: str, historical=None, reference: Optional[Callable] = None):
        self.text = text
        self.historical = historical
        self.reference = reference


def _add_globals(parser, suppress):
    def d(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--format", choices=["text", "json", "csv"], default=d("text"))
    parser.add_argument("--notation", choices=["gl", "binary"], default=d("gl"))
    parser.add_argument("--guard", type=int, default=d(DEFAULT_GUARD),
                        help="largest n materialized (default %(default)s)")
    parser.add_argument("--verify", action="store_true", default=d(False),
                        help="also compute with the modern oracle and compare")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chandas", description=__doc__.splitlines()[0])
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help):
        p = sub.add_parser(name, help=help)
        _add_globals(p, suppress=True)
        return p

    p = cmd("prastara", "list every row of n syllables")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["pingala", "kedara"], default="pingala")
    p.add_argument("--stream", action="store_true", help="write rows lazily; ignores --guard")
    p.add_argument("--numbered", action="store_true", help="prefix text rows with their index")

    p = cmd("nashtam", "row for a 1-based index")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--row", type=int, required=True)

    p = cmd("uddishtam", "1-based index of a row")
    p.add_argument("--seq", required=True)
    p.add_argument("--method", choices=["pingala", "kedara"], default="pingala")

    p = cmd("rank", "1-based counting position of a base-B numeral")
    p.add_argument("--digits", required=True)
    p.add_argument("--base", type=int, required=True)

    p = cmd("lagakriya", "rows with 0..n laghus (nCr)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["kedara", "meru", "bhaskara"], default="meru")
    p.add_argument("--table", action="store_true", help="render the whole construction")

    p = cmd("ncr", "one binomial coefficient")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    p = cmd("sankhya", "number of rows, 2^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["pingala", "lagakriya", "uddishta"], default="pingala")
    p.add_argument("--trace", action="store_true")

    p = cmd("adhvayoga", "rows over all meters of 1..n syllables")
    p.add_argument("--n", type=int, required=True)

    p = cmd("pataka", "row positions grouped by laghu count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--column", type=int)

    return parser


def _scalar(args, fields: dict, value_key: str) -> str:
    if args.format == "json":
        return render.to_json(fields)
    if args.format == "csv":
        return render.to_csv([list(fields), list(fields.values())])
    return f"{fields[value_key]}\n"


def _cmd_prastara(args) -> Result:
    rows = (pingala_prastara if args.method == "pingala" else kedara_prastara)(args.n, args.guard)
    if args.format == "json":
        text = render.prastara_json(rows, args.notation)
    elif args.format == "csv":
        text = render.to_csv(render.prastara_csv_row(r, args.notation) for r in rows)
    else:
        text = render.prastara_text(rows, args.notation, args.numbered)
    return Result(text, list(rows.rows), lambda: list(oracle.counting_rows(args.n)))


def _stream_prastara(args, out: TextIO) -> None:
    # Rows are written as produced; --verify checks each against the oracle.
    if args.n < 1:
        raise InvalidArgs(f"n must be >= 1, got {args.n}")
    fmt = args.format
    if fmt == "json":
        out.write("[")
    for k, seq in enumerate(prastara_stream(args.n), start=1):
        if args.verify and seq != oracle.counting_row(k, args.n):
            out.flush()
            raise _Disagree(f"row {k}: historical={seq} oracle={oracle.counting_row(k, args.n)}")
        if fmt == "json":
            out.write(("" if k == 1 else ", ") + f'"{seq.render(args.notation)}"')
        elif fmt == "csv":
            out.write(",".join(render.prastara_csv_row(seq, args.notation)) + "\n")
        else:
            out.write(render.prastara_line(k, seq, args.notation, args.numbered) + "\n")
    if fmt == "json":
        out.write("]\n")


def _report_agree(args, stderr: TextIO) -> None:
    if args.verify:
        stderr.write("verify: agree\n")


def _cmd_nashtam(args) -> Result:
    seq = nashtam(args.row, args.n)
    fields = {"n": args.n, "row": args.row, "sequence": seq.render(args.notation)}
    return Result(_scalar(args, fields, "sequence"), seq,
                  lambda: oracle.counting_row(args.row, args.n))


def _cmd_uddishtam(args) -> Result:
    seq = parse_sequence(args.seq, args.notation)
    fn = uddishtam_pingala if args.method == "pingala" else uddishtam_kedara
    k = fn(seq)
    fields = {"sequence": seq.render(args.notation), "method": args.method, "row": k}
    return Result(_scalar(args, fields, "row"), k, lambda: oracle.counting_row_index(seq))


def _cmd_rank(args) -> Result:
    num = BaseBNumeral.parse(args.digits, args.base)
    k = rank_base_b(num)
    fields = {"digits": str(num), "base": num.base, "rank": k}
    return Result(_scalar(args, fields, "rank"), k,
                  lambda: oracle.numeral_value(num.digits, num.base) + 1)


def _cmd_lagakriya(args) -> Result:
    n = args.n
    if n < 1:
        raise InvalidArgs(f"n must be >= 1, got {n}")
    if args.method == "kedara":
        table = lagakriya_table(n)
        coeffs = table.terminals()
        grid, pretty = [list(r) for r in table.rows], render.lagakriya_text(table)
    elif args.method == "meru":
        pyramid = meru(n + 1)
        coeffs = list(pyramid.rows[n])
        grid, pretty = [list(r) for r in pyramid.rows], render.meru_text(pyramid)
    else:
        coeffs = [bhaskara_ncr(n, r) for r in range(n + 1)]
        steps = bhaskara_steps(n, n)
        grid, pretty = [coeffs], render.bhaskara_text(n, steps)

    if args.table:
        if args.format == "json":
            text = render.to_json(grid)
        elif args.format == "csv":
            text = render.to_csv(grid)
        else:
            text = pretty
    elif args.format == "json":
        text = render.to_json(coeffs)
    elif args.format == "csv":
        text = render.to_csv([["r", "count"]] + [[r, c] for r, c in enumerate(coeffs)])
    else:
        text = " ".join(map(str, coeffs)) + "\n"
    return Result(text, coeffs, lambda: [oracle.ncr_factorial(n, r) for r in range(n + 1)])


def _cmd_ncr(args) -> Result:
    value = bhaskara_ncr(args.n, args.r)
    fields = {"n": args.n, "r": args.r, "value": value}
    return Result(_scalar(args, fields, "value"), value,
                  lambda: oracle.ncr_factorial(args.n, args.r))


def _cmd_sankhya(args) -> Result:
    n, method = args.n, args.method
    trace = None
    if method == "pingala":
        trace = sankhya_pingala(n)
        value = trace.result
    elif method == "lagakriya":
        value = sankhya_kedara_lagakriya(n)
    else:
        value = sankhya_kedara_uddishta(n)

    fields = {"n": n, "method": method, "result": value}
    if args.trace and trace is not None:
        if args.format == "json":
            fields["tokens"] = [int(t) for t in trace.tokens]
            fields["replay"] = list(trace.replay)
            text = render.to_json(fields)
        elif args.format == "csv":
            rows = [["step", "value", "token", "replay"]]
            replay = list(reversed(trace.replay))
            for i, (v, t) in enumerate(trace.reduction):
                rows.append([i + 1, v, int(t), replay[i]])
            text = render.to_csv(rows)
        else:
            text = render.sankhya_trace_text(trace)
    else:
        text = _scalar(args, fields, "result")
    return Result(text, value, lambda: oracle.pow2_doubling(n))


def _cmd_adhvayoga(args) -> Result:
    value = adhvayoga(args.n)
    fields = {"n": args.n, "result": value}
    return Result(_scalar(args, fields, "result"), value, lambda: oracle.geometric_sum(args.n))


def _cmd_pataka(args) -> Result:
    n = args.n
    if args.column is not None:
        col = pataka_column(n, args.column, args.guard)
        if args.format == "json":
            text = render.to_json(col)
        elif args.format == "csv":
            text = render.to_csv([[v] for v in col])
        else:
            text = " ".join(map(str, col)) + "\n"
        return Result(text, sorted(col),
                      lambda: oracle.brute_positions(n, args.column))
    matrix = pataka(n, args.guard)
    if args.format == "json":
        text = render.to_json([list(c) for c in matrix.columns])
    elif args.format == "csv":
        text = render.to_csv(render.pataka_rows(matrix))
    else:
        text = render.pataka_text(matrix)
    return Result(text, [sorted(c) for c in matrix.columns],
                  lambda: [oracle.brute_positions(n, r) for r in range(n + 1)])


COMMANDS = {
    "prastara": _cmd_prastara,
    "nashtam": _cmd_nashtam,
    "uddishtam": _cmd_uddishtam,
    "rank": _cmd_rank,
    "lagakriya": _cmd_lagakriya,
    "ncr": _cmd_ncr,
    "sankhya": _cmd_sankhya,
    "adhvayoga": _cmd_adhvayoga,
    "pataka": _cmd_pataka,
}


def run(argv=None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    try:
        if args.command == "prastara" and args.stream:
            _stream_prastara(args, stdout)
            _report_agree(args, stderr)
            return EXIT_OK
        result = COMMANDS[args.command](args)
        if args.verify:
            expected = result.reference()
            if result.historical != expected:
                stderr.write(f"verify: disagree: historical={result.historical} "
                             f"oracle={expected}\n")
                return EXIT_DISAGREE
    except _Disagree as exc:
        stderr.write(f"verify: disagree: {exc}\n")
        return EXIT_DISAGREE
    except GuardExceeded as exc:
        stderr.write(f"chandas: {exc}\n")
        return EXIT_GUARD
    except ChandasError as exc:
        stderr.write(f"chandas: {exc}\n")
        return EXIT_USAGE

    stdout.write(result.text)
    _report_agree(args, stderr)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
