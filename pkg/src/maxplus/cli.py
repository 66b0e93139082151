"""Command-line calculator over ``.mpx`` matrix files.

    maxplus add A.mpx B.mpx
    maxplus mul A.mpx B.mpx
    maxplus smul --scalar -4 A.mpx
    maxplus pow --k 9 A.mpx
    maxplus evolve --k 10 A.mpx X0.mpx [--trajectory]

Any input path may be ``-`` for standard input.  Results go to standard
output (or ``-o PATH``), diagnostics to standard error.  Exit status is 0
on success, 1 on a computation or input error and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import sys

from .errors import MaxPlusError
from .io import format_matrix, parse_matrix, parse_scalar
from .matrix import mat_add, mat_mul, mat_pow, scalar_mul
from .recurrence import RecurrenceProblem, evolve, trajectory


def _non_negative_int(text):
    try:
        k = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if k < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {k}")
    return k


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxplus",
        description="Max-plus matrix calculator. Matrices are text files, "
                    "one row per line, 'E' for epsilon.",
    )
    parser.add_argument("-o", "--output", default="-",
                        help="write the result here instead of standard output")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("add", help="entrywise sum A (+) B")
    p.add_argument("a", metavar="A")
    p.add_argument("b", metavar="B")

    p = sub.add_parser("mul", help="matrix product A (x) B")
    p.add_argument("a", metavar="A")
    p.add_argument("b", metavar="B")

    p = sub.add_parser("smul", help="scalar product alpha (x) A")
    p.add_argument("--scalar", required=True, help="an integer or E")
    p.add_argument("a", metavar="A")

    p = sub.add_parser("pow", help="k-th power of a square matrix")
    p.add_argument("--k", required=True, type=_non_negative_int)
    p.add_argument("a", metavar="A")

    p = sub.add_parser("evolve", help="state x(k) of x(k+1) = A (x) x(k)")
    p.add_argument("--k", required=True, type=_non_negative_int)
    p.add_argument("--trajectory", action="store_true",
                   help="print x(0), ..., x(k) separated by blank lines")
    p.add_argument("a", metavar="A")
    p.add_argument("x0", metavar="X0")
    return parser


def _reader(stdin):
    cache = {}

    def read(path):
        if path == "-":
            if "-" not in cache:
                cache["-"] = stdin.read()
            text = cache["-"]
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return parse_matrix(text)

    return read


def compute(args, stdin=None) -> str:
    """Run the parsed invocation and return the output document."""
    read = _reader(stdin if stdin is not None else sys.stdin)
    cmd = args.command
    if cmd == "add":
        return format_matrix(mat_add(read(args.a), read(args.b)))
    if cmd == "mul":
        return format_matrix(mat_mul(read(args.a), read(args.b)))
    if cmd == "smul":
        alpha = parse_scalar(args.scalar)
        return format_matrix(scalar_mul(alpha, read(args.a)))
    if cmd == "pow":
        return format_matrix(mat_pow(read(args.a), args.k))
    if cmd == "evolve":
        problem = RecurrenceProblem(read(args.a), read(args.x0), args.k)
        if args.trajectory:
            return "\n".join(format_matrix(x) for x in trajectory(problem))
        return format_matrix(evolve(problem))
    raise AssertionError(cmd)


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = compute(args, stdin)
        if args.output == "-":
            stdout.write(out)
        else:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(out)
    except (MaxPlusError, OSError) as exc:
        print(f"maxplus: error: {exc}", file=stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
