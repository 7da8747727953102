"""Command-line front end.

    cauchy-mds encode --p P --k K --r R --out DIR FILE
    cauchy-mds decode --out FILE SHARD...
    cauchy-mds mds-check P K R
    cauchy-mds complexity --r R --p-max N --csv FILE

Exit codes: 0 success, 1 usage, 2 data or IO error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .codec import CodeParams, ErasureError, mds_check
from .metrics import normalized_curves, write_csv
from .shards import ShardError, decode_files, encode_file

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


def _params(p: int, k: int, r: int) -> CodeParams:
    try:
        return CodeParams(p, k, r)
    except ValueError as exc:
        raise UsageError(f"invalid code parameters: {exc}") from exc


def cmd_encode(args) -> int:
    params = _params(args.p, args.k, args.r)
    paths = encode_file(args.file, params, args.out)
    for path in paths:
        print(path)
    return EXIT_OK


def cmd_decode(args) -> int:
    decode_files(args.shards, args.out)
    return EXIT_OK


def cmd_mds_check(args) -> int:
    params = _params(args.p, args.k, args.r)
    ok = mds_check(params)
    print(f"C({params.k},{params.r},{params.p}): {'MDS' if ok else 'NOT MDS'}")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_complexity(args) -> int:
    try:
        rows = normalized_curves(args.r, p_max=args.p_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.csv == "-":
        write_csv(rows, sys.stdout)
    else:
        with open(args.csv, "w", newline="") as fh:
            write_csv(rows, fh)
    failed = [row for row in rows if not row.dominates or row.proposed_measured > row.proposed_formula]
    for row in failed:
        print(f"check failed at p={row.p} ({row.mode})", file=sys.stderr)
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cauchy-mds", description="Cauchy MDS array codes over binary cyclic rings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    enc = sub.add_parser("encode", help="split a file into k+r shards")
    enc.add_argument("--p", type=int, required=True)
    enc.add_argument("--k", type=int, required=True)
    enc.add_argument("--r", type=int, required=True)
    enc.add_argument("--out", type=Path, required=True, help="output directory")
    enc.add_argument("file", type=Path)
    enc.set_defaults(func=cmd_encode)

    dec = sub.add_parser("decode", help="rebuild a file from at least k shards")
    dec.add_argument("--out", type=Path, required=True)
    dec.add_argument("shards", type=Path, nargs="+")
    dec.set_defaults(func=cmd_decode)

    chk = sub.add_parser("mds-check", help="verify the MDS property of C(k,r,p)")
    chk.add_argument("p", type=int)
    chk.add_argument("k", type=int)
    chk.add_argument("r", type=int)
    chk.set_defaults(func=cmd_mds_check)

    cx = sub.add_parser("complexity", help="normalized XOR complexity curves as CSV")
    cx.add_argument("--r", type=int, required=True)
    cx.add_argument("--p-max", type=int, default=101)
    cx.add_argument("--csv", required=True, help="output path, or - for stdout")
    cx.set_defaults(func=cmd_complexity)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cauchy-mds: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ShardError, ErasureError, OSError) as exc:
        print(f"cauchy-mds: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
