"""Command-line entry point: ``ospkit verify|singular|gamma|act``.

Exit codes: 0 success, 1 a suite reported failures, 2 bad usage.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import TextIO

from .action import module, parse_label
from .intertwiner import Kind, restrict
from .linalg import det
from .singular import SPECS, annihilated_at, scan_singular, total_dimension
from .verify import resolve, run_suite, suite_names
from .weights import (
    NotAWeightError,
    SparseVector,
    format_weight,
    parse_weight,
)

DEFAULT_SEED = 0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ospkit", description="Exact computations on C[x] (x) C^{1|2n} over osp(1|2n).")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for any randomized step")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, need_deg=True):
        sp.add_argument("--n", type=_positive, required=True)
        if need_deg:
            sp.add_argument("--max-deg", type=_nonneg, required=True)
        sp.add_argument("--format", choices=("json", "pretty"), default="pretty")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help="one of: " + ", ".join(suite_names()))
    common(v)

    s = sub.add_parser("singular", help="vectors annihilated by a set of positive root vectors")
    common(s)
    s.add_argument("--spec", choices=sorted(SPECS), default="full")
    s.add_argument("--weight", help='comma-separated rationals, e.g. "1/2,-1/2"')

    g = sub.add_parser("gamma", help="intertwiner blocks")
    gsub = g.add_subparsers(dest="gamma_command", required=True, parser_class=_Parser)
    gm = gsub.add_parser("matrix", help="matrix of Gamma on one weight space")
    common(gm, need_deg=False)
    gm.add_argument("--which", choices=("w1", "w2"), required=True)
    gm.add_argument("--weight", required=True)

    a = sub.add_parser("act", help="apply a generator to a vector")
    common(a, need_deg=False)
    a.add_argument("--gen", required=True, help='label such as "X-1", "X+1+2", "X+2d1", "X1-2", "H1"')
    a.add_argument("--vector", required=True, help="JSON vector, @path to read a file, or - for stdin")
    return p


def _emit(out: TextIO, fmt: str, obj: dict, text: str) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, ensure_ascii=False, indent=2))
    else:
        out.write(text)
    out.write("\n")


def _cmd_verify(args, out: TextIO) -> int:
    name = resolve(args.suite)
    reports = run_suite(name, args.n, args.max_deg)
    passed = all(r.passed or r.info.get("not_applicable") for r in reports)
    obj = {"suite": name, "n": args.n, "max_deg": args.max_deg, "seed": args.seed,
           "passed": passed, "reports": [r.to_json() for r in reports]}
    text = "\n".join(r.pretty() for r in reports)
    _emit(out, args.format, obj, text)
    return 0 if passed else 1


def _cmd_singular(args, out: TextIO) -> int:
    spec = SPECS[args.spec]
    if args.weight:
        lam = parse_weight(args.weight, args.n)
        reports = [annihilated_at(spec, lam)]
    else:
        reports = scan_singular(args.n, args.max_deg, spec)
    total = total_dimension(reports)
    hits = [r for r in reports if r.dimension or args.weight]
    obj = {"n": args.n, "max_deg": args.max_deg, "spec": spec.name, "total_dimension": total,
           "weights_scanned": len(reports), "reports": [r.to_json() for r in hits]}
    lines = [f"spec={spec.name} n={args.n} max_deg={args.max_deg} weights={len(reports)}",
             f"total dimension: {total}"]
    for r in hits:
        lines.append(f"  {format_weight(r.weight)}: dimension {r.dimension}")
        for vec in r.basis:
            lines.append(f"    {vec.pretty()}")
    _emit(out, args.format, obj, "\n".join(lines))
    return 0


def _cmd_gamma(args, out: TextIO) -> int:
    kind = Kind.parse(args.which)
    lam = parse_weight(args.weight, args.n)
    block = restrict(kind, lam)
    m = block.matrix(kind)
    d = det(m)
    obj = {
        "n": args.n,
        "which": args.which,
        "weight": [str(c) for c in block.weight],
        "class": type(block.cls).__name__,
        "basis": [b.to_json() for b in block.basis],
        "matrix": m.to_json(),
        "det": d.to_json(),
    }
    lines = [f"Gamma^{args.which} on weight {format_weight(block.weight)} ({type(block.cls).__name__})",
             "basis: " + ", ".join(str(b) for b in block.basis),
             m.pretty(),
             f"det = {d.pretty()}"]
    _emit(out, args.format, obj, "\n".join(lines))
    return 0


def _read_vector(src: str) -> SparseVector:
    if src == "-":
        text = sys.stdin.read()
    elif src.startswith("@"):
        text = Path(src[1:]).read_text(encoding="utf-8")
    else:
        text = src
    try:
        return SparseVector.from_json(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ValueError(f"malformed vector JSON: {exc}") from None


def _cmd_act(args, out: TextIO) -> int:
    g = parse_label(args.gen, args.n)
    v = _read_vector(args.vector)
    for b in v.terms:
        if len(b.k) != args.n or not 0 <= b.slot <= 2 * args.n:
            raise ValueError(f"basis vector {b.to_json()} does not belong to n={args.n}")
    res = module(args.n).apply(g, v)
    obj = {"n": args.n, "generator": g.label, "terms": res.to_json()}
    _emit(out, args.format, obj, res.pretty())
    return 0


COMMANDS = {"verify": _cmd_verify, "singular": _cmd_singular, "gamma": _cmd_gamma, "act": _cmd_act}


def run(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        err.write(str(exc))
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    random.seed(args.seed)
    try:
        return COMMANDS[args.command](args, out)
    except (ValueError, NotAWeightError) as exc:
        err.write(f"ospkit: error: {exc}\n")
        return 2


def main() -> None:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    sys.exit(run())


if __name__ == "__main__":
    main()
