"""Command-line interface: ``fpfschur VERB [TARGET] [options]``.

Exit status is 0 on success, 1 when a verification check fails (or a tree
exceeds ``--depth-limit``), and 2 on malformed input or flags.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .atoms import atoms, fpf_reduced_word_count_dp, fpf_reduced_words
from .census import STATS, census
from .fpf import FpfInvolution, ell_fpf, fpf_shape, parse_fpf
from .partitions import key_str
from .perm import parse_permutation
from .polyring import fpf_schubert, schubert
from .symfunc import SymExpansion, expand_symmetric, to_monomial
from .transition import DEFAULT_DEPTH_LIMIT, DepthLimitExceeded, build_tree, expand_fpf_stanley
from .vexillary import classify_vexillary

CENSUS_STATS = sorted(STATS) + ["rhat"]


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _involution(text: str) -> FpfInvolution:
    try:
        return parse_fpf(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _warn_trunc(N: int | None, degree: int) -> None:
    if N is not None and N < degree:
        print(f"warning: truncation {N} is below the degree {degree}; "
              "identities are only guaranteed for N >= degree", file=sys.stderr)


def _truncated(exp: SymExpansion, N: int | None) -> SymExpansion:
    if N is None:
        return exp
    return SymExpansion(exp.basis, {k: v for k, v in exp.coeffs.items() if len(k) <= N},
                        exp.degree, N)


def cmd_expand(args) -> int:
    z = _involution(args.target)
    exp = expand_fpf_stanley(z, args.depth_limit)
    degree = ell_fpf(z)
    _warn_trunc(args.trunc, degree)
    if args.basis != "schurP":
        N = degree if args.trunc is None else args.trunc
        mono = to_monomial(exp, N)
        exp = mono if args.basis == "monomial" else expand_symmetric(mono, args.basis, N)
    exp = _truncated(exp, args.trunc)
    if args.format == "json":
        print(_dump(exp.to_json()))
    else:
        print(exp)
    return 0


def cmd_schubert(args) -> int:
    if args.perm:
        try:
            w = parse_permutation(args.target)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        poly = schubert(w)
    else:
        poly = fpf_schubert(_involution(args.target))
    if args.format == "json":
        print(_dump({"polynomial": str(poly), "terms": poly.to_json()}))
    else:
        print(poly)
    return 0


def cmd_words(args) -> int:
    z = _involution(args.target)
    if args.count:
        n = fpf_reduced_word_count_dp(z)
        print(_dump({"count": n}) if args.format == "json" else n)
        return 0
    out = sys.stdout
    if args.format == "json":
        out.write(_dump([list(a) for a in fpf_reduced_words(z)]) + "\n")
    else:
        for a in fpf_reduced_words(z):
            out.write(",".join(map(str, a)) + "\n")
    return 0


def cmd_atoms(args) -> int:
    z = _involution(args.target)
    result = atoms(z, args.mode)
    n = z.support_size()
    if args.format == "json":
        print(_dump({"atoms": [list(w.oneline(n)) for w in result.sorted()],
                     "beta_min": list(result.beta_min.oneline(n))}))
        return 0
    sep = "" if n < 10 else ","
    for w in result.sorted():
        print(sep.join(map(str, w.oneline(n))))
    return 0


def cmd_tree(args) -> int:
    tree = build_tree(_involution(args.target), args.depth_limit)
    if args.format == "json":
        print(_dump({"nodes": tree.nodes, "depth": tree.depth,
                     "leaves": {key_str(k): v for k, v in sorted(tree.leaf_shapes().items(), reverse=True)}}))
    else:
        print(tree.to_dot())
    return 0


def cmd_vexillary(args) -> int:
    z = _involution(args.target)
    res = classify_vexillary(z)
    out = {"vexillary": res.vexillary, "witness": list(res.witness) if res.witness else None}
    if res.vexillary:
        out["shape"] = list(fpf_shape(z))
    else:
        out["expansion"] = expand_fpf_stanley(z, args.depth_limit).to_json()["coeffs"]
    if args.format == "json":
        print(_dump(out))
    else:
        print(f"vexillary  {'yes' if res.vexillary else 'no'}")
        if res.vexillary:
            print(f"shape      {key_str(out['shape'])}")
        else:
            print(f"witness    {','.join(map(str, res.witness))}")
            print(f"expansion  {expand_fpf_stanley(z, args.depth_limit)}")
    return 0


def cmd_verify(args) -> int:
    options = {"samples": args.samples, "seed": args.seed, "threads": args.threads}
    if args.max is not None:
        options["max_n"] = args.max
    if args.target == "all":
        reports = checks.run_all(**options)
    elif args.target in checks.SUITES:
        reports = [checks.run_suite(args.target, **options)]
    else:
        raise UsageError(f"unknown suite {args.target!r}; choose from all, {', '.join(checks.SUITES)}")
    if args.format == "json":
        print(_dump([r.to_json() for r in reports]))
    else:
        for r in reports:
            print(r.line())
    return 0 if all(reports) else 1


def cmd_census(args) -> int:
    if args.target is not None:
        raise UsageError("census takes no positional target; use --stat")
    max_n = 8 if args.max is None else args.max
    rows = census(args.stat, max_n, args.threads)
    if args.format == "json":
        print(_dump({"stat": args.stat, "values": {str(n): v for n, v in rows}}))
    else:
        width = max([len(args.stat)] + [len(str(v)) for _, v in rows])
        print(f"{'n':>3}  {args.stat:>{width}}")
        for n, v in rows:
            print(f"{n:>3}  {v:>{width}}")
    return 0


COMMANDS = {
    "expand": (cmd_expand, "json", "Schur P-expansion of the FPF Stanley symmetric function"),
    "schubert": (cmd_schubert, "text", "FPF-involution (or ordinary, with --perm) Schubert polynomial"),
    "words": (cmd_words, "text", "FPF reduced words, one per line, or their number"),
    "atoms": (cmd_atoms, "text", "atoms in one-line notation"),
    "tree": (cmd_tree, "text", "Lascoux-Schutzenberger tree as Graphviz DOT"),
    "vexillary": (cmd_vexillary, "json", "FPF-vexillary test with witness"),
    "verify": (cmd_verify, "text", "run a cross-check suite (or 'all')"),
    "census": (cmd_census, "text", "counting sequences over F_n for even n"),
}


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fpfschur", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")
    for verb, (_, default_format, help_text) in COMMANDS.items():
        p = sub.add_parser(verb, help=help_text, description=help_text)
        if verb == "census":
            p.add_argument("target", nargs="?", help=argparse.SUPPRESS)
        elif verb == "verify":
            p.add_argument("target", metavar="SUITE", help="all, " + ", ".join(checks.SUITES))
        else:
            p.add_argument("target", help='involution literal such as "(1,4)(2,3)" or "4321"')
        p.add_argument("--format", choices=("json", "text"), default=default_format)
        p.add_argument("--depth-limit", type=_nonnegative, default=DEFAULT_DEPTH_LIMIT)
        if verb == "expand":
            p.add_argument("--basis", choices=("schurP", "schur", "monomial"), default="schurP")
            p.add_argument("--trunc", type=_nonnegative, default=None, help="number of variables N")
        if verb == "schubert":
            p.add_argument("--perm", action="store_true", help="treat TARGET as a permutation")
        if verb == "words":
            p.add_argument("--count", action="store_true")
        if verb == "atoms":
            p.add_argument("--mode", choices=("closure", "bruteforce"), default="closure")
        if verb in ("verify", "census"):
            p.add_argument("--max", type=_nonnegative, default=None, help="largest n")
            p.add_argument("--threads", type=_nonnegative, default=1)
        if verb == "verify":
            p.add_argument("--samples", type=_nonnegative, default=100)
            p.add_argument("--seed", type=int, default=0)
        if verb == "census":
            p.add_argument("--stat", choices=CENSUS_STATS, default="grassmannian")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = COMMANDS[args.verb][0]
    try:
        return handler(args)
    except (UsageError, ValueError) as exc:
        print(f"fpfschur: error: {exc}", file=sys.stderr)
        return 2
    except DepthLimitExceeded as exc:
        print(f"fpfschur: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
