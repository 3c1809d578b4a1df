"""Command line front end.

Exit codes: 0 verified / success, 1 an identity failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import fschur, lattice, shapes, suite, yangbaxter
from .ring import from_json, render_canonical, to_json
from .shapes import Partition

OK, FALSIFIED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_parts(text: str) -> tuple:
    try:
        parts = tuple(int(p) for p in text.split(",") if p.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    return parts


def parse_values(text: str) -> list:
    from fractions import Fraction

    try:
        return [Fraction(v) for v in text.split(",") if v.strip()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def _partition(parts, n: int, flag: str = "--lambda") -> Partition:
    if n < 1:
        raise UsageError("--n must be positive")
    try:
        return Partition.of(parts, n)
    except shapes.ShapeError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _emit(out, lines):
    for line in lines:
        print(line, file=out)


def _verdict_line(passed: bool, text: str) -> str:
    return f"{'PASS' if passed else 'FAIL'} {text}"


# -- subcommands --------------------------------------------------------------------------


def cmd_enumerate(args, out):
    lam = _partition(args.lam, args.n)
    states = lattice.enumerate_states(lam, "via_gt" if args.strategy == "gt" else "backtrack")
    if args.format == "json":
        print(json.dumps([lattice.state_to_json(s) for s in states]), file=out)
    else:
        for k, s in enumerate(states, start=1):
            print(f"# state {k}/{len(states)}", file=out)
            print(lattice.render_state(s), file=out)
    return OK


def cmd_z(args, out):
    lam = _partition(args.lam, args.n)
    z = lattice.partition_function(lam, strategy="via_gt" if args.strategy == "gt" else "backtrack")
    print(json.dumps(to_json(z)) if args.json else render_canonical(z), file=out)
    return OK


def cmd_schur(args, out):
    lam = _partition(args.lam, args.n)
    try:
        s = fschur.factorial_schur(lam, args.n, args.na)
    except fschur.SchurError as exc:
        raise UsageError(str(exc)) from None
    print(json.dumps(to_json(s)) if args.json else render_canonical(s), file=out)
    return OK


def cmd_bijection(args, out):
    lam = _partition(args.lam, args.n)
    records = []
    for g in shapes.enumerate_gt(lam):
        records.append((g, shapes.gt_to_staircase(g), lattice.gt_to_state(g, lam)))
    if args.json:
        for g, st, s in records:
            print(json.dumps({"gt": shapes.gt_to_json(g), "staircase": shapes.staircase_to_json(st),
                              "state": lattice.state_to_json(s)}), file=out)
        return OK
    for k, (g, st, s) in enumerate(records, start=1):
        print(f"# object {k}/{len(records)}", file=out)
        print("GT pattern:", file=out)
        print(shapes.render_gt(g), file=out)
        print("staircase:", file=out)
        print(shapes.render_staircase(st), file=out)
        print("ice state:", file=out)
        print(lattice.render_state(s), file=out)
    return OK


def cmd_expand(args, out):
    if args.poly:
        with open(args.poly) as fh:
            f = from_json(json.load(fh))
        n = args.n
        if args.degree is None:
            raise UsageError("--degree is required with --poly")
        d = args.degree
    else:
        if args.lam is None:
            raise UsageError("give --lambda (expands x^-delta Z_lambda) or --poly FILE")
        lam = _partition(args.lam, args.n)
        z = lattice.partition_function(lam)
        f = z * lattice.x_delta(z.space) ** -1
        n = lam.n
        d = lam.size if args.degree is None else args.degree
    avals = args.a if args.a else fschur.interpolation_a_values(max(n + d, f.space.n_a))
    try:
        res = fschur.expand_in_factorial_basis(f, n, d, avals)
    except fschur.SchurError as exc:
        raise UsageError(str(exc)) from None
    nonzero = res.nonzero()
    if args.json:
        print(json.dumps({"a": [str(v) for v in res.a_values],
                          "coefficients": [{"mu": list(mu.parts), "c": str(c)} for mu, c in nonzero.items()],
                          "reconstructs": res.reconstructs}), file=out)
    else:
        print("a = " + ",".join(str(v) for v in res.a_values), file=out)
        for mu, c in nonzero.items():
            print(f"c{mu} = {c}", file=out)
        if not nonzero:
            print("all coefficients vanish", file=out)
        print(_verdict_line(res.reconstructs, "reconstruction at every a_mu point"), file=out)
    return OK if res.reconstructs else FALSIFIED


def _report(records, args, out, name):
    report = suite.Report(name, records)
    if args.json:
        _emit(out, report.json_lines())
    else:
        for r in records:
            print(_verdict_line(r.passed, f"{r.name} ({r.elapsed:.3f}s)"), file=out)
        print(_verdict_line(report.passed, f"{name}: {len(records) - len(report.failures())}/{len(records)} checks"), file=out)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(report.json_lines()) + "\n")
    return OK if report.passed else FALSIFIED


def cmd_verify_main(args, out):
    lam = _partition(args.lam, args.n)
    res = fschur.verify_main_theorem(lam)
    if args.json:
        print(json.dumps(res.certificate()), file=out)
    else:
        print(_verdict_line(res.passed, f"main theorem for lambda={lam}"), file=out)
        print(f"  Z*a^(lam+rho)' = {render_canonical(res.lhs)}", file=out)
        print(f"  x^delta*s_lam  = {render_canonical(res.rhs)}", file=out)
    return OK if res.passed else FALSIFIED


def cmd_verify_yang_baxter(args, out):
    cases = None
    if args.case is not None:
        try:
            cases = [yangbaxter.BoundarySextuple.from_mask(args.case)]
        except ValueError as exc:
            raise UsageError(f"--case: {exc}") from None
    results = yangbaxter.verify_star_triangle(cases)
    for r in results:
        if args.json:
            print(json.dumps(r.to_json()), file=out)
        else:
            print(_verdict_line(r.passed, f"case {r.sextuple.mask:2d} [{r.sextuple.label()}]: {render_canonical(r.lhs)}"), file=out)
    return OK if all(r.passed for r in results) else FALSIFIED


def cmd_verify_vanishing(args, out):
    lam = _partition(args.lam, args.n)
    if args.mu is None:
        raise UsageError("--mu is required")
    mu = _partition(args.mu, args.n, "--mu")
    targets = ("z", "schur") if args.target == "both" else (args.target,)
    ok = True
    for t in targets:
        v = fschur.vanishing_check(lam, mu, t)
        ok &= v.passed
        if args.json:
            print(json.dumps({"target": t, "lambda": list(lam.parts), "mu": list(mu.parts),
                              "contained": v.contained, "value": render_canonical(v.value),
                              "expected": None if v.expected is None else render_canonical(v.expected),
                              "verdict": "PASS" if v.passed else "FAIL"}), file=out)
        else:
            print(_verdict_line(v.passed, f"{t}: lambda={lam} at a_mu, mu={mu}: {render_canonical(v.value)}"), file=out)
    return OK if ok else FALSIFIED


def cmd_verify_symmetry(args, out):
    lam = _partition(args.lam, args.n)
    return _report([suite.check_symmetry(lam)], args, out, f"symmetry{lam}")


def cmd_verify_all(args, out):
    mutation = None
    if args.mutate:
        kind, _, key = args.mutate.partition(":")
        if (kind, key) not in suite.all_mutations():
            raise UsageError(f"--mutate must be one of {['%s:%s' % m for m in suite.all_mutations()]}")
        mutation = (kind, key)
    report = suite.verify_all(args.n_max, args.lambda_max, mutation)
    return _report(report.records, args, out, report.suite)


# -- parser ---------------------------------------------------------------------------------


def _add_shape(p, required=True):
    p.add_argument("--n", type=int, required=required, help="number of rows / parts")
    p.add_argument("--lambda", dest="lam", type=parse_parts, required=required,
                   help="comma-separated parts, padded with zeros up to --n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="squareice", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list ice states with the lambda-boundary condition")
    _add_shape(p)
    p.add_argument("--format", choices=("json", "ascii"), default="ascii")
    p.add_argument("--strategy", choices=("gt", "backtrack"), default="gt")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("z", help="partition function Z_lambda(x|a)")
    _add_shape(p)
    p.add_argument("--strategy", choices=("gt", "backtrack"), default="gt")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_z)

    p = sub.add_parser("schur", help="factorial Schur function s_lambda(x|a)")
    _add_shape(p)
    p.add_argument("--na", type=int, default=None, help="number of a-variables (default n + lambda_1)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("bijection", help="GT pattern / staircase / ice state triples")
    _add_shape(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("expand", help="expand x^-delta Z_lambda (or a JSON polynomial) in factorial Schur functions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_parts)
    p.add_argument("--poly", help="JSON polynomial file")
    p.add_argument("--degree", type=int)
    p.add_argument("--a", type=parse_values, help="distinct rationals, e.g. 1,2,5,11")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_expand)

    verify = sub.add_parser("verify", help="check an identity")
    vsub = verify.add_subparsers(dest="which", required=True)

    p = vsub.add_parser("main", help="Z_lambda * a^(lambda+rho)' == x^delta * s_lambda")
    _add_shape(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_main)

    p = vsub.add_parser("yang-baxter", help="star-triangle identity over the 20 boundary conditions")
    p.add_argument("--case", type=int, help="6-bit mask, bit k = k-th of alpha..zeta")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_yang_baxter)

    p = vsub.add_parser("vanishing", help="evaluate at x = a_mu")
    _add_shape(p)
    p.add_argument("--mu", type=parse_parts)
    p.add_argument("--target", choices=("z", "schur", "both"), default="both")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_vanishing)

    p = vsub.add_parser("symmetry", help="x^-delta Z_lambda is symmetric")
    _add_shape(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify_symmetry)

    p = vsub.add_parser("all", help="full verification suite")
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--lambda-max", type=int, default=3)
    p.add_argument("--mutate", help="negative control, e.g. rect:NW or cross:SW_SE")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="also write JSON-lines report here")
    p.set_defaults(func=cmd_verify_all)
    return parser


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(err)
        print(f"error: {exc}", file=err)
        return USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
