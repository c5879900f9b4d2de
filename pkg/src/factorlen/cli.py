"""Command-line front end.

Usage::

    factorlen residues --gens 6,9,20 --n 1000 --modulus 7
    factorlen moments --gens 17,29,47,65 --n 5000 --power 1 --modulus 4 --residue 2
    factorlen density --gens 6,9,20 --samples 11
    factorlen density --gens 6,9,20 --integral 1/20 1/9
    factorlen zeta --k 5
    factorlen zeta --mc 3 10000 100000 42
    factorlen verify --gens 7,19,25,31 --max-n 434
    factorlen convergence --gens 6,9,20 --modulus 5 --residue 0 --n-schedule 250,500,1000

Every command accepts ``--format {table,csv,json}`` and ``--out PATH``.
Exit status: 0 success, 1 failed verification, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .arith import InvalidSemigroupError, new_semigroup
from .asymptotics import (
    DensityModel,
    delta_one_probability_mc,
    density_eval,
    density_integral,
    equidistribution_check,
    zeta_ratio,
)
from .enumeration import length_distribution
from .modular import modulus_gcd, residue_histogram, restricted_moment, round_half_even
from .verify import VerifyConfig, run_suites

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

FORMATS = ("table", "csv", "json")


class UsageError(Exception):
    """Bad input detected after argument parsing; maps to exit code 2."""


@dataclass
class OutputRecord:
    """Rows of strings plus exact values, ready for any output format."""

    command: str
    params: dict
    columns: list[str]
    rows: list[list[str]] = field(default_factory=list)
    exact: dict = field(default_factory=dict)

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return to_csv(self.columns, self.rows)
        if fmt == "json":
            payload = {
                "command": self.command,
                "params": self.params,
                "rows": [dict(zip(self.columns, r)) for r in self.rows],
                "exact": self.exact,
            }
            return json.dumps(payload, indent=2) + "\n"
        return to_table(self.columns, self.rows)


def to_csv(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    return buf.getvalue()


def to_table(columns, rows) -> str:
    widths = [max(len(str(x)) for x in col) for col in zip(columns, *rows)]
    lines = [" | ".join(str(c).rjust(w) for c, w in zip(columns, widths)),
             "-+-".join("-" * w for w in widths)]
    for r in rows:
        lines.append(" | ".join(str(c).rjust(w) for c, w in zip(r, widths)))
    return "\n".join(lines) + "\n"


def exact_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt10(x) -> str:
    if isinstance(x, Fraction):
        return round_half_even(x, 10)
    if not math.isfinite(x):
        return "nan"
    text = f"{x:.10f}"
    return text.lstrip("-") if float(text) == 0 else text


def parse_gens(text: str):
    try:
        gens = [int(g) for g in text.split(",") if g.strip()]
    except ValueError:
        raise UsageError(f"cannot parse generators {text!r}") from None
    try:
        return new_semigroup(gens)
    except InvalidSemigroupError as exc:
        raise UsageError(str(exc)) from None


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def parse_schedule(text: str) -> list[int]:
    try:
        ns = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad schedule {text!r}") from None
    if not ns or min(ns) < 0:
        raise argparse.ArgumentTypeError("schedule needs nonnegative integers")
    return ns


def cmd_residues(args) -> OutputRecord:
    S = parse_gens(args.gens)
    if args.n < 0 or args.modulus < 1:
        raise UsageError("need n >= 0 and modulus >= 1")
    hist = residue_histogram(S, args.n, args.modulus)
    rec = OutputRecord(
        "residues", {"gens": list(S.generators), "n": args.n, "modulus": args.modulus},
        ["residue", "count", "proportion"])
    residue_label = (lambda i: f"{i} (mod {args.modulus})") if args.format == "table" else str
    for i, (c, p) in enumerate(zip(hist.counts, hist.display_proportions())):
        rec.rows.append([residue_label(i), str(c), p])
    props = hist.proportions
    rec.exact = {
        "total": str(hist.total),
        "counts": [str(c) for c in hist.counts],
        "proportions": [exact_str(p) for p in props] if props else None,
    }
    return rec


def cmd_moments(args) -> OutputRecord:
    S = parse_gens(args.gens)
    if args.n < 0 or args.power < 0 or args.modulus < 1:
        raise UsageError("need n >= 0, power >= 0, modulus >= 1")
    if not 0 <= args.residue < args.modulus:
        raise UsageError(f"residue must be in 0..{args.modulus - 1}")
    res = restricted_moment(S, args.n, args.power, args.modulus, args.residue)
    rec = OutputRecord(
        "moments",
        {"gens": list(S.generators), "n": args.n, "power": args.power,
         "modulus": args.modulus, "residue": args.residue},
        ["quantity", "exact", "decimal"])
    rec.rows = [
        ["power_sum", str(res.exact), fmt10(Fraction(res.exact))],
        ["leading", exact_str(res.leading), fmt10(res.leading)],
        ["residual", exact_str(res.residual), fmt10(res.residual)],
        ["attainable", str(res.attainable).lower(), ""],
    ]
    rec.exact = {"power_sum": str(res.exact), "leading": exact_str(res.leading),
                 "residual": exact_str(res.residual), "attainable": res.attainable}
    return rec


def cmd_density(args) -> OutputRecord:
    S = parse_gens(args.gens)
    try:
        D = DensityModel(S)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    params = {"gens": list(S.generators)}
    if args.integral is not None:
        a, b = args.integral
        if a > b:
            raise UsageError("integral bounds must satisfy a <= b")
        value = density_integral(D, a, b, exact=True)
        params["integral"] = [exact_str(a), exact_str(b)]
        rec = OutputRecord("density", params, ["quantity", "exact", "decimal"])
        rec.rows = [["integral", exact_str(value), fmt10(value)]]
        rec.exact = {"integral": exact_str(value)}
        return rec
    if args.samples < 2:
        raise UsageError("--samples must be >= 2")
    lo, hi = (float(b) for b in D.support)
    xs = np.linspace(lo, hi, args.samples)
    params["samples"] = args.samples
    rec = OutputRecord("density", params, ["x", "F"])
    rec.rows = [[fmt10(float(x)), fmt10(float(y))] for x, y in zip(xs, density_eval(D, xs))]
    lo_e, hi_e = D.support
    rec.exact = {"support": [exact_str(lo_e), exact_str(hi_e)]}
    return rec


def cmd_zeta(args) -> OutputRecord:
    if args.mc is not None:
        k, R, trials, seed = args.mc
        if k < 2 or R < k or trials < 1:
            raise UsageError("need k >= 2, R >= k, trials >= 1")
        est = delta_one_probability_mc(k, R, trials, seed)
        rec = OutputRecord("zeta", {"mc": [k, R, trials, seed]},
                           ["k", "R", "trials", "seed", "estimate"])
        rec.rows = [[str(k), str(R), str(trials), str(seed), f"{est:.4f}"]]
        rec.exact = {"estimate": repr(est)}
        return rec
    if args.k < 2:
        raise UsageError("k must be >= 2")
    value = zeta_ratio(args.k)
    rec = OutputRecord("zeta", {"k": args.k}, ["k", "zeta_ratio"])
    rec.rows = [[str(args.k), f"{value:.4f}"]]
    rec.exact = {"zeta_ratio": repr(value)}
    return rec


def cmd_verify(args) -> OutputRecord:
    S = parse_gens(args.gens)
    if args.max_n < 1 or args.modulus_max < 1:
        raise UsageError("bounds must be positive")
    cfg = VerifyConfig(S, args.max_n, args.modulus_max, args.seed)
    results = run_suites(cfg)
    rec = OutputRecord(
        "verify",
        {"gens": list(S.generators), "max_n": args.max_n,
         "modulus_max": args.modulus_max, "seed": args.seed},
        ["suite", "status", "detail"])
    rec.rows = [[r.name, "pass" if r.passed else "FAIL", r.detail] for r in results]
    rec.exact = {"passed": all(r.passed for r in results)}
    return rec


def cmd_convergence(args) -> OutputRecord:
    S = parse_gens(args.gens)
    N, i = args.modulus, args.residue
    if N < 1 or not 0 <= i < N:
        raise UsageError("need modulus >= 1 and 0 <= residue < modulus")
    if S.k < 3:
        raise UsageError("the limiting density needs k >= 3 generators")
    if args.alpha > args.beta:
        raise UsageError("need alpha <= beta")
    m = modulus_gcd(S, N)
    if len({n % m for n in args.n_schedule}) > 1:
        raise UsageError(
            f"schedule mixes congruence classes mod m={m}; keep n fixed mod {m}")
    report = equidistribution_check(S, N, i, args.alpha, args.beta, args.n_schedule)
    rec = OutputRecord(
        "convergence",
        {"gens": list(S.generators), "modulus": N, "residue": i,
         "alpha": exact_str(args.alpha), "beta": exact_str(args.beta),
         "n_schedule": args.n_schedule},
        ["n", "empirical", "limit", "gap"])
    for row in report.rows:
        rec.rows.append([str(row.n), fmt10(row.empirical), fmt10(row.limit), fmt10(row.gap)])
    rec.exact = {"empirical": [exact_str(r.empirical) for r in report.rows]}
    return rec


COMMANDS = {
    "residues": cmd_residues,
    "moments": cmd_moments,
    "density": cmd_density,
    "zeta": cmd_zeta,
    "verify": cmd_verify,
    "convergence": cmd_convergence,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS,
                        help="write output here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="factorlen", parents=[common],
        description="Factorization length distributions of numerical semigroups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("residues", parents=[common],
                       help="length counts per residue class mod N")
    p.add_argument("--gens", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--modulus", type=int, required=True)

    p = sub.add_parser("moments", parents=[common],
                       help="restricted power sum and its leading term")
    p.add_argument("--gens", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--power", type=int, default=0)
    p.add_argument("--modulus", type=int, default=1)
    p.add_argument("--residue", type=int, default=0)

    p = sub.add_parser("density", parents=[common],
                       help="limiting density of length/n")
    p.add_argument("--gens", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--samples", type=int, default=11)
    g.add_argument("--integral", nargs=2, type=parse_fraction, metavar=("A", "B"))

    p = sub.add_parser("zeta", parents=[common],
                       help="probability that k generators have delta = 1")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--k", type=int)
    g.add_argument("--mc", nargs=4, type=int, metavar=("K", "R", "TRIALS", "SEED"))

    p = sub.add_parser("verify", parents=[common], help="run self-check suites")
    p.add_argument("--gens", default="6,9,20")
    p.add_argument("--max-n", type=int, default=200)
    p.add_argument("--modulus-max", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("convergence", parents=[common],
                       help="empirical vs limiting restricted proportions")
    p.add_argument("--gens", required=True)
    p.add_argument("--modulus", type=int, default=1)
    p.add_argument("--residue", type=int, default=0)
    p.add_argument("--alpha", type=parse_fraction, default=Fraction(0))
    p.add_argument("--beta", type=parse_fraction, default=Fraction(1))
    p.add_argument("--n-schedule", type=parse_schedule, required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.format = getattr(args, "format", "table")
    out = getattr(args, "out", None)
    try:
        rec = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"factorlen {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = rec.render(args.format)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not rec.exact["passed"]:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
