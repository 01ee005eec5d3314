"""Command-line entry point.

Exit codes: 0 every check passed (skips allowed), 1 at least one check
failed, 2 invalid configuration, 3 the mod-cubed q-difference check found
a counterexample (a witness file is written per failing n).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .padic import parse_rational
from .qseries import conjecture41_witness
from .sweep import (
    ConfigError,
    Q_FAMILIES,
    SweepConfig,
    VERIFY_FAMILIES,
    exit_code,
    render,
    run_identities,
    run_smoke,
    run_sweep,
    run_wz,
)


def _default_workers() -> int:
    raw = os.environ.get("SUPERCONG_WORKERS", "1")
    try:
        return int(raw)
    except ValueError:
        return 1


def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    # registered on the top parser and again on every subparser, so the
    # flags work on either side of the subcommand; the subparser copies
    # default to SUPPRESS so an absent flag can't clobber a present one
    d = argparse.SUPPRESS if suppress else None
    p.add_argument(
        "--format", choices=("json", "csv", "text"),
        default=d if suppress else "text",
        help="report format (default: text)",
    )
    p.add_argument(
        "--workers", type=int,
        default=d if suppress else _default_workers(),
        help="process count; reports are identical for any value "
        "(default: $SUPERCONG_WORKERS or 1)",
    )
    p.add_argument(
        "--timings", action="store_true",
        default=d if suppress else False,
        help="include per-record wall time in the report",
    )
    p.add_argument(
        "-o", "--output",
        default=d if suppress else None,
        help="write the report to this file",
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="supercong",
        description="Verify truncated hypergeometric supercongruences, "
        "their q-analogues, and the identities behind them.",
    )
    _add_common(p, suppress=False)

    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="prime-indexed congruence sweeps")
    _add_common(v, suppress=True)
    v.add_argument(
        "--family", action="append", dest="families", metavar="NAME",
        help="repeatable; case-insensitive, hyphens allowed "
        f"(default: all of {', '.join(VERIFY_FAMILIES)})",
    )
    v.add_argument("--pmin", type=int, default=5)
    v.add_argument("--pmax", type=int, default=97)
    v.add_argument(
        "--alpha", action="append", dest="alphas", metavar="R",
        help="repeatable rational like 1/3 or -2; only used by the "
        "alpha-parameterised families (default: built-in sample)",
    )
    v.add_argument("--trunc", choices=("short", "full", "both"), default="both")
    v.add_argument(
        "--mod-exp", type=int, choices=(3, 4), dest="mod_exp",
        help="check modulo p^3 or p^4 instead of each family's default",
    )

    q = sub.add_parser("qverify", help="polynomial q-congruence checks")
    _add_common(q, suppress=True)
    q.add_argument(
        "--family", action="append", dest="families",
        choices=("gz-e2", "gz-f2", "conj41"),
        help="repeatable (default: all three)",
    )
    q.add_argument(
        "--n", action="append", dest="n_list", type=int, metavar="N",
        help="repeatable odd index (default: 5 9 13)",
    )
    q.add_argument(
        "--witness-dir", default=".",
        help="where counterexample witness files go (default: cwd)",
    )

    i = sub.add_parser("identities", help="exact identity suites")
    _add_common(i, suppress=True)
    i.add_argument("--nmax", type=int, default=50, help="binomial sums up to n")
    i.add_argument("--mmax", type=int, default=10, help="Euler power-sum depth")
    i.add_argument("--pmax", type=int, default=199, help="Lehmer prime bound")

    w = sub.add_parser("wz", help="rational-certificate pair checks")
    _add_common(w, suppress=True)
    w.add_argument("--nmax", type=int, default=12)
    w.add_argument("--kmax", type=int, default=12)
    w.add_argument("--alpha-samples", type=int, default=8, dest="alpha_samples")
    w.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("smoke", help="floating-point series sanity check")
    _add_common(s, suppress=True)
    s.add_argument("--terms", type=int, default=50)
    s.add_argument("--tol", type=float, default=1e-6)

    return p


def _run(args: argparse.Namespace):
    if args.command == "verify":
        cfg = SweepConfig(
            families=tuple(args.families) if args.families else VERIFY_FAMILIES,
            p_min=args.pmin,
            p_max=args.pmax,
            alpha_list=(
                tuple(parse_rational(a) for a in args.alphas)
                if args.alphas
                else None
            ),
            modulus_exp=args.mod_exp,
            trunc=args.trunc,
            format=args.format,
            workers=args.workers,
            timings=args.timings,
        )
        return run_sweep(cfg)
    if args.command == "qverify":
        cfg = SweepConfig(
            families=tuple(args.families) if args.families else Q_FAMILIES,
            n_list=tuple(args.n_list) if args.n_list else (5, 9, 13),
            format=args.format,
            workers=args.workers,
            timings=args.timings,
        )
        return run_sweep(cfg)
    if args.command == "identities":
        return run_identities(
            nmax=args.nmax, pmax=args.pmax, mmax=args.mmax, workers=args.workers
        )
    if args.command == "wz":
        return run_wz(
            nmax=args.nmax,
            kmax=args.kmax,
            alpha_samples=args.alpha_samples,
            seed=args.seed,
            workers=args.workers,
        )
    if args.command == "smoke":
        return run_smoke(terms=args.terms, tol=args.tol)
    raise ConfigError(f"unknown command: {args.command!r}")


def _write_witnesses(summary, witness_dir: str) -> None:
    for r in summary.records:
        if r.family == "CONJ41" and r.passed is False:
            path = Path(witness_dir) / f"conj41_witness_n{r.n}.json"
            path.write_text(
                json.dumps(conjecture41_witness(r.n), indent=2, sort_keys=True)
                + "\n"
            )
            print(f"counterexample witness written to {path}", file=sys.stderr)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        summary = _run(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    report = render(summary, args.format, args.timings)
    if args.output:
        Path(args.output).write_text(report)
    else:
        sys.stdout.write(report)
    code = exit_code(summary)
    if code == 3:
        _write_witnesses(summary, getattr(args, "witness_dir", "."))
    return code


if __name__ == "__main__":
    sys.exit(main())
