"""Sweep orchestration and deterministic report rendering.

Instances are expanded up front as plain tuples, executed either serially
or on a process pool, and the records are sorted afterwards by
(family, p or n, alpha, truncation), so reports are byte-identical for
any worker count.  Per-instance errors become skipped records with a
reason; they never abort a sweep.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction

from .padic import NotPAdicIntegral, ResidueClass, parse_rational
from .primes import EmptyRange, sieve_primes
from .records import (
    PreconditionViolated,
    ResidueConditionViolated,
    TruncationTooLarge,
    VerificationRecord,
    make_record,
    skipped_record,
)
from .sequences import check_binomial_identities, check_euler_identities, check_lehmer
from .verifier import (
    FAMILIES,
    LEMMA_FAMILIES,
    MAO_VARIANTS,
    ramanujan_partial,
    verify_lemma,
    verify_main1,
    verify_mao_equiv,
    verify_tail,
    verify_theorem,
)
from .qseries import verify_conjecture41, verify_gz
from .wz import DivisionByZeroTerm, check_pair, check_telescoped, sample_alphas

__all__ = [
    "ConfigError",
    "SweepConfig",
    "ReportSummary",
    "RATIONAL_ALPHAS",
    "ALPHA_FAMILIES",
    "Q_FAMILIES",
    "VERIFY_FAMILIES",
    "default_alphas",
    "run_sweep",
    "run_identities",
    "run_wz",
    "run_smoke",
    "render",
    "exit_code",
]


class ConfigError(ValueError):
    """Invalid sweep configuration."""


# rational alpha sample: hits a = 0 branches, a = p-1 branches and the
# generic 1 <= a <= p-2 range of the decomposition case analysis
RATIONAL_ALPHAS: tuple[Fraction, ...] = (
    Fraction(1, 2),
    Fraction(-1, 2),
    Fraction(1, 3),
    Fraction(-1, 3),
    Fraction(1, 4),
    Fraction(3, 4),
    Fraction(1, 6),
    Fraction(5, 6),
    Fraction(2, 3),
    Fraction(3, 5),
)

ALPHA_FAMILIES = ("MAIN1", "MAIN1_TRUNC", "TAIL")
Q_FAMILIES = ("GZ_E2", "GZ_F2", "CONJ41")
VERIFY_FAMILIES: tuple[str, ...] = (
    tuple(FAMILIES) + MAO_VARIANTS + ALPHA_FAMILIES + LEMMA_FAMILIES
)


def default_alphas(p: int) -> list[Fraction]:
    """Integer residues 1..p-1 for small p, plus the fixed rational sample."""
    out = [Fraction(i) for i in range(1, p)] if p <= 31 else []
    for a in RATIONAL_ALPHAS:
        if a not in out:
            out.append(a)
    return out


@dataclass(frozen=True)
class SweepConfig:
    families: tuple[str, ...]
    p_min: int = 5
    p_max: int = 97
    alpha_list: tuple[Fraction, ...] | None = None  # None: per-prime default set
    n_list: tuple[int, ...] = (5, 9, 13)
    modulus_exp: int | None = None
    trunc: str = "both"
    format: str = "text"
    seed: int = 0
    workers: int = 1
    timings: bool = False


@dataclass(frozen=True)
class ReportSummary:
    total: int
    passed: int
    failed: int
    skipped: int
    failures: tuple[VerificationRecord, ...]
    records: tuple[VerificationRecord, ...]


def _norm_family(name: str) -> str:
    return name.strip().upper().replace("-", "_")


def _validate(cfg: SweepConfig) -> SweepConfig:
    fams = tuple(_norm_family(f) for f in cfg.families)
    if not fams:
        raise ConfigError("families must be non-empty")
    for f in fams:
        if f not in VERIFY_FAMILIES and f not in Q_FAMILIES:
            raise ConfigError(f"unknown family: {f}")
    if not 2 <= cfg.p_min <= cfg.p_max:
        raise ConfigError(f"need 2 <= p_min <= p_max, got [{cfg.p_min}, {cfg.p_max}]")
    if any(n < 1 for n in cfg.n_list):
        raise ConfigError("n_list entries must be >= 1")
    if cfg.trunc not in ("short", "full", "both"):
        raise ConfigError(f"trunc must be short|full|both, got {cfg.trunc!r}")
    if cfg.format not in ("json", "csv", "text"):
        raise ConfigError(f"format must be json|csv|text, got {cfg.format!r}")
    if cfg.modulus_exp not in (None, 3, 4):
        raise ConfigError(f"modulus_exp must be 3 or 4, got {cfg.modulus_exp}")
    if cfg.workers < 1:
        raise ConfigError(f"workers must be >= 1, got {cfg.workers}")
    alphas = cfg.alpha_list
    if alphas is not None:
        alphas = tuple(
            a if isinstance(a, Fraction) else parse_rational(str(a)) for a in alphas
        )
    return replace(cfg, families=fams, alpha_list=alphas)


def _alphas_for(cfg: SweepConfig, p: int) -> list[Fraction]:
    if cfg.alpha_list is not None:
        return list(cfg.alpha_list)
    return default_alphas(p)


def build_instances(cfg: SweepConfig) -> list[tuple]:
    out: list[tuple] = []
    try:
        for fam in cfg.families:
            if fam in FAMILIES:
                f = FAMILIES[fam]
                primes = sieve_primes(cfg.p_min, cfg.p_max, f.p_mod, f.p_res)
                truncs = ("short", "full") if cfg.trunc == "both" else (cfg.trunc,)
                out += [
                    ("theorem", fam, p, tr, cfg.modulus_exp)
                    for p in primes
                    for tr in truncs
                ]
            elif fam in MAO_VARIANTS:
                mod, res = (4, 1) if fam == "EQUIV" else (None, None)
                out += [
                    ("mao", fam, p)
                    for p in sieve_primes(cfg.p_min, cfg.p_max, mod, res)
                ]
            elif fam in ("MAIN1", "MAIN1_TRUNC"):
                tr = "full" if fam == "MAIN1" else "short"
                for p in sieve_primes(cfg.p_min, cfg.p_max):
                    out += [("main1", p, a, tr) for a in _alphas_for(cfg, p)]
            elif fam == "TAIL":
                for p in sieve_primes(cfg.p_min, cfg.p_max):
                    out += [("tail", p, a) for a in _alphas_for(cfg, p)]
            elif fam in LEMMA_FAMILIES:
                for p in sieve_primes(cfg.p_min, cfg.p_max):
                    out += [("lemma", fam, p, a) for a in _alphas_for(cfg, p)]
            else:  # q families
                out += [("q", fam, n) for n in cfg.n_list]
    except EmptyRange as exc:
        raise ConfigError(str(exc)) from exc
    if not out:
        raise ConfigError(
            f"selection matches no instances: families {', '.join(cfg.families)}"
            f" over primes [{cfg.p_min}, {cfg.p_max}]"
        )
    return out


def _dispatch(inst: tuple) -> VerificationRecord:
    tag = inst[0]
    if tag == "theorem":
        _, fam, p, tr, e = inst
        return verify_theorem(fam, p, tr, e)
    if tag == "mao":
        _, fam, p = inst
        return verify_mao_equiv(p, fam)
    if tag == "main1":
        _, p, alpha, tr = inst
        return verify_main1(alpha, p, tr)
    if tag == "tail":
        _, p, alpha = inst
        return verify_tail(alpha, p)
    if tag == "lemma":
        _, fam, p, alpha = inst
        return verify_lemma(fam, alpha, p)
    if tag == "q":
        _, fam, n = inst
        return verify_conjecture41(n) if fam == "CONJ41" else verify_gz(n, fam)
    if tag == "binom":
        ok = check_binomial_identities(inst[1])
        return make_record(
            "BINOM_IDS", "exact", "equal" if ok else "unequal", "equal", n=inst[1]
        )
    if tag == "euler":
        _, n_max, m_max = inst
        ok = check_euler_identities(n_max, m_max)
        return make_record(
            "EULER_IDS", "exact", "equal" if ok else "unequal", "equal", n=n_max
        )
    if tag == "lehmer":
        p = inst[1]
        ok = check_lehmer(p)
        return make_record(
            "LEHMER", f"{p}^2", "0" if ok else "nonzero", "0", p=p
        )
    if tag == "wzpair":
        _, n_max, k_max, alpha = inst
        ok = check_pair(n_max, k_max, [alpha])
        return make_record(
            "WZ_PAIR", "exact", "equal" if ok else "unequal", "equal",
            n=n_max, alpha=alpha,
        )
    if tag == "wztel":
        _, n_max, alpha = inst
        ok = all(check_telescoped(N, alpha) for N in range(1, n_max + 1))
        return make_record(
            "WZ_TELESCOPE", "exact", "equal" if ok else "unequal", "equal",
            n=n_max, alpha=alpha,
        )
    if tag == "smoke":
        _, terms, tol = inst
        val = ramanujan_partial(terms)
        target = 2 / math.pi
        ok = abs(val - target) < tol
        return VerificationRecord(
            family="RAMANUJAN",
            modulus=f"tol={tol:g}",
            lhs=f"{val!r}",
            rhs=f"{target!r}",
            passed=ok,
            n=terms,
            reason=None if ok else f"off by {abs(val - target)!r}",
        )
    raise ValueError(f"unknown instance tag: {tag!r}")


def _instance_context(inst: tuple) -> dict:
    """family/p/n/alpha/truncation fields for a skip record."""
    tag = inst[0]
    if tag == "theorem":
        return {"family": inst[1], "p": inst[2], "truncation": inst[3]}
    if tag == "mao":
        return {"family": inst[1], "p": inst[2]}
    if tag == "main1":
        fam = "MAIN1" if inst[3] == "full" else "MAIN1_TRUNC"
        return {"family": fam, "p": inst[1], "alpha": inst[2], "truncation": inst[3]}
    if tag == "tail":
        return {"family": "TAIL", "p": inst[1], "alpha": inst[2]}
    if tag == "lemma":
        return {"family": inst[1], "p": inst[2], "alpha": inst[3]}
    if tag == "q":
        return {"family": inst[1], "n": inst[2]}
    return {"family": tag.upper()}


def _execute(inst: tuple) -> VerificationRecord:
    t0 = time.perf_counter()
    try:
        rec = _dispatch(inst)
    except (
        ResidueConditionViolated,
        PreconditionViolated,
        TruncationTooLarge,
        NotPAdicIntegral,
        DivisionByZeroTerm,
    ) as exc:
        rec = skipped_record(reason=str(exc), **_instance_context(inst))
    return replace(rec, elapsed_ms=(time.perf_counter() - t0) * 1000.0)


def _run_instances(insts: list[tuple], workers: int) -> list[VerificationRecord]:
    if workers > 1 and len(insts) > 1:
        chunk = max(1, len(insts) // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as ex:
            records = list(ex.map(_execute, insts, chunksize=chunk))
    else:
        records = [_execute(i) for i in insts]
    records.sort(key=VerificationRecord.sort_key)
    return records


def summarize(records: list[VerificationRecord]) -> ReportSummary:
    passed = sum(1 for r in records if r.passed is True)
    failed = sum(1 for r in records if r.passed is False)
    skipped = sum(1 for r in records if r.passed is None)
    return ReportSummary(
        total=len(records),
        passed=passed,
        failed=failed,
        skipped=skipped,
        failures=tuple(r for r in records if r.passed is False),
        records=tuple(records),
    )


def run_sweep(cfg: SweepConfig) -> ReportSummary:
    cfg = _validate(cfg)
    return summarize(_run_instances(build_instances(cfg), cfg.workers))


def run_identities(
    nmax: int = 50,
    pmax: int = 199,
    mmax: int = 10,
    euler_nmax: int = 25,
    workers: int = 1,
) -> ReportSummary:
    """Binomial identities for n = 1..nmax, the Euler-polynomial identity
    bundle, and Lehmer's congruences for primes 5..pmax."""
    if nmax < 1 or pmax < 5:
        raise ConfigError(f"need nmax >= 1 and pmax >= 5, got {nmax}, {pmax}")
    insts: list[tuple] = [("binom", n) for n in range(1, nmax + 1)]
    insts.append(("euler", euler_nmax, mmax))
    insts += [("lehmer", p) for p in sieve_primes(5, pmax)]
    return summarize(_run_instances(insts, workers))


def run_wz(
    nmax: int = 12,
    kmax: int = 12,
    alpha_samples: int = 8,
    seed: int = 0,
    workers: int = 1,
) -> ReportSummary:
    """Pair relation on the (nmax, kmax) grid and the telescoped identity
    for N = 1..nmax, at seeded pole-free rational alphas."""
    if nmax < 1 or kmax < 1 or alpha_samples < 1:
        raise ConfigError("nmax, kmax and alpha-samples must be >= 1")
    alphas = sample_alphas(alpha_samples, seed, k_max=max(nmax, kmax))
    insts: list[tuple] = [("wzpair", nmax, kmax, a) for a in alphas]
    insts += [("wztel", nmax, a) for a in alphas]
    return summarize(_run_instances(insts, workers))


def run_smoke(terms: int = 50, tol: float = 1e-6) -> ReportSummary:
    if terms < 1:
        raise ConfigError(f"terms must be >= 1, got {terms}")
    if tol <= 0:
        raise ConfigError(f"tol must be > 0, got {tol}")
    return summarize(_run_instances([("smoke", terms, tol)], workers=1))


# ---------------------------------------------------------------------------
# rendering

def _side(x) -> int | str:
    return x.value if isinstance(x, ResidueClass) else str(x)


def record_to_dict(r: VerificationRecord, timings: bool = False) -> dict:
    d: dict = {"family": r.family}
    if r.p is not None:
        d["p"] = r.p
    if r.n is not None:
        d["n"] = r.n
    if r.alpha is not None:
        d["alpha"] = str(r.alpha)
    if r.truncation is not None:
        d["truncation"] = r.truncation
    d["modulus"] = r.modulus
    d["lhs"] = _side(r.lhs)
    d["rhs"] = _side(r.rhs)
    d["pass"] = r.passed
    if r.reason is not None:
        d["reason"] = r.reason
    if timings and r.elapsed_ms is not None:
        d["elapsed_ms"] = round(r.elapsed_ms, 3)
    return d


def render_json(summary: ReportSummary, timings: bool = False) -> str:
    doc = {
        "records": [record_to_dict(r, timings) for r in summary.records],
        "summary": {
            "total": summary.total,
            "passed": summary.passed,
            "failed": summary.failed,
            "skipped": summary.skipped,
        },
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


_CSV_COLUMNS = (
    "family", "p", "n", "alpha", "truncation", "modulus",
    "lhs", "rhs", "result", "reason",
)


def render_csv(summary: ReportSummary, timings: bool = False) -> str:
    buf = io.StringIO()
    cols = _CSV_COLUMNS + (("elapsed_ms",) if timings else ())
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in summary.records:
        result = {True: "pass", False: "fail", None: "skip"}[r.passed]
        row = [
            r.family,
            r.p if r.p is not None else "",
            r.n if r.n is not None else "",
            str(r.alpha) if r.alpha is not None else "",
            r.truncation or "",
            r.modulus,
            _side(r.lhs),
            _side(r.rhs),
            result,
            r.reason or "",
        ]
        if timings:
            row.append(round(r.elapsed_ms, 3) if r.elapsed_ms is not None else "")
        w.writerow(row)
    return buf.getvalue()


def render_text(summary: ReportSummary, timings: bool = False) -> str:
    lines = []
    for r in summary.records:
        mark = {True: "PASS", False: "FAIL", None: "SKIP"}[r.passed]
        bits = [f"[{mark}]", r.family]
        if r.p is not None:
            bits.append(f"p={r.p}")
        if r.n is not None:
            bits.append(f"n={r.n}")
        if r.alpha is not None:
            bits.append(f"alpha={r.alpha}")
        if r.truncation is not None:
            bits.append(r.truncation)
        bits.append(f"mod {r.modulus}")
        if r.passed is False:
            bits.append(f"lhs={_side(r.lhs)} rhs={_side(r.rhs)}")
        if r.reason is not None:
            bits.append(f"({r.reason})")
        if timings and r.elapsed_ms is not None:
            bits.append(f"[{r.elapsed_ms:.1f} ms]")
        lines.append(" ".join(str(b) for b in bits))
    lines.append(
        f"total={summary.total} passed={summary.passed} "
        f"failed={summary.failed} skipped={summary.skipped}"
    )
    return "\n".join(lines) + "\n"


def render(summary: ReportSummary, fmt: str, timings: bool = False) -> str:
    if fmt == "json":
        return render_json(summary, timings)
    if fmt == "csv":
        return render_csv(summary, timings)
    if fmt == "text":
        return render_text(summary, timings)
    raise ConfigError(f"format must be json|csv|text, got {fmt!r}")


def exit_code(summary: ReportSummary) -> int:
    """0 all pass, 1 any failure, 3 a mod-cubed q-difference counterexample
    (checked first; it subsumes the plain failure signal)."""
    if any(r.family == "CONJ41" and r.passed is False for r in summary.records):
        return 3
    return 1 if summary.failed else 0
