"""Sweep orchestration, report rendering, CLI subcommands and exit codes."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from supercong.cli import build_parser, main
from supercong.primes import EmptyRange, is_prime, sieve_primes
from supercong.records import VerificationRecord, make_record, skipped_record
from supercong.sweep import (
    ConfigError,
    RATIONAL_ALPHAS,
    ReportSummary,
    SweepConfig,
    default_alphas,
    exit_code,
    render,
    render_csv,
    render_json,
    run_identities,
    run_smoke,
    run_sweep,
    run_wz,
    summarize,
)


def test_is_prime():
    assert [n for n in range(2, 30) if is_prime(n)] == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
    ]
    assert not is_prime(1) and not is_prime(0) and not is_prime(-7)


def test_sieve_primes():
    assert sieve_primes(5, 20, 3, 1) == [7, 13, 19]
    assert sieve_primes(5, 20, 4, 3) == [7, 11, 19]
    assert sieve_primes(24, 28) == []
    assert sieve_primes(2, 10) == [2, 3, 5, 7]


def test_sieve_primes_validation():
    with pytest.raises(EmptyRange):
        sieve_primes(10, 5)
    with pytest.raises(EmptyRange):
        sieve_primes(1, 5)
    with pytest.raises(ValueError):
        sieve_primes(5, 20, 4, None)


def test_default_alphas():
    small = default_alphas(7)
    assert small[:6] == [Fraction(i) for i in range(1, 7)]
    assert Fraction(1, 2) in small
    big = default_alphas(97)
    assert all(a.denominator > 1 for a in big)
    assert len(big) == len(RATIONAL_ALPHAS)


def test_run_sweep_theorem_family():
    s = run_sweep(SweepConfig(families=("E2_MOD4",), p_min=5, p_max=50))
    # qualifying primes {7,13,19,31,37,43} x both truncations
    assert s.total == 12 and s.passed == 12 and s.failed == 0
    assert {r.p for r in s.records} == {7, 13, 19, 31, 37, 43}
    s = run_sweep(
        SweepConfig(families=("E2_MOD4",), p_min=5, p_max=50, trunc="short")
    )
    assert s.total == 6


def test_run_sweep_q_family():
    s = run_sweep(SweepConfig(families=("CONJ41",), n_list=(5, 9)))
    assert s.total == 2 and s.passed == 2
    assert all(r.family == "CONJ41" for r in s.records)


def test_run_sweep_skips_instead_of_aborting():
    # n = 4 violates the q-family residue condition; the sweep must finish
    s = run_sweep(SweepConfig(families=("GZ_F2",), n_list=(4, 5)))
    assert s.total == 2 and s.passed == 1 and s.skipped == 1
    skipped = [r for r in s.records if r.passed is None]
    assert skipped[0].n == 4 and skipped[0].reason


def test_run_sweep_alpha_families_with_explicit_alphas():
    cfg = SweepConfig(
        families=("MAIN1", "TAIL"),
        p_min=5,
        p_max=11,
        alpha_list=(Fraction(1, 2), Fraction(1)),
    )
    s = run_sweep(cfg)
    # 3 primes x 2 alphas per family; TAIL alpha=1 becomes 3 skips
    assert s.total == 12
    assert s.skipped == 3 and s.failed == 0


def test_run_sweep_config_errors():
    with pytest.raises(ConfigError):
        run_sweep(SweepConfig(families=()))
    with pytest.raises(ConfigError):
        run_sweep(SweepConfig(families=("NOT_A_FAMILY",)))
    with pytest.raises(ConfigError):
        run_sweep(SweepConfig(families=("B2",), p_min=10, p_max=5))
    with pytest.raises(ConfigError):
        run_sweep(SweepConfig(families=("B2",), trunc="sideways"))
    with pytest.raises(ConfigError):
        run_sweep(SweepConfig(families=("B2",), workers=0))
    with pytest.raises(ConfigError):
        run_sweep(SweepConfig(families=("B2",), modulus_exp=5))
    with pytest.raises(ConfigError):
        run_sweep(SweepConfig(families=("CONJ41",), n_list=(0,)))
    with pytest.raises(ConfigError):  # no primes at all in [90, 91]
        run_sweep(SweepConfig(families=("B2",), p_min=90, p_max=91))
    with pytest.raises(ConfigError):  # no p = 1 (mod 4) primes in [7, 11]
        run_sweep(SweepConfig(families=("F2",), p_min=7, p_max=11))


def test_family_name_normalization():
    s = run_sweep(SweepConfig(families=("e2-mod4",), p_min=7, p_max=7))
    assert s.total == 2 and s.passed == 2


def test_summary_counts_consistent():
    s = run_sweep(
        SweepConfig(families=("B2", "TAIL"), p_min=5, p_max=13,
                    alpha_list=(Fraction(1),))
    )
    assert s.total == s.passed + s.failed + s.skipped
    assert len(s.failures) == s.failed == 0


def test_records_sorted_deterministically():
    cfg = SweepConfig(families=("TAIL", "B2"), p_min=5, p_max=31)
    s = run_sweep(cfg)
    keys = [r.sort_key() for r in s.records]
    assert keys == sorted(keys)


def test_worker_count_does_not_change_report():
    cfg1 = SweepConfig(families=("B2", "SUN_B2"), p_min=5, p_max=31, workers=1)
    cfg2 = SweepConfig(families=("B2", "SUN_B2"), p_min=5, p_max=31, workers=2)
    r1 = render_json(run_sweep(cfg1))
    r2 = render_json(run_sweep(cfg2))
    assert r1 == r2


def test_render_json_shape():
    s = run_sweep(SweepConfig(families=("B2",), p_min=5, p_max=7))
    doc = json.loads(render_json(s))
    assert set(doc) == {"records", "summary"}
    rec = doc["records"][0]
    assert rec["family"] == "B2" and rec["pass"] is True
    assert "elapsed_ms" not in rec  # timings are opt-in
    assert doc["summary"]["total"] == s.total
    doc = json.loads(render_json(s, timings=True))
    assert "elapsed_ms" in doc["records"][0]


def test_render_csv_shape():
    s = run_sweep(SweepConfig(families=("B2",), p_min=5, p_max=7))
    lines = render_csv(s).splitlines()
    assert lines[0].startswith("family,p,n,alpha,truncation,modulus,lhs,rhs")
    assert len(lines) == 1 + s.total
    assert ",pass," in lines[1] or lines[1].endswith("pass,")


def test_render_text_summary_line():
    s = run_sweep(SweepConfig(families=("B2",), p_min=5, p_max=7))
    out = render(s, "text")
    assert out.splitlines()[-1] == "total=4 passed=4 failed=0 skipped=0"
    assert out.count("[PASS]") == 4


def test_exit_code_mapping():
    passing = make_record("B2", "5^3", "1", "1", p=5)
    failing = make_record("B2", "5^3", "1", "2", p=5)
    conj_bad = make_record("CONJ41", "[5]*Phi_5^3", "nonzero", "0", n=5)
    skip = skipped_record("TAIL", reason="empty", p=5)
    assert exit_code(summarize([passing, skip])) == 0
    assert exit_code(summarize([passing, failing])) == 1
    assert exit_code(summarize([passing, failing, conj_bad])) == 3


def test_run_identities():
    s = run_identities(nmax=4, pmax=13, mmax=4, euler_nmax=8)
    fams = {r.family for r in s.records}
    assert fams == {"BINOM_IDS", "EULER_IDS", "LEHMER"}
    assert s.failed == 0
    assert sum(1 for r in s.records if r.family == "LEHMER") == len(
        sieve_primes(5, 13)
    )


def test_run_wz():
    s = run_wz(nmax=4, kmax=4, alpha_samples=3, seed=1)
    assert s.total == 6 and s.failed == 0
    assert {r.family for r in s.records} == {"WZ_PAIR", "WZ_TELESCOPE"}


def test_run_smoke():
    s = run_smoke(terms=50, tol=1e-6)
    assert s.total == 1 and s.passed == 1
    assert s.records[0].family == "RAMANUJAN"
    with pytest.raises(ConfigError):
        run_smoke(terms=0)
    with pytest.raises(ConfigError):
        run_smoke(tol=0.0)


# -- CLI


def test_cli_qverify_json(tmp_path):
    out = tmp_path / "r.json"
    code = main(["qverify", "--n", "5", "--format", "json", "-o", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["summary"] == {"failed": 0, "passed": 3, "skipped": 0, "total": 3}


def test_cli_flags_before_subcommand(tmp_path):
    out = tmp_path / "r.json"
    code = main(["--format", "json", "-o", str(out), "qverify", "--n", "5"])
    assert code == 0
    assert json.loads(out.read_text())["summary"]["total"] == 3


def test_cli_verify_subset(tmp_path):
    out = tmp_path / "r.csv"
    code = main([
        "verify", "--family", "e2-mod4", "--family", "b2",
        "--pmin", "5", "--pmax", "20", "--trunc", "short",
        "--format", "csv", "-o", str(out),
    ])
    assert code == 0
    lines = out.read_text().splitlines()
    assert len(lines) > 2 and lines[0].startswith("family,")


def test_cli_verify_mod_exp(capsys):
    assert main(["verify", "--family", "sun-b2", "--pmax", "13",
                 "--mod-exp", "3"]) == 0
    out = capsys.readouterr().out
    assert "^3" in out and "[PASS]" in out


def test_cli_config_error_exit_2(capsys):
    assert main(["verify", "--pmin", "10", "--pmax", "5"]) == 2
    assert "config error" in capsys.readouterr().err
    assert main(["verify", "--family", "nope"]) == 2
    assert main(["verify", "--alpha", "x/y"]) == 2
    assert main(["verify", "--alpha", "1/0", "--family", "main1"]) == 2
    # a prime-free window must not report success over zero checks
    assert main(["verify", "--pmin", "90", "--pmax", "91"]) == 2


def test_cli_identities_and_wz_and_smoke(capsys):
    assert main(["identities", "--nmax", "3", "--pmax", "7", "--mmax", "3"]) == 0
    assert main(["wz", "--nmax", "3", "--kmax", "3", "--alpha-samples", "2"]) == 0
    assert main(["smoke", "--terms", "40"]) == 0
    capsys.readouterr()


def test_cli_workers_env_default(monkeypatch):
    monkeypatch.setenv("SUPERCONG_WORKERS", "3")
    args = build_parser().parse_args(["qverify"])
    assert args.workers == 3
    monkeypatch.setenv("SUPERCONG_WORKERS", "junk")
    args = build_parser().parse_args(["qverify"])
    assert args.workers == 1


def test_cli_witness_file_on_conjecture_failure(tmp_path):
    from supercong.cli import _write_witnesses

    fake = make_record("CONJ41", "[5]*Phi_5^3", "nonzero residue", "0", n=5)
    assert fake.passed is False
    _write_witnesses(summarize([fake]), str(tmp_path))
    written = tmp_path / "conj41_witness_n5.json"
    assert written.exists()
    doc = json.loads(written.read_text())
    assert doc["n"] == 5 and "difference_numerator" in doc


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "supercong.cli", "--help"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "verify" in proc.stdout and "qverify" in proc.stdout


def test_record_sort_key_and_equality():
    a = make_record("B2", "5^3", "1", "1", p=5, truncation="short")
    b = make_record("B2", "5^3", "1", "1", p=5, truncation="short")
    assert a == b
    assert a.sort_key() < make_record("B2", "7^3", "1", "1", p=7).sort_key()
    assert skipped_record("X", reason="r").passed is None
