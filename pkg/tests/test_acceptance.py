"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line."""

import json
import random
import subprocess
import sys
import time

from qcong.dissection import IDENTITY_IDS, verify_identity, verify_p_dissection
from qcong.oracle import RegularDistinctSpec, count_distinct_regular, enumerate_distinct_regular
from qcong.qproducts import ThetaSpec, euler, grs_generating, theta_product, theta_sum
from qcong.series import ZZ, reduce_mod
from qcong.theorems import CORE_STEP_IDS, SeriesCache, verify_all, verify_proof_step
from qcong.theorems.engine import plan_for


def _finish(record, number, title, ok, elapsed=None, limit=None):
    timing = "" if elapsed is None else f" ({elapsed:.2f}s / limit {limit}s)"
    passed = ok and (limit is None or elapsed < limit)
    record(number, title + timing, passed)
    print(f"AC{number} {'PASS' if passed else 'FAIL'}: {title}{timing}")
    assert ok, title
    if limit is not None:
        assert elapsed < limit, f"{title}: {elapsed:.2f}s >= {limit}s"


def test_ac1_golden_value(record_criterion):
    t0 = time.perf_counter()
    series_value = grs_generating(2, 5, 14)[13]
    oracle_value = count_distinct_regular(RegularDistinctSpec(2, 5), 13)[13]
    parts = enumerate_distinct_regular(RegularDistinctSpec(2, 5), 13)
    ok = series_value == 2 and oracle_value == 2 and parts == [[13], [9, 3, 1]]
    _finish(record_criterion, 1, "a(2,5)(13) = 2 by series, oracle and enumeration", ok,
            time.perf_counter() - t0, 1)


def test_ac2_oracle_equivalence(record_criterion):
    t0 = time.perf_counter()
    bad = []
    for r, s in [(2, 5), (2, 7), (4, 5), (4, 9), (3, 5)]:
        series = grs_generating(r, s, 201).tolist()
        counts = list(count_distinct_regular(RegularDistinctSpec(r, s), 200).values)
        if series != counts:
            bad.append((r, s))
    _finish(record_criterion, 2, f"series = DP counts for n <= 200 (mismatches: {bad or 'none'})",
            not bad, time.perf_counter() - t0, 5)


def test_ac3_identity_suite(record_criterion):
    t0 = time.perf_counter()
    failed = [i for i in IDENTITY_IDS if not verify_identity(i, 500).passed]
    rng = random.Random(20240601)
    jtp_bad = []
    for _ in range(20):
        spec = ThetaSpec(rng.choice((1, -1)), rng.randint(1, 7), rng.choice((1, -1)), rng.randint(1, 7))
        if theta_sum(spec, 300) != theta_product(spec, 300):
            jtp_bad.append(spec)
    ok = not failed and not jtp_bad and set(IDENTITY_IDS) >= {"t1", "t2", "t3", "t4", "t5", "t6", "g1", "u7"}
    _finish(record_criterion, 3, f"t1-t6, g1, u7 at order 500 and 20 triple products at order 300 "
            f"(failed: {failed + jtp_bad or 'none'})", ok, time.perf_counter() - t0, 10)


def test_ac4_p_dissection(record_criterion):
    t0 = time.perf_counter()
    reports = {p: verify_p_dissection(p, p * p + 50) for p in (5, 7, 11, 13)}
    failed = [p for p, r in reports.items() if not r.passed]
    _finish(record_criterion, 4, f"p-dissection of f1 for p in 5,7,11,13 (failed: {failed or 'none'})",
            not failed, time.perf_counter() - t0, 30)


def test_ac5_quick_sweep(record_criterion):
    t0 = time.perf_counter()
    reports = verify_all("quick", cache=SeriesCache())
    elapsed = time.perf_counter() - t0
    not_passed = [(r.family, r.params, r.outcome) for r in reports if not r.passed]
    families = {r.family for r in reports}
    required = {
        "thm1/e1", "thm1/e2", "thm3/e8", "thm3/e8a", "thm3/e9", "thm3/e9b",
        "thm4/e10", "thm4/e11", "thm4/e12", "thm4/e13", "thm4/abstract",
        "thm5/f1", "thm5/f1a", "thm5/f2", "thm5/f2a", "thm7/c3", "thm7/c4",
        "thm8/c1", "thm8/c2", "thm9/i1", "thm9/i2", "thm9/i3", "thm9/i4", "thm9/i5",
        "classics/p5", "classics/p7", "classics/p11",
    }
    # all j for the prime families
    js = {(r.family, r.params.get("j")) for r in reports if "j" in r.params}
    all_j = all((f, j) in js for f, p in (("thm3/e9", 17), ("thm3/e9b", 17), ("thm5/f2", 11),
                                           ("thm5/f2a", 11), ("thm8/c2", 11)) for j in range(1, p))
    ok = not not_passed and required <= families and all_j
    _finish(record_criterion, 5, f"quick profile: {len(reports)} claims "
            f"(not passed: {not_passed or 'none'})", ok, elapsed, 120)


def test_ac6_proof_steps(record_criterion):
    t0 = time.perf_counter()
    cache = SeriesCache()
    failed = [s for s in CORE_STEP_IDS if not verify_proof_step(s, 300, cache).passed]
    _finish(record_criterion, 6, f"proof steps {', '.join(CORE_STEP_IDS)} at order 300 "
            f"(failed: {failed or 'none'})", not failed, time.perf_counter() - t0, 10)


def test_ac7_binomial_congruence(record_criterion):
    rng = random.Random(7)
    bad = []
    for _ in range(50):
        t, m = rng.randint(1, 10), rng.randint(1, 5)
        lhs = reduce_mod(euler(t, 200, ZZ) ** (2 * m), 2)
        rhs = reduce_mod(euler(2 * t, 200, ZZ) ** m, 2)
        if lhs != rhs:
            bad.append((t, m))
    _finish(record_criterion, 7, f"f_t^(2m) = f_2t^m mod 2 for 50 random (t, m) (failed: {bad or 'none'})",
            not bad)


def _strip_millis(payload):
    return [{k: v for k, v in r.items() if k != "millis"} for r in payload]


def test_ac8_determinism(record_criterion, tmp_path):
    outputs = []
    for i in range(2):
        out = tmp_path / f"run{i}.json"
        proc = subprocess.run(
            [sys.executable, "-m", "qcong.cli", "verify", "all", "--profile", "quick",
             "--format", "json", "--out", str(out)],
            capture_output=True, text=True, timeout=300,
        )
        assert proc.returncode == 0, proc.stderr
        outputs.append(json.loads(out.read_text(encoding="utf-8")))
    a, b = outputs
    ok = len(a) == len(plan_for("quick")) and _strip_millis(a) == _strip_millis(b)
    _finish(record_criterion, 8, "two quick JSON runs differ only in millis", ok)
