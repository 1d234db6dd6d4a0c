"""Deterministic claim sweeps: enumeration, execution, rendering, exit codes.

A sweep instance is a pair (claim_id, params) with params an ordered tuple
of (name, int) pairs; the full instance list for a given SweepConfig is a
pure function of the config.  Random samples come from SplitMix64 (the
64-bit mixer with golden-gamma increment 0x9E3779B97F4A7C15), seeded from
``rng_seed``; bounded draws use plain ``next_u64() % bound``.  The exact
sampling procedures are documented in the README so an independent
implementation can reproduce instance sets from the seed alone.

Reports are aggregated in (claim_id, params) order no matter how many
worker processes ran the checks, so identical configs yield identical
output; ``stable_output`` additionally zeroes elapsed_ms for byte-exact
diffs.

Exit codes: 0 all pass/skip, 1 a theorem or identity check failed (an
implementation bug or a falsified theorem), 2 usage error, 3 the open
conjecture produced a counterexample.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .congruence import FAIL, PASS, is_prime
from .faulhaber import ConjectureInstance, check_conjecture, check_faulhaber_cong
from .qcomb import QBinomialCache
from .theorems import (
    check_chu_vandermonde,
    check_p_minus_one_lemma,
    check_pfaff_saalschutz,
    check_residue_identity,
    check_sum_lemma,
    check_symmetric_identity,
    check_thm1,
    check_thm2,
    q1_check,
)

SUITES = ("thm1", "thm2", "identities", "conjecture", "faulhaber", "all")
FORMATS = ("text", "json", "csv")

DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13)

_MASK64 = (1 << 64) - 1
PFAFF_MAX_N = 8


class UsageError(Exception):
    """Bad sweep configuration; maps to exit code 2."""


class SplitMix64:
    """SplitMix64: state += 0x9E3779B97F4A7C15; output is the mixed state."""

    __slots__ = ("_state",)

    def __init__(self, seed):
        self._state = seed & _MASK64

    def next_u64(self):
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound):
        """Uniform-ish draw in [0, bound) by reduction modulo bound."""
        if bound < 1:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound


@dataclass(frozen=True)
class SweepConfig:
    """Everything a sweep needs; validation happens in ``validate``."""

    suite: str
    n_max: int = 10
    m_max: int = 2
    a_max: int = 4
    prime_set: tuple = DEFAULT_PRIMES
    sample_count: int = 0
    rng_seed: int = 0
    jobs: int = 1
    format: str = "text"
    fail_fast: bool = False
    stable_output: bool = False

    def validate(self):
        if self.suite not in SUITES:
            raise UsageError("unknown suite %r (choose from %s)"
                             % (self.suite, ", ".join(SUITES)))
        for name in ("n_max", "m_max", "a_max"):
            if not isinstance(getattr(self, name), int) or getattr(self, name) < 1:
                raise UsageError("%s must be a positive integer" % name)
        for p in self.prime_set:
            if not isinstance(p, int) or not is_prime(p):
                raise UsageError("prime_set entry %r is not prime" % (p,))
        if not isinstance(self.sample_count, int) or self.sample_count < 0:
            raise UsageError("sample_count must be >= 0")
        if not isinstance(self.jobs, int) or self.jobs < 1:
            raise UsageError("jobs must be >= 1")
        if self.format not in FORMATS:
            raise UsageError("unknown format %r" % (self.format,))
        if not isinstance(self.rng_seed, int):
            raise UsageError("rng_seed must be an integer")


# --- instance enumeration ---------------------------------------------------------

def _params(**kw):
    return tuple(kw.items())


def _a_tuple_params(n, a_list):
    items = [("n", n)]
    items.extend(("a%d" % (i + 1), a) for i, a in enumerate(a_list))
    return tuple(items)


def thm1_grid_instances(n_max, m_max, a_max):
    """Exhaustive (n, a-list) grid, each emitted as a thm1 and a q1 instance."""
    out = []
    for n in range(1, n_max + 1):
        for m in range(1, m_max + 1):
            for a_list in _tuples(m, a_max):
                params = _a_tuple_params(n, a_list)
                out.append(("thm1", params))
                out.append(("q1", params))
    return out


def _tuples(m, a_max):
    if m == 0:
        yield ()
        return
    for rest in _tuples(m - 1, a_max):
        for a in range(a_max + 1):
            yield rest + (a,)


def thm1_sample_instances(count, seed, n_max, m_max, a_max):
    """Seeded random (n, a-list) draws: n, m uniform from 1, each a_i from 0."""
    rng = SplitMix64(seed)
    out = []
    for _ in range(count):
        n = 1 + rng.below(n_max)
        m = 1 + rng.below(m_max)
        a_list = tuple(rng.below(a_max + 1) for _ in range(m))
        params = _a_tuple_params(n, a_list)
        out.append(("thm1", params))
        out.append(("q1", params))
    return out


def _nonzero_rational(rng, max_num=7, max_den=4):
    v = rng.below(2 * max_num)
    num = v - max_num if v < max_num else v - max_num + 1
    den = 1 + rng.below(max_den)
    return num, den


def pfaff_sample_instances(count, seed, n_max):
    """Seeded rational specializations for the balanced summation.

    x, y: numerator in +-1..7, denominator 1..4.  z: same, redrawn while
    z == 1.  q: numerator +-2..7 (magnitude then sign), denominator 1..3,
    redrawn while |q| == 1.  n in 0..min(n_max, 8).
    """
    rng = SplitMix64(seed)
    out = []
    for _ in range(count):
        xn, xd = _nonzero_rational(rng)
        yn, yd = _nonzero_rational(rng)
        while True:
            zn, zd = _nonzero_rational(rng)
            if Fraction(zn, zd) != 1:
                break
        while True:
            v = rng.below(12)
            qn = (2 + v // 2) * (1 if v % 2 == 0 else -1)
            qd = 1 + rng.below(3)
            if abs(qn) != qd:
                break
        n = rng.below(min(n_max, PFAFF_MAX_N) + 1)
        x, y, z, q = Fraction(xn, xd), Fraction(yn, yd), Fraction(zn, zd), Fraction(qn, qd)
        out.append(("qpfaff", _params(
            x_num=x.numerator, x_den=x.denominator,
            y_num=y.numerator, y_den=y.denominator,
            z_num=z.numerator, z_den=z.denominator,
            q_num=q.numerator, q_den=q.denominator,
            n=n)))
    return out


def enumerate_instances(config):
    """The full, deterministic instance list for a config (duplicates removed)."""
    suite = config.suite
    out = []
    if suite in ("thm1", "all"):
        out.extend(thm1_grid_instances(config.n_max, config.m_max, config.a_max))
        out.extend(thm1_sample_instances(config.sample_count, config.rng_seed,
                                         config.n_max, config.m_max, config.a_max))
    if suite in ("thm2", "all"):
        for p in sorted(set(config.prime_set)):
            for a in range(p):
                for b in range(p):
                    out.append(("thm2", _params(p=p, a=a, b=b)))
    if suite in ("identities", "all"):
        for n in range(1, config.n_max + 1):
            for a in range(config.a_max + 1):
                out.append(("sum_lemma", _params(n=n, a=a)))
        for a in range(config.a_max + 1):
            for b in range(config.a_max + 1):
                for n in range(config.n_max + 1):
                    out.append(("chu_vandermonde", _params(a=a, b=b, n=n)))
        for p in sorted(set(config.prime_set)):
            for j in range(p):
                out.append(("p_minus_one", _params(p=p, j=j)))
        for a in range(config.a_max + 1):
            for b in range(config.a_max + 1):
                out.append(("residue_identity", _params(a=a, b=b)))
                out.append(("symmetric_identity", _params(a=a, b=b)))
        out.extend(pfaff_sample_instances(config.sample_count, config.rng_seed,
                                          config.n_max))
    if suite in ("conjecture", "all"):
        for m in range(1, config.m_max + 1):
            for k in range(1, m + 1):
                for n in range(1, config.n_max + 1):
                    out.append(("conjecture", _params(n=n, m=m, k=k)))
    if suite in ("faulhaber", "all"):
        for n in range(1, config.n_max + 1):
            for m in range(1, config.m_max + 1):
                out.append(("faulhaber", _params(n=n, m=m)))
    return list(dict.fromkeys(out))


# --- execution ---------------------------------------------------------------------

_worker_cache = None


def _cache():
    global _worker_cache
    if _worker_cache is None:
        _worker_cache = QBinomialCache(max_entries=8192)
    return _worker_cache


def _a_list_from(d):
    return [d["a%d" % i] for i in range(1, len(d))]


def _run_thm1(d):
    return check_thm1(d["n"], _a_list_from(d), cache=_cache())


def _run_q1(d):
    return q1_check(d["n"], _a_list_from(d))


def _run_thm2(d):
    return check_thm2(d["p"], d["a"], d["b"], cache=_cache())


def _run_sum_lemma(d):
    return check_sum_lemma(d["n"], d["a"])


def _run_chu(d):
    return check_chu_vandermonde(d["a"], d["b"], d["n"])


def _run_p_minus_one(d):
    return check_p_minus_one_lemma(d["p"], d["j"])


def _run_residue_identity(d):
    return check_residue_identity(d["a"], d["b"])


def _run_symmetric_identity(d):
    return check_symmetric_identity(d["a"], d["b"])


def _run_pfaff(d):
    return check_pfaff_saalschutz(
        Fraction(d["x_num"], d["x_den"]), Fraction(d["y_num"], d["y_den"]),
        Fraction(d["z_num"], d["z_den"]), Fraction(d["q_num"], d["q_den"]),
        d["n"])


def _run_conjecture(d):
    return check_conjecture(ConjectureInstance(d["n"], d["m"], d["k"]))


def _run_faulhaber(d):
    return check_faulhaber_cong(d["n"], d["m"])


_RUNNERS = {
    "thm1": _run_thm1,
    "q1": _run_q1,
    "thm2": _run_thm2,
    "sum_lemma": _run_sum_lemma,
    "chu_vandermonde": _run_chu,
    "p_minus_one": _run_p_minus_one,
    "residue_identity": _run_residue_identity,
    "symmetric_identity": _run_symmetric_identity,
    "qpfaff": _run_pfaff,
    "conjecture": _run_conjecture,
    "faulhaber": _run_faulhaber,
}


def run_instance(item):
    """Execute one (claim_id, params) instance; used directly and by workers."""
    claim_id, params = item
    return _RUNNERS[claim_id](dict(params))


def execute(instances, jobs=1, fail_fast=False):
    """Run instances, optionally across processes; results in submission order."""
    reports = []
    if jobs <= 1:
        for item in instances:
            report = run_instance(item)
            reports.append(report)
            if fail_fast and report.status == FAIL:
                break
        return reports
    pool = ProcessPoolExecutor(max_workers=jobs)
    try:
        chunk = max(1, len(instances) // (jobs * 8))
        for report in pool.map(run_instance, instances, chunksize=chunk):
            reports.append(report)
            if fail_fast and report.status == FAIL:
                break
    finally:
        pool.shutdown(wait=False, cancel_futures=True)
    return reports


def exit_code_for(reports):
    """0 clean, 1 any theorem/identity failure, 3 conjecture counterexample only."""
    conjecture_fail = False
    for r in reports:
        if r.status == FAIL:
            if r.claim_id == "conjecture":
                conjecture_fail = True
            else:
                return 1
    return 3 if conjecture_fail else 0


# --- rendering ----------------------------------------------------------------------

def _params_str(report):
    return ";".join("%s=%d" % (k, v) for k, v in report.params)


def render_report(reports, fmt, stable=False):
    """Render sorted reports as text, json, or csv; returns a string."""
    if fmt == "json":
        objs = [r.to_json_obj(stable=stable) for r in reports]
        return json.dumps(objs, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["claim_id", "params", "status", "elapsed_ms"])
        for r in reports:
            writer.writerow([r.claim_id, _params_str(r), r.status,
                             0 if stable else r.elapsed_ms])
        return buf.getvalue()
    if fmt != "text":
        raise UsageError("unknown format %r" % (fmt,))
    rows = [("claim", "params", "status", "ms", "note")]
    for r in reports:
        rows.append((r.claim_id, _params_str(r), r.status,
                     str(0 if stable else r.elapsed_ms), r.note or ""))
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
             for row in rows]
    counts = {PASS: 0, FAIL: 0, "skipped": 0}
    for r in reports:
        counts[r.status] += 1
    lines.append("summary: %d pass, %d fail, %d skipped"
                 % (counts[PASS], counts[FAIL], counts["skipped"]))
    if any(r.claim_id == "conjecture" for r in reports) and counts[FAIL] == 0:
        lines.append("conjecture sweep: no counterexample in the swept range "
                     "(evidence only, not proof)")
    return "\n".join(lines) + "\n"


def run_suite(config, out=None, err=None):
    """Validate, enumerate, execute, render; returns the process exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    config.validate()
    instances = enumerate_instances(config)
    reports = execute(instances, jobs=config.jobs, fail_fast=config.fail_fast)
    reports = sorted(reports, key=lambda r: r.sort_key)
    out.write(render_report(reports, config.format, stable=config.stable_output))
    code = exit_code_for(reports)
    if code == 1:
        for r in reports:
            if r.status == FAIL and r.claim_id != "conjecture":
                err.write("CHECK FAILED: %s %s\n  lhs: %s\n  rhs: %s\n  difference: %s\n"
                          % (r.claim_id, _params_str(r), r.witness.lhs,
                             r.witness.rhs, r.witness.difference))
    elif code == 3:
        for r in reports:
            if r.status == FAIL and r.claim_id == "conjecture":
                err.write("CONJECTURE COUNTEREXAMPLE: %s\n  value: %s\n  residue: %s\n"
                          % (_params_str(r), r.witness.lhs, r.witness.difference))
    return code
