"""Sweep orchestration and CLI tests.

PRNG vectors are frozen against the published SplitMix64 reference outputs,
so any independent implementation seeded identically enumerates the same
sampled instances.
"""

import json

import pytest

from qcong.congruence import FAIL, PASS, Witness, make_report
from qcong.cli import main
from qcong.sweep import (
    SplitMix64,
    SweepConfig,
    UsageError,
    enumerate_instances,
    execute,
    exit_code_for,
    pfaff_sample_instances,
    render_report,
    run_suite,
)
import qcong.sweep as sweep_mod


# reference vectors for the standard SplitMix64 mixer
SPLITMIX_SEED0 = [16294208416658607535, 7960286522194355700, 487617019471545679]
SPLITMIX_SEED_1234567 = [
    6457827717110365317,
    3203168211198807973,
    9817491932198370423,
    4593380528125082431,
    16408922859458223821,
]


def test_splitmix64_reference_vectors():
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == SPLITMIX_SEED0
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(5)] == SPLITMIX_SEED_1234567


def test_splitmix64_below_bounds():
    rng = SplitMix64(99)
    draws = [rng.below(7) for _ in range(200)]
    assert all(0 <= d < 7 for d in draws)
    assert len(set(draws)) == 7
    with pytest.raises(ValueError):
        rng.below(0)


def _cfg(**kw):
    base = dict(suite="thm1", n_max=4, m_max=2, a_max=2, prime_set=(2, 3),
                sample_count=0, rng_seed=0, jobs=1, format="text")
    base.update(kw)
    return SweepConfig(**base)


class TestConfigValidation:
    def test_good_config_passes(self):
        _cfg().validate()

    @pytest.mark.parametrize("kw", [
        dict(suite="nope"),
        dict(n_max=0),
        dict(m_max=-1),
        dict(a_max=0),
        dict(prime_set=(2, 4)),
        dict(prime_set=(1,)),
        dict(sample_count=-1),
        dict(jobs=0),
        dict(format="xml"),
    ])
    def test_bad_config_rejected(self, kw):
        with pytest.raises(UsageError):
            _cfg(**kw).validate()


class TestEnumeration:
    def test_deterministic_and_deduplicated(self):
        cfg = _cfg(sample_count=25, rng_seed=123)
        first = enumerate_instances(cfg)
        second = enumerate_instances(cfg)
        assert first == second
        assert len(first) == len(set(first))

    def test_seed_changes_samples(self):
        # wide n range so the draws cannot all collapse into the grid
        a = sweep_mod.thm1_sample_instances(40, 1, 30, 4, 6)
        b = sweep_mod.thm1_sample_instances(40, 2, 30, 4, 6)
        assert a != b
        assert a == sweep_mod.thm1_sample_instances(40, 1, 30, 4, 6)

    def test_thm1_grid_emits_paired_integer_shadow(self):
        instances = enumerate_instances(_cfg())
        claims = {c for c, _ in instances}
        assert claims == {"thm1", "q1"}
        thm1 = [p for c, p in instances if c == "thm1"]
        q1 = [p for c, p in instances if c == "q1"]
        assert thm1 == q1

    def test_thm1_grid_size(self):
        # n in 1..4, m=1: 3 tuples, m=2: 9 tuples, twice for the q1 shadow
        instances = enumerate_instances(_cfg())
        assert len(instances) == 4 * (3 + 9) * 2

    def test_all_suite_is_union_of_parts(self):
        whole = set(enumerate_instances(_cfg(suite="all", sample_count=5)))
        parts = set()
        for s in ("thm1", "thm2", "identities", "conjecture", "faulhaber"):
            parts |= set(enumerate_instances(_cfg(suite=s, sample_count=5)))
        assert whole == parts

    def test_pfaff_samples_reproducible_and_in_range(self):
        inst = pfaff_sample_instances(50, 7, 8)
        assert inst == pfaff_sample_instances(50, 7, 8)
        for _, params in inst:
            d = dict(params)
            assert 0 <= d["n"] <= 8
            assert d["z_num"] != d["z_den"]  # z = 1 is redrawn
            assert abs(d["q_num"]) != d["q_den"]  # |q| = 1 is redrawn
            for key in ("x_den", "y_den", "z_den", "q_den"):
                assert d[key] >= 1

    def test_conjecture_triangle(self):
        inst = enumerate_instances(_cfg(suite="conjecture", n_max=3, m_max=3))
        pairs = {(dict(p)["m"], dict(p)["k"]) for _, p in inst}
        assert pairs == {(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)}


class TestExitCodes:
    def test_all_pass_is_zero(self):
        reports = [make_report("thm1", {"n": 2, "a1": 1}, PASS)]
        assert exit_code_for(reports) == 0

    def test_skips_do_not_fail(self):
        reports = [make_report("qpfaff", {"n": 1}, "skipped")]
        assert exit_code_for(reports) == 0

    def test_theorem_failure_is_one(self):
        reports = [
            make_report("conjecture", {"n": 2, "m": 1, "k": 1}, FAIL,
                        witness=Witness("1", "0", "1")),
            make_report("thm1", {"n": 2, "a1": 1}, FAIL,
                        witness=Witness("x", "0", "q")),
        ]
        assert exit_code_for(reports) == 1

    def test_conjecture_counterexample_is_three(self):
        reports = [
            make_report("thm1", {"n": 2, "a1": 1}, PASS),
            make_report("conjecture", {"n": 2, "m": 1, "k": 1}, FAIL,
                        witness=Witness("1", "0", "1")),
        ]
        assert exit_code_for(reports) == 3


class TestRendering:
    def _reports(self):
        return [
            make_report("sum_lemma", {"n": 3, "a": 1}, PASS, elapsed_ms=5),
            make_report("qpfaff", {"n": 1}, "skipped", elapsed_ms=2,
                        note="(q;q)_n vanishes"),
        ]

    def test_json_schema(self):
        text = render_report(self._reports(), "json")
        objs = json.loads(text)
        assert [list(o.keys()) for o in objs] == [
            ["claim_id", "params", "status", "witness", "elapsed_ms"]] * 2
        assert objs[0]["params"] == {"n": 3, "a": 1}
        assert objs[0]["elapsed_ms"] == 5
        assert text.endswith("\n")

    def test_json_stable_zeroes_elapsed(self):
        objs = json.loads(render_report(self._reports(), "json", stable=True))
        assert [o["elapsed_ms"] for o in objs] == [0, 0]

    def test_csv_layout(self):
        lines = render_report(self._reports(), "csv").splitlines()
        assert lines[0] == "claim_id,params,status,elapsed_ms"
        assert lines[1] == "sum_lemma,n=3;a=1,pass,5"
        assert lines[2] == "qpfaff,n=1,skipped,2"

    def test_text_has_summary_and_note(self):
        text = render_report(self._reports(), "text")
        assert "summary: 1 pass, 0 fail, 1 skipped" in text
        assert "(q;q)_n vanishes" in text


class TestExecution:
    def test_fail_fast_stops_after_first_failure(self, monkeypatch):
        calls = []

        def fake_runner(item):
            calls.append(item)
            claim_id, params = item
            return make_report(claim_id, dict(params), FAIL,
                               witness=Witness("1", "0", "1"))

        monkeypatch.setitem(sweep_mod._RUNNERS, "sum_lemma",
                            lambda d: fake_runner(("sum_lemma", tuple(d.items()))))
        instances = [("sum_lemma", (("n", i), ("a", 0))) for i in range(1, 6)]
        reports = execute(instances, jobs=1, fail_fast=True)
        assert len(reports) == 1
        assert len(calls) == 1

    def test_parallel_matches_serial(self):
        cfg = _cfg(suite="identities", n_max=4, a_max=2, prime_set=(2,),
                   sample_count=0)
        instances = enumerate_instances(cfg)
        serial = execute(instances, jobs=1)
        parallel = execute(instances, jobs=2)
        key = lambda r: r.sort_key
        assert [(r.claim_id, r.params, r.status) for r in sorted(serial, key=key)] \
            == [(r.claim_id, r.params, r.status) for r in sorted(parallel, key=key)]


class TestRunSuite:
    def test_pass_run_exit_zero(self, capsys):
        cfg = _cfg(suite="identities", n_max=3, a_max=2, prime_set=(2, 3),
                   format="json", stable_output=True)
        code = run_suite(cfg)
        captured = capsys.readouterr()
        assert code == 0
        assert captured.err == ""
        objs = json.loads(captured.out)
        assert all(o["status"] in ("pass", "skipped") for o in objs)

    def test_forced_failure_exit_one_and_loud_stderr(self, capsys, monkeypatch):
        def broken(d):
            return make_report("sum_lemma", d, FAIL,
                               witness=Witness("q + 1", "0", "q"))

        monkeypatch.setitem(sweep_mod._RUNNERS, "sum_lemma", broken)
        cfg = _cfg(suite="identities", n_max=2, a_max=1, prime_set=(2,),
                   format="text")
        code = run_suite(cfg)
        captured = capsys.readouterr()
        assert code == 1
        assert "CHECK FAILED" in captured.err
        assert "difference: q" in captured.err

    def test_forced_counterexample_exit_three(self, capsys, monkeypatch):
        def broken(d):
            return make_report("conjecture", d, FAIL,
                               witness=Witness("17", "0", "17"))

        monkeypatch.setitem(sweep_mod._RUNNERS, "conjecture", broken)
        cfg = _cfg(suite="conjecture", n_max=2, m_max=1)
        code = run_suite(cfg)
        captured = capsys.readouterr()
        assert code == 3
        assert "COUNTEREXAMPLE" in captured.err

    def test_stable_output_identical_across_jobs(self):
        import io
        outs = []
        for jobs in (1, 2):
            cfg = _cfg(suite="faulhaber", n_max=12, m_max=2, jobs=jobs,
                       format="json", stable_output=True)
            buf = io.StringIO()
            assert run_suite(cfg, out=buf) == 0
            outs.append(buf.getvalue())
        assert outs[0] == outs[1]


class TestMain:
    def test_unknown_suite_exits_two(self, capsys):
        assert main(["--suite", "bogus"]) == 2
        assert "invalid choice" in capsys.readouterr().err

    def test_missing_suite_exits_two(self, capsys):
        assert main([]) == 2

    def test_bad_primes_exit_two(self, capsys):
        assert main(["--suite", "thm2", "--primes", "2,x"]) == 2
        assert main(["--suite", "thm2", "--primes", "2,9"]) == 2
        assert "not prime" in capsys.readouterr().err

    def test_bad_n_max_exits_two(self, capsys):
        assert main(["--suite", "thm1", "--n-max", "0"]) == 2

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        assert "--suite" in capsys.readouterr().out

    def test_small_run_json(self, capsys):
        code = main(["--suite", "faulhaber", "--n-max", "8", "--m-max", "2",
                     "--format", "json", "--stable-output"])
        captured = capsys.readouterr()
        assert code == 0
        objs = json.loads(captured.out)
        assert len(objs) == 16
        assert {o["claim_id"] for o in objs} == {"faulhaber"}

    def test_jobs_env_default(self, capsys, monkeypatch):
        monkeypatch.setenv("QCONG_JOBS", "2")
        code = main(["--suite", "faulhaber", "--n-max", "4", "--m-max", "1",
                     "--format", "csv", "--stable-output"])
        assert code == 0
        assert len(capsys.readouterr().out.splitlines()) == 5

    def test_jobs_env_invalid_exits_two(self, capsys, monkeypatch):
        monkeypatch.setenv("QCONG_JOBS", "many")
        assert main(["--suite", "faulhaber", "--n-max", "2"]) == 2
        assert "QCONG_JOBS" in capsys.readouterr().err

    def test_explicit_jobs_overrides_env(self, capsys, monkeypatch):
        monkeypatch.setenv("QCONG_JOBS", "junk")
        code = main(["--suite", "faulhaber", "--n-max", "2", "--m-max", "1",
                     "--jobs", "1", "--format", "csv"])
        assert code == 0
