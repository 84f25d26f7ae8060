"""Verification harness: outcome semantics, determinism, serialization."""

import json
import math

import numpy as np
import pytest

from betaquad import catalog, verify
from betaquad.catalog import core
from betaquad.quad import IntegralSpec

OUTCOME_FIELDS = [
    "entry_id", "sample_index", "params", "numeric", "closed",
    "abs_err", "rel_err", "evaluations", "status", "elapsed",
]
SUMMARY_FIELDS = [
    "entries", "outcomes", "passes", "failures", "worst_rel_err", "wall_ms", "verdict",
]


class TestVerifyEntry:
    def test_twenty_samples_all_pass(self):
        cfg = verify.RunConfig(seed=42, samples_per_entry=20)
        outcomes = verify.verify_entry(catalog.entry("3.191.3"), cfg)
        assert len(outcomes) == 20
        assert all(o.status == "pass" for o in outcomes)
        assert [o.sample_index for o in outcomes] == list(range(20))

    def test_outcome_invariants(self):
        cfg = verify.RunConfig(seed=7, samples_per_entry=5)
        for o in verify.verify_entry(catalog.entry("eq-4.3"), cfg):
            assert o.rel_err == o.abs_err / max(abs(o.closed), 1e-300)
            assert o.evaluations > 0
            assert o.elapsed_ms >= 0.0

    def test_zero_closed_uses_absolute_rule(self):
        cfg = verify.RunConfig(seed=7, samples_per_entry=5)
        for o in verify.verify_entry(catalog.entry("eq-11.5"), cfg):
            assert o.closed == 0.0
            assert o.status == "pass"
            assert o.abs_err <= 1e-9

    def test_pv_entry_passes_at_pv_tolerance(self):
        cfg = verify.RunConfig(seed=7, samples_per_entry=10)
        for o in verify.verify_entry(catalog.entry("3.313.1"), cfg):
            assert o.status == "pass"

    def test_wrong_closed_form_yields_fail_status(self):
        base = catalog.entry("eq-4.3")
        broken = core.IdentityRecord(
            id="broken",
            group="C",
            citation="deliberately wrong closed form",
            domain=base.domain,
            make_integrand=base.make_integrand,
            make_spec=base.make_spec,
            closed_form=lambda p: 1.0 + math.pi / math.sin(math.pi * p["a"]),
        )
        cfg = verify.RunConfig(seed=7, samples_per_entry=3)
        outcomes = verify.verify_entry(broken, cfg)
        assert all(o.status == "fail" for o in outcomes)

    def test_nonconvergent_flagged_distinctly(self):
        broken = core.IdentityRecord(
            id="kinked",
            group="A",
            citation="interior kink defeats the finite engine",
            domain=core.domain(core.real("a", 0.5, 1.5)),
            make_integrand=lambda p: (
                lambda x, dlo, dhi: np.abs(x - 1.0 / math.pi) ** 0.31
            ),
            make_spec=lambda p: IntegralSpec.finite(0.0, 1.0),
            closed_form=lambda p: 1.0,
        )
        cfg = verify.RunConfig(seed=7, samples_per_entry=2)
        outcomes = verify.verify_entry(broken, cfg)
        assert all(o.status == "quad_nonconverged" for o in outcomes)


class TestVerifyAll:
    def test_filtered_run(self):
        cfg = verify.RunConfig(
            seed=7, samples_per_entry=5, entry_filter=("3.217", "3.218")
        )
        report = verify.verify_all(cfg)
        assert report.entries == 2
        assert len(report.outcomes) == 10
        assert report.verdict == "pass"

    def test_totals_consistent(self):
        cfg = verify.RunConfig(
            seed=3, samples_per_entry=4, entry_filter=("3.191.3", "eq-4.3", "3.313.1")
        )
        report = verify.verify_all(cfg)
        assert report.passes + report.failures == len(report.outcomes) == 12

    def test_outcomes_sorted_canonically(self):
        cfg = verify.RunConfig(
            seed=3, samples_per_entry=3, entry_filter=("eq-4.3", "3.191.3"),
            parallelism=4,
        )
        report = verify.verify_all(cfg)
        keys = [(o.entry_id, o.sample_index) for o in report.outcomes]
        assert keys == sorted(keys)

    def test_parallelism_does_not_change_results(self):
        ids = ("3.191.3", "3.248.3", "3.313.1", "3.217")
        serial = verify.verify_all(
            verify.RunConfig(seed=7, samples_per_entry=4, entry_filter=ids)
        )
        threaded = verify.verify_all(
            verify.RunConfig(seed=7, samples_per_entry=4, entry_filter=ids, parallelism=8)
        )
        assert verify.report_to_jsonl(serial) == verify.report_to_jsonl(threaded)

    def test_rerun_byte_identical(self):
        cfg = verify.RunConfig(seed=1, samples_per_entry=2, entry_filter=("3.226.1",))
        first = verify.report_to_jsonl(verify.verify_all(cfg))
        second = verify.report_to_jsonl(verify.verify_all(cfg))
        assert first == second

    def test_config_validation(self):
        with pytest.raises(ValueError):
            verify.RunConfig(samples_per_entry=0)
        with pytest.raises(ValueError):
            verify.RunConfig(atol=-1.0)
        with pytest.raises(ValueError):
            verify.RunConfig(rtol_override=0.0)
        with pytest.raises(ValueError):
            verify.RunConfig(parallelism=0)


class TestCrossChecks:
    def test_all_pass(self):
        cfg = verify.RunConfig(seed=7, samples_per_entry=20)
        report = verify.cross_check_consistency(cfg)
        names = {c.name for c in report.checks}
        assert {
            "reflection-grid",
            "duplication-grid",
            "beta-symmetry",
            "duplication-chain-3.249.5",
            "fake-parameter-3.217",
            "fake-parameter-3.218",
        } <= names
        for check in report.checks:
            assert check.passed, (check.name, check.worst)
        assert report.verdict == "pass"

    def test_fake_parameter_tolerances(self):
        cfg = verify.RunConfig(seed=7, samples_per_entry=20)
        report = verify.cross_check_consistency(cfg)
        for check in report.checks:
            if check.name.startswith("fake-parameter"):
                assert check.worst <= 1e-7

    def test_fake_parameter_explicit_pair(self):
        # p = 0.3 at two scale values; both integrals equal pi*cot(0.3 pi)
        rec = catalog.entry("3.217")
        expected = math.pi / math.tan(0.3 * math.pi)
        values = []
        for b in (0.7, 2.3):
            params = {"p": 0.3, "b": b}
            res = verify.quad.integrate(
                rec.make_integrand(params), rec.make_spec(params), 1e-10
            )
            assert res.converged
            values.append(res.value)
        assert abs(values[0] - values[1]) <= 2e-7
        for v in values:
            assert abs(v - expected) <= 1e-7 * abs(expected)


class TestSerialization:
    def test_jsonl_schema(self):
        cfg = verify.RunConfig(seed=7, samples_per_entry=2, entry_filter=("3.191.3",))
        report = verify.verify_all(cfg)
        lines = verify.report_to_jsonl(report).strip().split("\n")
        assert len(lines) == 3  # 2 outcomes + summary
        for line in lines[:-1]:
            record = json.loads(line)
            assert list(record) == OUTCOME_FIELDS
        summary = json.loads(lines[-1])
        assert list(summary) == SUMMARY_FIELDS
        assert summary["verdict"] == "pass"
        assert summary["outcomes"] == 2

    def test_jsonl_timing_canonicalized(self):
        cfg = verify.RunConfig(seed=7, samples_per_entry=1, entry_filter=("eq-4.3",))
        report = verify.verify_all(cfg)
        lines = verify.report_to_jsonl(report).strip().split("\n")
        assert json.loads(lines[0])["elapsed"] == 0.0
        assert json.loads(lines[-1])["wall_ms"] == 0.0

    def test_text_format_has_table_and_summary(self):
        cfg = verify.RunConfig(seed=7, samples_per_entry=2, entry_filter=("3.191.3",))
        report = verify.verify_all(cfg)
        text = verify.report_to_text(report)
        assert "entry" in text.splitlines()[0]
        assert "3.191.3" in text
        assert "verdict=pass" in text

    def test_consistency_failure_flips_verdict(self):
        cfg = verify.RunConfig(seed=7, samples_per_entry=1, entry_filter=("3.191.3",))
        report = verify.verify_all(cfg)
        fake = verify.ConsistencyReport(
            [verify.ConsistencyCheck("synthetic", False, 1.0, "forced")], 0.0
        )
        summary = json.loads(verify.report_to_jsonl(report, fake).strip().split("\n")[-1])
        assert summary["verdict"] == "fail"
