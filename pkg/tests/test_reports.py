"""Tests for the self-check reconciliations and the errata report."""

from __future__ import annotations

import math

import pytest

from wqsdc.kernel import make_rng
from wqsdc.reports import CheckResult, ErrataEntry, ErrataReport, build_errata, run_selfcheck
from wqsdc.reports.selfcheck import (
    check_accept_weight,
    check_blind_guess,
    check_cardano,
    check_inversion,
    check_monte_carlo,
    check_wn_family,
    check_window_threshold,
    check_w_type_state,
)


class TestErrataReport:
    """Tests for ErrataReport bookkeeping and rendering."""

    @pytest.fixture
    def report(self) -> ErrataReport:
        return ErrataReport(
            entries=[ErrataEntry("somewhere", "x = 1", "x = 2", {"x": 2.0}, "note")],
            checks=[
                CheckResult("good", True, 1e-14, 1e-12),
                CheckResult("bad", False, 0.5, 1e-12, "details"),
            ],
        )

    def test_failures(self, report: ErrataReport):
        assert not report.passed
        assert [c.name for c in report.failures] == ["bad"]

    def test_lookup(self, report: ErrataReport):
        assert report.entry("somewhere").adopted == "x = 2"
        assert report.check("good").passed
        with pytest.raises(KeyError):
            report.entry("elsewhere")
        with pytest.raises(KeyError):
            report.check("missing")

    def test_render_text(self, report: ErrataReport):
        text = report.render_text()
        assert text.startswith("Self-check: FAIL (1/2 checks)")
        assert "[FAIL] bad" in text
        assert "x = 2" in text
        assert "note: note" in text

    def test_to_dict(self, report: ErrataReport):
        data = report.to_dict()
        assert data["passed"] is False
        assert data["entries"][0]["evidence"] == {"x": 2.0}


class TestChecks:
    """Individual reconciliations."""

    def test_blind_guess(self):
        assert check_blind_guess().passed

    def test_wn_family(self):
        assert check_wn_family().passed

    def test_window_threshold(self):
        assert check_window_threshold().passed

    def test_w_type_state(self):
        assert check_w_type_state().passed

    def test_inversion(self):
        results = check_inversion(make_rng(0))
        assert len(results) == 2
        assert all(r.passed for r in results)

    def test_cardano(self):
        assert check_cardano(make_rng(0)).passed

    def test_accept_weight(self):
        assert check_accept_weight(make_rng(0)).passed

    @pytest.mark.slow
    def test_monte_carlo(self):
        assert check_monte_carlo().passed


@pytest.fixture(scope="module")
def entries() -> list[ErrataEntry]:
    return build_errata()


class TestErrata:
    """Tests for the errata ledger."""

    def test_at_least_six_entries(self, entries):
        assert len(entries) >= 6
        assert len({e.location for e in entries}) == len(entries)

    def test_printed_cardano_root(self, entries):
        entry = next(e for e in entries if e.location == "printed Cardano closed form")
        assert entry.evidence["printed_root"] == pytest.approx(0.764178, abs=1e-5)
        assert entry.evidence["numeric_root"] == pytest.approx(0.81, abs=1e-9)
        assert entry.evidence["corrected_cardano_root"] == pytest.approx(0.81, abs=1e-9)
        assert abs(entry.evidence["cubic_residual"]) > 0.1

    def test_correction_table(self, entries):
        entry = next(e for e in entries if e.location.startswith("correction table"))
        evidence = entry.evidence
        assert evidence["fidelity_table3_00"] == pytest.approx(1.0, abs=1e-12)
        assert evidence["fidelity_table3_10"] == pytest.approx(1.0, abs=1e-12)
        assert evidence["fidelity_table4_00"] < 1.0 - 1e-3

    def test_lower_bound(self, entries):
        entry = next(e for e in entries if e.location == "lower fill bound")
        assert entry.evidence["numeric_root"] == pytest.approx(0.12, abs=1e-9)
        assert entry.evidence["positive_root"] == pytest.approx(0.12)

    def test_isometry_probability(self, entries):
        entry = next(e for e in entries if "norm-preserving" in e.location)
        assert entry.evidence["paper_literal"] == pytest.approx(4 / 9)
        assert entry.evidence["physical_isometry"] < entry.evidence["paper_literal"]

    def test_raw_weight_exceeds_one(self, entries):
        entry = next(e for e in entries if "acceptance weight" in e.location)
        assert entry.evidence["largest_raw_weight"] == pytest.approx(1.2, abs=1e-12)
        assert entry.evidence["closed_form_weight"] == pytest.approx(1.2, abs=1e-12)

    def test_all_evidence_is_finite(self, entries):
        for entry in entries:
            for value in entry.evidence.values():
                assert math.isfinite(value)


@pytest.mark.slow
class TestRunSelfcheck:
    def test_everything_passes(self):
        report = run_selfcheck(seed=0)
        assert report.passed, [c.name for c in report.failures]
        assert len(report.entries) >= 6
        assert len(report.checks) >= 15
