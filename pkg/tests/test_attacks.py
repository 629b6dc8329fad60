"""Tests for the attack scenarios."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wqsdc.kernel import make_rng, random_state
from wqsdc.protocol import (
    AttackKind,
    ProtocolError,
    RunConfig,
    SecretState,
    attack_scenario,
    blind_guess_fidelity,
)


class TestAttackKind:
    def test_aliases(self):
        assert AttackKind.parse("receiver") is AttackKind.DISHONEST_RECEIVER
        assert AttackKind.parse("dishonest-controller") is AttackKind.DISHONEST_CONTROLLER
        assert AttackKind.parse("eve") is AttackKind.OUTSIDE_EVE

    def test_unknown(self):
        with pytest.raises(ValueError):
            AttackKind.parse("mallory")


class TestBlindGuess:
    def test_generic_secret(self, secret: SecretState):
        assert blind_guess_fidelity(secret) == pytest.approx(0.5, abs=1e-12)

    @given(st.integers(min_value=0, max_value=2**16))
    @settings(max_examples=30, deadline=None)
    def test_any_secret(self, seed: int):
        a, b = random_state(1, make_rng(seed)).amplitudes
        assert blind_guess_fidelity(SecretState(complex(a), complex(b))) == pytest.approx(
            0.5, abs=1e-12
        )


class TestDishonestReceiver:
    """Charlie guesses the correction without Bob's bits."""

    def test_analytic_mean_is_one_half(self, run_config: RunConfig):
        report = attack_scenario("receiver", run_config, shots=50)
        assert report.analytic_mean == pytest.approx(0.5, abs=1e-12)
        assert report.baselines["blind_guess"] == pytest.approx(0.5, abs=1e-12)

    def test_report_dict(self, run_config: RunConfig):
        data = attack_scenario("receiver", run_config, shots=20).to_dict()
        assert data["kind"] == "dishonest_receiver"
        assert data["stats"]["runs"] == 20

    def test_seeded(self, run_config: RunConfig):
        first = attack_scenario("receiver", run_config, shots=100, seed=5)
        second = attack_scenario("receiver", run_config, shots=100, seed=5)
        assert first.mean_fidelity == second.mean_fidelity

    @pytest.mark.slow
    def test_sampled_mean_near_one_half(self, run_config: RunConfig):
        report = attack_scenario("receiver", run_config, shots=20_000)
        assert report.mean_fidelity == pytest.approx(0.5, abs=2e-2)


class TestDishonestController:
    """Bob decodes Charlie's qubit without the shared-state parameters."""

    def test_sampled_mean_tracks_analytic(self, run_config: RunConfig):
        report = attack_scenario("controller", run_config, shots=4000)
        assert report.analytic_mean is not None
        assert 0.0 <= report.analytic_mean <= 1.0
        assert report.mean_fidelity == pytest.approx(report.analytic_mean, abs=4e-2)

    def test_baselines(self, run_config: RunConfig):
        report = attack_scenario("controller", run_config, shots=50)
        assert report.baselines["honest"] == 1.0
        assert "with_correct_bits_analytic" in report.baselines
        assert report.details["cloner"] == "p=q=0"


class TestOutsideEve:
    def test_no_quantum_link_between_bob_and_charlie(self, run_config: RunConfig):
        report = attack_scenario("eve", run_config, shots=10)
        assert report.details["bob_charlie_quantum_events"] == 0
        assert report.details["interceptable_secret_qubit"] is False
        # Alice sends B and C once per attempt.
        assert report.details["quantum_events"] == 2 * report.stats.attempts


class TestAttackScenario:
    def test_shots_checked(self, run_config: RunConfig):
        with pytest.raises(ProtocolError):
            attack_scenario("receiver", run_config, shots=0)

    def test_seed_defaults_to_config(self, run_config: RunConfig):
        assert attack_scenario("eve", run_config, shots=2).seed == run_config.seed
