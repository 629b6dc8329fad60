"""Tests for the concurrence fill and the W_n family."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wqsdc.entanglement import (
    ConcurrenceTriple,
    InvalidFamilyIndexError,
    QubitCountError,
    WnParams,
    concurrence_fill,
    concurrence_triple,
    fill_closed_form,
    fill_from_triple,
    w_class_state,
    w_class_triple,
    wn_fill,
    wn_state,
)
from wqsdc.kernel import StateVector, basis_state, make_rng, random_state
from wqsdc.protocol import WStateParams

LABELS = ("A", "B", "C")

triples = st.tuples(
    st.floats(min_value=0.01, max_value=1.0),
    st.floats(min_value=0.01, max_value=1.0),
    st.floats(min_value=0.01, max_value=1.0),
).map(lambda t: tuple(v / sum(t) for v in t))


def ghz() -> StateVector:
    amps = np.zeros(8)
    amps[0] = amps[7] = 1 / np.sqrt(2)
    return StateVector(LABELS, amps)


class TestConcurrenceTriple:
    """Tests for one-to-rest squared concurrences."""

    def test_product_state(self):
        triple = concurrence_triple(basis_state("010", LABELS))
        assert triple.as_tuple() == pytest.approx((0.0, 0.0, 0.0))

    def test_ghz(self):
        assert concurrence_triple(ghz()).as_tuple() == pytest.approx((1.0, 1.0, 1.0))

    def test_needs_three_qubits(self):
        with pytest.raises(QubitCountError):
            concurrence_triple(basis_state("01"))

    @given(triples)
    @settings(max_examples=40, deadline=None)
    def test_w_class_closed_form(self, triple):
        state = w_class_state(WStateParams.from_squared(*triple))
        assert concurrence_triple(state).as_tuple() == pytest.approx(
            w_class_triple(*triple).as_tuple(), abs=1e-12
        )

    def test_q_is_half_the_sum(self):
        assert ConcurrenceTriple(0.2, 0.4, 0.6).q == pytest.approx(0.6)


class TestConcurrenceFill:
    """Tests for the fill measure."""

    def test_ghz_fill_is_one(self):
        assert concurrence_fill(ghz()).fill == pytest.approx(1.0)

    def test_product_fill_is_zero(self):
        assert concurrence_fill(basis_state("000", LABELS)).fill == pytest.approx(0.0)

    def test_biseparable_fill_is_zero(self):
        amps = np.zeros(8)
        amps[0b000] = amps[0b011] = 1 / np.sqrt(2)
        assert concurrence_fill(StateVector(LABELS, amps)).fill == pytest.approx(0.0, abs=1e-6)

    def test_balanced_w(self):
        report = concurrence_fill(WStateParams.from_squared(1 / 3, 1 / 3, 1 / 3))
        assert report.fill == pytest.approx(8 / 9, abs=5e-6)
        assert report.fill == pytest.approx(0.88889, abs=5e-6)

    @given(triples)
    @settings(max_examples=40, deadline=None)
    def test_closed_form_matches_generic(self, triple):
        generic = concurrence_fill(w_class_state(WStateParams.from_squared(*triple))).fill
        assert fill_closed_form(*triple) == pytest.approx(generic, abs=1e-10)

    @given(st.integers(min_value=0, max_value=2**16))
    @settings(max_examples=30, deadline=None)
    def test_random_states_in_unit_interval(self, seed: int):
        fill = concurrence_fill(random_state(3, make_rng(seed), LABELS)).fill
        assert 0.0 <= fill <= 1.0 + 1e-12

    def test_report_dict(self):
        data = fill_from_triple(ConcurrenceTriple(1.0, 1.0, 1.0)).to_dict()
        assert data["fill"] == pytest.approx(1.0)
        assert data["q"] == pytest.approx(1.5)


class TestWnFamily:
    """Tests for the W_n family."""

    def test_n_one(self):
        assert wn_fill(1) == pytest.approx(0.8036, abs=5e-4)

    def test_decreasing(self):
        values = [wn_fill(n) for n in range(1, 51)]
        assert all(b < a for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("n", [1, 2, 5, 20])
    def test_matches_generic_pipeline(self, n):
        assert concurrence_fill(wn_state(WnParams(n))).fill == pytest.approx(wn_fill(n), abs=1e-10)

    def test_phases_do_not_change_fill(self):
        phased = wn_state(WnParams(3, phase_gamma=0.7, phase_delta=-1.2))
        assert concurrence_fill(phased).fill == pytest.approx(wn_fill(3), abs=1e-10)

    @pytest.mark.parametrize("n", [0, -1, 1.5, True])
    def test_invalid_index(self, n):
        with pytest.raises(InvalidFamilyIndexError):
            wn_fill(n)
        with pytest.raises(InvalidFamilyIndexError):
            WnParams(n)
