"""Tests for the symmetric cloning machine and its distance analytics."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wqsdc.cloning import (
    CloneMachineSpec,
    CloningError,
    Convention,
    InputQubit,
    InputRangeError,
    analytic_hs_distance,
    average_hs_distance,
    build_clone_map,
    clone,
    clone_state,
    da_from_matrices,
    fidelity_of_copy,
    reduced_outputs,
)
from wqsdc.kernel import basis_state

amplitude = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)
m_values = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


class TestConvention:
    def test_parse_aliases(self):
        assert Convention.parse("physical") is Convention.PHYSICAL_ISOMETRY
        assert Convention.parse("paper-literal") is Convention.PAPER_LITERAL
        assert Convention.parse(Convention.PAPER_LITERAL) is Convention.PAPER_LITERAL

    def test_parse_unknown(self):
        with pytest.raises(ValueError):
            Convention.parse("bogus")


class TestCloneMachineSpec:
    """Tests for cloner parameters and the clone map."""

    def test_non_finite_parameter_rejected(self):
        with pytest.raises(CloningError):
            CloneMachineSpec(p=complex("nan"))

    def test_unitarity_norms(self):
        spec = CloneMachineSpec(1.0, 0.5)
        assert spec.unitarity_norms() == pytest.approx((1 / 3, 1 / 1.5))

    def test_literal_images_are_not_normalized(self):
        norms = build_clone_map(CloneMachineSpec(1.0, 0.5)).squared_norms()
        assert norms == pytest.approx([3.0, 1.5])

    def test_physical_images_are_normalized(self):
        spec = CloneMachineSpec(1.0, 0.5, Convention.PHYSICAL_ISOMETRY)
        assert build_clone_map(spec).squared_norms() == pytest.approx([1.0, 1.0])

    def test_zero_parameters_copy_basis_states(self):
        out = clone_state(basis_state("1", ("in",)), CloneMachineSpec())
        assert out.amplitudes[0b111] == pytest.approx(1.0)
        assert out.labels == ("a", "b", "c")

    def test_clone_needs_one_qubit(self):
        with pytest.raises(CloningError):
            clone_state(basis_state("00"), CloneMachineSpec())

    def test_with_convention(self):
        spec = CloneMachineSpec(0.3, 0.2).with_convention("physical")
        assert spec.convention is Convention.PHYSICAL_ISOMETRY
        assert spec.p == 0.3


class TestInputQubit:
    def test_normalization_checked(self):
        with pytest.raises(InputRangeError):
            InputQubit(1.0, 1.0)

    def test_from_m(self):
        qubit = InputQubit.from_m(0.25)
        assert qubit.m == pytest.approx(0.25)
        with pytest.raises(InputRangeError):
            InputQubit.from_m(1.5)


class TestReducedOutputs:
    """Tests for reduced density matrices of the clone output."""

    def test_exact_copy_of_zero_parameter_cloner(self):
        out = clone(InputQubit.from_m(0.5), CloneMachineSpec())
        rho = reduced_outputs(out, "copy")
        assert np.allclose(rho.entries, np.eye(2) / 2)

    def test_paper_diagonal_pair_has_unit_trace_for_basis_inputs(self):
        spec = CloneMachineSpec(0.4, 0.7)
        rho = reduced_outputs(clone(InputQubit(1.0, 0.0), spec), "pair", "paper_diagonal")
        assert rho.trace == pytest.approx(1.0)

    def test_unknown_selection(self):
        out = clone(InputQubit.from_m(0.5), CloneMachineSpec())
        with pytest.raises(CloningError):
            reduced_outputs(out, "machine")
        with pytest.raises(CloningError):
            reduced_outputs(out, "original", "approximate")

    def test_copy_fidelity_of_zero_parameter_cloner(self):
        assert fidelity_of_copy(InputQubit.from_m(1.0), CloneMachineSpec()) == pytest.approx(1.0)
        assert fidelity_of_copy(InputQubit.from_m(0.5), CloneMachineSpec()) == pytest.approx(0.5)


class TestHsDistance:
    """Tests for the per-input and averaged HS distances."""

    def test_endpoints(self):
        spec = CloneMachineSpec(1.0, 0.5)
        q4 = 4 * 0.25**2 / 1.5**2
        p4 = 4 / 9
        assert analytic_hs_distance(0.0, spec) == pytest.approx(q4)
        assert analytic_hs_distance(1.0, spec) == pytest.approx(p4)

    def test_m_range(self):
        with pytest.raises(InputRangeError):
            analytic_hs_distance(-0.1, CloneMachineSpec())

    def test_reference_averages(self):
        assert average_hs_distance(CloneMachineSpec()) == pytest.approx(1 / 3)
        assert average_hs_distance(CloneMachineSpec(1.0, 1.0)) == pytest.approx(17 / 27)

    @given(amplitude, amplitude, amplitude, amplitude)
    @settings(max_examples=30, deadline=None)
    def test_closed_form_matches_simpson(self, pr, pi, qr, qi):
        spec = CloneMachineSpec(complex(pr, pi), complex(qr, qi))
        closed = average_hs_distance(spec)
        for integrand in ("analytic", "matrix"):
            numeric = average_hs_distance(spec, method="numeric", integrand=integrand)
            assert numeric == pytest.approx(closed, abs=1e-9)

    @given(m_values, amplitude, amplitude)
    @settings(max_examples=30, deadline=None)
    def test_analytic_matches_matrices(self, m, p, q):
        spec = CloneMachineSpec(p, q)
        x, y = np.sqrt(m), np.sqrt(1 - m)
        assert da_from_matrices(x, y, spec) == pytest.approx(
            analytic_hs_distance(m, spec), abs=1e-12
        )

    @given(amplitude, amplitude)
    @settings(max_examples=30, deadline=None)
    def test_average_never_below_one_third(self, p, q):
        assert average_hs_distance(CloneMachineSpec(p, q)) >= 1 / 3 - 1e-15

    def test_simpson_panel_checks(self):
        with pytest.raises(CloningError):
            average_hs_distance(CloneMachineSpec(), method="numeric", panels=7)
        with pytest.raises(CloningError):
            average_hs_distance(CloneMachineSpec(), method="trapezoid")
