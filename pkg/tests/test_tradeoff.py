"""Tests for the distance and fill tradeoffs and their inversion."""

from __future__ import annotations

import math

import pytest
from hypothesis import example, given, settings
from hypothesis import strategies as st

from wqsdc.cloning import CloneMachineSpec, average_hs_distance
from wqsdc.entanglement import concurrence_fill, w_class_state, w_class_triple
from wqsdc.protocol import WStateParams
from wqsdc.tradeoff import (
    FILL_CEILING,
    WINDOW_THRESHOLD,
    FillOutOfRangeError,
    TradeoffError,
    TradeoffPoint,
    alpha_gamma_budget,
    cardano_root,
    cardano_trace,
    cfill_components,
    cubic_residual,
    dbar_from_ps,
    fill_bounds,
    fill_from_ps,
    ps_from_fill,
    ps_window,
    window_quadratic,
)

ps_values = st.floats(min_value=0.01, max_value=1.0)
small_betas = st.floats(min_value=1e-3, max_value=0.17)
triples = st.tuples(
    st.floats(min_value=0.01, max_value=1.0),
    st.floats(min_value=0.01, max_value=1.0),
    st.floats(min_value=0.01, max_value=1.0),
).map(lambda t: tuple(v / sum(t) for v in t))


class TestDistanceTradeoff:
    """Tests for the average distance written through P_s."""

    def test_reference_point(self):
        assert dbar_from_ps(0.04, 0.8, 0.1, 0.1) == pytest.approx(0.351852, abs=1e-6)

    def test_free_point_below_one_third(self):
        assert dbar_from_ps(0.3, 0.8, 0.1, 0.1) < 1 / 3

    @given(triples)
    @settings(max_examples=40, deadline=None)
    def test_constrained_surface_matches_cloner(self, triple):
        a, b, g = triple
        wparams = WStateParams.from_squared(a, b, g)
        expected = average_hs_distance(CloneMachineSpec(wparams.alpha, wparams.gamma))
        assert dbar_from_ps(min(4 * a * g, 1.0), b, a, g) == pytest.approx(expected, abs=1e-12)
        assert expected >= 1 / 3 - 1e-12

    def test_unit_range_checked(self):
        with pytest.raises(TradeoffError):
            dbar_from_ps(1.2, 0.5, 0.25, 0.25)


class TestWindow:
    """Tests for the P_s window with average distance below 1/3."""

    def test_window_at_point_eight(self):
        window = ps_window(0.8)
        assert window.lo == pytest.approx(0.2)
        assert window.hi == pytest.approx(0.4)
        assert window.contains(0.3)
        assert not window.contains(0.5)

    def test_empty_below_threshold(self):
        window = ps_window(0.5)
        assert window.empty
        assert window.width == 0.0
        assert not window.contains(0.1)

    def test_threshold_is_degenerate(self):
        window = ps_window(WINDOW_THRESHOLD)
        assert WINDOW_THRESHOLD == pytest.approx((3 - math.sqrt(2)) / 2)
        assert window.lo == pytest.approx((2 - math.sqrt(2)) / 2, abs=1e-9)
        assert window.width == pytest.approx(0.0, abs=1e-9)

    @given(st.floats(min_value=WINDOW_THRESHOLD + 1e-9, max_value=1.0))
    @settings(max_examples=40, deadline=None)
    def test_endpoints_are_roots(self, beta_sq):
        window = ps_window(beta_sq)
        assert window_quadratic(window.lo, beta_sq) == pytest.approx(0.0, abs=1e-10)
        assert window_quadratic(window.hi, beta_sq) == pytest.approx(0.0, abs=1e-10)

    def test_budget(self):
        lo, hi = alpha_gamma_budget()
        assert lo == 0.0
        assert hi == pytest.approx(1 / math.sqrt(2) - 0.5)
        assert 1.0 - WINDOW_THRESHOLD == pytest.approx(hi)

    def test_to_dict(self):
        assert ps_window(0.5).to_dict() == {"beta_sq": 0.5, "lo": None, "hi": None}


class TestFillTradeoff:
    """Tests for the fill written through P_s."""

    def test_reference_point(self):
        assert fill_from_ps(0.81, 0.1) == pytest.approx(0.6361, abs=1e-4)

    @given(triples)
    @settings(max_examples=40, deadline=None)
    def test_matches_generic_pipeline(self, triple):
        a, b, g = triple
        generic = concurrence_fill(w_class_state(WStateParams.from_squared(a, b, g))).fill
        assert fill_from_ps(4 * a * g, b) == pytest.approx(generic, abs=1e-10)

    @given(triples)
    @settings(max_examples=40, deadline=None)
    def test_components_match_closed_form(self, triple):
        params = WStateParams.from_squared(*triple)
        ps = 4 * triple[0] * triple[2]
        assert cfill_components(ps, params).as_tuple() == pytest.approx(
            w_class_triple(*triple).as_tuple(), abs=1e-12
        )

    def test_components_need_alpha_and_gamma(self):
        with pytest.raises(TradeoffError):
            cfill_components(0.0, WStateParams.from_squared(0.0, 0.5, 0.5))

    def test_bounds(self):
        assert fill_bounds(0.1).lower == pytest.approx(0.19596, abs=1e-5)
        upper = fill_bounds(0.17)
        assert upper.upper == pytest.approx(0.8891, abs=1e-4)
        assert upper.capped_upper == FILL_CEILING

    def test_bounds_need_interior_beta(self):
        with pytest.raises(TradeoffError):
            fill_bounds(0.0)

    def test_point_at(self):
        point = TradeoffPoint.at(0.04, 0.8, 0.1, 0.1)
        assert point.dbar == pytest.approx(0.351852, abs=1e-6)
        assert point.fill == pytest.approx(fill_from_ps(0.04, 0.8))
        assert point.constrained

    def test_point_needs_both_magnitudes(self):
        with pytest.raises(TradeoffError):
            TradeoffPoint.at(0.1, 0.5, alpha_sq=0.25)

    def test_point_normalization(self):
        with pytest.raises(TradeoffError):
            TradeoffPoint.at(0.1, 0.5, 0.3, 0.3)

    def test_point_without_magnitudes(self):
        point = TradeoffPoint.at(0.3, 0.8)
        assert point.dbar is None
        assert not point.constrained


class TestInversion:
    """Tests for solving the fill relation for P_s."""

    @given(ps_values, small_betas)
    @settings(max_examples=60, deadline=None)
    def test_round_trip(self, ps, beta_sq):
        solution = ps_from_fill(fill_from_ps(ps, beta_sq), beta_sq)
        assert solution.ps == pytest.approx(ps, abs=1e-8)
        assert abs(solution.residual) <= 1e-12

    def test_lower_bound_root(self):
        bound = fill_bounds(0.1).lower
        assert ps_from_fill(bound, 0.1).ps == pytest.approx(0.12, abs=1e-9)

    def test_ceiling(self):
        assert ps_from_fill(FILL_CEILING, 0.17).ps == pytest.approx(0.847, abs=1e-3)

    def test_zero_fill(self):
        assert ps_from_fill(0.0, 0.1).ps == 0.0

    def test_root_above_one_raises(self):
        fill = fill_from_ps(1.0, 0.1) + 0.01
        with pytest.raises(FillOutOfRangeError) as exc_info:
            ps_from_fill(fill, 0.1)
        assert exc_info.value.beta_sq == 0.1

    def test_enforced_bounds(self):
        with pytest.raises(FillOutOfRangeError):
            ps_from_fill(0.1, 0.1, enforce_bounds=True)
        assert ps_from_fill(0.3, 0.1, enforce_bounds=True).ps > 0.0

    def test_negative_fill(self):
        with pytest.raises(TradeoffError):
            ps_from_fill(-0.1, 0.1)

    def test_unknown_method(self):
        with pytest.raises(TradeoffError):
            ps_from_fill(0.3, 0.1, method="newton")


class TestCardano:
    """Tests for the printed and corrected Cardano roots."""

    def test_printed_root_misses(self):
        fill = fill_from_ps(0.81, 0.1)
        trace = cardano_trace(fill, 0.1)
        assert trace.paper_root == pytest.approx(0.764178, abs=1e-5)
        assert cubic_residual(trace.paper_root, fill, 0.1) == pytest.approx(-0.1111, abs=1e-3)
        assert ps_from_fill(fill, 0.1, method="paper_closed_form").ps == trace.paper_root

    def test_coefficients(self):
        trace = cardano_trace(0.5, 0.1)
        c2 = 4 * 0.1 * 0.9
        assert trace.a1 == pytest.approx(c2 / 3)
        assert trace.H == pytest.approx(-(c2**2) / 9)
        assert trace.G == pytest.approx(trace.a3 + 2 * trace.a1**3)

    def test_trace_dict_splits_complex(self):
        data = cardano_trace(0.3, 0.1).to_dict()
        assert len(data["u3"]) == 2
        assert len(data["v3"]) == 2

    @given(ps_values, small_betas)
    @example(1.0, 0.00390625)
    @settings(max_examples=60, deadline=None)
    def test_corrected_root_matches_numeric(self, ps, beta_sq):
        fill = fill_from_ps(ps, beta_sq)
        assert cardano_root(fill, beta_sq) == pytest.approx(
            ps_from_fill(fill, beta_sq).ps, abs=1e-9
        )

    def test_corrected_root_near_full_success(self):
        fill = fill_from_ps(1.0, 0.00390625)
        assert cardano_root(fill, 0.00390625) == pytest.approx(1.0, abs=1e-11)

    def test_lower_bound_root(self):
        assert cardano_root(fill_bounds(0.1).lower, 0.1) == pytest.approx(0.12, abs=1e-6)
