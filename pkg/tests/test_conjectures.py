"""Bound verification and falsification machinery: scalar profiles, the
family scanners, and the exhaustive labeled-graph verifier."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qspectral import (
    CSV_COLUMNS,
    VERDICT_HOLDS,
    VERDICT_TIGHT,
    VERDICT_VIOLATED,
    bipartite_bound,
    exhaustive_verify,
    f_profile,
    find_counterexample_conj1,
    find_counterexample_conj2,
    g_profile,
    p_coefficient,
    spectrum_complete_bipartite,
    verify_conjecture1,
    zeta,
)


class TestProfiles:
    @given(
        # tiny x makes the complement unrepresentable (1 - (1 - x) != x), so
        # stay away from the endpoints; divergence there is tested separately
        st.floats(min_value=1e-3, max_value=1.0 - 1e-3, allow_nan=False),
        st.floats(min_value=0.0, max_value=6.0, allow_nan=False),
    )
    @settings(max_examples=200)
    def test_f_symmetric_about_half(self, x, alpha):
        assert f_profile(x, alpha) == pytest.approx(f_profile(1.0 - x, alpha), rel=1e-9)

    def test_f_endpoints(self):
        assert f_profile(0.0, 2.0) == 0.0
        assert f_profile(1.0, 2.0) == 0.0
        assert f_profile(0.0, 0.0) == 1.0
        with pytest.raises(ValueError, match="diverges"):
            f_profile(0.0, -1.0)
        with pytest.raises(ValueError, match="0 <= x <= 1"):
            f_profile(1.5, 2.0)

    def test_g_is_the_bipartite_power_sum_tail(self):
        for n in range(2, 15):
            for r in range(1, n):
                for alpha in (-1.5, 0.5, 2.0):
                    want = spectrum_complete_bipartite(r, n - r).s_alpha(alpha)
                    got = float(n) ** alpha + g_profile(r, n, alpha)
                    assert got == pytest.approx(want, rel=1e-12)

    def test_g_range_check(self):
        with pytest.raises(ValueError, match="1 <= r <= n-1"):
            g_profile(0, 5, 1.0)
        with pytest.raises(ValueError, match="1 <= r <= n-1"):
            g_profile(5, 5, 1.0)


class TestPCoefficient:
    def test_exact_small_exponents(self):
        # alpha in [1, 3] keeps the maximizer pinned at the balanced point
        for alpha, want in [(1.0, 0.5), (2.0, 0.25), (3.0, 0.125)]:
            value, x_star = p_coefficient(alpha)
            assert value == pytest.approx(want, abs=1e-12)
            assert x_star == 0.5
        value, x_star = p_coefficient(0.0)
        assert value == 1.0

    def test_alpha_four_leaves_the_center(self):
        # the maximizer splits away from 1/2: value 1/12 at (3 - sqrt(3))/6
        value, x_star = p_coefficient(4.0)
        assert value == pytest.approx(1.0 / 12.0, abs=1e-12)
        assert x_star == pytest.approx((3.0 - math.sqrt(3.0)) / 6.0, abs=1e-6)
        assert x_star != 0.5

    @pytest.mark.parametrize(
        "alpha,value,x_star",
        [
            (3.1, 0.117231352083219, 0.370925317676667),
            (3.5, 0.0972645141837517, 0.260189222988542),
            (5.0, 0.0670884555867369, 0.167765730202221),
            (8.0, 0.0433049476639971, 0.111111481994029),
        ],
    )
    def test_frozen_values(self, alpha, value, x_star):
        got_value, got_x = p_coefficient(alpha)
        assert got_value == pytest.approx(value, abs=1e-12)
        assert got_x == pytest.approx(x_star, abs=1e-6)

    def test_negative_alpha_rejected(self):
        with pytest.raises(ValueError, match="unbounded"):
            p_coefficient(-0.5)


class TestZeta:
    def test_balanced_is_extremal_in_proven_range(self):
        for alpha in (1.0, 1.5, 2.0, 2.5, 3.0):
            for n in range(2, 41):
                value, r = zeta(n, alpha)
                assert r == n // 2
                assert value == pytest.approx(bipartite_bound(n, alpha), rel=1e-12)

    def test_minimizes_for_negative_alpha(self):
        value, r = zeta(9, -1.0)
        per_r = {
            rr: spectrum_complete_bipartite(rr, 9 - rr).s_alpha(-1.0) for rr in range(1, 5)
        }
        assert value == pytest.approx(min(per_r.values()), rel=1e-12)
        assert per_r[r] == pytest.approx(value, rel=1e-12)

    def test_argmax_drifts_off_balance_for_large_alpha(self):
        _, r = zeta(100, 4.0)
        assert r < 50
        # normalized extremum approaches the profile coefficient from below
        value, _ = zeta(6400, 2.0)
        assert value / 6400.0**3 == pytest.approx(0.250078125, abs=1e-12)

    def test_small_n_rejected(self):
        with pytest.raises(ValueError, match="n >= 2"):
            zeta(1, 2.0)


class TestVerifyConjecture1:
    def test_everything_tight_in_proven_range(self):
        for alpha in (1.0, 1.5, 2.0, 2.5, 3.0):
            reports = verify_conjecture1(alpha, 40)
            assert len(reports) == 39
            for rep in reports:
                assert rep.verdict == VERDICT_TIGHT
                assert rep.param2 == rep.n // 2
                assert abs(rep.margin) <= 1e-9 * (1.0 + abs(rep.rhs))

    def test_out_of_range_alpha_refused(self):
        with pytest.raises(ValueError, match="outside"):
            verify_conjecture1(0.5, 10)
        with pytest.raises(ValueError, match="outside"):
            verify_conjecture1(3.5, 10)
        with pytest.raises(ValueError, match="n_max"):
            verify_conjecture1(2.0, 1)


class TestFalsifyConjecture1:
    def test_alpha_four_minimal_witness(self):
        rep = find_counterexample_conj1(4.0, 20)
        assert (rep.n, rep.param2) == (8, 3)
        assert rep.lhs == pytest.approx(5670.0, abs=1e-8)
        assert rep.rhs == pytest.approx(5632.0, abs=1e-8)
        assert rep.margin == pytest.approx(38.0, abs=1e-7)
        assert rep.witness == "complete bipartite 3+5"

    def test_alpha_three_and_a_half(self):
        rep = find_counterexample_conj1(3.5, 20)
        assert (rep.n, rep.param2) == (12, 5)
        assert rep.lhs == pytest.approx(11292.9893729, abs=1e-4)
        assert rep.rhs == pytest.approx(11276.8654354, abs=1e-4)

    def test_proven_range_yields_nothing(self):
        for alpha in (1.0, 2.0, 3.0, -0.5, -1.0, -2.0):
            assert find_counterexample_conj1(alpha, 12) is None

    def test_alpha_zero_rejected(self):
        with pytest.raises(ValueError, match="alpha = 0"):
            find_counterexample_conj1(0.0, 10)


class TestFalsifyConjecture2:
    def test_minimal_witness_k1(self):
        rep = find_counterexample_conj2(-2.0, 1, 60)
        assert (rep.n, rep.param2) == (5, 2)
        assert rep.margin == pytest.approx(0.546875, abs=1e-12)
        assert rep.lhs == pytest.approx(2.626736111111111, abs=1e-12)
        assert rep.rhs == pytest.approx(3.173611111111111, abs=1e-12)
        assert rep.witness == "split-clique n=5, k=1, r=2"

    def test_scan_all_r_finds_the_same_witness(self):
        rep = find_counterexample_conj2(-2.0, 1, 60, scan_all_r=True)
        assert (rep.n, rep.param2) == (5, 2)
        assert rep.margin == pytest.approx(0.546875, abs=1e-12)

    def test_higher_connectivity_witnesses(self):
        rep = find_counterexample_conj2(-2.0, 2, 60)
        assert (rep.n, rep.param2) == (8, 3)
        assert rep.lhs == pytest.approx(0.595679012345679, abs=1e-12)
        assert rep.rhs == pytest.approx(0.605555555555556, abs=1e-12)
        assert find_counterexample_conj2(-2.0, 3, 60).n == 19
        assert find_counterexample_conj2(-1.5, 3, 100).n == 79

    def test_mild_negative_alpha_survives_at_desk_scale(self):
        assert find_counterexample_conj2(-1.0, 1, 40) is None

    def test_validation(self):
        with pytest.raises(ValueError, match="alpha < 0"):
            find_counterexample_conj2(1.0, 1, 20)
        with pytest.raises(ValueError, match="k >= 1"):
            find_counterexample_conj2(-2.0, 0, 20)


class TestExhaustiveVerify:
    def test_bipartite_maximum_is_the_balanced_graph(self):
        rep = exhaustive_verify(5, 0.5, "bipartite")
        assert rep.verdict == VERDICT_TIGHT
        assert rep.lhs == pytest.approx(rep.rhs, rel=1e-12)
        assert rep.rhs == pytest.approx(bipartite_bound(5, 0.5), rel=1e-12)
        assert "over" in rep.witness and rep.witness.startswith("graph6:")

    def test_bipartite_minimum_at_negative_alpha(self):
        rep = exhaustive_verify(5, -1.0, "bipartite")
        assert rep.verdict == VERDICT_TIGHT
        assert rep.lhs == pytest.approx(23.0 / 15.0, rel=1e-12)

    def test_connectivity_extrema(self):
        rep = exhaustive_verify(5, 1.0, "connectivity", 1)
        assert rep.verdict == VERDICT_TIGHT
        assert rep.lhs == pytest.approx(14.0, abs=1e-9)
        rep = exhaustive_verify(5, 2.0, "connectivity", 2)
        assert rep.verdict == VERDICT_TIGHT
        assert rep.lhs == pytest.approx(70.0, abs=1e-8)

    def test_disconnected_graphs_break_the_lower_bound(self):
        # the empty graph has no nonzero eigenvalues at all, so its power sum
        # is 0 and the lower-bound reading collapses once the class widens
        rep = exhaustive_verify(4, -1.0, "bipartite", include_disconnected=True)
        assert rep.verdict == VERDICT_VIOLATED
        assert rep.lhs == 0.0
        assert rep.rhs == pytest.approx(1.25, abs=1e-12)
        assert rep.witness.startswith("graph6:C? ")

    def test_parallel_scan_matches_serial(self):
        serial = exhaustive_verify(6, 0.5, "bipartite", jobs=1)
        parallel = exhaustive_verify(6, 0.5, "bipartite", jobs=3)
        assert serial == parallel

    def test_size_guard(self):
        with pytest.raises(ValueError, match="force"):
            exhaustive_verify(9, 0.5, "bipartite")

    def test_argument_validation(self):
        with pytest.raises(ValueError, match="unknown mode"):
            exhaustive_verify(5, 0.5, "planar")
        with pytest.raises(ValueError, match="proven bipartite"):
            exhaustive_verify(5, 2.0, "bipartite")
        with pytest.raises(ValueError, match="k only applies"):
            exhaustive_verify(5, 0.5, "bipartite", 1)
        with pytest.raises(ValueError, match="needs k"):
            exhaustive_verify(5, 1.0, "connectivity")
        with pytest.raises(ValueError, match="1 <= k <= n-2"):
            exhaustive_verify(5, 1.0, "connectivity", 4)
        with pytest.raises(ValueError, match="proven connectivity"):
            exhaustive_verify(5, 0.5, "connectivity", 1)
        with pytest.raises(ValueError, match="connected by definition"):
            exhaustive_verify(5, 1.0, "connectivity", 1, include_disconnected=True)
        with pytest.raises(ValueError, match="n >= 2"):
            exhaustive_verify(1, 0.5, "bipartite")


class TestReportShapes:
    def test_row_keys_match_csv_schema(self):
        rep = exhaustive_verify(4, 0.5, "bipartite")
        assert tuple(rep.to_row().keys()) == CSV_COLUMNS
        cx = find_counterexample_conj2(-2.0, 1, 10)
        assert tuple(cx.to_row().keys()) == CSV_COLUMNS
        assert cx.to_row()["verdict"] == VERDICT_VIOLATED

    def test_json_dicts_carry_witnesses(self):
        rep = verify_conjecture1(2.0, 5)[0]
        d = rep.to_json_dict()
        assert d["witness"].startswith("complete bipartite")
        assert d["witness_edges"] == []
        assert set(CSV_COLUMNS) <= set(d)

    def test_verdict_vocabulary(self):
        assert {VERDICT_HOLDS, VERDICT_TIGHT, VERDICT_VIOLATED} == {
            "holds",
            "tight",
            "violated",
        }
