"""Deformed Touchard polynomials: closed forms, routes, and the oracle."""

import dataclasses
from fractions import Fraction

import pytest

from pqtouchard import (
    IDENTITY_NAMES,
    MultiPoly,
    ROUTES,
    VerificationReport,
    avg_nse,
    bell,
    count_partitions,
    dist_poly,
    exp_q_series,
    exp_q_values,
    factorial,
    s_pq,
    s_uv,
    stat_report,
    stirling2,
    taylor_oracle,
    touchard_eval,
    touchard_poly,
    touchard_result,
    touchard_series,
    verify_identity,
)

X, P, Q, U, V = (MultiPoly.var(name) for name in "xpquv")


class TestDeformedExponential:
    def test_symbolic_prefix(self):
        series = exp_q_series(3)
        assert series[0] == 1
        assert series[1] == 1
        assert series[2] == Q
        assert series[3] == 2 * Q**2 - Q

    def test_alternate_variable(self):
        assert exp_q_series(2, var="p")[2] == P

    def test_classical_point(self):
        assert exp_q_values(1, 5).coeffs == [Fraction(1)] * 6

    def test_rational_point(self):
        assert exp_q_values(3, 3).coeffs == [1, 1, 3, 15]
        assert exp_q_values(Fraction(1, 2), 4).coeffs == [1, 1, Fraction(1, 2), 0, 0]

    def test_bad_order(self):
        with pytest.raises(ValueError):
            exp_q_series(-1)


class TestConnectionCoefficients:
    def test_small_uv(self):
        assert s_uv(0, 0) == 1
        assert s_uv(1, 1) == 1
        assert s_uv(2, 1) == 1 + V
        assert s_uv(2, 2) == 1 + U
        assert s_uv(3, 2) == 3 * (1 + U) * (1 + V)

    def test_out_of_range_is_zero(self):
        assert s_uv(3, 5).is_zero
        assert s_uv(3, 0).is_zero
        assert s_uv(0, 2).is_zero
        assert s_uv(-1, 0).is_zero

    def test_matches_enumeration(self):
        for n in range(1, 6):
            for k in range(1, n + 1):
                assert s_uv(n, k) == dist_poly(n, k)

    def test_small_pq(self):
        assert s_pq(2, 1) == Q
        assert s_pq(2, 2) == P
        assert s_pq(3, 1) == 2 * Q**2 - Q
        assert s_pq(3, 2) == 3 * P * Q
        assert s_pq(3, 3) == 2 * P**2 - P

    def test_pq_specializations_count_the_flavors(self):
        corners = {(1, 1): "ssp", (2, 1): "lsp", (1, 2): "slp", (2, 2): "llp"}
        for n in range(9):
            for k in range(n + 1):
                for (p, q), flavor in corners.items():
                    value = s_pq(n, k).evaluate({"p": p, "q": q})
                    assert value == count_partitions(n, k, flavor)


class TestTouchardPoly:
    def test_first_few(self):
        assert touchard_poly(0) == 1
        assert touchard_poly(1) == X
        assert touchard_poly(2) == Q * X + P * X**2
        expected = (2 * Q**2 - Q) * X + 3 * P * Q * X**2 + (2 * P**2 - P) * X**3
        assert touchard_poly(3) == expected

    def test_classical_point_is_stirling_row(self):
        assert touchard_poly(3).evaluate({"p": 1, "q": 1, "x": 1}) == bell(3)
        collapsed = touchard_poly(3).substitute("p", 1).substitute("q", 1)
        assert collapsed == X + 3 * X**2 + X**3

    def test_shape(self):
        for n in range(1, 16):
            poly = touchard_poly(n)
            assert poly.degree("x") == n
            assert poly.coefficient("x", 0).is_zero

    def test_routes_agree(self):
        for n in range(7):
            sub = touchard_poly(n)
            for route in ROUTES[1:]:
                assert touchard_poly(n, route) == sub

    def test_validation(self):
        with pytest.raises(ValueError, match="route"):
            touchard_poly(2, "lagrange")
        with pytest.raises(ValueError):
            touchard_poly(-1)
        with pytest.raises(ValueError):
            touchard_poly(True)

    def test_result_record(self):
        result = touchard_result(2, "explicit")
        assert result.n == 2
        assert result.route == "explicit"
        assert result.poly == touchard_poly(2)
        with pytest.raises(dataclasses.FrozenInstanceError):
            result.n = 3


class TestSeriesRoute:
    def test_matches_polynomials(self):
        series = touchard_series(6)
        for n in range(7):
            assert series[n] == touchard_poly(n)

    def test_bell_numbers_at_classical_point(self):
        series = touchard_series(6)
        values = [series[n].evaluate({"x": 1, "p": 1, "q": 1}) for n in range(7)]
        assert values == [1, 1, 2, 5, 15, 52, 203]


class TestEval:
    def test_bell(self):
        for n in range(9):
            assert touchard_eval(n, 1, 1, 1) == bell(n)

    def test_doubled_parameters(self):
        # both deformations at 2 collapse to ordered objects: n! * 2^(n-1)
        for n in range(1, 9):
            assert touchard_eval(n, 1, 2, 2) == factorial(n) * 2 ** (n - 1)

    def test_degenerate(self):
        assert touchard_eval(0, 5, Fraction(-7, 3), 9) == 1

    def test_rational_point(self):
        assert touchard_eval(2, Fraction(1, 2), 3, Fraction(1, 5)) == Fraction(17, 20)


class TestTaylorOracle:
    def test_geometric_case(self):
        # x=1, p=q=2 collapses to (1-t)/(1-2t): 1, 1, 2, 4, 8, ...
        assert taylor_oracle(1, 2, 2, 5) == [1, 1, 2, 4, 8, 16]

    def test_x_zero(self):
        assert taylor_oracle(0, 2, 3, 4) == [1, 0, 0, 0, 0]

    def test_rational_entry(self):
        assert taylor_oracle(1, 3, 2, 2)[2] == Fraction(5, 2)

    def test_matches_eval(self):
        for n in range(8):
            expected = touchard_eval(n, Fraction(1, 2), -1, 3) / factorial(n)
            assert taylor_oracle(Fraction(1, 2), -1, 3, 7)[n] == expected

    def test_classical_limit_refused(self):
        with pytest.raises(ValueError, match="touchard_series"):
            taylor_oracle(1, 1, 2, 4)
        with pytest.raises(ValueError, match="q != 1"):
            taylor_oracle(1, 2, 1, 4)


class TestAvgNse:
    def test_values(self):
        assert avg_nse(1) == 0
        assert avg_nse(2) == Fraction(1, 3)
        assert avg_nse(3) == Fraction(10, 13)

    def test_matches_enumeration(self):
        from pqtouchard import enumerate_partitions, nse

        for n in range(1, 6):
            total = moved = 0
            for k in range(1, n + 1):
                for pi in enumerate_partitions(n, k, "slp"):
                    total += 1
                    moved += nse(pi)
            assert avg_nse(n) == Fraction(moved, total)

    def test_validation(self):
        with pytest.raises(ValueError):
            avg_nse(0)
        with pytest.raises(ValueError):
            avg_nse(-3)


class TestStatReport:
    def test_consistent_cell(self):
        report = stat_report(3, 2)
        assert report.passed
        assert report.cardinality == 12
        assert report.poly == report.formula
        assert dict(report.checks)["formula-match"]
        assert len(report.checks) == 5

    def test_another_cell(self):
        assert stat_report(4, 3).passed


class TestVerifyIdentity:
    SMALL = {
        "stirling12": 10,
        "orthogonality": 10,
        "slp-count": 6,
        "llp-grid": 5,
        "lsp-slice": 5,
        "slp-slice": 5,
        "series-vs-explicit": 6,
        "oracle-vs-eval": 4,
    }

    @pytest.mark.parametrize("name", IDENTITY_NAMES)
    def test_passes(self, name):
        report = verify_identity(name, n_max=self.SMALL[name])
        assert report.passed
        assert report.failures == 0
        assert report.first_counterexample is None
        assert "PASS" in report.summary()
        assert name in report.summary()

    def test_grid_override(self):
        grid = {"x": (Fraction(2),), "p": (Fraction(3),), "q": (Fraction(-1),)}
        report = verify_identity("oracle-vs-eval", n_max=5, grid=grid)
        assert report.passed
        assert len(report.cells) == 1

    def test_unknown_identity(self):
        with pytest.raises(ValueError, match="stirling12"):
            verify_identity("reciprocity")

    def test_negative_budget(self):
        with pytest.raises(ValueError, match="n_max"):
            verify_identity("stirling12", n_max=-1)

    def test_failure_reporting(self):
        report = VerificationReport(
            "demo", 3, (("a", True), ("b", False)), "b: 1 != 2"
        )
        assert not report.passed
        assert report.failures == 1
        summary = report.summary()
        assert "FAIL" in summary
        assert "b: 1 != 2" in summary


class TestStirlingBridge:
    def test_row_sums_give_lsp_totals(self):
        # at u=1, v=0 the k-th coefficient counts lists of sets
        for n in range(1, 7):
            row = sum(
                s_uv(n, k).evaluate({"u": 1, "v": 0}) for k in range(1, n + 1)
            )
            assert row == sum(
                factorial(k) * stirling2(n, k) for k in range(1, n + 1)
            )
