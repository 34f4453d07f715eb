import math

import pytest

from hookcomb.experiments import (
    AsymptoticFit,
    asymptotic_fit,
    catalan,
    check_conjectures,
    check_eq2,
    check_tamari_image,
    distinct_real_roots,
    real_rooted,
    reduced_count,
    triangle,
    vhc_count_exhaustive,
    vhc_tallies_312,
)


class TestTriangle:
    def test_rows_1_to_3(self):
        rows = triangle(3)
        assert [row.entries for row in rows] == [(1,), (3, 5), (14, 51, 42)]

    def test_first_column_formula(self):
        for row in triangle(3):
            k = row.k
            assert row.entries[0] == catalan(k) * catalan(k + 2) - catalan(k + 1) ** 2

    def test_diagonal_is_three_dimensional_catalan(self):
        for row in triangle(3):
            k = row.k
            expected = (
                2
                * math.factorial(3 * k)
                // (math.factorial(k) * math.factorial(k + 1) * math.factorial(k + 2))
            )
            assert row.entries[-1] == expected

    def test_budget_guard(self):
        with pytest.raises(ValueError):
            triangle(6)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_entries_zero_outside_band(self, n):
        """Reduced k-hook counts vanish unless 2k+1 <= n <= 3k."""
        _, reduced = vhc_tallies_312(n)
        for k, count in reduced.items():
            if count:
                assert 2 * k + 1 <= n <= 3 * k

    @pytest.mark.parametrize("n", range(1, 11))
    def test_hook_count_expansion(self, n):
        """Per-hook-count totals expand over the triangle by binomials."""
        rows = {row.k: row.entries for row in triangle(3)}
        total, _ = vhc_tallies_312(n)
        for k in range(1, 4):
            expected = sum(
                math.comb(n, 2 * k + i) * rows[k][i - 1] for i in range(1, k + 1)
            )
            assert total.get(k, 0) == expected


class TestEq2:
    def test_holds_exhaustively(self):
        report = check_eq2(n_max=8, rows=triangle(2))
        assert all(entry["verdict"] == "holds" for entry in report)

    def test_small_values(self):
        assert [reduced_count(n) for n in range(7)] == [1, 0, 0, 1, 0, 3, 5]

    def test_budget_guard(self):
        with pytest.raises(ValueError):
            check_eq2(n_max=10)


class TestConjectures:
    def test_report_k3(self):
        report = check_conjectures(k_max=3, bruhat_n_max=6)
        by_check = {}
        for entry in report:
            by_check.setdefault(entry["check"], []).append(entry)
        assert len(by_check["conjecture1"]) == 3
        assert len(by_check["conjecture2"]) == 3
        assert len(by_check["conjecture3"]) == 3
        assert len(by_check["conjecture4"]) == 11  # comparable pairs in S3
        assert all(
            e["verdict"] == "holds" for entries in by_check.values() for e in entries
        )

    def test_alternating_sum_row3(self):
        rows = triangle(3)
        assert 14 - 51 + 42 == 5 == catalan(3)
        entry = [
            e
            for e in check_conjectures(k_max=3, bruhat_n_max=3, rows=rows)
            if e["check"] == "conjecture2" and e["k"] == 3
        ][0]
        assert entry["lhs"] == entry["rhs"] == "5"

    def test_pattern_counts_here_match_known_sequences(self):
        # 132-avoiders carry as many configurations as lng-order intervals
        assert [
            vhc_count_exhaustive(n, (1, 3, 2)) for n in range(1, 7)
        ] == [1, 1, 2, 5, 14, 43]
        # 213-avoiders admit exactly one configuration at every size
        assert [
            vhc_count_exhaustive(n, (2, 1, 3)) for n in range(1, 7)
        ] == [1] * 6


class TestSturm:
    def test_distinct_roots_of_products(self):
        # (x - 1)(x - 2)(x - 3) = x^3 - 6x^2 + 11x - 6
        assert distinct_real_roots([-6, 11, -6, 1]) == 3

    def test_no_real_roots(self):
        assert distinct_real_roots([1, 0, 1]) == 0
        assert not real_rooted([1, 0, 1])

    def test_double_root_is_real_rooted(self):
        # (x - 1)^2
        assert real_rooted([1, -2, 1])
        assert distinct_real_roots([1, -2, 1]) == 1

    def test_irrational_roots(self):
        assert real_rooted([-2, 0, 1])  # x^2 - 2

    def test_mixed_not_real_rooted(self):
        # (x^2 + 1)(x - 1)
        assert not real_rooted([-1, 1, -1, 1])

    def test_constant_and_linear(self):
        assert real_rooted([5])
        assert real_rooted([3, 2])

    def test_triangle_rows_are_real_rooted(self):
        for row in triangle(3):
            assert real_rooted(list(reversed(row.entries)))


class TestTamariImage:
    def test_small_sweep(self):
        report = check_tamari_image(n_max=5)
        assert all(entry["verdict"] == "holds" for entry in report)

    def test_budget_guard(self):
        with pytest.raises(ValueError):
            check_tamari_image(n_max=9)


class TestFit:
    def test_synthetic_geometric(self):
        counts = {n: 2**n for n in range(200, 401)}
        fit = asymptotic_fit(200, 400, counts=counts)
        assert isinstance(fit, AsymptoticFit)
        assert abs(fit.growth_hat - 2.0) < 1e-6
        assert abs(fit.alpha_hat) < 1e-6
        assert fit.residual < 1e-9

    def test_synthetic_with_polynomial_correction(self):
        counts = {n: round(3.0**n / n**2 * 1e6) for n in range(100, 200)}
        fit = asymptotic_fit(100, 199, counts=counts)
        assert abs(fit.growth_hat - 3.0) < 1e-3
        assert abs(fit.alpha_hat - 2.0) < 1e-2

    def test_window_guard(self):
        with pytest.raises(ValueError):
            asymptotic_fit(100, 120)
