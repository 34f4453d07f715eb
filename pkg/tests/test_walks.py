import itertools

import pytest

from hookcomb.walks import (
    ALLOWED_STEP_PAIRS,
    STEPS,
    count_pairs,
    count_walks,
    enumerate_restricted_pairs,
    enumerate_walks,
    vhc312_count,
)


def walks_by_product(k: int) -> int:
    """Independent oracle: filter all 5^k step sequences."""
    total = 0
    for seq in itertools.product(STEPS, repeat=k):
        x = y = 0
        for dx, dy in seq:
            x += dx
            y += dy
            if x < 0 or y < 0:
                break
        else:
            if x == 0 and y == 0:
                total += 1
    return total


class TestWalkCounts:
    def test_first_values_against_product_oracle(self):
        # frozen from the 5^k filter
        assert [walks_by_product(k) for k in range(4)] == [1, 0, 1, 1]
        table = count_walks(3)
        assert table.values == (1, 0, 1, 1)

    @pytest.mark.parametrize("k", range(7))
    def test_dp_matches_product_oracle(self, k):
        assert count_walks(k)[k] == walks_by_product(k)

    def test_dp_matches_backtracking_oracle_to_8(self, walk_table_small):
        for k in range(9):
            assert walk_table_small[k] == sum(1 for _ in enumerate_walks(k))

    def test_frozen_prefix(self, walk_table_small):
        assert walk_table_small.values[:13] == (
            1, 0, 1, 1, 3, 8, 19, 65, 177, 611, 1928, 6648, 22928,
        )

    def test_monotone_after_two(self, walk_table_small):
        # appending the up-down loop embeds length-k walks in length k+2
        for k in range(2, 15):
            assert walk_table_small[k + 2] >= walk_table_small[k]

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            count_walks(-1)


class TestEnumerate:
    def test_k0(self):
        assert list(enumerate_walks(0)) == [()]

    def test_k2_exact(self):
        assert list(enumerate_walks(2)) == [((0, 1), (0, -1))]

    def test_k3_exact(self):
        assert list(enumerate_walks(3)) == [((0, 1), (1, -1), (-1, 0))]

    def test_too_large_rejected(self):
        with pytest.raises(ValueError):
            list(enumerate_walks(11))


class TestCountTable:
    def test_convention_at_minus_one(self, walk_table_small):
        assert walk_table_small.at(-1) == 1
        assert walk_table_small.at(0) == 1

    def test_below_convention_rejected(self, walk_table_small):
        with pytest.raises(ValueError):
            walk_table_small.at(-2)

    def test_negative_index_rejected(self, walk_table_small):
        with pytest.raises(IndexError):
            walk_table_small[-1]

    def test_csv(self):
        assert count_walks(2).to_csv() == "k,value\n0,1\n1,0\n2,1\n"

    def test_json_uses_decimal_strings(self):
        assert count_walks(2).to_json() == '["1","0","1"]'


class TestPairCounts:
    def test_n3(self):
        assert count_pairs(3) == 5  # 1 + 0 + 3*1 + 1*1

    def test_n0(self):
        assert count_pairs(0) == 1

    def test_forbidden_pair_rule(self):
        ud = ("U", "D")
        assert ("U", "U") not in ALLOWED_STEP_PAIRS
        assert ud in ALLOWED_STEP_PAIRS
        pairs = {
            (str(x), str(y)) for x, y in enumerate_restricted_pairs(2)
        }
        assert ("UD", "UD") not in pairs  # first coordinates would be (U, U)

    @pytest.mark.parametrize("n", range(9))
    def test_formula_equals_enumeration(self, n):
        direct = sum(1 for _ in enumerate_restricted_pairs(n))
        assert count_pairs(n) == direct


class TestVhc312Count:
    def test_n1(self):
        assert vhc312_count(1) == 1

    def test_n4(self):
        assert vhc312_count(4) == 5

    def test_frozen_series(self, walk_table_small):
        got = [vhc312_count(n, walk_table_small) for n in range(1, 10)]
        assert got == [1, 1, 2, 5, 14, 44, 148, 528, 1972]

    def test_requires_positive_n(self):
        with pytest.raises(ValueError):
            vhc312_count(0)
