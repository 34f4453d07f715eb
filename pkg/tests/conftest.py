"""Shared oracles and fixtures.

The brute-force helpers here are deliberately dumb: they filter full
symmetric groups or full step products so that the package's pruned
generators and dynamic programs have something independent to agree with.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import pytest

from hookcomb.perm import Permutation, contains_pattern


def catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    return tuple(
        Permutation(word) for word in itertools.permutations(range(1, n + 1))
    )


def brute_avoiders(n: int, sigma: Permutation) -> list[Permutation]:
    """Filter-all oracle for the avoiders generator."""
    return [pi for pi in all_permutations(n) if not contains_pattern(pi, sigma)]


@pytest.fixture(scope="session")
def walk_table_small():
    from hookcomb.walks import count_walks

    return count_walks(16)
