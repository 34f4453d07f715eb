"""Permutations in one-line notation: patterns, descents, extrema, weak order.

Conventions used throughout the package:

* A permutation of size ``n`` is a word ``p(1) ... p(n)`` on the values
  ``1..n``.  Everything is 1-indexed, so the plot of a permutation is the
  point set ``{(i, p(i)) : 1 <= i <= n}`` with both coordinates in ``1..n``.
* A *descent* is a position ``i`` with ``p(i) > p(i+1)``; the point
  ``(i, p(i))`` is a descent top and ``(i+1, p(i+1))`` the descent bottom.
* Text form is comma-free for ``n <= 9`` (``"324156"``) and comma-separated
  for ``n >= 10`` (``"10,3,2,..."``).  Both forms are accepted on input.
* The empty permutation (``n = 0``) is legal and avoids every nonempty
  pattern.

All values are immutable after construction and every operation here is
pure, so they are safe to call from concurrent workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple


class Point(NamedTuple):
    """A plot point ``(index, value)`` of a permutation."""

    index: int
    value: int


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n`` stored as a word in one-line notation.

    >>> Permutation((3, 2, 4, 1, 5, 6)).n
    6
    >>> str(Permutation((3, 2, 4, 1, 5, 6)))
    '324156'
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        seen = bytearray(n + 1)
        for v in self.entries:
            if not isinstance(v, int) or not 1 <= v <= n or seen[v]:
                raise ValueError(f"not a permutation of 1..{n}: {self.entries!r}")
            seen[v] = 1

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def value_at(self, index: int) -> int:
        """Value at a 1-based position."""
        if not 1 <= index <= self.n:
            raise ValueError(f"index {index} out of range 1..{self.n}")
        return self.entries[index - 1]

    def index_of(self, value: int) -> int:
        """1-based position of a value."""
        if not 1 <= value <= self.n:
            raise ValueError(f"value {value} out of range 1..{self.n}")
        return self.entries.index(value) + 1

    def point(self, index: int) -> Point:
        return Point(index, self.value_at(index))

    def points(self) -> tuple[Point, ...]:
        return tuple(Point(i + 1, v) for i, v in enumerate(self.entries))

    @classmethod
    def of(cls, *values: int) -> "Permutation":
        return cls(tuple(values))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        """Parse one-line notation, with or without commas.

        >>> Permutation.from_text("324156").entries
        (3, 2, 4, 1, 5, 6)
        >>> Permutation.from_text("10,3,2,4,5,6,7,8,9,1").n
        10
        """
        text = text.strip()
        if not text:
            return cls(())
        if "," in text:
            return cls(tuple(int(part) for part in text.split(",")))
        if not text.isdigit() or "0" in text:
            raise ValueError(f"cannot parse permutation from {text!r}")
        return cls(tuple(int(ch) for ch in text))

    def __str__(self) -> str:
        if self.n >= 10:
            return ",".join(str(v) for v in self.entries)
        return "".join(str(v) for v in self.entries)


PATTERN_123 = Permutation((1, 2, 3))
PATTERN_132 = Permutation((1, 3, 2))
PATTERN_213 = Permutation((2, 1, 3))
PATTERN_231 = Permutation((2, 3, 1))
PATTERN_312 = Permutation((3, 1, 2))
PATTERN_321 = Permutation((3, 2, 1))


def find_occurrence(pi: Permutation, sigma: Permutation) -> tuple[int, ...] | None:
    """1-based indices of the first occurrence of ``sigma`` in ``pi``.

    Occurrences are scanned in lexicographic index order; ``None`` means
    ``pi`` avoids ``sigma``.  The empty pattern occurs (vacuously) in every
    permutation as the empty index tuple.
    """
    k = sigma.n
    if k == 0:
        return ()
    if k > pi.n:
        return None
    ent = pi.entries
    sig = sigma.entries
    for combo in itertools.combinations(range(pi.n), k):
        if _order_isomorphic(tuple(ent[c] for c in combo), sig):
            return tuple(c + 1 for c in combo)
    return None


def _order_isomorphic(word: tuple[int, ...], sig: tuple[int, ...]) -> bool:
    k = len(sig)
    return all(
        (word[a] < word[b]) == (sig[a] < sig[b])
        for a in range(k)
        for b in range(a + 1, k)
    )


def contains_pattern(pi: Permutation, sigma: Permutation) -> bool:
    """True when some subsequence of ``pi`` is order-isomorphic to ``sigma``."""
    return find_occurrence(pi, sigma) is not None


def avoids(pi: Permutation, sigma: Permutation) -> bool:
    return find_occurrence(pi, sigma) is None


def avoiders(n: int, sigma: Permutation) -> Iterator[Permutation]:
    """All ``sigma``-avoiding permutations of size ``n``, in lexicographic
    order of one-line notation.

    Generation is by backtracking over one-line prefixes: a prefix already
    containing ``sigma`` is never extended, so the search visits only
    avoiding prefixes instead of filtering all n! words.  Candidate
    extensions are tested against occurrences that end at the new value.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if sigma.n == 0:
        return  # the empty pattern occurs in everything, even the empty word
    if n == 0:
        yield Permutation(())
        return

    guard = _make_guard(n, sigma)
    used = bytearray(n + 1)
    prefix: list[int] = []

    def rec() -> Iterator[Permutation]:
        if len(prefix) == n:
            yield Permutation(tuple(prefix))
            return
        for v in range(1, n + 1):
            if used[v] or not guard.allows(v):
                continue
            used[v] = 1
            prefix.append(v)
            guard.push(v)
            yield from rec()
            guard.pop()
            prefix.pop()
            used[v] = 0

    yield from rec()


class _Guard312:
    """Incremental 312 test: a value ``v`` completes an occurrence exactly
    when some earlier value below ``v`` was preceded by a value above ``v``.
    The forbidden values form a union of open intervals ``(w_j, max w_<j)``
    maintained as a flag array, giving O(1) membership."""

    __slots__ = ("blocked", "top", "trail")

    def __init__(self, n: int):
        self.blocked = bytearray(n + 2)
        self.top = 0
        self.trail: list[tuple[int, list[int]]] = []

    def allows(self, v: int) -> bool:
        return not self.blocked[v]

    def push(self, v: int) -> None:
        newly: list[int] = []
        blocked = self.blocked
        if v < self.top:
            for u in range(v + 1, self.top):
                if not blocked[u]:
                    blocked[u] = 1
                    newly.append(u)
            self.trail.append((self.top, newly))
        else:
            self.trail.append((self.top, newly))
            self.top = v

    def pop(self) -> None:
        self.top, newly = self.trail.pop()
        for u in newly:
            self.blocked[u] = 0


class _GuardScan3:
    """O(prefix) completion test for the remaining length-3 patterns."""

    __slots__ = ("prefix", "test")

    def __init__(self, sig: tuple[int, ...]):
        self.prefix: list[int] = []
        self.test = _SCAN3_TESTS[sig]

    def allows(self, v: int) -> bool:
        return not self.test(self.prefix, v)

    def push(self, v: int) -> None:
        self.prefix.append(v)

    def pop(self) -> None:
        self.prefix.pop()


def _completes_123(prefix: list[int], v: int) -> bool:
    lo = None
    for x in prefix:
        if lo is not None and lo < x < v:
            return True
        if lo is None or x < lo:
            lo = x
    return False


def _completes_132(prefix: list[int], v: int) -> bool:
    lo = None
    for x in prefix:
        if lo is not None and lo < v < x:
            return True
        if lo is None or x < lo:
            lo = x
    return False


def _completes_213(prefix: list[int], v: int) -> bool:
    hi_below = 0  # largest earlier value below v
    for x in prefix:
        if x < hi_below:
            return True
        if x < v and x > hi_below:
            hi_below = x
    return False


def _completes_231(prefix: list[int], v: int) -> bool:
    lo_above = None  # smallest earlier value above v
    for x in prefix:
        if lo_above is not None and x > lo_above:
            return True
        if x > v and (lo_above is None or x < lo_above):
            lo_above = x
    return False


def _completes_321(prefix: list[int], v: int) -> bool:
    hi = 0
    for x in prefix:
        if v < x < hi:
            return True
        if x > hi:
            hi = x
    return False


_SCAN3_TESTS = {
    (1, 2, 3): _completes_123,
    (1, 3, 2): _completes_132,
    (2, 1, 3): _completes_213,
    (2, 3, 1): _completes_231,
    (3, 2, 1): _completes_321,
}


class _GuardGeneric:
    """Fallback completion test over subsequences ending at the new value."""

    __slots__ = ("prefix", "sig")

    def __init__(self, sig: tuple[int, ...]):
        self.prefix: list[int] = []
        self.sig = sig

    def allows(self, v: int) -> bool:
        k = len(self.sig)
        if len(self.prefix) < k - 1:
            return True
        for combo in itertools.combinations(self.prefix, k - 1):
            if _order_isomorphic(combo + (v,), self.sig):
                return False
        return True

    def push(self, v: int) -> None:
        self.prefix.append(v)

    def pop(self) -> None:
        self.prefix.pop()


def _make_guard(n: int, sigma: Permutation):
    sig = sigma.entries
    if sig == (3, 1, 2):
        return _Guard312(n)
    if sig in _SCAN3_TESTS:
        return _GuardScan3(sig)
    return _GuardGeneric(sig)


def descents(pi: Permutation) -> tuple[int, ...]:
    """Positions ``i`` with ``p(i) > p(i+1)``."""
    ent = pi.entries
    return tuple(i + 1 for i in range(pi.n - 1) if ent[i] > ent[i + 1])


def descent_tops(pi: Permutation) -> tuple[Point, ...]:
    """Descent-top points ``(i, p(i))`` in increasing index order.

    >>> descent_tops(Permutation.from_text("3215647"))
    (Point(index=1, value=3), Point(index=2, value=2), Point(index=5, value=6))
    """
    return tuple(pi.point(i) for i in descents(pi))


def descent_bottoms(pi: Permutation) -> tuple[Point, ...]:
    """Descent-bottom points ``(i+1, p(i+1))``, paired with the tops."""
    return tuple(pi.point(i + 1) for i in descents(pi))


def ltr_extrema(pi: Permutation, kind: str = "maxima") -> tuple[Point, ...]:
    """Left-to-right maxima or minima, in increasing index order.

    A point is a left-to-right maximum (minimum) when no point to its left
    is strictly higher (lower).
    """
    if kind not in ("maxima", "minima"):
        raise ValueError(f"kind must be 'maxima' or 'minima', got {kind!r}")
    out: list[Point] = []
    best: int | None = None
    for p in pi.points():
        if best is None or (p.value > best if kind == "maxima" else p.value < best):
            out.append(p)
            best = p.value
    return tuple(out)


def bruhat_covers(pi: Permutation) -> tuple[Permutation, ...]:
    """Permutations obtained by swapping one adjacent ascent of ``pi``."""
    out = []
    ent = list(pi.entries)
    for i in range(pi.n - 1):
        if ent[i] < ent[i + 1]:
            ent[i], ent[i + 1] = ent[i + 1], ent[i]
            out.append(Permutation(tuple(ent)))
            ent[i], ent[i + 1] = ent[i + 1], ent[i]
    return tuple(out)


@lru_cache(maxsize=None)
def _weak_order_upset(entries: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    start = Permutation(entries)
    seen = {entries}
    frontier = [start]
    while frontier:
        nxt = []
        for pi in frontier:
            for cover in bruhat_covers(pi):
                if cover.entries not in seen:
                    seen.add(cover.entries)
                    nxt.append(cover)
        frontier = nxt
    return frozenset(seen)


def bruhat_leq(sigma: Permutation, tau: Permutation) -> bool:
    """Weak order: ``tau`` reachable from ``sigma`` by adjacent-ascent swaps."""
    if sigma.n != tau.n:
        raise ValueError(f"size mismatch: {sigma.n} vs {tau.n}")
    return tau.entries in _weak_order_upset(sigma.entries)
