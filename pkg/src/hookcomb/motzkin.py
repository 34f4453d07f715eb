"""Motzkin paths, Dyck prefixes, and three nested partial orders.

A Motzkin path of length ``n`` is a word over the steps ``U`` (up, rise 1),
``D`` (down, fall 1) and ``E`` (east, flat) whose running height never goes
negative and ends at zero.  Paths serialize as plain strings such as
``"UDEUEUDD"``; the empty path is legal.

Three statistics drive the orders implemented here:

* the *class* of a path is its subsequence of non-``D`` steps;
* writing the path as ``X1 D^g1 ... Xl D^gl`` with each ``Xi`` in
  ``{U, E}``, the ``i``-th *lng* is the length of the shortest consecutive
  substring starting at ``Xi`` that is itself a Motzkin path (1 when
  ``Xi = E``, at least 2 when ``Xi = U``);
* the *support* is the Dyck prefix obtained by sending ``U, E`` to ``u``
  and ``D`` to ``d``.  A path is recoverable from its class and support.

The orders, each strictly finer than the previous:

* ``S``   lower path lies weakly below the upper one (pointwise heights);
* ``C``   equal class and below;
* ``T``   equal class and componentwise lng domination.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

ORDERS = ("S", "C", "T")

_DISPLACEMENT = {"U": 1, "E": 0, "D": -1}


def step_displacement(step: str) -> int:
    """Height change of a single step: U -> 1, E -> 0, D -> -1."""
    try:
        return _DISPLACEMENT[step]
    except KeyError:
        raise ValueError(f"not a Motzkin step: {step!r}") from None


@dataclass(frozen=True)
class MotzkinPath:
    """An immutable Motzkin path, stored as its step string.

    >>> MotzkinPath("UDEUEUDD").heights()
    (1, 0, 0, 1, 1, 2, 1, 0)
    >>> MotzkinPath("UDX")
    Traceback (most recent call last):
        ...
    ValueError: not a Motzkin step: 'X'
    """

    steps: str

    def __post_init__(self) -> None:
        h = 0
        for s in self.steps:
            h += step_displacement(s)
            if h < 0:
                raise ValueError(f"path dips below the axis: {self.steps!r}")
        if h != 0:
            raise ValueError(f"path does not return to the axis: {self.steps!r}")

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __str__(self) -> str:
        return self.steps

    def heights(self) -> tuple[int, ...]:
        """Running height after each step."""
        out = []
        h = 0
        for s in self.steps:
            h += _DISPLACEMENT[s]
            out.append(h)
        return tuple(out)


def path_class(p: MotzkinPath) -> str:
    """Subsequence of non-D steps, e.g. UDEUEUDD -> UEUEU."""
    return "".join(s for s in p.steps if s != "D")


def lng_all(p: MotzkinPath) -> tuple[int, ...]:
    """For each non-D step, the length of the shortest consecutive
    substring starting there that forms a Motzkin path.

    >>> lng_all(MotzkinPath("UDEUEUDD"))
    (2, 1, 5, 1, 2)
    """
    steps = p.steps
    out = []
    for start, s in enumerate(steps):
        if s == "D":
            continue
        h = 0
        for offset, t in enumerate(steps[start:]):
            h += _DISPLACEMENT[t]
            if h == 0:
                out.append(offset + 1)
                break
        else:  # cannot happen on a genuine Motzkin path
            raise AssertionError("unbalanced substring scan")
    return tuple(out)


def support(p: MotzkinPath) -> str:
    """Dyck-prefix shadow: U, E -> u and D -> d."""
    return "".join("d" if s == "D" else "u" for s in p.steps)


def is_dyck_prefix(word: str) -> bool:
    """True for words over {u, d} whose prefixes never have more d than u."""
    h = 0
    for ch in word:
        if ch == "u":
            h += 1
        elif ch == "d":
            h -= 1
        else:
            return False
        if h < 0:
            return False
    return True


def dyck_prefix_leq(a: str, b: str) -> bool:
    """Prefix-count order on equal-length Dyck prefixes: ``a <= b`` when
    every prefix of ``b`` has at least as many u's as the same prefix of
    ``a`` (``b`` lies weakly above ``a`` as a lattice path)."""
    if len(a) != len(b):
        raise ValueError("Dyck prefixes must have equal length")
    ca = cb = 0
    for x, y in zip(a, b):
        ca += x == "u"
        cb += y == "u"
        if cb < ca:
            return False
    return True


def reconstruct(cls_word: str, supp: str) -> MotzkinPath | None:
    """Rebuild the path with the given class and support, or ``None`` when
    the pair is inconsistent."""
    if not is_dyck_prefix(supp):
        return None
    if any(ch not in "UE" for ch in cls_word):
        return None
    if sum(1 for ch in supp if ch == "u") != len(cls_word):
        return None
    letters = iter(cls_word)
    steps = "".join("D" if ch == "d" else next(letters) for ch in supp)
    try:
        return MotzkinPath(steps)
    except ValueError:
        return None


def leq(order: str, p: MotzkinPath, q: MotzkinPath) -> bool:
    """Compare two equal-length paths in order S, C, or T."""
    if order not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}, got {order!r}")
    if len(p) != len(q):
        raise ValueError(f"length mismatch: {len(p)} vs {len(q)}")
    if order == "S":
        return all(hp <= hq for hp, hq in zip(p.heights(), q.heights()))
    if path_class(p) != path_class(q):
        return False
    if order == "C":
        return all(hp <= hq for hp, hq in zip(p.heights(), q.heights()))
    return all(a <= b for a, b in zip(lng_all(p), lng_all(q)))


@dataclass(frozen=True)
class Interval:
    """An ordered related pair ``lower <= upper`` in one of the orders."""

    lower: MotzkinPath
    upper: MotzkinPath
    order: str

    def __post_init__(self) -> None:
        if not leq(self.order, self.lower, self.upper):
            raise ValueError(
                f"({self.lower}, {self.upper}) is not a {self.order}-interval"
            )

    def to_json(self) -> str:
        return json.dumps(
            {"lower": str(self.lower), "upper": str(self.upper), "order": self.order},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "Interval":
        data = json.loads(text)
        return cls(
            MotzkinPath(data["lower"]), MotzkinPath(data["upper"]), data["order"]
        )


def enumerate_paths(n: int) -> Iterator[MotzkinPath]:
    """All Motzkin paths of length ``n`` in lexicographic order with the
    step order U < D < E."""
    if n < 0:
        raise ValueError("n must be >= 0")
    buf: list[str] = []

    def rec(i: int, h: int) -> Iterator[MotzkinPath]:
        if i == n:
            yield MotzkinPath("".join(buf))
            return
        remaining = n - i - 1
        if h + 1 <= remaining:
            buf.append("U")
            yield from rec(i + 1, h + 1)
            buf.pop()
        if h >= 1:
            buf.append("D")
            yield from rec(i + 1, h - 1)
            buf.pop()
        if h <= remaining:
            buf.append("E")
            yield from rec(i + 1, h)
            buf.pop()

    yield from rec(0, 0)


def enumerate_intervals(order: str, n: int) -> Iterator[Interval]:
    """All order-related pairs of length-``n`` paths, lower path major,
    both components in the U < D < E lexicographic order."""
    if order not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}, got {order!r}")
    paths = list(enumerate_paths(n))
    for lower in paths:
        for upper in paths:
            if leq(order, lower, upper):
                yield Interval(lower, upper, order)


def motzkin_number(n: int) -> int:
    """M(n) via the convolution recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    m = [1, 1]
    while len(m) <= n:
        k = len(m)
        m.append(m[k - 1] + sum(m[j] * m[k - 2 - j] for j in range(k - 1)))
    return m[n]
