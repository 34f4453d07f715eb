"""Structural maps: sliding operators, stripe transfer, and interval codes.

The four families of maps implemented here:

* ``swl`` / ``swr`` slide, for each height ``h`` from ``n`` down to 1, the
  points southwest of the point at height ``h`` to the left (resp. right)
  of the points northwest of it.  They are mutually inverse bijections
  between 132-avoiding and 312-avoiding permutations and are only defined
  on those classes; out-of-class inputs raise with the offending
  occurrence.
* ``nw`` sends a point of a 312-avoiding permutation to its *northwest
  representative*, the leftmost left-to-right maximum weakly above and to
  the left.  Its fibers are the horizontal, left-to-right descending
  *stripes*; ``nw_inv`` picks the rightmost point of a stripe.
* ``w_map`` transfers a hook configuration on a 132-avoider to one on the
  corresponding 312-avoider by sliding the permutation with ``swl`` and
  replacing each northeast endpoint with its northwest representative.
  It is injective; ``w_map_left_inverse`` undoes it and, applied to an
  arbitrary configuration on a 312-avoider, reports whether the pulled
  back candidate is itself valid.
* ``ll_map`` encodes a configuration on a 312-avoider as a pair of Motzkin
  paths read off the gaps between consecutive left-to-right maxima
  (horizontal gaps for the lower path, vertical gaps for the upper one).
  It is a bijection onto the class-order intervals; ``phi`` further
  re-encodes an interval as a step-restricted pair of paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .motzkin import (
    Interval,
    MotzkinPath,
    leq,
    path_class,
    reconstruct,
    support,
)
from .perm import (
    PATTERN_132,
    PATTERN_312,
    Permutation,
    Point,
    avoiders,
    find_occurrence,
    ltr_extrema,
)
from .vhc import Hook, Vhc, enumerate_vhcs, validate
from .walks import ALLOWED_STEP_PAIRS

_LOOKUP_LIMIT = 11


def _require_avoiding(pi: Permutation, sigma: Permutation, op: str) -> None:
    occ = find_occurrence(pi, sigma)
    if occ is not None:
        values = tuple(pi.value_at(i) for i in occ)
        raise ValueError(
            f"{op} needs a {''.join(map(str, sigma.entries))}-avoiding "
            f"permutation; {pi} matches it at positions {occ} (values {values})"
        )


def _require_vhc(v: Vhc) -> None:
    checked = validate(v.pi, v.ne_set)
    if checked is None or checked.matching != v.matching:
        raise ValueError(f"not a valid hook configuration: {v.to_json()}")


# --- sliding operators -----------------------------------------------------


def _slide(pi: Permutation, height: int, below_first: bool) -> Permutation:
    if not 1 <= height <= pi.n:
        raise ValueError(f"height {height} out of range 1..{pi.n}")
    m = pi.index_of(height)
    head = pi.entries[: m - 1]
    below = tuple(v for v in head if v < height)
    above = tuple(v for v in head if v > height)
    first, second = (below, above) if below_first else (above, below)
    return Permutation(first + second + pi.entries[m - 1 :])


def swl_at(pi: Permutation, height: int) -> Permutation:
    """Move the points southwest of the point at ``height`` left of the
    points northwest of it; everything from that point on is unchanged."""
    return _slide(pi, height, below_first=True)


def swr_at(pi: Permutation, height: int) -> Permutation:
    """Mirror of ``swl_at``: southwest block moves right of the northwest
    block."""
    return _slide(pi, height, below_first=False)


def swl(tau: Permutation) -> Permutation:
    """Compose ``swl_at`` over heights n, n-1, ..., 1 (height n first).

    Defined on 132-avoiders only; maps onto the 312-avoiders.
    """
    _require_avoiding(tau, PATTERN_132, "swl")
    cur = tau
    for h in range(tau.n, 0, -1):
        cur = swl_at(cur, h)
    return cur


def swr(pi: Permutation) -> Permutation:
    """Inverse of ``swl``: defined on 312-avoiders, maps onto 132-avoiders."""
    _require_avoiding(pi, PATTERN_312, "swr")
    cur = pi
    for h in range(pi.n, 0, -1):
        cur = swr_at(cur, h)
    return cur


def point_image(image: Permutation, p: Point) -> Point:
    """The point with the same value in the image permutation."""
    return Point(image.index_of(p.value), p.value)


# --- northwest representatives and stripes ---------------------------------


def _nw_of(maxima: tuple[Point, ...], p: Point) -> Point:
    for m in maxima:
        if m.value >= p.value:
            if m.index > p.index:  # cannot happen in a 312-avoider
                raise AssertionError(f"representative {m} right of {p}")
            return m
    raise AssertionError(f"no representative for {p}")


def nw(pi: Permutation, p: Point) -> Point:
    """Leftmost left-to-right maximum weakly above and left of ``p``."""
    _require_avoiding(pi, PATTERN_312, "nw")
    if pi.point(p.index) != p:
        raise ValueError(f"{p} is not a plot point of {pi}")
    return _nw_of(ltr_extrema(pi, "maxima"), p)


@dataclass(frozen=True)
class StripeDecomposition:
    """Fibers of ``nw``, bottom stripe first, each descending left to right."""

    stripes: tuple[tuple[Point, ...], ...]
    representatives: tuple[Point, ...]


def stripes(pi: Permutation) -> StripeDecomposition:
    _require_avoiding(pi, PATTERN_312, "stripes")
    maxima = ltr_extrema(pi, "maxima")
    groups: dict[Point, list[Point]] = {m: [] for m in maxima}
    for p in pi.points():
        groups[_nw_of(maxima, p)].append(p)
    for m, members in groups.items():
        values = [p.value for p in members]
        if values != sorted(values, reverse=True):  # stripes descend
            raise AssertionError(f"stripe of {m} not descending in {pi}")
    ordered = sorted(maxima, key=lambda m: m.value)
    return StripeDecomposition(
        stripes=tuple(tuple(groups[m]) for m in ordered),
        representatives=tuple(ordered),
    )


def nw_inv(pi: Permutation, m: Point) -> Point:
    """Rightmost point of the stripe of a left-to-right maximum."""
    _require_avoiding(pi, PATTERN_312, "nw_inv")
    maxima = ltr_extrema(pi, "maxima")
    if m not in maxima:
        raise ValueError(f"{m} is not a left-to-right maximum of {pi}")
    best = m
    for p in pi.points():
        if p.index > best.index and _nw_of(maxima, p) == m:
            best = p
    return best


# --- configuration transfer ------------------------------------------------


def w_map(v: Vhc) -> Vhc:
    """Transfer a configuration on a 132-avoider to the slid permutation.

    The image configuration keeps the slid descent tops as southwest
    endpoints and replaces each northeast endpoint by the northwest
    representative of its slid image.  Distinct endpoints land in distinct
    stripes, so the transfer is injective.
    """
    _require_vhc(v)
    tau = v.pi
    _require_avoiding(tau, PATTERN_132, "w_map")
    image = swl(tau)
    maxima = ltr_extrema(image, "maxima")
    ne = frozenset(
        _nw_of(maxima, point_image(image, tau.point(i))).index for i in v.ne_set
    )
    out = validate(image, ne)
    if out is None:
        raise AssertionError(f"transfer of {v.to_json()} failed validation")
    return out


@dataclass(frozen=True)
class PullbackResult:
    """Candidate preimage under ``w_map``; ``vhc`` is ``None`` when the
    pulled-back endpoint set is not a valid configuration."""

    perm: Permutation
    ne_indices: frozenset[int]
    vhc: Vhc | None

    @property
    def valid(self) -> bool:
        return self.vhc is not None


def w_map_left_inverse(w: Vhc) -> PullbackResult:
    """Pull a configuration on a 312-avoider back through ``w_map``.

    Always produces a candidate endpoint set (rightmost stripe points,
    slid back with ``swr``); on the image of ``w_map`` this recovers the
    original configuration, elsewhere the candidate may fail validation
    and is flagged instead of raising.
    """
    _require_vhc(w)
    pi = w.pi
    _require_avoiding(pi, PATTERN_312, "w_map_left_inverse")
    tau = swr(pi)
    candidates = set()
    for i in sorted(w.ne_set):
        m = pi.point(i)
        rightmost = nw_inv(pi, m)
        candidates.add(point_image(tau, rightmost).index)
    ne = frozenset(candidates)
    return PullbackResult(tau, ne, validate(tau, ne))


# --- interval codes --------------------------------------------------------


@dataclass(frozen=True)
class LLFrame:
    """Left-to-right maxima of a 312-avoider read right to left, with the
    gap counts between consecutive maxima.

    ``maxima`` runs from the top corner ``(n, n)`` down to the sentinel
    ``(0, 0)``; ``gammas[i]`` counts plot points strictly between maxima
    ``i+1`` and ``i`` horizontally, ``gamma_primes[i]`` counts points
    strictly between maxima ``i+2`` and ``i+1`` vertically, and
    ``letters[i]`` is ``U`` or ``E`` according to whether maximum ``i`` is
    a northeast hook endpoint.
    """

    maxima: tuple[Point, ...]
    gammas: tuple[int, ...]
    gamma_primes: tuple[int, ...]
    letters: tuple[str, ...]


def ll_frame(v: Vhc) -> LLFrame:
    _require_vhc(v)
    pi = v.pi
    if pi.n < 1:
        raise ValueError("frame needs a nonempty permutation")
    _require_avoiding(pi, PATTERN_312, "ll_frame")
    maxima = list(reversed(ltr_extrema(pi, "maxima"))) + [Point(0, 0)]
    n = pi.n
    if maxima[0] != Point(n, n):
        raise AssertionError(f"{pi} has a configuration but does not end at {n}")
    ell = len(maxima) - 2  # number of gaps
    points = pi.points()
    gammas = []
    gamma_primes = []
    letters = []
    for i in range(1, ell + 1):
        right, left = maxima[i - 1], maxima[i]
        gammas.append(
            sum(1 for p in points if left.index < p.index < right.index)
        )
        upper, lower = maxima[i], maxima[i + 1]
        gamma_primes.append(
            sum(1 for p in points if lower.value < p.value < upper.value)
        )
        letters.append("U" if maxima[i - 1].index in v.ne_set else "E")
    frame = LLFrame(tuple(maxima), tuple(gammas), tuple(gamma_primes), tuple(letters))
    if sum(frame.gammas) != n - ell - 1 or sum(frame.gamma_primes) != n - ell - 1:
        raise AssertionError(f"gap counts of {v.to_json()} do not partition the plot")
    return frame


def ll_map(v: Vhc) -> Interval:
    """Encode a configuration on a 312-avoider as a class-order interval.

    The lower path interleaves the endpoint letters with the horizontal
    gap counts as down runs, the upper path uses the vertical gap counts;
    both have length ``n - 1``.
    """
    frame = ll_frame(v)
    lower = "".join(
        x + "D" * g for x, g in zip(frame.letters, frame.gammas)
    )
    upper = "".join(
        x + "D" * g for x, g in zip(frame.letters, frame.gamma_primes)
    )
    return Interval(MotzkinPath(lower), MotzkinPath(upper), "C")


@lru_cache(maxsize=None)
def _ll_table(n: int) -> dict[tuple[str, str], tuple[tuple[int, ...], frozenset[int]]]:
    table: dict[tuple[str, str], tuple[tuple[int, ...], frozenset[int]]] = {}
    for pi in avoiders(n, PATTERN_312):
        for v in enumerate_vhcs(pi):
            interval = ll_map(v)
            key = (interval.lower.steps, interval.upper.steps)
            if key in table:
                raise AssertionError(f"interval code collision at {key}")
            table[key] = (pi.entries, v.ne_set)
    return table


def ll_inverse_lookup(interval: Interval, n: int) -> Vhc | None:
    """Invert ``ll_map`` by memoized enumeration (desk scale only)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > _LOOKUP_LIMIT:
        raise ValueError(f"lookup inversion enumerates Catalan-many "
                         f"permutations; n <= {_LOOKUP_LIMIT}")
    if len(interval.lower) != n - 1:
        raise ValueError(f"interval has length {len(interval.lower)}, expected {n - 1}")
    entry = _ll_table(n).get((interval.lower.steps, interval.upper.steps))
    if entry is None:
        return None
    pi_entries, ne = entry
    out = validate(Permutation(pi_entries), ne)
    assert out is not None
    return out


def phi(interval: Interval) -> tuple[MotzkinPath, MotzkinPath]:
    """Re-encode a class-order interval as a step-restricted path pair.

    The first output path records, position by position, how the supports
    of the two interval paths differ (U where the lower support is ``d``
    under a ``u``, D for the opposite, E where they agree); the second is
    the lower path itself.
    """
    lower, upper = interval.lower, interval.upper
    if not leq("C", lower, upper):
        raise ValueError(f"({lower}, {upper}) is not a class-order interval")
    sl, su = support(lower), support(upper)
    x = "".join(
        "U" if a == "d" and b == "u" else "D" if a == "u" and b == "d" else "E"
        for a, b in zip(sl, su)
    )
    return MotzkinPath(x), lower


def phi_inverse(x: MotzkinPath, y: MotzkinPath) -> Interval:
    """Invert ``phi``: rebuild the upper path by overriding the support of
    ``y`` wherever ``x`` is not flat.  Raises on pairs with a forbidden
    coordinatewise step."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    for a, b in zip(x.steps, y.steps):
        if (a, b) not in ALLOWED_STEP_PAIRS:
            raise ValueError(f"forbidden step pair ({a}, {b})")
    sy = support(y)
    target = "".join(
        "u" if a == "U" else "d" if a == "D" else s for a, s in zip(x.steps, sy)
    )
    upper = reconstruct(path_class(y), target)
    if upper is None:
        raise AssertionError(f"no path with class {path_class(y)} over {target}")
    return Interval(y, upper, "C")


# --- pivot points ----------------------------------------------------------


def pivot_points(v: Vhc, hook: Hook) -> tuple[Point, ...]:
    """Points that would swap a hook's endpoints under the pullback.

    A pivot of a hook with southwest endpoint A and northeast endpoint B is
    a plot point that forms a 132 pattern with A and the rightmost stripe
    point of B, in that index order.
    """
    _require_vhc(v)
    if hook not in v.matching:
        raise ValueError(f"{hook} is not a hook of {v.to_json()}")
    a = hook.sw
    anchor = nw_inv(v.pi, hook.ne)
    if not a.index < anchor.index:
        return ()
    return tuple(
        p
        for p in v.pi.points()
        if p.index > anchor.index and a.value < p.value < anchor.value
    )
