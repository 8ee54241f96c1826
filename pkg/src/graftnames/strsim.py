"""String distance kernels: Levenshtein, Damerau-Levenshtein, Jaro-Winkler.

All kernels operate on Unicode scalar values. They allocate only scratch
rows, hold no state, and are safe to call from any thread.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class EditDistanceRange:
    """Inclusive edit-distance interval used to filter name-graph links."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo < 0:
            raise ValueError("edit distance range lower bound must be >= 0")
        if self.hi < self.lo:
            raise ValueError(f"invalid edit distance range [{self.lo}, {self.hi}]")

    def contains(self, distance: int) -> bool:
        return self.lo <= distance <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


def edit_distance(a: str, b: str) -> int:
    """Minimal insertions + deletions + substitutions turning ``a`` into ``b``."""
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    current = [0] * (len(b) + 1)
    for i, ca in enumerate(a, start=1):
        current[0] = i
        for j, cb in enumerate(b, start=1):
            cost = 0 if ca == cb else 1
            current[j] = min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + cost)
        previous, current = current, previous
    return previous[len(b)]


def edit_distance_at_most(a: str, b: str, bound: int) -> int | None:
    """Levenshtein distance if it is <= ``bound``, else ``None``.

    Band-limited DP; the cheap length-difference test makes bulk pair
    filtering fast when most pairs are far apart.
    """
    if bound < 0:
        return None
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if len(a) - len(b) > bound:
        return None
    if not b:
        return len(a) if len(a) <= bound else None
    big = bound + 1
    previous = [j if j <= bound else big for j in range(len(b) + 1)]
    current = [0] * (len(b) + 1)
    for i, ca in enumerate(a, start=1):
        current[0] = i if i <= bound else big
        row_min = current[0]
        lo = max(1, i - bound)
        hi = min(len(b), i + bound)
        if lo > 1:
            current[lo - 1] = big
        for j in range(lo, hi + 1):
            cb = b[j - 1]
            cost = 0 if ca == cb else 1
            value = min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + cost)
            current[j] = value if value <= bound else big
            if current[j] < row_min:
                row_min = current[j]
        if hi < len(b):
            current[hi + 1] = big
        if row_min > bound:
            return None
        previous, current = current, previous
    return previous[len(b)] if previous[len(b)] <= bound else None


def damerau_levenshtein(a: str, b: str) -> int:
    """Edit distance where an adjacent transposition counts as one operation.

    Restricted (optimal string alignment) variant: no substring is edited
    more than once.
    """
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    width = len(b) + 1
    two_back: list[int] | None = None
    previous = list(range(width))
    for i, ca in enumerate(a, start=1):
        current = [i] + [0] * len(b)
        for j, cb in enumerate(b, start=1):
            cost = 0 if ca == cb else 1
            value = min(previous[j] + 1, current[j - 1] + 1, previous[j - 1] + cost)
            if (
                two_back is not None
                and i > 1
                and j > 1
                and ca == b[j - 2]
                and a[i - 2] == cb
            ):
                value = min(value, two_back[j - 2] + 1)
            current[j] = value
        two_back, previous = previous, current
    return previous[len(b)]


def _jaro(a: str, b: str) -> float:
    la, lb = len(a), len(b)
    if la == 0 and lb == 0:
        return 1.0
    if la == 0 or lb == 0:
        return 0.0
    window = max(la, lb) // 2 - 1
    if window < 0:
        window = 0
    a_matched = [False] * la
    b_matched = [False] * lb
    matches = 0
    for i, ch in enumerate(a):
        lo = max(0, i - window)
        hi = min(lb, i + window + 1)
        for j in range(lo, hi):
            if not b_matched[j] and b[j] == ch:
                a_matched[i] = True
                b_matched[j] = True
                matches += 1
                break
    if matches == 0:
        return 0.0
    transpositions = 0
    j = 0
    for i in range(la):
        if a_matched[i]:
            while not b_matched[j]:
                j += 1
            if a[i] != b[j]:
                transpositions += 1
            j += 1
    t = transpositions / 2
    m = float(matches)
    return (m / la + m / lb + (m - t) / m) / 3


_WINKLER_PREFIX_CAP = 4
_WINKLER_SCALE = 0.1
_WINKLER_BOOST_THRESHOLD = 0.7


def jaro_winkler(a: str, b: str) -> float:
    """Jaro similarity with the standard Winkler common-prefix boost.

    1 means an exact match, 0 means no characters in common. The boost uses
    Winkler's canonical parameters: prefix capped at 4, scale 0.1, applied
    only above the 0.7 similarity threshold.
    """
    if a == b:
        return 1.0
    jaro = _jaro(a, b)
    if jaro <= _WINKLER_BOOST_THRESHOLD:
        return jaro
    prefix = 0
    for ca, cb in zip(a, b):
        if ca != cb or prefix == _WINKLER_PREFIX_CAP:
            break
        prefix += 1
    return jaro + prefix * _WINKLER_SCALE * (1.0 - jaro)
