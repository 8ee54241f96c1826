"""Independent reference implementations used as test oracles.

Deliberately written in different styles from the shipped kernels
(recursive/memoized definitions, dict-matrix DP, exhaustive search) so a bug
would have to appear twice, in two formulations, to go unnoticed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product


def levenshtein_ref(a: str, b: str) -> int:
    """Definitional recursion with memoization."""

    @lru_cache(maxsize=None)
    def d(i: int, j: int) -> int:
        if i == 0:
            return j
        if j == 0:
            return i
        cost = 0 if a[i - 1] == b[j - 1] else 1
        return min(d(i - 1, j) + 1, d(i, j - 1) + 1, d(i - 1, j - 1) + cost)

    return d(len(a), len(b))


def osa_ref(a: str, b: str) -> int:
    """Optimal-string-alignment distance via a full dict matrix."""
    la, lb = len(a), len(b)
    m: dict[tuple[int, int], int] = {}
    for i in range(la + 1):
        m[i, 0] = i
    for j in range(lb + 1):
        m[0, j] = j
    for i in range(1, la + 1):
        for j in range(1, lb + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            m[i, j] = min(m[i - 1, j] + 1, m[i, j - 1] + 1, m[i - 1, j - 1] + cost)
            if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
                m[i, j] = min(m[i, j], m[i - 2, j - 2] + cost)
    return m[la, lb]


def osa_script_search(a: str, b: str) -> int:
    """Exhaustive branch-and-bound search over left-to-right edit scripts.

    Operations: match, substitute, delete, insert, and adjacent
    transposition that consumes both characters (the restricted variant: a
    transposed pair can never be edited again). No DP table; every valid
    script is explored.
    """
    best = len(a) + len(b)

    def go(i: int, j: int, cost: int) -> None:
        nonlocal best
        remaining = abs((len(a) - i) - (len(b) - j))
        if cost + remaining >= best:
            return
        if i == len(a) and j == len(b):
            best = cost
            return
        if i < len(a) and j < len(b):
            if a[i] == b[j]:
                go(i + 1, j + 1, cost)
            else:
                go(i + 1, j + 1, cost + 1)  # substitute
            if (
                i + 1 < len(a)
                and j + 1 < len(b)
                and a[i] == b[j + 1]
                and a[i + 1] == b[j]
                and a[i] != a[i + 1]
            ):
                go(i + 2, j + 2, cost + 1)  # transpose
        if i < len(a):
            go(i + 1, j, cost + 1)  # delete
        if j < len(b):
            go(i, j + 1, cost + 1)  # insert
        return

    go(0, 0, 0)
    return best


def jaro_winkler_ref(a: str, b: str) -> float:
    """Jaro-Winkler from the formula, index-set formulation."""
    if a == b:
        return 1.0
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return 0.0
    window = max(0, max(la, lb) // 2 - 1)
    matched_b: list[int] = []
    used = set()
    matched_a = []
    for i in range(la):
        for j in range(max(0, i - window), min(lb, i + window + 1)):
            if j not in used and a[i] == b[j]:
                used.add(j)
                matched_a.append(a[i])
                matched_b.append(j)
                break
    m = len(matched_a)
    if m == 0:
        return 0.0
    b_in_order = [b[j] for j in sorted(matched_b)]
    transpositions = sum(1 for x, y in zip(matched_a, b_in_order) if x != y) / 2
    jaro = (m / la + m / lb + (m - transpositions) / m) / 3
    if jaro <= 0.7:
        return jaro
    prefix = 0
    for x, y in zip(a[:4], b[:4]):
        if x != y:
            break
        prefix += 1
    return jaro + prefix * 0.1 * (1 - jaro)


def suggestion_oracle(
    adjacency: dict[str, set[str]],
    dm_codes: dict[str, tuple[str, ...]],
    query: str,
    k: int,
    depth: int,
    function: str,
) -> list[tuple[str, Fraction]]:
    """Enumerate-score-sort oracle for graph suggestion.

    Hop counts come from an explicit level-by-level expansion; scores are
    recomputed from the formulas; the tie-break chain is (score desc,
    edit distance asc, name asc).
    """
    if query not in adjacency:
        return []
    hops: dict[str, int] = {}
    level = {query}
    visited = {query}
    for hop in range(1, depth + 1):
        level = {n for node in level for n in adjacency.get(node, set())} - visited
        for name in level:
            hops[name] = hop
        visited |= level
    scored = []
    for name, hop in hops.items():
        ed = levenshtein_ref(query, name)
        if function == "neted":
            value = Fraction(1, hop * ed)
        elif function == "net2ed":
            value = Fraction(1, hop * hop * ed)
        else:
            min_dm = min(
                levenshtein_ref(ca, cb)
                for ca, cb in product(dm_codes[query], dm_codes[name])
            )
            factor = max(Fraction(min_dm), Fraction(1, 2))
            if function == "edofdmphone":
                value = 1 / factor
            elif function == "netedofdmphoneed":
                value = 1 / (hop * ed * factor)
            else:
                raise ValueError(function)
        scored.append((value, ed, name))
    scored.sort(key=lambda t: (-t[0], t[1], t[2]))
    return [(name, value) for value, ed, name in scored[:k]]


def metrics_oracle(
    rows: list[tuple[list[str], set[str]]], k_max: int, ks: tuple[int, ...]
) -> dict[str, float]:
    """Brute-force macro metrics over (suggested, relevant) rows."""
    n = len(rows)
    ap = {kk: 0.0 for kk in ks}
    recall = 0.0
    f1 = 0.0
    covered = 0
    for suggested, relevant in rows:
        if suggested:
            covered += 1
        for kk in ks:
            hits = len([s for s in suggested[:kk] if s in relevant])
            ap[kk] += hits / kk
        r = len([s for s in suggested if s in relevant]) / len(relevant)
        p = len([s for s in suggested[:k_max] if s in relevant]) / k_max
        recall += r
        f1 += 0.0 if p + r == 0 else 2 * p * r / (p + r)
    out = {f"ap@{kk}": ap[kk] / n for kk in ks}
    out["accuracy"] = out[f"ap@{k_max}"]
    out["recall"] = recall / n
    out["f1"] = f1 / n
    out["covered"] = covered
    out["covered_pct"] = covered / n
    return out
