"""Statistics on permutations: right-to-left minima and left-to-right maxima.

A permutation is any sequence containing each of 1..n exactly once.  The
positions that survive a right-to-left minimum scan are exactly the
elements that never move when the word is sorted by repeatedly shifting
out-of-order elements right, which ties these statistics to the
single-block partition case.
"""

from __future__ import annotations

from itertools import permutations

# 9! words is where an exhaustive scan stops being a few seconds
PERM_BUDGET = 9


def check_permutation(word) -> tuple[int, ...]:
    """Validate and return the word as a tuple; must be a bijection on {1..n}."""
    word = tuple(word)
    for value in word:
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"permutation entries must be integers, got {value!r}")
    if set(word) != set(range(1, len(word) + 1)):
        raise ValueError(f"not a permutation of 1..{len(word)}: {word}")
    return word


def decompose(word):
    """Split positions into (moved, kept) = (NSE set, RLM set), 1-based.

    RLM holds the positions of right-to-left minima; NSE is the complement.
    The two sets are disjoint and their sizes sum to n.
    """
    word = check_permutation(word)
    rlm = set()
    floor = None
    for pos in range(len(word), 0, -1):
        value = word[pos - 1]
        if floor is None or value < floor:
            rlm.add(pos)
            floor = value
    nse_set = frozenset(range(1, len(word) + 1)) - rlm
    return nse_set, frozenset(rlm)


def _scan_nse(word) -> int:
    count = 0
    floor = None
    for value in reversed(word):
        if floor is None or value < floor:
            floor = value
        else:
            count += 1
    return count


def nse_perm(word) -> int:
    """Number of entries that are not right-to-left minima."""
    return _scan_nse(check_permutation(word))


def ltr_max_count(word) -> int:
    """Number of entries larger than everything before them."""
    word = check_permutation(word)
    count = 0
    ceiling = None
    for value in word:
        if ceiling is None or value > ceiling:
            count += 1
            ceiling = value
    return count


def _check_budget(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if n > PERM_BUDGET:
        raise ValueError(
            f"exhaustive scan over {n}! permutations exceeds the "
            f"n<={PERM_BUDGET} budget"
        )
    return n


def nse_distribution(n: int) -> list[int]:
    """Entry j counts permutations in S_n with nse = j, for j = 0..n-1.

    Exhaustive: equals the reversed unsigned Stirling-1 row c(n,n-j).
    """
    n = _check_budget(n)
    counts = [0] * n
    for word in permutations(range(1, n + 1)):
        counts[_scan_nse(word)] += 1
    return counts


def ltr_max_distribution(n: int) -> list[int]:
    """Entry k counts permutations in S_n with k left-to-right maxima.

    Exhaustive; entry 0 is always 0 since every nonempty word has a first
    maximum.  Mirrors nse_distribution: entry k equals entry n-k there.
    """
    n = _check_budget(n)
    counts = [0] * (n + 1)
    for word in permutations(range(1, n + 1)):
        ceiling = 0
        k = 0
        for value in word:
            if value > ceiling:
                k += 1
                ceiling = value
        counts[k] += 1
    return counts
