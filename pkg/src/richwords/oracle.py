"""Naive reference implementations, used as ground truth in tests.

Nothing here imports the eertree or richness modules.
"""

from __future__ import annotations

from itertools import product

DEFAULT_CAP = 4096
DEFAULT_BUDGET = 1 << 22


class OracleLimitError(ValueError):
    pass


def brute_distinct_palindromes(w: str, cap: int = DEFAULT_CAP) -> set[str]:
    if len(w) > cap:
        raise OracleLimitError(f"word length {len(w)} exceeds oracle cap {cap}")
    pals = {""}
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n + 1):
            u = w[i:j]
            if u == u[::-1]:
                pals.add(u)
    return pals


def brute_is_rich(w: str, cap: int = DEFAULT_CAP) -> bool:
    return len(brute_distinct_palindromes(w, cap)) == len(w) + 1


def rich_count(alphabet_size: int, length: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of rich words of the given length over ``alphabet_size`` letters."""
    if alphabet_size < 1 or length < 0:
        raise ValueError("alphabet_size must be >= 1 and length >= 0")
    if alphabet_size ** length > budget:
        raise OracleLimitError(
            f"{alphabet_size}^{length} words exceed enumeration budget {budget}"
        )
    letters = "abcdefghijklmnopqrstuvwxyz"[:alphabet_size]
    return sum(brute_is_rich("".join(t)) for t in product(letters, repeat=length))
