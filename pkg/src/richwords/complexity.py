"""Factor and palindromic complexity, and the complexity identity
``P(n) + P(n+1) = C(n+1) - C(n) + 2`` on finite windows of infinite words.

A finite prefix can miss factors of the infinite word, so the identity is
only evaluated through a :class:`WindowSpec`, which says how the infinite
word is approximated:

* ``periodic``: the block repeated; a window of length ``|block| + n``
  already holds every length-``n`` factor, so counts are exact.
* ``prefix``: a long prefix of a uniformly recurrent word (e.g. the
  Fibonacci word). Length-``n`` factors are read from the prefix with its
  last ``n`` symbols dropped, and the prefix must have length at least
  ``PREFIX_MARGIN * max_n``. This margin is a heuristic, not a proof.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .eertree import Eertree
from .generators import periodic_prefix
from .richness import is_rich
from .words import factors_of_length, is_palindrome

PREFIX_MARGIN = 40


class WindowError(ValueError):
    """The window is too short to give exact counts for the requested lengths."""


def factor_complexity(w: str, max_n: int) -> list[int]:
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    return [len(factors_of_length(w, n)) for n in range(max_n + 1)]


def palindromic_complexity(w: str, max_n: int) -> list[int]:
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    counts = [0] * (max_n + 1)
    for p in Eertree(w).palindromes():
        if len(p) <= max_n:
            counts[len(p)] += 1
    return counts


@dataclass(frozen=True)
class WindowSpec:
    kind: str
    source: str
    window_length: int

    @classmethod
    def periodic(cls, block: str, max_n: int, window_length: int | None = None) -> WindowSpec:
        if not block:
            raise ValueError("periodic block must be non-empty")
        if window_length is None:
            reps = -(-(len(block) + max_n) // len(block)) + 1
            window_length = reps * len(block)
        return cls("periodic", block, window_length)

    @classmethod
    def prefix(cls, word: str) -> WindowSpec:
        return cls("prefix", word, len(word))

    def check(self, max_n: int) -> None:
        if self.kind == "periodic":
            need = len(self.source) + max_n + 1
        elif self.kind == "prefix":
            need = PREFIX_MARGIN * max_n
        else:
            raise ValueError(f"unknown window kind {self.kind!r}")
        if self.window_length < need:
            raise WindowError(
                f"{self.kind} window of length {self.window_length} is too short for "
                f"max_n={max_n} (need >= {need})"
            )

    def factors(self, n: int) -> set[str]:
        """Length-``n`` factors of the approximated infinite word."""
        if self.kind == "periodic":
            w = periodic_prefix(self.source, self.window_length)
            return factors_of_length(w, n)
        w = self.source[:self.window_length]
        return factors_of_length(w[:len(w) - n], n)

    @property
    def convention(self) -> str:
        if self.kind == "periodic":
            return f"periodic block of length {len(self.source)}, window {self.window_length}"
        return (
            f"prefix window {self.window_length}, last n symbols dropped, "
            f"heuristic margin {PREFIX_MARGIN}*max_n"
        )


@dataclass(frozen=True)
class ComplexityProfile:
    max_n: int
    C: list[int]
    P: list[int]
    residual: list[int]
    convention: str = ""

    @property
    def holds(self) -> bool:
        return not any(self.residual)

    def rows(self) -> list[dict[str, int | None]]:
        return [
            {
                "n": n,
                "C": self.C[n],
                "P": self.P[n],
                "residual": self.residual[n] if n < len(self.residual) else None,
            }
            for n in range(self.max_n + 1)
        ]

    def to_json(self) -> str:
        return json.dumps(
            {"convention": self.convention, "identityHolds": self.holds, "rows": self.rows()}
        )

    def table(self) -> str:
        lines = [f"# {self.convention}", f"{'n':>4} {'C(n)':>8} {'P(n)':>6} {'residual':>9}"]
        for r in self.rows():
            res = "" if r["residual"] is None else str(r["residual"])
            lines.append(f"{r['n']:>4} {r['C']:>8} {r['P']:>6} {res:>9}")
        return "\n".join(lines) + "\n"


def residuals(C: list[int], P: list[int]) -> list[int]:
    return [P[n] + P[n + 1] - C[n + 1] + C[n] - 2 for n in range(len(C) - 1)]


def complexity_profile(spec: WindowSpec, max_n: int) -> ComplexityProfile:
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    spec.check(max_n)
    C, P = [], []
    for n in range(max_n + 1):
        fs = spec.factors(n)
        C.append(len(fs))
        P.append(sum(1 for u in fs if is_palindrome(u)))
    return ComplexityProfile(max_n, C, P, residuals(C, P), spec.convention)


def prop2_residual(spec: WindowSpec, max_n: int) -> list[int]:
    """Residuals ``P(n) + P(n+1) - C(n+1) + C(n) - 2`` for ``n < max_n``."""
    return complexity_profile(spec, max_n).residual


def is_reversal_closed(spec: WindowSpec, max_n: int) -> bool:
    """Whether every factor of length <= ``max_n`` has its reversal as a factor."""
    spec.check(max_n)
    for n in range(max_n + 1):
        fs = spec.factors(n)
        if any(u[::-1] not in fs for u in fs):
            return False
    return True


def find_identity_witness(
    alphabet: str = "abc",
    max_block: int = 9,
    max_n: int = 12,
    reversal_closed: bool = True,
) -> str | None:
    """First periodic block, by length then lexicographically, that breaks the identity.

    Blocks whose periodic word is rich are skipped, so any block returned is a
    non-rich periodic word with some nonzero residual. With
    ``reversal_closed`` the search is restricted to words whose factors up to
    length ``max_n`` are closed under reversal.
    """
    for m in range(1, max_block + 1):
        for t in product(alphabet, repeat=m):
            block = "".join(t)
            if is_rich(periodic_prefix(block, 4 * m + 2 * max_n)):
                continue
            spec = WindowSpec.periodic(block, max_n)
            if reversal_closed and not is_reversal_closed(spec, max_n):
                continue
            if any(prop2_residual(spec, max_n)):
                return block
    return None
