"""Basic operations on finite words.

Words are plain ``str`` values; each character is one symbol. Byte input is
decoded as latin-1 by the CLI so every byte maps to exactly one symbol.
Positions are 0-based and ranges half-open.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from string import ascii_lowercase
from typing import Iterable, Iterator


class AlphabetError(ValueError):
    """A word contains a symbol outside the declared alphabet."""


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("alphabet must contain at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"duplicate symbols in alphabet {self.symbols!r}")
        for s in self.symbols:
            if len(s) != 1:
                raise ValueError(f"symbols must be single characters, got {s!r}")

    @classmethod
    def first(cls, k: int) -> Alphabet:
        """The first ``k`` lowercase latin letters."""
        if not 1 <= k <= len(ascii_lowercase):
            raise ValueError(f"alphabet size must be in 1..26, got {k}")
        return cls(tuple(ascii_lowercase[:k]))

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, c: object) -> bool:
        return c in self.symbols

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def validate(self, w: str) -> str:
        allowed = set(self.symbols)
        for i, c in enumerate(w):
            if c not in allowed:
                raise AlphabetError(
                    f"symbol {c!r} at position {i} is not in alphabet {''.join(self.symbols)!r}"
                )
        return w


def reverse(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def occurrences(w: str, u: str) -> list[int]:
    """Start positions of ``u`` in ``w``, overlapping occurrences included."""
    if not u:
        raise ValueError("occurrences of the empty word are not defined")
    out = []
    i = w.find(u)
    while i != -1:
        out.append(i)
        i = w.find(u, i + 1)
    return out


def is_unioccurrent(w: str, u: str) -> bool:
    i = w.find(u)
    return i != -1 and w.find(u, i + 1) == -1


def is_factor(u: str, w: str) -> bool:
    return u in w


def longest_palindromic_prefix(u: str) -> str:
    for n in range(len(u), 0, -1):
        if is_palindrome(u[:n]):
            return u[:n]
    return ""


def longest_palindromic_suffix(u: str) -> str:
    m = len(u)
    for n in range(m, 0, -1):
        if is_palindrome(u[m - n:]):
            return u[m - n:]
    return ""


def factors(w: str, include_empty: bool = False) -> set[str]:
    """Distinct factors of ``w`` gathered by sliding windows."""
    m = len(w)
    out = {w[i:j] for i in range(m) for j in range(i + 1, m + 1)}
    if include_empty:
        out.add("")
    return out


def factors_of_length(w: str, n: int) -> set[str]:
    if n == 0:
        return {""}
    return {w[i:i + n] for i in range(len(w) - n + 1)}


def all_words(alphabet: Iterable[str], length: int) -> Iterator[str]:
    """Every word of the given length, in lexicographic order of ``alphabet``."""
    symbols = tuple(alphabet)
    for t in product(symbols, repeat=length):
        yield "".join(t)
