"""Palindromic tree (eertree) built online, one symbol at a time.

Nodes live in parallel lists indexed by node id. Node 0 is the imaginary
root of length -1, node 1 the empty palindrome. Every other node is one
distinct non-empty palindromic factor of the word read so far.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .words import Alphabet, AlphabetError

IMAGINARY = 0
EMPTY = 1


@dataclass(frozen=True)
class EertreeNode:
    id: int
    pal_length: int
    suffix_link: int
    transitions: dict[str, int]
    occurrence_count: int
    first_end_position: int | None


class LpsTrace(NamedTuple):
    """Per-prefix longest palindromic suffix lengths and novelty flags."""

    lengths: list[int]
    new: list[bool]


class Eertree:
    def __init__(self, word: str = "", alphabet: Alphabet | None = None):
        self.alphabet = alphabet
        self._allowed = set(alphabet.symbols) if alphabet is not None else None
        self._chars: list[str] = []
        self._len = [-1, 0]
        self._link = [IMAGINARY, IMAGINARY]
        self._next: list[dict[str, int]] = [{}, {}]
        self._first_end: list[int | None] = [None, None]
        # number of positions at which the node is the longest palindromic suffix
        self._ends = [0, 0]
        self._counts: list[int] | None = None
        self._last = EMPTY
        self._lps: list[int] = []
        self._created = bytearray()
        if word:
            self.extend(word)

    def push(self, c: str) -> int:
        """Append ``c``; return the number of new palindromes (0 or 1)."""
        self.extend(c)
        return self._created[-1]

    def extend(self, w: Iterable[str]) -> None:
        allowed = self._allowed
        chars = self._chars
        plen = self._len
        link = self._link
        nxt = self._next
        first_end = self._first_end
        ends = self._ends
        lps = self._lps
        created = self._created
        last = self._last
        i = len(chars)
        for c in w:
            if allowed is not None and c not in allowed:
                raise AlphabetError(f"symbol {c!r} is not in the declared alphabet")
            chars.append(c)
            cur = last
            while True:
                j = i - 1 - plen[cur]
                if j >= 0 and chars[j] == c:
                    break
                cur = link[cur]
            v = nxt[cur].get(c)
            if v is not None:
                created.append(0)
            else:
                v = len(plen)
                n = plen[cur] + 2
                if n == 1:
                    suf = EMPTY
                else:
                    x = link[cur]
                    while True:
                        j = i - 1 - plen[x]
                        if j >= 0 and chars[j] == c:
                            break
                        x = link[x]
                    suf = nxt[x][c]
                plen.append(n)
                link.append(suf)
                nxt.append({})
                first_end.append(i)
                ends.append(0)
                nxt[cur][c] = v
                created.append(1)
            ends[v] += 1
            lps.append(v)
            last = v
            i += 1
        self._last = last
        self._counts = None

    @property
    def word(self) -> str:
        return "".join(self._chars)

    def __len__(self) -> int:
        """Length of the word read so far."""
        return len(self._chars)

    @property
    def node_count(self) -> int:
        """Number of distinct non-empty palindromic factors."""
        return len(self._len) - 2

    @property
    def palindrome_count(self) -> int:
        """Distinct palindromic factors, the empty word included."""
        return len(self._len) - 1

    @property
    def current_lps(self) -> int:
        return self._last

    def occurrence_counts(self) -> list[int]:
        if self._counts is None:
            counts = list(self._ends)
            # a suffix link always points to an older node, so reverse
            # creation order visits every node before its link target
            for v in range(len(counts) - 1, 1, -1):
                counts[self._link[v]] += counts[v]
            counts[IMAGINARY] = counts[EMPTY] = 0
            self._counts = counts
        return self._counts

    def node(self, v: int) -> EertreeNode:
        return EertreeNode(
            id=v,
            pal_length=self._len[v],
            suffix_link=self._link[v],
            transitions=dict(sorted(self._next[v].items())),
            occurrence_count=self.occurrence_counts()[v],
            first_end_position=self._first_end[v],
        )

    def nodes(self) -> list[EertreeNode]:
        return [self.node(v) for v in range(len(self._len))]

    def palindrome(self, v: int) -> str:
        if v <= EMPTY:
            return ""
        end = self._first_end[v] + 1
        return "".join(self._chars[end - self._len[v]:end])

    def palindromes(self) -> set[str]:
        """All distinct palindromic factors, the empty word included."""
        return {self.palindrome(v) for v in range(1, len(self._len))}

    def lps_trace(self) -> LpsTrace:
        plen = self._len
        return LpsTrace([plen[v] for v in self._lps], [bool(b) for b in self._created])

    def created_flags(self) -> bytes:
        return bytes(self._created)

    def dump(self) -> str:
        """Deterministic text listing, one node per line."""
        lines = []
        for v in range(len(self._len)):
            tr = " ".join(f"{c}->{t}" for c, t in sorted(self._next[v].items()))
            lines.append(f"{v} len={self._len[v]} link={self._link[v]} [{tr}]")
        return "\n".join(lines) + "\n"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Eertree):
            return NotImplemented
        return (
            self._chars == other._chars
            and self._len == other._len
            and self._link == other._link
            and self._next == other._next
            and self._first_end == other._first_end
            and self._ends == other._ends
            and self._last == other._last
        )


def distinct_palindromes(w: str) -> set[str]:
    return Eertree(w).palindromes()


def lps_trace(w: str) -> LpsTrace:
    return Eertree(w).lps_trace()
