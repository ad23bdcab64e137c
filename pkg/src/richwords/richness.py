"""Richness verdicts, complete returns and characterization checkers.

``analyze`` is the fast path: one eertree pass, O(n). The
``check_condition`` family is deliberately naive. Each checker enumerates
the distinct factors of the word and tests its own characterization
directly, sharing nothing with the others beyond the basic word helpers,
so that a bug in one shows up as a disagreement in the matrix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .eertree import Eertree, LpsTrace
from .words import (
    factors,
    is_factor,
    is_palindrome,
    is_unioccurrent,
    longest_palindromic_prefix,
    longest_palindromic_suffix,
    occurrences,
    reverse,
)


class Condition(str, Enum):
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    P3 = "P3"
    T1B = "T1B"
    T2 = "T2"


CONDITIONS = tuple(Condition)


@dataclass(frozen=True)
class RichnessReport:
    word_length: int
    palindrome_count: int
    defect: int
    is_rich: bool
    lps_trace: LpsTrace


@dataclass(frozen=True)
class CompleteReturn:
    start: int
    end: int
    factor_u: str
    returned_word: str


@dataclass(frozen=True)
class CharacterizationMatrix:
    verdicts: dict[Condition, bool] = field(default_factory=dict)

    @property
    def all_agree(self) -> bool:
        return len(set(self.verdicts.values())) <= 1

    def to_dict(self) -> dict[str, bool]:
        return {c.value: self.verdicts[c] for c in CONDITIONS if c in self.verdicts}


def analyze(w: str) -> RichnessReport:
    t = Eertree(w)
    count = t.palindrome_count
    defect = len(w) + 1 - count
    return RichnessReport(
        word_length=len(w),
        palindrome_count=count,
        defect=defect,
        is_rich=defect == 0,
        lps_trace=t.lps_trace(),
    )


def is_rich(w: str) -> bool:
    return analyze(w).defect == 0


def prefix_defects(w: str) -> list[int]:
    """Defect of every prefix of ``w``, from the empty prefix up to ``w``."""
    out = [0]
    d = 0
    for flag in Eertree(w).created_flags():
        d += 1 - flag
        out.append(d)
    return out


def complete_returns(w: str, u: str) -> list[CompleteReturn]:
    """Complete returns to ``u`` in ``w``, one per adjacent pair of occurrences."""
    pos = occurrences(w, u)
    return [
        CompleteReturn(i, j + len(u), u, w[i:j + len(u)])
        for i, j in zip(pos, pos[1:])
    ]


def _palindrome_count(u: str) -> int:
    return len({x for x in factors(u) if is_palindrome(x)}) + 1


def _check_ii(w: str) -> bool:
    return all(_palindrome_count(u) == len(u) + 1 for u in factors(w))


def _has_unioccurrent_pal_suffix(x: str) -> bool:
    return any(
        is_palindrome(x[-n:]) and is_unioccurrent(x, x[-n:])
        for n in range(1, len(x) + 1)
    )


def _has_unioccurrent_pal_prefix(x: str) -> bool:
    return any(
        is_palindrome(x[:n]) and is_unioccurrent(x, x[:n])
        for n in range(1, len(x) + 1)
    )


def _check_iii(w: str) -> bool:
    seen_pre: dict[str, bool] = {}
    seen_suf: dict[str, bool] = {}
    for u in factors(w):
        for n in range(1, len(u) + 1):
            x = u[:n]
            if x not in seen_pre:
                seen_pre[x] = _has_unioccurrent_pal_suffix(x)
            if not seen_pre[x]:
                return False
            y = u[-n:]
            if y not in seen_suf:
                seen_suf[y] = _has_unioccurrent_pal_prefix(y)
            if not seen_suf[y]:
                return False
    return True


def _check_iv(w: str) -> bool:
    return all(_has_unioccurrent_pal_suffix(w[:n]) for n in range(1, len(w) + 1))


def _check_v(w: str) -> bool:
    for p in factors(w):
        if is_palindrome(p):
            for r in complete_returns(w, p):
                if not is_palindrome(r.returned_word):
                    return False
    return True


def _check_p3(w: str) -> bool:
    for v in factors(w):
        rv = reverse(v)
        m = len(v)
        for i in occurrences(w, v):
            for j in occurrences(w, rv):
                if j < i:
                    continue
                r = w[i:j + m]
                # v == rv makes the closing occurrence count for both
                found = set(occurrences(r, v)) | set(occurrences(r, rv))
                if found == {0, len(r) - m}:
                    if not is_palindrome(r):
                        return False
    return True


def _check_t1b(w: str) -> bool:
    seen: dict[tuple[str, str], str] = {}
    for u in factors(w):
        if is_palindrome(u):
            continue
        p = longest_palindromic_prefix(u)
        q = longest_palindromic_suffix(u)
        if p == q or is_factor(p, q) or is_factor(q, p):
            return False
        if seen.setdefault((p, q), u) != u:
            return False
    return True


def _check_t2(w: str) -> bool:
    seen: dict[tuple[str, str], str] = {}
    for u in factors(w, include_empty=True):
        key = (longest_palindromic_prefix(u), longest_palindromic_suffix(u))
        if seen.setdefault(key, u) != u:
            return False
    return True


_CHECKERS = {
    Condition.II: _check_ii,
    Condition.III: _check_iii,
    Condition.IV: _check_iv,
    Condition.V: _check_v,
    Condition.P3: _check_p3,
    Condition.T1B: _check_t1b,
    Condition.T2: _check_t2,
}


def check_condition(w: str, cond: Condition | str) -> bool:
    try:
        cond = Condition(cond)
    except ValueError:
        raise ValueError(f"unknown condition {cond!r}") from None
    return _CHECKERS[cond](w)


def characterization_matrix(w: str) -> CharacterizationMatrix:
    return CharacterizationMatrix({c: _CHECKERS[c](w) for c in CONDITIONS})


def report_dict(
    w: str, report: RichnessReport, matrix: CharacterizationMatrix | None = None
) -> dict:
    d = {
        "word": w,
        "length": report.word_length,
        "palindromeCount": report.palindrome_count,
        "defect": report.defect,
        "isRich": report.is_rich,
    }
    if matrix is not None:
        d["conditions"] = matrix.to_dict()
        d["allAgree"] = matrix.all_agree
    return d


def report_json(
    w: str, report: RichnessReport, matrix: CharacterizationMatrix | None = None
) -> str:
    return json.dumps(report_dict(w, report, matrix))
