"""Exhaustive cross-validation of the richness characterizations.

Every word up to a given length is run through the fast eertree verdict,
the brute-force oracle, and all seven naive characterization checkers.
Any disagreement between them is recorded with its first counterexample.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .oracle import brute_is_rich
from .richness import analyze, characterization_matrix
from .words import Alphabet, all_words

DEFAULT_BUDGET = 200_000


class BudgetError(ValueError):
    pass


@dataclass
class LengthRow:
    length: int
    words: int = 0
    rich: int = 0
    disagreements: int = 0
    first_counterexample: str | None = None


@dataclass
class CrossvalSummary:
    alphabet_size: int
    max_len: int
    rows: list[LengthRow] = field(default_factory=list)

    @property
    def disagreements(self) -> int:
        return sum(r.disagreements for r in self.rows)

    @property
    def first_counterexample(self) -> str | None:
        for r in self.rows:
            if r.first_counterexample is not None:
                return r.first_counterexample
        return None

    def to_dict(self) -> dict:
        return {
            "alphabetSize": self.alphabet_size,
            "maxLen": self.max_len,
            "disagreements": self.disagreements,
            "firstCounterexample": self.first_counterexample,
            "rows": [
                {"length": r.length, "words": r.words, "rich": r.rich,
                 "disagreements": r.disagreements}
                for r in self.rows
            ],
        }

    def table(self) -> str:
        lines = [f"{'length':>6} {'words':>8} {'rich':>8} {'disagree':>8}"]
        for r in self.rows:
            lines.append(f"{r.length:>6} {r.words:>8} {r.rich:>8} {r.disagreements:>8}")
        lines.append(f"disagreements={self.disagreements}")
        return "\n".join(lines) + "\n"


def word_agrees(w: str) -> tuple[bool, bool]:
    """Return ``(is_rich, all_verdicts_agree)`` for one word."""
    fast = analyze(w).is_rich
    slow = brute_is_rich(w)
    m = characterization_matrix(w)
    ok = fast == slow and m.all_agree and all(v == fast for v in m.verdicts.values())
    return fast, ok


def _run_chunk(args: tuple[str, int, str]) -> LengthRow:
    letters, length, head = args
    row = LengthRow(length)
    for tail in all_words(letters, length - len(head)):
        w = head + tail
        rich, ok = word_agrees(w)
        row.words += 1
        row.rich += rich
        if not ok:
            row.disagreements += 1
            if row.first_counterexample is None:
                row.first_counterexample = w
    return row


def _merge(rows: list[LengthRow]) -> LengthRow:
    out = LengthRow(rows[0].length)
    for r in rows:
        out.words += r.words
        out.rich += r.rich
        out.disagreements += r.disagreements
        if out.first_counterexample is None:
            out.first_counterexample = r.first_counterexample
    return out


def crossvalidate(
    alphabet_size: int,
    max_len: int,
    workers: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> CrossvalSummary:
    letters = "".join(Alphabet.first(alphabet_size))
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    total = sum(alphabet_size ** n for n in range(max_len + 1))
    if total > budget:
        raise BudgetError(f"{total} words exceed the enumeration budget {budget}")

    # chunks are keyed by a 2-letter head so they partition each length
    tasks = []
    for n in range(max_len + 1):
        heads = list(all_words(letters, min(n, 2)))
        tasks.append([(letters, n, h) for h in heads])
    flat = [t for group in tasks for t in group]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_chunk, flat))
    else:
        results = [_run_chunk(t) for t in flat]

    summary = CrossvalSummary(alphabet_size, max_len)
    i = 0
    for group in tasks:
        summary.rows.append(_merge(results[i:i + len(group)]))
        i += len(group)
    return summary
