from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from richwords.eertree import EMPTY, IMAGINARY, Eertree, distinct_palindromes, lps_trace
from richwords.oracle import brute_distinct_palindromes
from richwords.words import Alphabet, AlphabetError, all_words, occurrences

from .conftest import random_words

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize(
    "w, expected",
    [("aaa", [1, 1, 1]), ("abca", [1, 1, 1, 0]), ("abac", [1, 1, 1, 1])],
)
def test_push_returns(w, expected):
    t = Eertree()
    assert [t.push(c) for c in w] == expected


def test_push_rejects_symbol_outside_alphabet():
    t = Eertree(alphabet=Alphabet.first(2))
    t.push("a")
    with pytest.raises(AlphabetError):
        t.push("c")


@pytest.mark.parametrize(
    "w, expected",
    [
        ("abac", {"", "a", "b", "c", "aba"}),
        ("", {""}),
        ("abca", {"", "a", "b", "c"}),
    ],
)
def test_distinct_palindromes(w, expected):
    assert distinct_palindromes(w) == expected


@pytest.mark.parametrize(
    "w, lengths, new",
    [
        ("abac", [1, 1, 3, 1], [True] * 4),
        ("abca", [1, 1, 1, 1], [True, True, True, False]),
        ("a", [1], [True]),
    ],
)
def test_lps_trace(w, lengths, new):
    tr = lps_trace(w)
    assert tr.lengths == lengths
    assert tr.new == new


def test_roots_and_links():
    t = Eertree("abaababaabaab")
    nodes = t.nodes()
    assert nodes[IMAGINARY].pal_length == -1 and nodes[IMAGINARY].suffix_link == IMAGINARY
    assert nodes[EMPTY].pal_length == 0
    for n in nodes[1:]:
        assert nodes[n.suffix_link].pal_length < n.pal_length
    for n in nodes:
        for c, v in n.transitions.items():
            assert t.palindrome(v) == c + t.palindrome(n.id) + c if n.id != IMAGINARY else c


def test_dump_golden():
    assert Eertree("abac").dump() == (GOLDEN / "eertree_abac.txt").read_text()


def test_matches_oracle_on_binary_words():
    for n in range(11):
        for w in all_words("ab", n):
            t = Eertree(w)
            assert t.palindrome_count == len(brute_distinct_palindromes(w))


def test_matches_oracle_on_random_ternary(rng):
    for w in random_words(rng, 10_000, "abc", 200):
        t = Eertree(w)
        assert t.palindromes() == brute_distinct_palindromes(w)
        assert t.node_count <= len(w)


def test_occurrence_counts_match_scans(rng):
    for w in random_words(rng, 300, "abc", 60):
        t = Eertree(w)
        counts = t.occurrence_counts()
        for v in range(2, t.node_count + 2):
            assert counts[v] == len(occurrences(w, t.palindrome(v)))


def test_first_end_position_is_first_occurrence():
    w = "abaababaabaab"
    t = Eertree(w)
    for n in t.nodes()[2:]:
        p = t.palindrome(n.id)
        assert n.first_end_position == occurrences(w, p)[0] + len(p) - 1


@given(st.text("abc", max_size=40), st.text("abc", max_size=40))
def test_incremental_construction(w, x):
    t = Eertree(w)
    t.extend(x)
    assert t == Eertree(w + x)


@given(st.text("abcd", max_size=60))
def test_push_creates_at_most_one_node(w):
    t = Eertree()
    for c in w:
        before = t.node_count
        r = t.push(c)
        assert r in (0, 1)
        assert t.node_count - before == r
