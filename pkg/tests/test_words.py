import pytest
from hypothesis import given, strategies as st

from richwords.words import (
    Alphabet,
    AlphabetError,
    all_words,
    factors,
    is_palindrome,
    longest_palindromic_prefix,
    longest_palindromic_suffix,
    occurrences,
    reverse,
)

words = st.text(alphabet="abc", max_size=30)


@pytest.mark.parametrize("w, expected", [("abac", "caba"), ("", ""), ("aabcbaa", "aabcbaa")])
def test_reverse(w, expected):
    assert reverse(w) == expected


@pytest.mark.parametrize("w, expected", [("", True), ("aba", True), ("abac", False)])
def test_is_palindrome(w, expected):
    assert is_palindrome(w) is expected


def test_is_palindrome_matches_index_check_exhaustively():
    for n in range(13):
        for w in all_words("ab", n):
            assert is_palindrome(w) == all(w[i] == w[n - 1 - i] for i in range(n))


@pytest.mark.parametrize(
    "w, u, expected",
    [("aabcbaaba", "aa", [0, 5]), ("aaa", "aa", [0, 1]), ("abac", "abac", [0])],
)
def test_occurrences(w, u, expected):
    assert occurrences(w, u) == expected


def test_occurrences_rejects_empty_factor():
    with pytest.raises(ValueError):
        occurrences("abc", "")


@given(words, st.text(alphabet="abc", min_size=1, max_size=4))
def test_occurrences_windows(w, u):
    pos = occurrences(w, u)
    assert pos == sorted(set(pos))
    assert all(w[i:i + len(u)] == u for i in pos)
    assert bool(pos) == (u in w)
    assert pos == [i for i in range(len(w)) if w.startswith(u, i)]


@pytest.mark.parametrize("u, expected", [("abac", "aba"), ("aba", "aba"), ("abca", "a"), ("", "")])
def test_longest_palindromic_prefix(u, expected):
    assert longest_palindromic_prefix(u) == expected


@pytest.mark.parametrize("u, expected", [("abac", "c"), ("aabcbaa", "aabcbaa"), ("", "")])
def test_longest_palindromic_suffix(u, expected):
    assert longest_palindromic_suffix(u) == expected


@given(words)
def test_lps_is_mirror_of_lpp(u):
    assert longest_palindromic_suffix(u) == reverse(longest_palindromic_prefix(reverse(u)))
    if u:
        assert len(longest_palindromic_prefix(u)) >= 1


def test_factors():
    assert factors("aab") == {"a", "b", "aa", "ab", "aab"}
    assert factors("", include_empty=True) == {""}


def test_alphabet():
    ab = Alphabet.first(3)
    assert ab.symbols == ("a", "b", "c")
    assert "b" in ab and "d" not in ab
    assert ab.validate("abca") == "abca"
    with pytest.raises(AlphabetError):
        ab.validate("abd")
    with pytest.raises(ValueError):
        Alphabet(("a", "a"))
    with pytest.raises(ValueError):
        Alphabet(())
