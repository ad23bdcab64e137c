import pytest
from hypothesis import given, strategies as st

from richwords.oracle import brute_is_rich
from richwords.richness import (
    CONDITIONS,
    Condition,
    analyze,
    characterization_matrix,
    check_condition,
    complete_returns,
    is_rich,
    prefix_defects,
    report_json,
)
from richwords.words import (
    all_words,
    factors,
    is_factor,
    is_palindrome,
    longest_palindromic_prefix,
    longest_palindromic_suffix,
)


@pytest.mark.parametrize("w, rich, defect", [("abac", True, 0), ("abca", False, 1), ("", True, 0)])
def test_analyze(w, rich, defect):
    r = analyze(w)
    assert r.is_rich is rich
    assert r.defect == defect
    assert r.is_rich == all(r.lps_trace.new)


@pytest.mark.parametrize(
    "w, u, expected",
    [("aabcbaaba", "aa", ["aabcbaa"]), ("aa", "a", ["aa"]), ("abcabc", "abc", ["abcabc"])],
)
def test_complete_returns(w, u, expected):
    rs = complete_returns(w, u)
    assert [r.returned_word for r in rs] == expected
    for r in rs:
        assert w[r.start:r.end] == r.returned_word
        assert r.returned_word.startswith(u) and r.returned_word.endswith(u)
        assert sum(r.returned_word.startswith(u, i) for i in range(len(r.returned_word))) == 2


def test_complete_returns_allow_overlap():
    assert [r.returned_word for r in complete_returns("aaa", "aa")] == ["aaa"]
    assert complete_returns("abc", "a") == []
    with pytest.raises(ValueError):
        complete_returns("abc", "")


@pytest.mark.parametrize(
    "w, cond, expected",
    [
        ("abca", Condition.V, False),
        ("abca", Condition.T2, False),
        ("abac", Condition.T1B, True),
        ("a", Condition.IV, True),
        ("abca", "P3", False),
    ],
)
def test_check_condition(w, cond, expected):
    assert check_condition(w, cond) is expected


def test_unknown_condition():
    with pytest.raises(ValueError):
        check_condition("abc", "VI")


@pytest.mark.parametrize("w, expected", [("abac", True), ("abca", False), ("", True)])
def test_matrix_examples(w, expected):
    m = characterization_matrix(w)
    assert set(m.verdicts) == set(CONDITIONS)
    assert all(v is expected for v in m.verdicts.values())
    assert m.all_agree


def test_matrix_agrees_with_oracle_small_range():
    for n in range(9):
        for w in all_words("ab", n):
            m = characterization_matrix(w)
            assert m.all_agree, w
            assert m.verdicts[Condition.IV] == brute_is_rich(w), w


def test_complete_returns_to_palindromes_in_rich_words():
    for n in range(8):
        for w in all_words("abc", n):
            if not check_condition(w, Condition.IV):
                continue
            for p in factors(w):
                if is_palindrome(p):
                    assert all(is_palindrome(r.returned_word) for r in complete_returns(w, p))


def test_extremal_palindromes_are_independent_in_rich_words():
    for n in range(11):
        for w in all_words("ab", n):
            if not is_rich(w):
                continue
            for u in factors(w):
                if is_palindrome(u):
                    continue
                p, q = longest_palindromic_prefix(u), longest_palindromic_suffix(u)
                assert p != q and not is_factor(p, q) and not is_factor(q, p)


@given(st.text("abc", max_size=60))
def test_defect_monotone(w):
    d = prefix_defects(w)
    assert d[-1] == analyze(w).defect
    flags = analyze(w).lps_trace.new
    for i in range(len(w)):
        assert d[i + 1] - d[i] == 1 - flags[i]


def test_richness_is_hereditary_small_range():
    for w in all_words("abc", 7):
        if is_rich(w):
            assert all(is_rich(u) for u in factors(w))


def test_report_json_key_order():
    m = characterization_matrix("abac")
    s = report_json("abac", analyze("abac"), m)
    assert s == (
        '{"word": "abac", "length": 4, "palindromeCount": 5, "defect": 0, "isRich": true, '
        '"conditions": {"II": true, "III": true, "IV": true, "V": true, "P3": true, '
        '"T1B": true, "T2": true}, "allAgree": true}'
    )
