import pytest
from hypothesis import given, strategies as st

from oracles import brute_force_words, jacobsthal_recursive, symbol_palindromic
from twobridge.words import (
    CaseTag,
    RunWord,
    WordError,
    classify_case,
    count_palindromic,
    count_words,
    enumerate_palindromic,
    enumerate_words,
    ernst_sumners_count,
    involution,
    is_palindromic_type,
    iter_words,
    jacobsthal,
    knot_classes,
    mirror_reverse,
    parse_word,
    reduce_tail,
    reverse,
    to_symbols,
)


def W(text):
    return parse_word(text)


def symbols(ws):
    return [to_symbols(w) for w in ws]


def test_small_word_sets():
    assert enumerate_words(3) == [RunWord((1, 2, 1))]
    assert symbols(enumerate_words(3)) == ["+--+"]
    assert symbols(enumerate_words(4)) == ["+-+-"]
    assert sorted(symbols(enumerate_words(5))) == sorted(["+--++-+", "+-++--+", "+--+--+"])


def test_table_rows_for_six():
    # T(6) as listed with its reductions
    expected = {"+-+-++-", "+-+--+-", "+--++--++-", "+-++-+-", "+--+-+-"}
    assert set(symbols(enumerate_words(6))) == expected


@pytest.mark.parametrize("c", range(3, 10))
def test_enumeration_matches_brute_force(c):
    assert sorted(symbols(enumerate_words(c))) == sorted(brute_force_words(c))


def test_enumeration_is_lexicographic_and_unique():
    for c in range(3, 13):
        ws = enumerate_words(c)
        assert [w.runs for w in ws] == sorted({w.runs for w in ws})


def test_prefix_chunks_partition():
    c = 11
    whole = enumerate_words(c)
    chunks = [w for p in ((1, 1), (1, 2), (2, 1), (2, 2)) for w in iter_words(c, p)]
    assert chunks == whole


def test_to_symbols():
    assert to_symbols(RunWord((1, 2, 1))) == "+--+"
    assert to_symbols(RunWord((1, 1, 2, 2, 1))) == "+-++--+"
    assert to_symbols(RunWord((1, 1, 1, 1))) == "+-+-"


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("+-+", "mod 3"),
        ("+---+", "length 3"),
        ("++-+--+", "first run"),
        ("+-+--", "last run"),
        ("-+-+", r"start with .\+."),
        ("+x-+", "unexpected"),
        ("1,2", "at least 3"),
        ("1,a,1", "cannot read"),
    ],
)
def test_parse_rejects(text, fragment):
    with pytest.raises(WordError, match=fragment):
        parse_word(text)


def test_parse_accepts_both_syntaxes_and_unicode_minus():
    assert W("1,1,2,2,1") == W("+-++--+") == W("+−++−−+")


def test_reverse_and_mirror():
    assert reverse(W("+--++-+")) == W("+-++--+")
    assert mirror_reverse(W("+-+-")) == W("+-+-")
    assert reverse(W("+--+")) == W("+--+")
    with pytest.raises(WordError):
        reverse(W("+-+-"))
    with pytest.raises(WordError):
        mirror_reverse(W("+--+"))


@pytest.mark.parametrize("c", range(3, 15))
def test_involution_is_run_reversal(c):
    for w in enumerate_words(c):
        p = involution(w)
        assert p.runs == w.runs[::-1]
        assert involution(p) == w


def test_palindromic_examples():
    assert is_palindromic_type(W("+--+--+"))
    assert is_palindromic_type(W("+-+-"))
    assert not is_palindromic_type(W("+--++-+"))


@pytest.mark.parametrize("c", range(3, 17))
def test_palindromic_agrees_with_symbol_definition(c):
    listed = set(enumerate_palindromic(c))
    for w in enumerate_words(c):
        s = to_symbols(w)
        assert is_palindromic_type(w) == symbol_palindromic(s, c) == (w in listed)


def test_palindromic_sets():
    assert symbols(enumerate_palindromic(3)) == ["+--+"]
    assert symbols(enumerate_palindromic(5)) == ["+--+--+"]
    assert set(symbols(enumerate_palindromic(7))) == {"+-+-+-+", "+-++--++-+", "+--+--+--+"}
    assert len(enumerate_palindromic(9)) == 5
    assert set(symbols(enumerate_palindromic(8))) == {"+-+--++-+-", "+-++-+--+-", "+--+-+-++-"}


def test_jacobsthal():
    assert jacobsthal(0) == 0
    assert jacobsthal(1) == 1
    assert jacobsthal(5) == 11
    assert jacobsthal(10) == 341
    assert all(jacobsthal(n) == jacobsthal_recursive(n) for n in range(65))
    with pytest.raises(ValueError):
        jacobsthal(-1)


def test_counts():
    assert count_words(6) == 5
    assert count_words(7) == 11
    assert count_words(12) == 341 == len(enumerate_words(12))
    assert count_palindromic(5) == count_palindromic(6) == 1
    assert count_palindromic(9) == 5
    assert count_palindromic(10) == 5
    for c in range(5, 40):
        assert count_words(c) == count_words(c - 1) + 2 * count_words(c - 2)
    for c in range(7, 40):
        assert count_palindromic(c) == count_palindromic(c - 2) + 2 * count_palindromic(c - 4)


def test_ernst_sumners():
    assert ernst_sumners_count(3) == 1
    assert ernst_sumners_count(6) == 3
    assert ernst_sumners_count(12) == 176
    for c in range(3, 60):
        assert 2 * ernst_sumners_count(c) == count_words(c) + count_palindromic(c)


@pytest.mark.parametrize("bad", [2, 0, -1])
def test_small_c_rejected(bad):
    for fn in (enumerate_words, enumerate_palindromic, count_words, count_palindromic, ernst_sumners_count, knot_classes):
        with pytest.raises(ValueError):
            fn(bad)


def test_classify_case():
    assert classify_case(W("+--++-+")) is CaseTag.CASE4
    assert classify_case(W("+-++--+")) is CaseTag.CASE2
    assert classify_case(W("+--+--+")) is CaseTag.CASE3
    assert classify_case(W("+-+-+-+")) is CaseTag.CASE1
    with pytest.raises(ValueError):
        classify_case(W("+-+-"))


@pytest.mark.parametrize("c", range(6, 17))
def test_case_census(c):
    tally = {k: 0 for k in CaseTag}
    for w in enumerate_words(c):
        tally[classify_case(w)] += 1
    assert tally[CaseTag.CASE1] == 2 * count_words(c - 3)
    assert tally[CaseTag.CASE2] == tally[CaseTag.CASE3] == tally[CaseTag.CASE4] == count_words(c - 2)


def test_reduce_tail_table_rows():
    assert reduce_tail(W("+-+-++-")) == (W("+-+-"), 4)
    assert reduce_tail(W("+--++--++-")) == (W("+--++-+"), 5)
    assert reduce_tail(W("+-+-+-+")) == (W("+-+-++-"), 6)
    # T(7) rows reducing into T(5)
    assert reduce_tail(W("+--++-+--+")) == (W("+--++-+"), 5)
    assert reduce_tail(W("+--++-++-+")) == (W("+--++-+"), 5)


@pytest.mark.parametrize("c", range(5, 15))
def test_reduce_tail_bijections(c):
    by_case = {k: [] for k in CaseTag}
    for w in enumerate_words(c):
        r, rc = reduce_tail(w)
        assert r.c == rc
        by_case[classify_case(w)].append(r)
    assert sorted(by_case[CaseTag.CASE3]) == enumerate_words(c - 2)
    assert sorted(by_case[CaseTag.CASE4]) == enumerate_words(c - 2)
    assert sorted(by_case[CaseTag.CASE1] + by_case[CaseTag.CASE2]) == enumerate_words(c - 1)


def test_knot_classes():
    assert len(knot_classes(3)) == 1
    five = knot_classes(5)
    assert sorted(k.orbit_size for k in five) == [1, 2]
    assert len(knot_classes(7)) == 7
    for c in range(3, 15):
        classes = knot_classes(c)
        assert len(classes) == ernst_sumners_count(c)
        for k in classes:
            assert (k.orbit_size == 1) == k.palindromic
            assert k.representative <= involution(k.representative)


@given(st.lists(st.sampled_from([1, 2]), min_size=1, max_size=20))
def test_runword_roundtrip(middle):
    runs = (1, *middle, 1)
    if sum(runs) % 3 != 1:
        with pytest.raises(WordError):
            RunWord(runs)
        return
    w = RunWord(runs)
    assert parse_word(to_symbols(w)) == w
    assert involution(involution(w)) == w
    assert is_palindromic_type(w) == (involution(w) == w)
