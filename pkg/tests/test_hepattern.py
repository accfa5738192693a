import pytest
from hypothesis import given
from hypothesis import strategies as st

from relbranch.hepattern import (
    ALLOWED_PAIRS,
    CIRCLED,
    PLAIN,
    SignSeq,
    allowed_adjacent,
    enumerate_alignments,
    u1n_end_candidates,
    u2n_case_report,
    u2n_plus_sequence,
)


def test_allowed_adjacent_examples():
    assert allowed_adjacent("+", "P")
    assert allowed_adjacent("M", "P")
    assert not allowed_adjacent("+", "+")
    assert not allowed_adjacent("-", "-")
    assert not allowed_adjacent("P", "-")
    assert not allowed_adjacent("+", "M")
    assert len(ALLOWED_PAIRS) == 8


def test_sign_seq_parsing():
    seq = SignSeq.from_string("+--+")
    assert seq.is_plain and not seq.is_circled
    assert seq.to_string() == "+--+"
    assert SignSeq.from_string("PMM").is_circled
    with pytest.raises(ValueError):
        SignSeq.from_string("+-x")


def test_enumerate_requires_disjoint_alphabets():
    with pytest.raises(ValueError):
        enumerate_alignments(SignSeq.from_string("+P"), SignSeq.from_string("M"))
    with pytest.raises(ValueError):
        enumerate_alignments(SignSeq.from_string("+-"), SignSeq.from_string("-"))


def test_single_symbol_incompatible():
    assert enumerate_alignments(SignSeq.from_string("+"), SignSeq.from_string("M")) == []


def test_printed_patterns_reproduced():
    for n in range(4, 11):
        big = u2n_plus_sequence(n)
        first, second = u1n_end_candidates(n)
        got_first = enumerate_alignments(big, first)
        got_second = enumerate_alignments(big, second)
        assert [a.to_string() for a in got_first] == ["+P" + "M-" * n + "+"]
        assert [a.to_string() for a in got_second] == ["+-" + "M-" * (n - 1) + "MP+"]


def test_u2n_report():
    report = u2n_case_report(4)
    assert report.total_alignments == 2
    assert report.big.to_string() == "+----+"
    assert [c.to_string() for c in report.candidates] == ["PMMMM", "MMMMP"]
    assert not report.character_screen_applied
    data = report.to_dict()
    assert data["total_alignments"] == 2
    assert data["alignments"][0] == ["+PM-M-M-M-+"]
    report5 = u2n_case_report(5)
    assert report5.total_alignments == 2
    with pytest.raises(ValueError):
        u2n_case_report(3)


def test_exactly_one_alignment_per_candidate():
    for n in range(4, 11):
        report = u2n_case_report(n)
        assert [len(group) for group in report.alignments] == [1, 1]


def test_outputs_satisfy_adjacency_and_order():
    big = u2n_plus_sequence(6)
    for candidate in u1n_end_candidates(6):
        for merged in enumerate_alignments(big, candidate):
            for s1, s2 in zip(merged.symbols, merged.symbols[1:]):
                assert allowed_adjacent(s1, s2)
            assert merged.erase(PLAIN) == big
            assert merged.erase(CIRCLED) == candidate


@st.composite
def _plain_and_circled(draw):
    big = draw(st.lists(st.sampled_from("+-"), min_size=0, max_size=6))
    small = draw(st.lists(st.sampled_from("PM"), min_size=0, max_size=6))
    return SignSeq(tuple(big)), SignSeq(tuple(small))


@given(_plain_and_circled())
def test_alignment_properties_random(seqs):
    big, small = seqs
    merged_list = enumerate_alignments(big, small)
    seen = set()
    for merged in merged_list:
        assert len(merged) == len(big) + len(small)
        for s1, s2 in zip(merged.symbols, merged.symbols[1:]):
            assert allowed_adjacent(s1, s2)
        assert merged.erase(PLAIN) == big
        assert merged.erase(CIRCLED) == small
        seen.add(merged.symbols)
    assert len(seen) == len(merged_list)  # no duplicates


def test_enumeration_is_deterministic():
    big = u2n_plus_sequence(5)
    small, _ = u1n_end_candidates(5)
    assert enumerate_alignments(big, small) == enumerate_alignments(big, small)
