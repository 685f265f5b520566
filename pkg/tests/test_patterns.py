from __future__ import annotations

import pytest

from polarspec import Kind, Mode, Pattern, ValidationError, bit_reversal_sequence, make_pattern, respects_binary_domination, split_odd_even
from polarspec.monomial import is_factor, leq


def test_families():
    assert make_pattern("qup", 3, 3).sorted() == [1, 2, 3]
    assert make_pattern("wl", 3, 2).sorted() == [7, 8]
    assert bit_reversal_sequence(3) == (1, 5, 3, 7, 2, 6, 4, 8)
    assert make_pattern("br", 3, 3).sorted() == [4, 6, 8]
    assert make_pattern("qup", 3, 1).mode is Mode.PUNCTURE
    assert make_pattern("br", 3, 1).mode is Mode.SHORTEN


@pytest.mark.parametrize("kind", list(Kind)[:3])
def test_nested_and_dominated(kind):
    for m in range(1, 6):
        prev = frozenset()
        for i in range((1 << m) + 1):
            p = make_pattern(kind, m, i)
            assert p.size == i and prev <= p.indices
            assert respects_binary_domination(p)
            prev = p.indices


@pytest.mark.parametrize("m", range(1, 6))
def test_br_order_respects_factors_and_order(m):
    seq = [make_pattern("br", m, i + 1).indices - make_pattern("br", m, i).indices for i in range(1 << m)]
    pos = {Pattern(1 << m, Mode.SHORTEN, s).monomials()[0]: t for t, s in enumerate(seq)}
    for f, pf in pos.items():
        for g, pg in pos.items():
            if is_factor(g, f) or (f.degree == g.degree and leq(f, g)):
                assert pg <= pf


def test_split_qup():
    odd, even = split_odd_even(make_pattern("qup", 3, 3))
    assert odd.n == even.n == 4
    assert odd.sorted() == [1, 2] and even.sorted() == [1]


def test_domination_detects_bad_pattern():
    assert not respects_binary_domination(Pattern(8, Mode.PUNCTURE, frozenset({2})))
    assert not respects_binary_domination(Pattern(8, Mode.SHORTEN, frozenset({7})))


def test_validation_and_json():
    with pytest.raises(ValidationError):
        make_pattern("qup", 3, 9)
    with pytest.raises(ValidationError):
        Pattern(8, Mode.PUNCTURE, frozenset({9}))
    p = make_pattern("wl", 4, 5)
    assert Pattern.from_json(p.to_json()) == p
