from __future__ import annotations

import pytest

from polarspec import ValidationError, make_pattern, pw_construct
from polarspec.construct import construct_from_order, reliability_order


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_pw_sets_are_decreasing(m):
    n = 1 << m
    for k in range(1, n + 1):
        spec = pw_construct(m, k)
        assert spec.k == k and spec.is_decreasing()


def test_reliability_order_is_permutation():
    order = reliability_order(5)
    assert sorted(order) == list(range(1, 33))
    assert order[0] == 32 and order[-1] == 1


def test_rate_matched_avoids_pattern():
    pattern = make_pattern("wl", 4, 4)
    spec = pw_construct(4, 6, pattern)
    assert not set(spec.info) & pattern.indices


def test_order_validation():
    with pytest.raises(ValidationError):
        construct_from_order(3, 2, [8, 8, 7, 6, 5, 4, 3, 2])
    with pytest.raises(ValidationError):
        pw_construct(3, 9)


def test_single_bit_is_constant_monomial():
    assert pw_construct(3, 1).info == (8,)
    assert pw_construct(3, 8).info == tuple(range(1, 9))
