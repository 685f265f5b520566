from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polarspec import ValidationError, union_bound
from polarspec.bounds import qfunc, sigma_from_ebn0


@given(st.integers(1, 64), st.floats(0.1, 5.0))
def test_single_term(d, sigma):
    (s, b), = union_bound({d: 1}, [sigma]).points
    assert b == pytest.approx(0.5 * math.erfc(math.sqrt(d) / sigma / math.sqrt(2)), abs=1e-12)


def test_monotone_in_snr():
    spec = {0: 1, 4: 14, 8: 1}
    sig = [sigma_from_ebn0(x, 0.5) for x in range(-2, 8)]
    vals = [b for _, b in union_bound(spec, sig).points]
    assert all(x > y for x, y in zip(vals, vals[1:]))


def test_options():
    spec = {2: 3, 4: 5}
    full = union_bound(spec, [1.0]).points[0][1]
    assert union_bound(spec, [1.0], max_weight=2).points[0][1] == pytest.approx(3 * qfunc(math.sqrt(2)))
    literal = union_bound(spec, [1.0], paper_literal_sign=True).points[0][1]
    assert literal > full


def test_errors():
    with pytest.raises(ValidationError):
        union_bound({0: 1}, [1.0])
    with pytest.raises(ValidationError):
        union_bound({2: 1}, [0.0])


def test_repetition_code_value():
    (_, b), = union_bound({0: 1, 8: 1}, [1.0]).points
    assert b == pytest.approx(2.34e-3, rel=5e-3)
    assert b == pytest.approx(qfunc(2 * math.sqrt(2)), abs=1e-15)


def test_large_sigma_limit():
    (_, b), = union_bound({2: 3, 4: 5}, [1e9]).points
    assert b == pytest.approx(0.5 * 8, rel=1e-6)
