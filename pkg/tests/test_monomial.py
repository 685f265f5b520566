from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polarspec import CodeSpec, Monomial, ValidationError, downward_closure, eval_row, index_of, is_decreasing, lam, leq, monomial_of
from polarspec.monomial import iter_decreasing_sets, mother_min_weight, weight
from polarspec.oracle import brute_code_spectrum, enumerate_T, polar_matrix

masks = st.integers(0, 31)


@given(st.integers(1, 6), st.data())
def test_index_round_trip(m, data):
    i = data.draw(st.integers(1, 1 << m))
    assert index_of(monomial_of(i, m), m) == i


def test_rows_match_kronecker():
    for m in range(1, 5):
        g = polar_matrix(m)
        for i in range(1, (1 << m) + 1):
            row = sum(int(b) << k for k, b in enumerate(g[i - 1]))
            assert eval_row(monomial_of(i, m), m) == row


@given(masks)
def test_weight_law(mask):
    f = Monomial(mask)
    assert weight(eval_row(f, 5)) == 1 << (5 - f.degree)


@given(masks, masks, masks)
def test_leq_is_partial_order(a, b, c):
    f, g, h = Monomial(a), Monomial(b), Monomial(c)
    assert leq(f, f)
    if leq(f, g) and leq(g, f):
        assert f == g
    if leq(f, g) and leq(g, h):
        assert leq(f, h)
    if leq(f, g):
        assert f.degree == g.degree or f.degree < g.degree


def test_leq_examples():
    assert leq(Monomial.parse("x1*x2"), Monomial.parse("x1*x3"))
    assert leq(Monomial.parse("x2"), Monomial.parse("x1*x3"))
    assert not leq(Monomial.parse("x3"), Monomial.parse("x1*x2"))
    assert leq(Monomial.parse("1"), Monomial.parse("x4"))


@given(st.lists(masks, max_size=4))
def test_closure_is_decreasing(seeds):
    closed = downward_closure([Monomial(s) for s in seeds], 5)
    assert is_decreasing(closed, 5)
    assert all(Monomial(s) in closed for s in seeds)


def test_decreasing_set_counts():
    assert [sum(1 for _ in iter_decreasing_sets(m)) for m in range(1, 5)] == [3, 5, 10, 27]


@pytest.mark.parametrize("m", [3, 4])
def test_T_sizes_and_weights(m):
    for mask in range(1 << m):
        f = Monomial(mask)
        words = enumerate_T(f, m)
        assert len(words) == lam(f) == len(set(words))
        assert all(weight(w) == 1 << (m - f.degree) for w in words)


def test_mother_example():
    spec = CodeSpec.from_monomials([Monomial.parse(s) for s in ("1", "x1", "x2", "x3")], 3)
    assert brute_code_spectrum(spec) == {0: 1, 4: 14, 8: 1}
    assert mother_min_weight(spec) == (4, 14)


def test_codespec_json_and_validation():
    spec = CodeSpec(3, (8, 4, 6, 7))
    assert spec.info == (4, 6, 7, 8)
    assert CodeSpec.from_json(spec.to_json()).info == spec.info
    with pytest.raises(ValidationError):
        CodeSpec(3, (0, 2))
    with pytest.raises(ValidationError):
        CodeSpec(3, (2, 2))
    assert not CodeSpec(3, (5,)).is_decreasing()


def test_parse_rejects_garbage():
    with pytest.raises(ValidationError):
        Monomial.parse("y2")
