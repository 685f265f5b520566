from __future__ import annotations

import pytest

from polarspec import CodeSpec, Monomial, ValidationError, build_prefix_table, lam, make_pattern, qup_min_weight, wl_min_weight
from polarspec.monomial import weight
from polarspec.oracle import AffineMap, apply_affine, brute_code_spectrum, code_words, enumerate_T, random_lta


def prefix_counts(f: Monomial, m: int, a: int) -> dict[int, int]:
    mask = (1 << a) - 1
    out: dict[int, int] = {}
    for t in enumerate_T(f, m):
        w = weight(t & mask)
        out[w] = out.get(w, 0) + 1
    return out


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_table_matches_enumeration(m):
    n = 1 << m
    for mask in range(n):
        f = Monomial(mask)
        table = build_prefix_table(f, n, m)
        for a in range(n + 1):
            want = prefix_counts(f, m, a)
            got = {w: table.n(w, a) for w in range(table.weight + 1) if table.n(w, a)}
            assert got == want, (f, a)
            assert sum(got.values()) == lam(f)
            for w in range(table.weight + 1):
                assert table.p(w, a) == table.n(table.weight - w, a)


def test_reflection_symmetry():
    # the last a coordinates see the same distribution as the first a
    m, f = 4, Monomial.parse("x1*x3")
    n = 1 << m
    words = enumerate_T(f, m)
    table = build_prefix_table(f, n, m)
    for a in range(n + 1):
        tail = (((1 << a) - 1) << (n - a))
        dist: dict[int, int] = {}
        for t in words:
            w = weight(t & tail)
            dist[w] = dist.get(w, 0) + 1
        assert all(table.n(w, a) == c for w, c in dist.items())


def test_lta_preserves_decreasing_code():
    import numpy as np

    rng = np.random.default_rng(5)
    spec = CodeSpec(4, (8, 10, 11, 12, 13, 14, 15, 16))
    words = code_words(spec)
    for _ in range(10):
        amap = random_lta(4, rng)
        assert amap.is_invertible() and amap.is_lower_triangular()
        assert {apply_affine(amap, c) for c in words} == words


def test_apply_affine_rejects_singular():
    with pytest.raises(ValidationError):
        apply_affine(AffineMap((0b01, 0b01), 0), 0b1010)


def test_qup_small_case():
    spec = CodeSpec(3, (4, 6, 7, 8))
    res = qup_min_weight(spec, 2)
    oracle = brute_code_spectrum(spec, make_pattern("qup", 3, 2))
    assert (res.d, res.count) == (2, oracle[2])
    assert all(c <= oracle.get(w, 0) for w, c in res.lower_bounds.items())


def test_qup_rejects_punctured_info_bit():
    with pytest.raises(ValidationError):
        qup_min_weight(CodeSpec(3, (2, 4, 6, 7, 8)), 3)
    with pytest.raises(ValidationError):
        qup_min_weight(CodeSpec(3, (8,)), 8)


def test_wl_two_monomial_code():
    # x1*x2 -> index 5, x2 -> index 6
    spec = CodeSpec(3, (5, 6))
    assert wl_min_weight(spec, 2) == (2, 2)
    assert brute_code_spectrum(spec, make_pattern("wl", 3, 2))[2] == 2
