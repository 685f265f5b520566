from __future__ import annotations

import pytest

from polarspec import CodeSpec, Monomial, ValidationError, beta, br_min_weight_count, lam, make_pattern, mother_min_weight
from polarspec.monomial import iter_decreasing_sets, weight
from polarspec.oracle import brute_code_spectrum, enumerate_T


def survivors(f: Monomial, m: int, i: int) -> int:
    mask = sum(1 << (y - 1) for y in make_pattern("br", m, i).indices)
    return sum(1 for t in enumerate_T(f, m) if not t & mask)


def test_x3x5_progression_matches_enumeration():
    f = Monomial.parse("x3*x5")
    counts = [lam(f) * (4 - beta(f, make_pattern("br", 5, i))) // 4 for i in range(32)]
    assert [survivors(f, 5, i) for i in range(32)] == counts
    assert list(dict.fromkeys(counts))[:4] == [128, 96, 64, 32]


@pytest.mark.parametrize("m", [3, 4])
def test_step_drop_is_lambda_over_2r(m):
    for mask in range(1 << m):
        f = Monomial(mask)
        r = f.degree
        prev = lam(f)
        for i in range(1, (1 << m) + 1):
            cur = survivors(f, m, i)
            entered = make_pattern("br", m, i).monomials()
            new = next(g for g in entered if g not in make_pattern("br", m, i - 1).monomials())
            drop = lam(f) >> r if (new.mask & ~f.mask) == 0 else 0
            assert prev - cur == drop
            prev = cur


def test_beta_bounds():
    f = Monomial.parse("x1*x2")
    assert beta(f, make_pattern("br", 3, 0)) == 0
    assert beta(f, make_pattern("br", 3, 8)) == 4


def test_zero_shortening_is_mother():
    for s in iter_decreasing_sets(3):
        if s:
            spec = CodeSpec.from_monomials(s, 3)
            rep = br_min_weight_count(spec, 0)
            assert (rep.d_min, rep.total) == mother_min_weight(spec)


def test_mother_shortened_by_one():
    spec = CodeSpec(3, (4, 6, 7))  # {x1, x2, x3} with monomial 1 shortened
    rep = br_min_weight_count(spec, 1)
    oracle = brute_code_spectrum(spec, make_pattern("br", 3, 1))
    assert rep.d_min == 4 and oracle[4] == rep.total == 7


def test_rejections():
    with pytest.raises(ValidationError):
        br_min_weight_count(CodeSpec(3, (4, 6, 7, 8)), 1)  # index 8 is shortened
    with pytest.raises(ValidationError):
        br_min_weight_count(CodeSpec(3, (5,)), 0)
