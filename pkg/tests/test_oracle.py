from __future__ import annotations

import numpy as np
import pytest

from polarspec import CapExceededError, CodeSpec, ValidationError, make_pattern
from polarspec.oracle import AffineMap, apply_affine, brute_code_spectrum, brute_coset_spectrum, mc_pretransform_avg


def test_brute_counts_messages():
    spec = CodeSpec(3, (4, 6, 7, 8))
    spec_p = brute_code_spectrum(spec, make_pattern("qup", 3, 3))
    assert sum(spec_p.values()) == 16


def test_coset_single_bit():
    assert brute_coset_spectrum(0, [1]) == {1: 1}
    assert brute_coset_spectrum(0, [0]) == {0: 1}


def test_affine_swap_permutes():
    swap = AffineMap((0b10, 0b01), 0)
    assert swap.is_invertible() and not swap.is_lower_triangular()
    assert sorted(swap.permutation()[1:]) == [1, 2, 3, 4]
    assert apply_affine(swap, 0b0100) == 0b0010
    assert apply_affine(swap, apply_affine(swap, 0b0110)) == 0b0110


def test_mc_identity_is_exact():
    spec = CodeSpec(3, (4, 6, 7, 8))
    mean, se = mc_pretransform_avg(spec, None, 1000, 0, identity=True)
    # the zero message is excluded from the ensemble tally
    want = {w: float(c) for w, c in brute_code_spectrum(spec).items() if w}
    assert mean == want
    assert all(v == 0 for v in se.values())


def test_mc_thread_count_does_not_change_result():
    spec = CodeSpec(3, (2, 4, 7, 8))
    pattern = make_pattern("qup", 3, 2)
    one = mc_pretransform_avg(spec, pattern, 9000, 11, chunk=1000)
    four = mc_pretransform_avg(spec, pattern, 9000, 11, chunk=1000, threads=4)
    assert one == four


def test_mc_guards():
    with pytest.raises(ValidationError):
        mc_pretransform_avg(CodeSpec(3, (8,)), None, 10, 0)
    with pytest.raises(ValidationError):
        mc_pretransform_avg(CodeSpec(3, (7, 8)), make_pattern("wl", 3, 1), 1000, 0)
    with pytest.raises(CapExceededError):
        mc_pretransform_avg(CodeSpec(5, tuple(range(1, 33))), None, 1000, 0)
