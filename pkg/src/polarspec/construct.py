"""Information-set construction by polarization weight (PW)."""

from __future__ import annotations

from .errors import ValidationError
from .monomial import CodeSpec, is_decreasing, monomial_of
from .patterns import Mode, Pattern

PW_BETA = 2 ** 0.25


def polarization_weight(index: int, m: int, beta: float = PW_BETA) -> float:
    """sum_j b_j beta^j over the bits b of ``index - 1``; larger is more reliable."""
    z = index - 1
    return sum(beta**j for j in range(m) if z >> j & 1)


def reliability_order(m: int, beta: float = PW_BETA) -> list[int]:
    """Row indices from most to least reliable; ties go to the larger index."""
    n = 1 << m
    return sorted(range(1, n + 1), key=lambda i: (-polarization_weight(i, m, beta), -i))


def pw_construct(m: int, k: int, pattern: Pattern | None = None, beta: float = PW_BETA) -> CodeSpec:
    """Top-``k`` PW indices, skipping rows excluded by a rate-matching pattern."""
    return construct_from_order(m, k, reliability_order(m, beta), pattern, label="pw")


def construct_from_order(
    m: int, k: int, order: list[int], pattern: Pattern | None = None, label: str | None = None
) -> CodeSpec:
    """Pick the first ``k`` usable indices of a reliability ordering (most reliable first)."""
    n = 1 << m
    excluded = pattern.indices if pattern is not None else frozenset()
    if sorted(order) != list(range(1, n + 1)):
        raise ValidationError(f"reliability order must be a permutation of 1..{n}")
    if not 1 <= k <= n - len(excluded):
        raise ValidationError(f"K={k} outside [1, {n - len(excluded)}]")
    info = [i for i in order if i not in excluded][:k]
    spec = CodeSpec(m, tuple(info), label)
    members = list(spec.monomials)
    if pattern is not None and pattern.mode is Mode.SHORTEN:
        members += [monomial_of(i, m) for i in excluded]
    if not is_decreasing(members, m):
        raise ValidationError("constructed information set is not decreasing")
    return spec
