"""Minimum-weight codeword count for bit-reversal shortened decreasing polar codes."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError
from .monomial import CodeSpec, Monomial, is_decreasing, is_factor, lam
from .patterns import Kind, Mode, Pattern, make_pattern


@dataclass(frozen=True)
class ShortenedMinWeightReport:
    d_min: int
    total: int
    per_monomial: dict[Monomial, int] = field(default_factory=dict)

    @property
    def d_exceeds(self) -> bool:
        """True when no weight-d_min codeword survives, i.e. the real minimum is larger."""
        return self.total == 0

    def to_dict(self) -> dict:
        return {
            "d_min": self.d_min,
            "count": str(self.total),
            "d_min_exceeded": self.d_exceeds,
            "per_monomial": {str(f): str(c) for f, c in self.per_monomial.items()},
        }


def beta(f: Monomial, shortened: Pattern) -> int:
    """Number of shortened monomials that divide ``f``."""
    if shortened.mode is not Mode.SHORTEN:
        raise ValidationError("beta needs a shortening pattern")
    return sum(1 for g in shortened.monomials() if is_factor(g, f))


def check_shortened_spec(spec: CodeSpec, pattern: Pattern) -> None:
    if pattern.n != spec.n:
        raise ValidationError(f"pattern length {pattern.n} != code length {spec.n}")
    if pattern.indices & set(spec.info):
        raise ValidationError("information bit inside the shortening pattern")
    if not is_decreasing(spec.monomials + tuple(pattern.monomials()), spec.m):
        raise ValidationError("information set united with the shortened set is not decreasing")


def br_min_weight_count(spec: CodeSpec, i: int) -> ShortenedMinWeightReport:
    """Survivors lambda_f (1 - beta_f(i) / 2^r) summed over I_r, with the last i of q' shortened."""
    pattern = make_pattern(Kind.BR, spec.m, i, Mode.SHORTEN)
    check_shortened_spec(spec, pattern)
    if not spec.info:
        return ShortenedMinWeightReport(0, 0, {})
    r = spec.r
    shortened = pattern.monomials()
    per = {}
    for f in spec.top_degree:
        lf = lam(f)
        survivors = lf
        for g in shortened:
            if is_factor(g, f):
                survivors -= lf >> r
        per[f] = survivors
    return ShortenedMinWeightReport(1 << (spec.m - r), sum(per.values()), per)
