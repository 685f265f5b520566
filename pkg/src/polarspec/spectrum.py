"""Exact spectrum containers and arithmetic helpers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence


def trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def to_dict(coeffs: Sequence[int]) -> dict[int, int]:
    return {w: c for w, c in enumerate(coeffs) if c}


def from_dict(spec: Mapping[int, int]) -> list[int]:
    if not spec:
        return []
    out = [0] * (max(spec) + 1)
    for w, c in spec.items():
        out[w] = c
    return out


def add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for w, c in enumerate(b):
        out[w] += c
    return trim(out)


def convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Exact polynomial product of nonnegative integer coefficient lists.

    Short inputs use the schoolbook product; long ones pack both lists into
    single integers (Kronecker substitution) so the work happens inside
    CPython's big-integer multiply.
    """
    if not a or not b:
        return []
    if min(len(a), len(b)) <= 8:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return trim(out)
    bound = sum(a) * sum(b)
    digits = (bound.bit_length() + 4) // 4
    pa = int("".join(format(c, f"0{digits}x") for c in reversed(a)), 16)
    pb = int("".join(format(c, f"0{digits}x") for c in reversed(b)), 16)
    prod = format(pa * pb, "x")
    length = len(a) + len(b) - 1
    prod = prod.zfill(length * digits)
    out = [int(prod[k : k + digits], 16) for k in range(0, length * digits, digits)]
    out.reverse()
    return trim(out)


def mass(coeffs: Sequence[int] | Mapping[int, int]) -> int:
    return sum(coeffs.values()) if isinstance(coeffs, Mapping) else sum(coeffs)


@dataclass(frozen=True)
class DyadicRational:
    """numerator / 2**exp2 kept in lowest terms (odd numerator, or zero with exp2 == 0)."""

    numerator: int
    exp2: int = 0

    def __post_init__(self) -> None:
        if self.numerator < 0 or self.exp2 < 0:
            raise ValueError("dyadic rationals here are nonnegative")
        num, e = self.numerator, self.exp2
        if num == 0:
            e = 0
        else:
            shift = min(e, (num & -num).bit_length() - 1)
            num >>= shift
            e -= shift
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "exp2", e)

    @classmethod
    def from_fraction(cls, value: Fraction) -> DyadicRational:
        den = value.denominator
        if den & (den - 1):
            raise ValueError(f"{value} is not dyadic")
        return cls(value.numerator, den.bit_length() - 1)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exp2)

    def __float__(self) -> float:
        return float(self.as_fraction())

    def __add__(self, other: DyadicRational) -> DyadicRational:
        e = max(self.exp2, other.exp2)
        return DyadicRational(
            (self.numerator << (e - self.exp2)) + (other.numerator << (e - other.exp2)), e
        )

    def to_dict(self) -> dict:
        return {"num": str(self.numerator), "exp2": self.exp2, "approx": float(self)}


ZERO = DyadicRational(0)
