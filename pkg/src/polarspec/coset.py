"""Exact weight spectra of rate-matched polar cosets and the pre-transformed ensemble average.

A coset is {u F_N : u starts with a fixed prefix}.  Splitting u into odd and
even halves turns a length-N coset into a product of two independent
length-N/2 cosets, each under the odd/even half of the pattern, which gives
a recursion down to single bits.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import ValidationError
from .monomial import CodeSpec
from .patterns import Mode, Pattern, respects_binary_domination
from . import spectrum as sp
from .spectrum import DyadicRational


class PrefixForm(str, Enum):
    ZERO = "zero"  # 0^i
    UNIT = "unit"  # (0^{i-1}, 1)
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class CosetPrefix:
    length: int
    form: PrefixForm = PrefixForm.EXPLICIT
    bits: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "form", PrefixForm(self.form))
        if self.length < 0:
            raise ValidationError("negative prefix length")
        if self.form is PrefixForm.EXPLICIT and len(self.bits) != self.length:
            raise ValidationError("explicit prefix bits do not match its length")
        if self.form is PrefixForm.UNIT and self.length < 1:
            raise ValidationError("unit-last prefix needs length >= 1")

    @classmethod
    def explicit(cls, bits: Sequence[int]) -> CosetPrefix:
        bits = tuple(int(b) & 1 for b in bits)
        return cls(len(bits), PrefixForm.EXPLICIT, bits)

    @classmethod
    def zero(cls, length: int) -> CosetPrefix:
        return cls(length, PrefixForm.ZERO)

    @classmethod
    def unit(cls, length: int) -> CosetPrefix:
        return cls(length, PrefixForm.UNIT)

    def as_bits(self) -> tuple[int, ...]:
        if self.form is PrefixForm.EXPLICIT:
            return self.bits
        tail = (1,) if self.form is PrefixForm.UNIT else ()
        return (0,) * (self.length - len(tail)) + tail


def _leaf(u: int | None, pattern: Pattern) -> list[int]:
    """Length-1 coset; u=None means the bit is free."""
    hit = 1 in pattern.indices
    if u is None:
        return sp.add(_leaf(0, pattern), _leaf(1, pattern))
    if hit and pattern.mode is Mode.PUNCTURE:
        return [1]
    if hit:
        return [1] if u == 0 else []
    return [1] if u == 0 else [0, 1]


def _halves(pattern: Pattern) -> tuple[Pattern, Pattern]:
    """(even half, odd half) of a pattern, shared through the engine's cache."""
    half = pattern.n // 2
    odd = frozenset((i + 1) // 2 for i in pattern.indices if i % 2)
    even = frozenset(i // 2 for i in pattern.indices if not i % 2)
    return Pattern(half, pattern.mode, even), Pattern(half, pattern.mode, odd)


def _explicit(bits: tuple[int, ...], pattern: Pattern) -> list[int]:
    if pattern.n == 1:
        return _leaf(bits[0] if bits else None, pattern)
    if len(bits) % 2:
        return sp.add(_explicit(bits + (0,), pattern), _explicit(bits + (1,), pattern))
    even_pat, odd_pat = _halves(pattern)
    ue = bits[1::2]
    uo = tuple(a ^ b for a, b in zip(bits[0::2], ue))
    return sp.convolve(_explicit(ue, even_pat), _explicit(uo, odd_pat))


class CosetEngine:
    """Memoised spectra of the all-zero and unit-last prefixes for one pattern.

    Sub-patterns are keyed by content, so identical nodes of the split tree
    (common for QUP/WL/BR patterns) are computed once.
    """

    def __init__(self, pattern: Pattern) -> None:
        self.pattern = pattern
        self._memo: dict[tuple, list[int]] = {}
        self._split: dict[tuple, tuple[Pattern, Pattern]] = {}

    def _children(self, pattern: Pattern) -> tuple[Pattern, Pattern]:
        key = (pattern.n, pattern.indices)
        out = self._split.get(key)
        if out is None:
            out = self._split[key] = _halves(pattern)
        return out

    def spectrum(self, length: int, form: PrefixForm, pattern: Pattern | None = None) -> list[int]:
        pattern = self.pattern if pattern is None else pattern
        key = (pattern.n, pattern.indices, length, form)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        out = self._compute(length, form, pattern)
        self._memo[key] = out
        return out

    def _compute(self, i: int, form: PrefixForm, pattern: Pattern) -> list[int]:
        if pattern.n == 1:
            if i == 0:
                return _leaf(None, pattern)
            return _leaf(1 if form is PrefixForm.UNIT else 0, pattern)
        even_pat, odd_pat = self._children(pattern)
        z, u = PrefixForm.ZERO, PrefixForm.UNIT
        if i % 2 == 0:
            half = i // 2
            # u_e and u_o + u_e carry the same form as the parent prefix
            return sp.convolve(self.spectrum(half, form, even_pat), self.spectrum(half, form, odd_pat))
        half = (i + 1) // 2
        if form is z:
            return sp.add(
                sp.convolve(self.spectrum(half, z, even_pat), self.spectrum(half, z, odd_pat)),
                sp.convolve(self.spectrum(half, u, even_pat), self.spectrum(half, u, odd_pat)),
            )
        return sp.add(
            sp.convolve(self.spectrum(half, z, even_pat), self.spectrum(half, u, odd_pat)),
            sp.convolve(self.spectrum(half, u, even_pat), self.spectrum(half, z, odd_pat)),
        )


def coset_spectrum(m: int, prefix: CosetPrefix | Sequence[int], pattern: Pattern | None = None) -> dict[int, int]:
    """Weight spectrum of the coset of ``prefix`` after applying ``pattern``."""
    n = 1 << m
    if not isinstance(prefix, CosetPrefix):
        prefix = CosetPrefix.explicit(prefix)
    if prefix.length > n:
        raise ValidationError(f"prefix length {prefix.length} exceeds {n}")
    pattern = pattern if pattern is not None else Pattern.empty(n)
    if pattern.n != n:
        raise ValidationError(f"pattern length {pattern.n} != {n}")
    if prefix.form is PrefixForm.EXPLICIT:
        return sp.to_dict(_explicit(prefix.bits, pattern))
    return sp.to_dict(CosetEngine(pattern).spectrum(prefix.length, prefix.form))


def alg4_prefix_spectra(spec: CodeSpec, pattern: Pattern | None = None) -> dict[int, dict[int, int]]:
    """Spectrum of the unit-last coset (0^{I_j-1}, 1) at every information index I_j."""
    pattern = pattern if pattern is not None else Pattern.empty(spec.n)
    if pattern.n != spec.n:
        raise ValidationError(f"pattern length {pattern.n} != code length {spec.n}")
    engine = CosetEngine(pattern)
    return {j: sp.to_dict(engine.spectrum(j, PrefixForm.UNIT)) for j in spec.info}


@dataclass(frozen=True)
class AvgSpectrum:
    entries: dict[int, DyadicRational] = field(default_factory=dict)

    def total(self) -> Fraction:
        return sum((v.as_fraction() for v in self.entries.values()), Fraction(0))

    def as_floats(self) -> dict[int, float]:
        return {w: float(v) for w, v in self.entries.items()}

    def to_dict(self) -> dict:
        return {str(w): v.to_dict() for w, v in sorted(self.entries.items())}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def shortened_after(pattern: Pattern, index: int) -> int:
    return sum(1 for y in pattern.indices if y > index)


def avg_spectrum(spec: CodeSpec, pattern: Pattern | None = None) -> AvgSpectrum:
    """Exact ensemble-average spectrum over random upper-triangular pre-transforms."""
    n = spec.n
    pattern = pattern if pattern is not None else Pattern.empty(n)
    if pattern.n != n:
        raise ValidationError(f"pattern length {pattern.n} != code length {n}")
    shorten = pattern.mode is Mode.SHORTEN and pattern.indices
    if shorten:
        if pattern.indices & set(spec.info):
            raise ValidationError("information bit inside the shortening pattern")
        if not respects_binary_domination(pattern):
            raise ValidationError("shortening pattern does not respect binary domination")
    engine = CosetEngine(pattern)
    k = spec.k
    acc: dict[int, Fraction] = {}
    for j, idx in enumerate(spec.info, start=1):
        coeffs = engine.spectrum(idx, PrefixForm.UNIT)
        size = n - idx - (shortened_after(pattern, idx) if shorten else 0)
        if sp.mass(coeffs) != 1 << size:
            raise ValidationError(f"coset of index {idx} has mass {sp.mass(coeffs)}, expected 2^{size}")
        scale = Fraction(1 << (k - j), 1 << size)
        for w, c in enumerate(coeffs):
            if c:
                acc[w] = acc.get(w, Fraction(0)) + scale * c
    return AvgSpectrum({w: DyadicRational.from_fraction(v) for w, v in sorted(acc.items())})
