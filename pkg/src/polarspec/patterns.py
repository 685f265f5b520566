"""Rate-matching patterns: QUP puncturing, Wang-Liu and bit-reversal shortening."""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .errors import ValidationError
from .monomial import Monomial, is_factor, monomial_of


class Mode(str, Enum):
    PUNCTURE = "puncture"
    SHORTEN = "shorten"


class Kind(str, Enum):
    QUP = "qup"
    WL = "wl"
    BR = "br"
    CUSTOM = "custom"


def bit_reverse(x: int, m: int) -> int:
    out = 0
    for _ in range(m):
        out = out << 1 | x & 1
        x >>= 1
    return out


def bit_reversal_sequence(m: int) -> tuple[int, ...]:
    """q' with q'[p] = bitrev(p-1) + 1, 1-based values."""
    if m < 0:
        raise ValidationError(f"m must be >= 0, got {m}")
    return tuple(bit_reverse(p, m) + 1 for p in range(1 << m))


@dataclass(frozen=True)
class Pattern:
    n: int
    mode: Mode
    indices: frozenset[int]
    kind: Kind = Kind.CUSTOM

    def __post_init__(self) -> None:
        if self.n < 1 or self.n & (self.n - 1):
            raise ValidationError(f"pattern length must be a power of two, got {self.n}")
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "kind", Kind(self.kind))
        idx = frozenset(int(i) for i in self.indices)
        if idx and (min(idx) < 1 or max(idx) > self.n):
            raise ValidationError(f"pattern indices must lie in [1, {self.n}]")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def empty(cls, n: int, mode: Mode | str = Mode.PUNCTURE) -> Pattern:
        return cls(n, Mode(mode), frozenset())

    @property
    def m(self) -> int:
        return self.n.bit_length() - 1

    @property
    def size(self) -> int:
        return len(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, index: int) -> bool:
        return index in self.indices

    def sorted(self) -> list[int]:
        return sorted(self.indices)

    def mask(self) -> int:
        """Pattern as a coordinate bitset (bit k-1 for index k)."""
        out = 0
        for i in self.indices:
            out |= 1 << (i - 1)
        return out

    def monomials(self) -> list[Monomial]:
        return [monomial_of(i, self.m) for i in self.sorted()]

    def to_dict(self) -> dict:
        out = {"mode": self.mode.value, "kind": self.kind.value, "n": self.n}
        if self.kind is Kind.CUSTOM:
            out["indices"] = self.sorted()
        else:
            out["i"] = self.size
        return out

    @classmethod
    def from_dict(cls, data: dict) -> Pattern:
        try:
            n = int(data["n"])
            mode = Mode(data["mode"])
            kind = Kind(data.get("kind", "custom"))
        except (KeyError, ValueError) as exc:
            raise ValidationError(f"malformed pattern: {exc}") from exc
        if kind is Kind.CUSTOM:
            return cls(n, mode, frozenset(data.get("indices", ())))
        if n & (n - 1):
            raise ValidationError(f"pattern length must be a power of two, got {n}")
        return make_pattern(kind, n.bit_length() - 1, int(data["i"]), mode)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> Pattern:
        return cls.from_dict(json.loads(text))


_DEFAULT_MODE = {Kind.QUP: Mode.PUNCTURE, Kind.WL: Mode.SHORTEN, Kind.BR: Mode.SHORTEN}


def make_pattern(kind: Kind | str, m: int, i: int, mode: Mode | str | None = None) -> Pattern:
    """QUP = first i indices, WL = last i indices, BR = last i entries of q'."""
    kind = Kind(kind)
    n = 1 << m
    if not 0 <= i <= n:
        raise ValidationError(f"pattern size {i} outside [0, {n}]")
    if kind is Kind.CUSTOM:
        raise ValidationError("custom patterns need explicit indices")
    mode = Mode(mode) if mode is not None else _DEFAULT_MODE[kind]
    if kind is Kind.QUP:
        idx = range(1, i + 1)
    elif kind is Kind.WL:
        idx = range(n - i + 1, n + 1)
    else:
        idx = bit_reversal_sequence(m)[n - i:]
    return Pattern(n, mode, frozenset(idx), kind)


def br_order(m: int) -> tuple[int, ...]:
    """Indices in the order bit-reversal shortening removes them (first = shortened first)."""
    return bit_reversal_sequence(m)[::-1]


def split_odd_even(p: Pattern) -> tuple[Pattern, Pattern]:
    """(X_odd, X_even) over n/2: odd i -> (i+1)/2, even i -> i/2."""
    if p.n < 2:
        raise ValidationError("cannot split a length-1 pattern")
    half = p.n // 2
    odd = frozenset((i + 1) // 2 for i in p.indices if i % 2)
    even = frozenset(i // 2 for i in p.indices if not i % 2)
    return Pattern(half, p.mode, odd), Pattern(half, p.mode, even)


def respects_binary_domination(p: Pattern) -> bool:
    """Puncture patterns must be closed under variable supersets, shorten patterns under subsets."""
    m = p.m
    for z in p.indices:
        f = monomial_of(z, m)
        for z2 in range(1, p.n + 1):
            if z2 in p.indices:
                continue
            g = monomial_of(z2, m)
            if p.mode is Mode.PUNCTURE and is_factor(f, g):
                return False
            if p.mode is Mode.SHORTEN and is_factor(g, f):
                return False
    return True
