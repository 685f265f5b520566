"""Monomial view of polar codes.

A monomial over x_1..x_m is stored as an int mask with bit ``i-1`` set when
x_i is present.  Row indices are 1-based and follow the natural Arikan order
of F^{(x)m}: the row of monomial ``f`` has index ``((N-1) ^ f.mask) + 1``.

Codewords are int bitsets: bit ``k-1`` holds coordinate ``k``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ValidationError


@dataclass(frozen=True, order=True)
class Monomial:
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0:
            raise ValidationError(f"negative monomial mask {self.mask}")

    @classmethod
    def from_vars(cls, *variables: int) -> Monomial:
        mask = 0
        for v in variables:
            if v < 1:
                raise ValidationError(f"variable index must be >= 1, got {v}")
            mask |= 1 << (v - 1)
        return cls(mask)

    @classmethod
    def parse(cls, text: str) -> Monomial:
        """Parse ``"1"``, ``"x3"`` or ``"x1*x3"``."""
        text = text.strip()
        if text == "1":
            return cls(0)
        try:
            return cls.from_vars(*(int(tok.strip().lstrip("x")) for tok in text.split("*")))
        except ValueError as exc:
            raise ValidationError(f"cannot parse monomial {text!r}") from exc

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    @property
    def variables(self) -> tuple[int, ...]:
        """Sorted 1-based variable indices i_1 < ... < i_r."""
        return tuple(i + 1 for i in range(self.mask.bit_length()) if self.mask >> i & 1)

    def fits(self, m: int) -> bool:
        return self.mask >> m == 0

    def __str__(self) -> str:
        if not self.mask:
            return "1"
        return "*".join(f"x{v}" for v in self.variables)


def _check(f: Monomial, m: int) -> None:
    if not f.fits(m):
        raise ValidationError(f"monomial {f} uses variables beyond x{m}")


def index_of(f: Monomial, m: int) -> int:
    _check(f, m)
    return ((1 << m) - 1 ^ f.mask) + 1


def monomial_of(index: int, m: int) -> Monomial:
    n = 1 << m
    if not 1 <= index <= n:
        raise ValidationError(f"row index {index} outside [1, {n}]")
    return Monomial((n - 1) ^ (index - 1))


def all_monomials(m: int) -> Iterator[Monomial]:
    return (Monomial(mask) for mask in range(1 << m))


def eval_row(f: Monomial, m: int) -> int:
    """Evaluation vector of ``f`` as a bitset of length 2^m."""
    _check(f, m)
    row = 0
    for k in range(1 << m):
        if k & f.mask == 0:
            row |= 1 << k
    return row


def eval_poly(terms: Iterable[Monomial], m: int) -> int:
    """Evaluation vector of a sum of monomials."""
    out = 0
    for f in terms:
        out ^= eval_row(f, m)
    return out


def bits_of(word: int, n: int) -> tuple[int, ...]:
    return tuple(word >> k & 1 for k in range(n))


def weight(word: int) -> int:
    return word.bit_count()


def leq(f: Monomial, g: Monomial) -> bool:
    """Partial order f <= g: same-degree index domination extended by divisibility."""
    fv, gv = f.variables, g.variables
    t, s = len(fv), len(gv)
    if t > s:
        return False
    # compare the t largest variables of g with those of f, right-aligned
    return all(fv[t - 1 - l] <= gv[s - 1 - l] for l in range(t))


def is_factor(g: Monomial, f: Monomial) -> bool:
    """True iff g divides f."""
    return g.mask & ~f.mask == 0


def is_decreasing(monomials: Iterable[Monomial], m: int | None = None) -> bool:
    members = set(monomials)
    if not members:
        return True
    if m is None:
        m = max(f.mask.bit_length() for f in members)
    return all(f in members for g in members for f in all_monomials(m) if leq(f, g))


def downward_closure(seeds: Iterable[Monomial], m: int) -> frozenset[Monomial]:
    """Smallest decreasing set containing ``seeds``."""
    seeds = list(seeds)
    for g in seeds:
        _check(g, m)
    return frozenset(f for f in all_monomials(m) if any(leq(f, g) for g in seeds))


def lam(f: Monomial) -> int:
    """Number of minimum-weight codewords contributed by ``f`` (|T(f)|)."""
    return 1 << sum(i - t for t, i in enumerate(f.variables))


def iter_decreasing_sets(m: int) -> Iterator[frozenset[Monomial]]:
    """Every decreasing subset of the 2^m monomials, by brute force over antichains."""
    monos = sorted(all_monomials(m), key=lambda f: (f.degree, f.mask))
    below = {g: frozenset(f for f in monos if leq(f, g)) for g in monos}
    seen: set[frozenset[Monomial]] = set()

    def grow(current: frozenset[Monomial]) -> Iterator[frozenset[Monomial]]:
        if current in seen:
            return
        seen.add(current)
        yield current
        for g in monos:
            if g not in current and below[g] - {g} <= current:
                yield from grow(current | {g})

    yield from grow(frozenset())


@dataclass(frozen=True)
class CodeSpec:
    """Length-2^m polar code given by its information row indices."""

    m: int
    info: tuple[int, ...]
    label: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValidationError(f"m must be >= 0, got {self.m}")
        info = tuple(sorted(self.info))
        if len(set(info)) != len(info):
            raise ValidationError("duplicate information indices")
        if info and not (1 <= info[0] and info[-1] <= self.n):
            raise ValidationError(f"information indices must lie in [1, {self.n}]")
        object.__setattr__(self, "info", info)

    @classmethod
    def from_monomials(cls, monomials: Iterable[Monomial], m: int, label: str | None = None) -> CodeSpec:
        return cls(m, tuple(index_of(f, m) for f in monomials), label)

    @property
    def n(self) -> int:
        return 1 << self.m

    @property
    def k(self) -> int:
        return len(self.info)

    @cached_property
    def monomials(self) -> tuple[Monomial, ...]:
        return tuple(monomial_of(i, self.m) for i in self.info)

    @property
    def r(self) -> int:
        return max((f.degree for f in self.monomials), default=0)

    @property
    def top_degree(self) -> tuple[Monomial, ...]:
        """I_r: the information monomials of maximal degree."""
        r = self.r
        return tuple(f for f in self.monomials if f.degree == r)

    def is_decreasing(self) -> bool:
        return is_decreasing(self.monomials, self.m)

    def require_decreasing(self) -> None:
        if not self.is_decreasing():
            raise ValidationError("information set is not decreasing")

    def to_dict(self) -> dict:
        out: dict = {"m": self.m, "info": list(self.info)}
        if self.label:
            out["label"] = self.label
        return out

    @classmethod
    def from_dict(cls, data: dict) -> CodeSpec:
        try:
            return cls(int(data["m"]), tuple(int(i) for i in data["info"]), data.get("label"))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed code spec: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> CodeSpec:
        return cls.from_dict(json.loads(text))


def mother_min_weight(spec: CodeSpec) -> tuple[int, int]:
    """(d, A_d) of the unpunctured code; A_d is the sum of lambda over I_r."""
    if not spec.info:
        return 0, 0
    spec.require_decreasing()
    return 1 << (spec.m - spec.r), sum(lam(f) for f in spec.top_degree)


def subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask``."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


__all__ = [
    "CodeSpec",
    "Monomial",
    "all_monomials",
    "bits_of",
    "downward_closure",
    "eval_poly",
    "eval_row",
    "index_of",
    "is_decreasing",
    "is_factor",
    "iter_decreasing_sets",
    "lam",
    "leq",
    "monomial_of",
    "mother_min_weight",
    "weight",
]
