"""Prefix-weight tables of T(f) and minimum-weight counts for QUP / Wang-Liu codes.

``N_f(w, a)`` counts members of T(f) with exactly ``w`` ones among their first
``a`` coordinates.  Tables are numpy object arrays (exact ints) indexed
``[w, a]`` with ``w`` in [0, 2^{m-deg f}] and ``a`` in [0, a_max].
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import ValidationError
from .monomial import CodeSpec, Monomial, eval_row, lam
from .patterns import Kind, Mode, make_pattern
from .minwt_short import check_shortened_spec


@dataclass(frozen=True)
class PrefixWeightTable:
    f: Monomial
    m: int
    table: np.ndarray = field(repr=False)

    @property
    def a_max(self) -> int:
        return self.table.shape[1] - 1

    @property
    def weight(self) -> int:
        return 1 << (self.m - self.f.degree)

    def n(self, w: int, a: int) -> int:
        if not 0 <= w <= self.weight:
            return 0
        return int(self.table[w, a])

    def p(self, w: int, a: int) -> int:
        """Members of T(f) with weight ``w`` once the first ``a`` bits are punctured."""
        return self.n(self.weight - w, a)

    def to_csv(self, weights: range | None = None) -> str:
        """Rows are punctured weights, columns are punctured-bit counts."""
        weights = weights if weights is not None else range(self.weight + 1)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["weight"] + list(range(self.a_max + 1)))
        for w in weights:
            writer.writerow([w] + [self.p(w, a) for a in range(self.a_max + 1)])
        return buf.getvalue()


def _empty(rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out.fill(0)
    return out


class _TableBuilder:
    """Memoised tables for one (m, a_max); dependencies resolve to larger row indices."""

    def __init__(self, m: int, a_max: int) -> None:
        self.m = m
        self.a_max = a_max
        self.cache: dict[int, np.ndarray] = {}

    def get(self, f: Monomial) -> np.ndarray:
        tab = self.cache.get(f.mask)
        if tab is None:
            tab = self._build(f)
            self.cache[f.mask] = tab
        return tab

    def _build(self, f: Monomial) -> np.ndarray:
        t = f.degree
        if t == 0:
            return self._constant()
        if t == 1:
            return self._enumerate_linear(f)
        m, a_max = self.m, self.a_max
        wmax = 1 << (m - t)
        it = f.variables[-1]
        head = f.variables[:-1]
        lf = lam(f)
        tab = _empty(wmax + 1, a_max + 1)

        # a <= 2^{i_t - 1}: reduce to f^{(0)} and the f^{(s)}
        h = min(a_max, 1 << (it - 1))
        f0 = Monomial(f.mask & ~(1 << (it - 1)))
        acc = self.get(f0)[1 : wmax + 1, : h + 1].copy()
        for s in range(1, it):
            if f.mask >> (s - 1) & 1:
                continue
            alpha = sum(1 for j in head if j > s)
            fs = Monomial(f0.mask | 1 << (s - 1))
            acc += self.get(fs)[1 : wmax + 1, : h + 1] * (1 << alpha)
        tab[1:, : h + 1] = acc
        tab[0, : h + 1] = lf - acc.sum(axis=0)

        # reflection on (2^{i_t-1}, 2^{i_t}]
        window = 1 << it
        wwin = 1 << (it - t)
        for a in range(h + 1, min(a_max, window) + 1):
            for w in range(min(wmax, wwin) + 1):
                tab[w, a] = tab[wwin - w, window - a]

        # period shift beyond 2^{i_t}
        for a in range(window + 1, a_max + 1):
            tab[wwin:, a] = tab[: wmax + 1 - wwin, a - window]
        return tab

    def _constant(self) -> np.ndarray:
        n = 1 << self.m
        tab = _empty(n + 1, self.a_max + 1)
        for a in range(self.a_max + 1):
            tab[a, a] = 1
        return tab

    def _enumerate_linear(self, f: Monomial) -> np.ndarray:
        # T(x_i) = {x_i + sum_{k<i} a_k x_k + a_0}: 2^i affine functions
        m, a_max = self.m, self.a_max
        n = 1 << m
        i = f.variables[0]
        rows = [eval_row(Monomial(1 << k), m) for k in range(i)]
        ones = (1 << n) - 1
        tab = _empty((1 << (m - 1)) + 1, a_max + 1)
        for coeffs in range(1 << i):
            word = rows[i - 1]
            for k in range(i - 1):
                if coeffs >> k & 1:
                    word ^= rows[k]
            if coeffs >> (i - 1) & 1:
                word ^= ones
            bits = np.array([word >> k & 1 for k in range(a_max)], dtype=np.int64)
            prefix = np.concatenate(([0], np.cumsum(bits)))
            for a, w in enumerate(prefix):
                tab[w, a] += 1
        return tab


@lru_cache(maxsize=32)
def _builder(m: int, a_max: int) -> _TableBuilder:
    return _TableBuilder(m, a_max)


def build_prefix_table(f: Monomial, a_max: int, m: int) -> PrefixWeightTable:
    """Prefix-weight table of T(f) for prefixes of length 0..a_max."""
    if not f.fits(m):
        raise ValidationError(f"monomial {f} does not fit m={m}")
    if not 0 <= a_max <= 1 << m:
        raise ValidationError(f"a_max={a_max} outside [0, {1 << m}]")
    return PrefixWeightTable(f, m, _builder(m, a_max).get(f))


@dataclass(frozen=True)
class PuncturedMinWeight:
    d: int
    count: int
    lower_bounds: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "d_min": self.d,
            "count": str(self.count),
            "lower_bounds": {str(w): str(c) for w, c in self.lower_bounds.items()},
        }


def _aggregate_p(spec: CodeSpec, a: int) -> list[int]:
    """sum_{f in I_r} P_f(w, a) for w = 0..2^{m-r}."""
    wmax = 1 << (spec.m - spec.r)
    agg = [0] * (wmax + 1)
    builder = _builder(spec.m, a)
    for f in spec.top_degree:
        tab = builder.get(f)
        for w in range(wmax + 1):
            agg[w] += int(tab[wmax - w, a])
    return agg


def qup_min_weight(spec: CodeSpec, i: int) -> PuncturedMinWeight:
    """Minimum weight and its exact count for the code with the first ``i`` bits punctured.

    Counts above the minimum weight (up to 2^{m-r}) are lower bounds only.
    """
    if not spec.info:
        raise ValidationError("empty information set")
    if not 0 <= i < spec.n:
        raise ValidationError(f"puncture count {i} outside [0, {spec.n - 1}]")
    spec.require_decreasing()
    if any(j <= i for j in spec.info):
        raise ValidationError("information bit inside the puncturing pattern")
    agg = _aggregate_p(spec, i)
    d = next((w for w in range(1, len(agg)) if agg[w] > 0), None)
    if d is None:
        raise ValidationError("every minimum-weight codeword is punctured to zero")
    # the lightest punctured row bounds every coset from below; lower-degree
    # rows reaching d carry codewords outside the degree-r families
    kept = ((1 << spec.n) - 1) ^ ((1 << i) - 1)
    r = spec.r
    for f in spec.monomials:
        if f.degree < r and (eval_row(f, spec.m) & kept).bit_count() <= d:
            raise ValidationError(
                f"row {f} drops to punctured weight <= {d}; the degree-{r} count is not exact here"
            )
    bounds = {w: agg[w] for w in range(d + 1, len(agg))}
    return PuncturedMinWeight(d, agg[d], bounds)


def wl_min_weight(spec: CodeSpec, i: int) -> tuple[int, int]:
    """(2^{m-r}, A) with the last ``i`` bits shortened."""
    pattern = make_pattern(Kind.WL, spec.m, i, Mode.SHORTEN)
    check_shortened_spec(spec, pattern)
    if not spec.info:
        return 0, 0
    wmax = 1 << (spec.m - spec.r)
    return wmax, _aggregate_p(spec, i)[wmax]


__all__ = [
    "PrefixWeightTable",
    "PuncturedMinWeight",
    "build_prefix_table",
    "check_shortened_spec",
    "qup_min_weight",
    "wl_min_weight",
]
