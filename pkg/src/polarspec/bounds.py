"""Union bound on ML block error over BPSK/AWGN from a (partial) weight spectrum."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ValidationError
from .spectrum import DyadicRational


def qfunc(x: float) -> float:
    return 0.5 * math.erfc(x / math.sqrt(2.0))


def sigma_from_ebn0(ebn0_db: float, rate: float) -> float:
    """Noise std for unit-energy BPSK at Eb/N0 (dB) and code rate."""
    return math.sqrt(1.0 / (2.0 * rate * 10 ** (ebn0_db / 10.0)))


@dataclass(frozen=True)
class UnionBoundCurve:
    points: tuple[tuple[float, float], ...]

    def to_rows(self) -> list[dict]:
        return [{"sigma": s, "bound": b} for s, b in self.points]


def union_bound(
    spectrum: Mapping[int, int | float | DyadicRational],
    sigmas: Iterable[float],
    max_weight: int | None = None,
    paper_literal_sign: bool = False,
) -> UnionBoundCurve:
    """sum_d A_d Q(sqrt(d)/sigma) over d >= 1 (and d <= max_weight if given)."""
    terms = []
    for d, a in spectrum.items():
        d = int(d)
        if d <= 0 or (max_weight is not None and d > max_weight):
            continue
        terms.append((d, float(a)))
    if not terms:
        raise ValidationError("spectrum has no nonzero weights to bound with")
    sign = -1.0 if paper_literal_sign else 1.0
    points = []
    for s in sigmas:
        if s <= 0:
            raise ValidationError(f"sigma must be positive, got {s}")
        points.append((float(s), math.fsum(a * qfunc(sign * math.sqrt(d) / s) for d, a in terms)))
    return UnionBoundCurve(tuple(points))
