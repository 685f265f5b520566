"""Oracle-equivalence sweeps shared by the ``check`` command and the test-suite."""

from __future__ import annotations

import random
import re
from collections import Counter
from dataclasses import dataclass, field

from .coset import CosetPrefix, avg_spectrum, coset_spectrum
from .errors import ValidationError
from .minwt_punct import qup_min_weight, wl_min_weight
from .minwt_short import br_min_weight_count
from .monomial import CodeSpec, index_of, iter_decreasing_sets
from .oracle import brute_code_spectrum, brute_coset_spectrum, mc_pretransform_avg
from .patterns import Kind, Mode, Pattern, make_pattern, respects_binary_domination


def reason(exc: Exception) -> str:
    """Rejection message with the instance-specific numbers and monomials blanked."""
    text = re.sub(r"(x\d+\*?)+", "<f>", str(exc))
    return re.sub(r"\d+", "#", text)


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    rejected: Counter = field(default_factory=Counter)
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.checked > 0

    def fail(self, detail) -> None:
        self.mismatches.append(detail)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "rejected": dict(self.rejected),
            "mismatches": [str(x) for x in self.mismatches[:20]],
        }


def _shortened_specs(m: int, kind: Kind):
    """(spec, i) with I = U minus the pattern, for every decreasing U and every i."""
    for union in iter_decreasing_sets(m):
        for i in range((1 << m) + 1):
            pattern = make_pattern(kind, m, i, Mode.SHORTEN)
            info = [f for f in union if index_of(f, m) not in pattern.indices]
            if info:
                yield CodeSpec.from_monomials(info, m), i, pattern


def sweep_br(ms=(2, 3, 4)) -> SweepResult:
    res = SweepResult("br_min_weight_count")
    for m in ms:
        cases = [(CodeSpec.from_monomials(s, m), i, make_pattern(Kind.BR, m, i)) for s in iter_decreasing_sets(m) if s for i in range((1 << m) + 1)]
        for spec, i, pattern in cases + list(_shortened_specs(m, Kind.BR)):
            try:
                rep = br_min_weight_count(spec, i)
            except ValidationError as exc:
                res.rejected[reason(exc)] += 1
                continue
            oracle = brute_code_spectrum(spec, pattern)
            res.checked += 1
            if oracle.get(rep.d_min, 0) != rep.total or any(0 < w < rep.d_min for w in oracle):
                res.fail((m, spec.info, i, rep.total, oracle))
    return res


def sweep_wl(ms=(2, 3, 4)) -> SweepResult:
    res = SweepResult("wl_min_weight")
    for m in ms:
        cases = [(CodeSpec.from_monomials(s, m), i, make_pattern(Kind.WL, m, i)) for s in iter_decreasing_sets(m) if s for i in range((1 << m) + 1)]
        for spec, i, pattern in cases + list(_shortened_specs(m, Kind.WL)):
            try:
                d, count = wl_min_weight(spec, i)
            except ValidationError as exc:
                res.rejected[reason(exc)] += 1
                continue
            oracle = brute_code_spectrum(spec, pattern)
            res.checked += 1
            if oracle.get(d, 0) != count or any(0 < w < d for w in oracle):
                res.fail((m, spec.info, i, count, oracle))
    return res


def sweep_qup(ms=(2, 3, 4)) -> SweepResult:
    """Exact count at d, no lighter nonzero codeword, and lower bounds above d."""
    res = SweepResult("qup_min_weight")
    for m in ms:
        for s in iter_decreasing_sets(m):
            if not s:
                continue
            spec = CodeSpec.from_monomials(s, m)
            for i in range(spec.n + 1):
                try:
                    q = qup_min_weight(spec, i)
                except ValidationError as exc:
                    res.rejected[reason(exc)] += 1
                    continue
                oracle = brute_code_spectrum(spec, make_pattern(Kind.QUP, m, i))
                res.checked += 1
                lightest = min(w for w in oracle if w > 0)
                if lightest != q.d or oracle[q.d] != q.count:
                    res.fail(("exact", m, spec.info, i, q, oracle))
                for w, c in q.lower_bounds.items():
                    if c > oracle.get(w, 0):
                        res.fail(("bound", m, spec.info, i, w, c, oracle))
    return res


def random_pattern(rng: random.Random, n: int, mode: Mode) -> Pattern:
    density = rng.random()
    return Pattern(n, mode, frozenset(x for x in range(1, n + 1) if rng.random() < density))


def sweep_cosets(patterns: int = 200, explicit: int = 100, max_m: int = 4, seed: int = 0) -> SweepResult:
    """Random patterns (both modes) x all zero/unit prefixes, plus random explicit prefixes."""
    rng = random.Random(seed)
    res = SweepResult("coset_spectrum")
    for t in range(patterns):
        m = rng.randint(0, max_m)
        n = 1 << m
        mode = Mode.PUNCTURE if t % 2 == 0 else Mode.SHORTEN
        pattern = random_pattern(rng, n, mode)
        prefixes = [CosetPrefix.zero(i) for i in range(n + 1)] + [CosetPrefix.unit(i) for i in range(1, n + 1)]
        for prefix in prefixes:
            _compare_coset(res, m, prefix, pattern)
    for _ in range(explicit):
        m = rng.randint(0, max_m)
        n = 1 << m
        pattern = random_pattern(rng, n, rng.choice([Mode.PUNCTURE, Mode.SHORTEN]))
        i = rng.randint(0, n)
        _compare_coset(res, m, CosetPrefix.explicit([rng.randint(0, 1) for _ in range(i)]), pattern)
    return res


def expected_mass(m: int, prefix: CosetPrefix, pattern: Pattern) -> int | None:
    """Coset size after rate matching, where a closed form exists."""
    n = 1 << m
    i = prefix.length
    if pattern.mode is Mode.PUNCTURE or not pattern.indices:
        return 1 << (n - i)
    if not respects_binary_domination(pattern):
        return None
    bits = prefix.as_bits()
    if any(bits[y - 1] for y in pattern.indices if y <= i):
        return 0
    return 1 << (n - i - sum(1 for y in pattern.indices if y > i))


def _compare_coset(res: SweepResult, m: int, prefix: CosetPrefix, pattern: Pattern) -> None:
    got = coset_spectrum(m, prefix, pattern)
    want = brute_coset_spectrum(m, prefix.as_bits(), pattern)
    res.checked += 1
    if got != want:
        res.fail((m, prefix, sorted(pattern.indices), pattern.mode.value, got, want))
    mass = expected_mass(m, prefix, pattern)
    if mass is not None and sum(got.values()) != mass:
        res.fail(("mass", m, prefix, sorted(pattern.indices), pattern.mode.value, sum(got.values()), mass))


def compare_average(
    spec: CodeSpec, pattern: Pattern | None, samples: int, seed: int, nsigma: float = 3.0, threads: int = 1
) -> dict:
    exact = avg_spectrum(spec, pattern).as_floats()
    mean, se = mc_pretransform_avg(spec, pattern, samples, seed, threads=threads)
    worst = 0.0
    ok = True
    for w in set(exact) | set(mean):
        diff = abs(exact.get(w, 0.0) - mean.get(w, 0.0))
        tol = nsigma * se.get(w, 0.0)
        # zero-variance weights must agree to rounding
        if diff > max(tol, 1e-9):
            ok = False
        if se.get(w, 0.0) > 0:
            worst = max(worst, diff / se[w])
    return {"info": list(spec.info), "ok": ok, "max_z": worst, "exact": exact, "mc_mean": mean}
