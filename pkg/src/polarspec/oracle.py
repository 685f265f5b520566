"""Brute-force and Monte-Carlo references for small codes.

Everything here is exponential in the code dimension and exists to check the
polynomial-time routines in the rest of the package.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import CapExceededError, ValidationError
from .monomial import CodeSpec, Monomial, eval_row, index_of, lam
from .patterns import Mode, Pattern

MAX_K = 24
MAX_T = 1 << 20
MAX_MC_K = 16
_CHUNK = 1 << 16


def polar_matrix(m: int) -> np.ndarray:
    """F^{(x)m} as a uint8 array, natural row order."""
    f = np.array([[1]], dtype=np.uint8)
    kernel = np.array([[1, 0], [1, 1]], dtype=np.uint8)
    for _ in range(m):
        f = np.kron(f, kernel)
    return f


def _message_block(k: int, start: int, stop: int) -> np.ndarray:
    ids = np.arange(start, stop, dtype=np.int64)
    return ((ids[:, None] >> np.arange(k)) & 1).astype(np.uint8)


def _tally(words: np.ndarray, keep: np.ndarray, out: np.ndarray) -> None:
    w = words[:, keep].sum(axis=1, dtype=np.int64)
    out += np.bincount(w, minlength=out.size)[: out.size]


def _as_dict(hist: np.ndarray) -> dict[int, int]:
    return {int(w): int(c) for w, c in enumerate(hist) if c}


def _pattern_masks(n: int, pattern: Pattern | None) -> tuple[np.ndarray, np.ndarray | None]:
    """(kept coordinates, shortened coordinates or None)."""
    if pattern is None or not pattern.indices:
        return np.ones(n, dtype=bool), None
    if pattern.n != n:
        raise ValidationError(f"pattern length {pattern.n} != code length {n}")
    hit = np.zeros(n, dtype=bool)
    hit[[i - 1 for i in pattern.indices]] = True
    return ~hit, hit if pattern.mode is Mode.SHORTEN else None


def _spectrum_of_span(gen: np.ndarray, offset: np.ndarray, pattern: Pattern | None) -> dict[int, int]:
    """Weight histogram of {offset + x gen : x in F_2^k} under a pattern."""
    k, n = gen.shape
    keep, short = _pattern_masks(n, pattern)
    hist = np.zeros(n + 1, dtype=np.int64)
    total = 1 << k
    for start in range(0, total, _CHUNK):
        msgs = _message_block(k, start, min(total, start + _CHUNK))
        words = (msgs.astype(np.int64) @ gen.astype(np.int64) + offset) & 1
        if short is not None:
            words = words[~words[:, short].any(axis=1)]
        _tally(words, keep, hist)
    return _as_dict(hist)


def brute_code_spectrum(spec: CodeSpec, pattern: Pattern | None = None, cap: int = MAX_K) -> dict[int, int]:
    """Weight spectrum over all 2^K messages (zero codeword included)."""
    if spec.k > cap:
        raise CapExceededError(f"K={spec.k} exceeds brute-force cap {cap}")
    f = polar_matrix(spec.m)
    gen = f[[i - 1 for i in spec.info]] if spec.info else np.zeros((0, spec.n), dtype=np.uint8)
    return _spectrum_of_span(gen, np.zeros(spec.n, dtype=np.int64), pattern)


def brute_coset_spectrum(m: int, prefix, pattern: Pattern | None = None, cap: int = MAX_K) -> dict[int, int]:
    """Spectrum of {u F_N : u starts with ``prefix``} under a pattern."""
    n = 1 << m
    prefix = [int(b) & 1 for b in prefix]
    i = len(prefix)
    if i > n:
        raise ValidationError(f"prefix longer than {n}")
    if n - i > cap:
        raise CapExceededError(f"2^{n - i} completions exceed cap 2^{cap}")
    f = polar_matrix(m).astype(np.int64)
    offset = (np.array(prefix, dtype=np.int64) @ f[:i]) & 1 if i else np.zeros(n, dtype=np.int64)
    return _spectrum_of_span(f[i:], offset, pattern)


def enumerate_T(f: Monomial, m: int, cap: int = MAX_T) -> list[int]:
    """All products prod_j (x_{i_j} + sum_{k in B(f,j)} a x_k + a_0) as bitsets."""
    if not f.fits(m):
        raise ValidationError(f"monomial {f} does not fit m={m}")
    if lam(f) > cap:
        raise CapExceededError(f"|T({f})| = {lam(f)} exceeds cap {cap}")
    n = 1 << m
    ones = (1 << n) - 1
    var = [eval_row(Monomial(1 << (k - 1)), m) for k in range(1, m + 1)]
    fv = f.variables
    factor_choices = []
    for ij in fv:
        free = [k for k in range(1, ij) if k not in fv]
        options = []
        for coeffs in itertools.product((0, 1), repeat=len(free) + 1):
            lin = var[ij - 1]
            for k, a in zip(free, coeffs):
                if a:
                    lin ^= var[k - 1]
            if coeffs[-1]:
                lin ^= ones
            options.append(lin)
        factor_choices.append(options)
    words = []
    for combo in itertools.product(*factor_choices):
        word = ones
        for lin in combo:
            word &= lin
        words.append(word)
    return words


@dataclass(frozen=True)
class AffineMap:
    """z -> A z + b over F_2^m; rows of A are int bitmasks (bit j-1 = column j)."""

    rows: tuple[int, ...]
    b: int = 0

    @property
    def m(self) -> int:
        return len(self.rows)

    def image(self, z: int) -> int:
        out = 0
        for i, row in enumerate(self.rows):
            out |= ((row & z).bit_count() & 1) << i
        return out ^ self.b

    def is_invertible(self) -> bool:
        return len({self.image(z) for z in range(1 << self.m)}) == 1 << self.m

    def is_lower_triangular(self) -> bool:
        return all(row >> i == 1 for i, row in enumerate(self.rows))

    def permutation(self) -> list[int]:
        """pi with pi[D(z)] = D(Az + b), as a 1-based list (index 0 unused)."""
        n = 1 << self.m
        full = n - 1
        perm = [0] * (n + 1)
        for z in range(n):
            perm[(full ^ z) + 1] = (full ^ self.image(z)) + 1
        return perm


def apply_affine(amap: AffineMap, codeword: int) -> int:
    """c'_k = c_{pi(k)} with pi the permutation induced by the affine map."""
    if not amap.is_invertible():
        raise ValidationError("affine map matrix is singular")
    perm = amap.permutation()
    out = 0
    for k in range(1, len(perm)):
        out |= (codeword >> (perm[k] - 1) & 1) << (k - 1)
    return out


def random_lta(m: int, rng: np.random.Generator) -> AffineMap:
    rows = []
    for i in range(m):
        low = int(rng.integers(0, 1 << i)) if i else 0
        rows.append(low | 1 << i)
    return AffineMap(tuple(rows), int(rng.integers(0, 1 << m)))


def code_words(spec: CodeSpec) -> set[int]:
    """Every codeword of a (small) code as bitsets."""
    if spec.k > 20:
        raise CapExceededError(f"K={spec.k} too large to materialise")
    rows = [eval_row(f, spec.m) for f in spec.monomials]
    words = {0}
    for row in rows:
        words |= {w ^ row for w in words}
    return words


def mc_pretransform_avg(
    spec: CodeSpec,
    pattern: Pattern | None,
    samples: int,
    seed: int,
    *,
    chunk: int = 4096,
    identity: bool = False,
    threads: int = 1,
) -> tuple[dict[int, float], dict[int, float]]:
    """Sample-mean and standard-error spectra of random upper-triangular pre-transforms.

    Strictly-upper entries of T are i.i.d. fair bits; for shortening, columns
    of T inside the pattern are forced to zero so the coset stays compatible.
    ``identity=True`` forces every strictly-upper entry to zero. Chunks run on
    up to ``threads`` worker threads.
    """
    if spec.k > MAX_MC_K:
        raise CapExceededError(f"K={spec.k} exceeds Monte-Carlo cap {MAX_MC_K}")
    if samples < 1000:
        raise ValidationError("at least 1000 samples are required")
    n, k = spec.n, spec.k
    keep, short = _pattern_masks(n, pattern)
    if short is not None and any(short[i - 1] for i in spec.info):
        raise ValidationError("information bit inside the shortening pattern")
    f = polar_matrix(spec.m).astype(np.int64)
    info = np.array([i - 1 for i in spec.info], dtype=np.int64)
    upper = np.arange(n)[None, :] > info[:, None]
    if short is not None:
        upper &= ~short[None, :]
    msgs = _message_block(k, 1, 1 << k).astype(np.int64)
    sizes = [min(chunk, samples - start) for start in range(0, samples, chunk)]
    children = np.random.SeedSequence(seed).spawn(len(sizes))

    def tally(s: int, child: np.random.SeedSequence) -> tuple[np.ndarray, np.ndarray]:
        rng = np.random.default_rng(child)
        rows = np.zeros((s, k, n), dtype=np.int64)
        rows[:, np.arange(k), info] = 1
        if not identity:
            rows |= rng.integers(0, 2, size=(s, k, n)) * upper[None]
        gen = (rows @ f) & 1
        words = np.einsum("mk,skn->smn", msgs, gen) & 1
        if short is not None:
            assert not words[:, :, short].any()
        wts = words[:, :, keep].sum(axis=2)
        counts = np.zeros((s, n + 1))
        np.add.at(counts, (np.repeat(np.arange(s), wts.shape[1]), wts.ravel()), 1)
        return counts.sum(axis=0), (counts**2).sum(axis=0)

    # chunk seeds are fixed up front, so the result does not depend on `threads`
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        parts = list(pool.map(tally, sizes, children))
    sums = np.sum([p[0] for p in parts], axis=0)
    sq = np.sum([p[1] for p in parts], axis=0)
    mean = sums / samples
    var = np.maximum(sq / samples - mean**2, 0.0) * samples / (samples - 1)
    se = np.sqrt(var / samples)
    support = [w for w in range(n + 1) if sums[w]]
    return {w: float(mean[w]) for w in support}, {w: float(se[w]) for w in support}


__all__ = [
    "AffineMap",
    "apply_affine",
    "brute_code_spectrum",
    "brute_coset_spectrum",
    "code_words",
    "enumerate_T",
    "index_of",
    "mc_pretransform_avg",
    "polar_matrix",
    "random_lta",
]
