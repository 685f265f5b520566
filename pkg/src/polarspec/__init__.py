"""Exact weight-spectrum tools for punctured and shortened polar codes."""

from .bounds import UnionBoundCurve, union_bound
from .construct import pw_construct
from .coset import AvgSpectrum, CosetPrefix, alg4_prefix_spectra, avg_spectrum, coset_spectrum
from .errors import CapExceededError, SpectrumError, ValidationError
from .minwt_punct import PrefixWeightTable, build_prefix_table, qup_min_weight, wl_min_weight
from .minwt_short import ShortenedMinWeightReport, beta, br_min_weight_count
from .monomial import (
    CodeSpec,
    Monomial,
    downward_closure,
    eval_row,
    index_of,
    is_decreasing,
    is_factor,
    lam,
    leq,
    monomial_of,
    mother_min_weight,
)
from .patterns import Kind, Mode, Pattern, bit_reversal_sequence, make_pattern, respects_binary_domination, split_odd_even
from .spectrum import DyadicRational

__version__ = "0.1.0"

__all__ = [
    "AvgSpectrum",
    "CapExceededError",
    "CodeSpec",
    "CosetPrefix",
    "DyadicRational",
    "Kind",
    "Mode",
    "Monomial",
    "Pattern",
    "PrefixWeightTable",
    "ShortenedMinWeightReport",
    "SpectrumError",
    "UnionBoundCurve",
    "ValidationError",
    "alg4_prefix_spectra",
    "avg_spectrum",
    "beta",
    "bit_reversal_sequence",
    "br_min_weight_count",
    "build_prefix_table",
    "coset_spectrum",
    "downward_closure",
    "eval_row",
    "index_of",
    "is_decreasing",
    "is_factor",
    "lam",
    "leq",
    "make_pattern",
    "monomial_of",
    "mother_min_weight",
    "pw_construct",
    "qup_min_weight",
    "respects_binary_domination",
    "split_odd_even",
    "union_bound",
    "wl_min_weight",
]
