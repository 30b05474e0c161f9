"""Binary sequence families, exact correlation spectra, and demerit factors.

Core objects: BinarySequence, correlation spectra and demerit reports
(corr), finite-field contexts (gf), character-based families and
transforms (families), the doubling recursion and Golay pair machinery
(golay), and sweep/search/baseline analysis plus the CLI (analysis, cli).
"""

from .corr import (
    CorrelationSpectrum,
    DemeritReport,
    adf,
    aperiodic_xcorr,
    cdf,
    l4l2_adf,
    periodic_xcorr,
    psc,
    psc_at_least_one,
)
from .families import (
    FamilySpec,
    cyclic_shift,
    decimate,
    half_legendre_pair,
    legendre,
    msequence,
    msequence_pair,
    parse_family,
    quartic_f,
    quartic_g,
    resize,
)
from .gf import (
    BinaryFieldContext,
    PrimeFieldContext,
    find_primitive_element,
    make_binary_field,
    make_prime_field,
    quadratic_character,
    quartic_coset_index,
    trace,
)
from .golay import (
    CertificationError,
    GolayPair,
    certify,
    compose_to_length,
    deinterleave,
    golay_base,
    golay_compose,
    interleave,
    is_golay_pair,
    is_optimal_seed,
    random_pair_search,
    rsl_pair_stems,
    rsl_stem,
    search_golay_pairs,
    search_optimal_seeds,
)
from .sequence import BinarySequence

__version__ = "0.1.0"

__all__ = [
    "BinarySequence",
    "CorrelationSpectrum",
    "DemeritReport",
    "aperiodic_xcorr",
    "periodic_xcorr",
    "adf",
    "cdf",
    "l4l2_adf",
    "psc",
    "psc_at_least_one",
    "BinaryFieldContext",
    "PrimeFieldContext",
    "make_binary_field",
    "make_prime_field",
    "trace",
    "quadratic_character",
    "quartic_coset_index",
    "find_primitive_element",
    "FamilySpec",
    "parse_family",
    "msequence",
    "msequence_pair",
    "legendre",
    "quartic_f",
    "quartic_g",
    "decimate",
    "cyclic_shift",
    "resize",
    "half_legendre_pair",
    "GolayPair",
    "CertificationError",
    "certify",
    "is_golay_pair",
    "golay_base",
    "golay_compose",
    "compose_to_length",
    "interleave",
    "deinterleave",
    "is_optimal_seed",
    "search_optimal_seeds",
    "search_golay_pairs",
    "random_pair_search",
    "rsl_stem",
    "rsl_pair_stems",
    "__version__",
]
