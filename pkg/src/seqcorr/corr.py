"""Correlation spectra and demerit factors in exact arithmetic.

Aperiodic crosscorrelation of f with g at shift s is
C_{f,g}(s) = sum_j f_{j+s} g_j with out-of-range terms treated as zero,
so the support is -(len(g)-1) <= s <= len(f)-1.  Periodic correlation
satisfies PC(s) = C(s) + C(s - l) for equal lengths l.

All values are integers; demerit factors are Fractions.  The fast path
uses numpy integer correlation, which is exact (no floating point).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .sequence import BinarySequence

# int64 windows of +-1 terms cannot overflow below this length
MAX_EXACT_LEN = 1 << 20


def _check_len(seq: BinarySequence):
    if len(seq) > MAX_EXACT_LEN:
        raise ValueError(f"sequence length {len(seq)} exceeds exact-arithmetic budget {MAX_EXACT_LEN}")


def xcorr_values(f: BinarySequence, g: BinarySequence) -> list[int]:
    """C_{f,g}(s) for s = -(len(g)-1) .. len(f)-1, as Python ints."""
    _check_len(f)
    _check_len(g)
    c = np.correlate(f.as_array(), g.as_array(), mode="full")
    return [int(v) for v in c]


@dataclass(frozen=True)
class CorrelationSpectrum:
    """Dense map shift -> integer correlation over the full shift support."""

    kind: str  # "aperiodic" | "periodic"
    values: dict
    len_f: int
    len_g: int

    def __getitem__(self, s: int) -> int:
        return self.values.get(s, 0)

    def shifts(self) -> list[int]:
        return sorted(self.values)

    def __str__(self) -> str:
        body = ", ".join(f"{s}: {self.values[s]}" for s in self.shifts())
        return f"{self.kind} spectrum ({self.len_f}x{self.len_g}) {{{body}}}"


def aperiodic_xcorr(f: BinarySequence, g: BinarySequence) -> CorrelationSpectrum:
    vals = xcorr_values(f, g)
    lo = -(len(g) - 1)
    return CorrelationSpectrum(
        kind="aperiodic",
        values={lo + i: v for i, v in enumerate(vals)},
        len_f=len(f),
        len_g=len(g),
    )


def periodic_xcorr(f: BinarySequence, g: BinarySequence) -> CorrelationSpectrum:
    if len(f) != len(g):
        raise ValueError("periodic crosscorrelation requires equal lengths")
    ell = len(f)
    ap = aperiodic_xcorr(f, g)
    vals = {s: ap[s] + ap[s - ell] for s in range(ell)}
    return CorrelationSpectrum(kind="periodic", values=vals, len_f=ell, len_g=ell)


def adf(f: BinarySequence) -> Fraction:
    """Autocorrelation demerit factor: sum of C(s)^2 over s != 0, divided by l^2."""
    c = xcorr_values(f, f)
    ell = len(f)
    total = sum(v * v for v in c)
    return Fraction(total - ell * ell, ell * ell)


def cdf(f: BinarySequence, g: BinarySequence) -> Fraction:
    """Crosscorrelation demerit factor: sum of C(s)^2 over all s, divided by lf*lg."""
    if len(f) != len(g):
        raise ValueError("crosscorrelation demerit factor requires equal lengths")
    c = xcorr_values(f, g)
    return Fraction(sum(v * v for v in c), len(f) * len(g))


def l4l2_adf(f: BinarySequence) -> Fraction:
    """ADF via the norm identity ||f||_4^4 = sum_s C(s)^2, where ||f||_4^4 is
    computed from the coefficients of f(z) * f~(z) (f~ = reversed f)."""
    _check_len(f)
    arr = f.as_array()
    prod = np.convolve(arr, arr[::-1])
    ell = len(f)
    l4_4 = sum(int(v) * int(v) for v in prod)
    return Fraction(l4_4, ell * ell) - 1


def _sqrt_exact(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class DemeritReport:
    """ADF(f), ADF(g), CDF(f,g), and the Pursley-Sarwate criterion
    PSC = sqrt(ADF(f)*ADF(g)) + CDF(f,g).

    psc_exact is a Fraction when sqrt(ADF(f)*ADF(g)) is rational, else None;
    psc is always available as a float.
    """

    adf_f: Fraction
    adf_g: Fraction
    cdf: Fraction
    psc_exact: Fraction | None
    psc: float

    def is_exact(self) -> bool:
        return self.psc_exact is not None


def psc(f: BinarySequence, g: BinarySequence) -> DemeritReport:
    if len(f) != len(g):
        raise ValueError("Pursley-Sarwate criterion requires equal lengths")
    af = adf(f)
    ag = adf(g)
    c = cdf(f, g)
    root = _sqrt_exact(af * ag)
    if root is not None:
        exact = root + c
        return DemeritReport(af, ag, c, exact, float(exact))
    return DemeritReport(af, ag, c, None, math.sqrt(float(af * ag)) + float(c))


def psc_at_least_one(report: DemeritReport) -> bool:
    """Exact check that PSC >= 1, i.e. sqrt(adf_f*adf_g) >= 1 - cdf."""
    gap = 1 - report.cdf
    if gap <= 0:
        return True
    return report.adf_f * report.adf_g >= gap * gap
