"""Sweeps, shift searches, Monte Carlo baselines, and asymptotic targets.

All demerit-factor numerators here are exact int64 window sums; division by
the squared length happens only at the edge (Fraction or float).  The RNG
is SplitMix64, fixed by its constants so that any implementation can
reproduce the streams:

    next(state): state += 0x9E3779B97F4A7C15  (mod 2^64)
                 z = state
                 z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9  (mod 2^64)
                 z = (z ^ (z >> 27)) * 0x94D049BB133111EB  (mod 2^64)
                 return z ^ (z >> 31)

Sequences draw their +-1 terms from the low bits of successive outputs,
least significant bit first; bit 1 maps to +1.  Trial t of a run with seed
S uses its own generator seeded with mix(mix(S) + t * 0x9E3779B97F4A7C15),
so partitioning trials across workers cannot change the results.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import corr, families, golay
from .families import FamilySpec, cyclic_shift, resize
from .sequence import BinarySequence, from_array

SHIFT_SEARCH_LIMIT = 1 << 14
PAIR_GRID_LIMIT = 512

# ---------------------------------------------------------------------------
# SplitMix64

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """The 64-bit mixing generator fixed in the module docstring."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK64
        return mix64(self.state)


def trial_seed(run_seed: int, index: int) -> int:
    return mix64((mix64(run_seed) + _GOLDEN * index) & _MASK64)


def random_pm1(gen: SplitMix64, length: int) -> np.ndarray:
    """length +-1 terms from the generator's bit stream (LSB first, 1 -> +1)."""
    words = [gen.next_u64() for _ in range((length + 63) // 64)]
    raw = np.array(words, dtype="<u8").tobytes()
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return bits[:length].astype(np.int64) * 2 - 1


# ---------------------------------------------------------------------------
# Cubic roots and asymptotic targets


def cubic_root(c3: int, c2: int, c1: int, c0: int, selector: str) -> float:
    """A real root of c3 x^3 + c2 x^2 + c1 x + c0, Newton-polished.

    selector is smallest_real, middle_real, or largest_real; middle_real
    requires all three roots to be real.
    """
    if c3 == 0:
        raise ValueError("cubic leading coefficient must be nonzero")
    roots = np.roots([c3, c2, c1, c0])
    scale = max(1.0, *(abs(float(r.real)) for r in roots))
    real = sorted(float(r.real) for r in roots if abs(r.imag) <= 1e-8 * scale)
    if selector == "middle_real":
        if len(real) != 3:
            raise ValueError("middle_real requires three real roots")
        x = real[1]
    elif selector == "smallest_real":
        x = real[0]
    elif selector == "largest_real":
        x = real[-1]
    else:
        raise ValueError(f"unknown root selector {selector!r}")
    for _ in range(8):
        p = ((c3 * x + c2) * x + c1) * x + c0
        dp = (3 * c3 * x + 2 * c2) * x + c1
        if dp == 0:
            break
        x -= p / dp
    return x


def _residual(c3, c2, c1, c0, x) -> float:
    return abs(((c3 * x + c2) * x + c1) * x + c0)


@dataclass(frozen=True)
class AsymptoticTarget:
    name: str
    value: float
    definition: str
    cubic: tuple[int, int, int, int] | None = None

    def residual(self) -> float | None:
        if self.cubic is None:
            return None
        return _residual(*self.cubic, self.value)


def _cubic_target(name, coeffs, selector, definition) -> AsymptoticTarget:
    value = cubic_root(*coeffs, selector)
    assert _residual(*coeffs, value) < 1e-12
    return AsymptoticTarget(name, value, definition, cubic=coeffs)


TARGETS: dict[str, AsymptoticTarget] = {
    t.name: t
    for t in [
        AsymptoticTarget("mseq-adf", 1 / 3, "limiting ADF of m-sequences at natural length"),
        _cubic_target(
            "mseq-appended-adf", (3, -33, 33, -7), "smallest_real",
            "limiting ADF of appended m-sequences; smallest real root of 3x^3-33x^2+33x-7",
        ),
        _cubic_target(
            "mseq-append-ratio", (1, 0, -12, 12), "middle_real",
            "optimal append ratio for m-sequences; middle root of x^3-12x+12",
        ),
        AsymptoticTarget("legendre-shifted-adf", 1 / 6, "limiting ADF of best-shift Legendre sequences"),
        _cubic_target(
            "legendre-appended-adf", (27, -417, 249, -29), "smallest_real",
            "limiting ADF of shifted+appended Legendre; smallest real root of 27x^3-417x^2+249x-29",
        ),
        _cubic_target(
            "legendre-append-ratio", (4, 0, -30, 27), "middle_real",
            "optimal append ratio for shifted Legendre; middle root of 4x^3-30x+27",
        ),
        AsymptoticTarget("random-adf", 1.0, "large-length limit of E[ADF] = 1 - 1/l for random sequences"),
        AsymptoticTarget("random-cdf", 1.0, "E[CDF] = 1 for random pairs of any length"),
        AsymptoticTarget("psc-typical-mseq", 4 / 3, "limiting PSC of typical m-sequence pairs"),
        AsymptoticTarget("psc-reversing-mseq", 7 / 6, "limiting PSC of best-shift reversing m-sequence pairs"),
        AsymptoticTarget("cdf-reversing-mseq", 5 / 6, "limiting CDF of best-shift reversing m-sequence pairs"),
        AsymptoticTarget("psc-half-legendre", 7 / 6, "limiting PSC of half-Legendre pairs"),
        AsymptoticTarget("demerit-half-legendre", 7 / 12, "limiting ADF and CDF of half-Legendre pairs"),
        AsymptoticTarget("psc-quartic", 7 / 6, "limiting PSC of shifted quartic cyclotomic pairs"),
        AsymptoticTarget("psc-legendre-quartic", 7 / 6, "limiting PSC of shifted Legendre + quartic pairs"),
        AsymptoticTarget("psc-rsl-best", 331 / 300, "best known limiting PSC over sign-recursion seed pairs"),
        AsymptoticTarget("psc-golay", 1.0, "PSC of every Golay complementary pair"),
    ]
}


def lookup_target(text: str) -> AsymptoticTarget:
    """A registry name, or a bare float for ad hoc targets."""
    if text in TARGETS:
        return TARGETS[text]
    try:
        return AsymptoticTarget(text, float(text), "user-supplied constant")
    except ValueError:
        raise ValueError(f"unknown target {text!r}; known: {', '.join(sorted(TARGETS))}") from None


# ---------------------------------------------------------------------------
# Exact all-shift engines


def adf_numerators_all_shifts(arr: np.ndarray, m: int | None = None) -> np.ndarray:
    """ADF numerator (sum of squared off-peak correlations) of
    resize(cyclic_shift(f, r), m) for every shift r, as int64; divide by m^2.

    For each aperiodic shift s, the correlation of the resized shifted
    sequence is a length-(m-s) window sum of the periodic product
    f_{(k+s) mod l} * f_{k mod l} starting at offset r, which cumulative
    sums over a doubled row give for all r at once.
    """
    ell = len(arr)
    if m is None:
        m = ell
    if ell > SHIFT_SEARCH_LIMIT or m > 2 * SHIFT_SEARCH_LIMIT:
        raise ValueError("shift-search budget exceeded")
    tiled = np.concatenate([arr, arr])
    acc = np.zeros(ell, dtype=np.int64)
    for s in range(1, m):
        row = tiled[s % ell : s % ell + ell] * arr
        doubled = np.concatenate([row, row])
        cums = np.zeros(2 * ell + 1, dtype=np.int64)
        np.cumsum(doubled, out=cums[1:])
        span = m - s
        q, t = divmod(span, ell)
        w = q * cums[ell] + cums[t : t + ell] - cums[:ell]
        acc += w * w
    return 2 * acc


def cdf_numerators_grid(af: np.ndarray, ag: np.ndarray) -> np.ndarray:
    """CDF numerators of (cyclic_shift(f, rf), cyclic_shift(g, rg)) for the
    full (rf, rg) grid, as int64; divide by l^2.

    Window sums of the products f_{(k+d) mod l} * g_k over all offsets give
    each aperiodic correlation; accumulating squared windows with a row
    roll of -s aligns the diagonal d = (rf - rg) mod l for every s.
    """
    ell = len(af)
    if ell > PAIR_GRID_LIMIT:
        raise ValueError(f"pair shift grid supports lengths up to {PAIR_GRID_LIMIT}")
    tf = np.concatenate([af, af])
    prods = np.empty((ell, ell), dtype=np.int64)
    for d in range(ell):
        prods[d] = tf[d : d + ell] * ag
    doubled = np.concatenate([prods, prods], axis=1)
    cums = np.zeros((ell, 2 * ell + 1), dtype=np.int64)
    np.cumsum(doubled, axis=1, out=cums[:, 1:])
    acc = np.zeros((ell, ell), dtype=np.int64)
    for s in range(-(ell - 1), ell):
        a = abs(s)
        span = ell - a
        if s >= 0:
            w = cums[:, span : span + ell] - cums[:, 0:ell]
        else:
            w = cums[:, ell : 2 * ell] - cums[:, a : a + ell]
        acc += np.roll(w * w, -s, axis=0)
    rf = np.arange(ell)[:, None]
    rg = np.arange(ell)[None, :]
    return acc[(rf - rg) % ell, rg]


def cdf_numerators_diagonal(af: np.ndarray, ag: np.ndarray) -> np.ndarray:
    """CDF numerators of (cyclic_shift(f, r), cyclic_shift(g, r)) for every
    r (the equal-shift diagonal), as int64; divide by l^2."""
    ell = len(af)
    if ell > SHIFT_SEARCH_LIMIT:
        raise ValueError("shift-search budget exceeded")
    tf = np.concatenate([af, af])
    tg = np.concatenate([ag, ag])
    acc = np.zeros(ell, dtype=np.int64)
    for s in range(-(ell - 1), ell):
        a = abs(s)
        span = ell - a
        if s >= 0:
            row = tf[s : s + ell] * ag  # offset k: f[(k+s)%l] * g[k]
        else:
            row = af * tg[a : a + ell]  # offset k: f[k] * g[(k+|s|)%l]
        doubled = np.concatenate([row, row])
        cums = np.zeros(2 * ell + 1, dtype=np.int64)
        np.cumsum(doubled, out=cums[1:])
        w = cums[span : span + ell] - cums[:ell]
        acc += w * w
    return acc


# ---------------------------------------------------------------------------
# Shift searches


def best_shift(
    f: BinarySequence, objective: str = "adf", resize_len: int | None = None
) -> tuple[int, Fraction]:
    """Cyclic shift minimizing the ADF (of the resized sequence when
    resize_len is given); ties break to the smallest shift index."""
    if objective != "adf":
        raise ValueError("single-sequence shift search minimizes adf only")
    m = resize_len if resize_len is not None else len(f)
    nums = adf_numerators_all_shifts(f.as_array(), m)
    r = int(np.argmin(nums))
    return r, Fraction(int(nums[r]), m * m)


def best_pair_shifts(
    f: BinarySequence, g: BinarySequence, objective: str = "cdf"
) -> tuple[tuple[int, int], float]:
    """Shift pair minimizing cdf or psc.

    Lengths up to 512 search the full (rf, rg) grid; longer sequences use
    the equal-shift diagonal heuristic.  Ties break to the first (smallest
    rf, then rg) candidate.
    """
    if len(f) != len(g):
        raise ValueError("pair shift search requires equal lengths")
    if objective not in ("cdf", "psc"):
        raise ValueError("pair objective must be cdf or psc")
    ell = len(f)
    af, ag = f.as_array(), g.as_array()
    if ell <= PAIR_GRID_LIMIT:
        grid = cdf_numerators_grid(af, ag).astype(np.float64)
        if objective == "psc":
            adf_f = adf_numerators_all_shifts(af).astype(np.float64)
            adf_g = adf_numerators_all_shifts(ag).astype(np.float64)
            grid = grid + np.sqrt(np.outer(adf_f, adf_g))
        k = int(np.argmin(grid))
        rf, rg = divmod(k, ell)
        return (rf, rg), float(grid[rf, rg]) / (ell * ell)
    diag = cdf_numerators_diagonal(af, ag).astype(np.float64)
    if objective == "psc":
        adf_f = adf_numerators_all_shifts(af).astype(np.float64)
        adf_g = adf_numerators_all_shifts(ag).astype(np.float64)
        diag = diag + np.sqrt(adf_f * adf_g)
    r = int(np.argmin(diag))
    return (r, r), float(diag[r]) / (ell * ell)


def realize(spec: FamilySpec) -> tuple[BinarySequence, int]:
    """Build the sequence for a family spec, searching when shift='best'.

    Returns (sequence, shift actually used).
    """
    base = families.build_base(spec)
    m = families.resized_length(spec, len(base))
    if spec.shift == "best":
        r, _ = best_shift(base, "adf", resize_len=m)
    else:
        r = int(spec.shift) % len(base)
    out = cyclic_shift(base, r)
    if m != len(out):
        out = resize(out, m)
    return out, r


def shift_search(spec: FamilySpec, objective: str = "adf") -> tuple[int, Fraction]:
    """Spec-level entry point: search the base family's cyclic shifts."""
    base = families.build_base(spec)
    if len(base) > SHIFT_SEARCH_LIMIT:
        raise ValueError("shift-search budget exceeded")
    return best_shift(base, objective, resize_len=families.resized_length(spec, len(base)))


# ---------------------------------------------------------------------------
# Rows, sweeps, reports


@dataclass(frozen=True)
class SweepRow:
    family: str
    length: int
    params: str
    adf_f: float | None = None
    adf_g: float | None = None
    cdf: float | None = None
    psc: float | None = None
    target: float | None = None
    abs_err: float | None = None


CSV_COLUMNS = ("family", "length", "params", "adf_f", "adf_g", "cdf", "psc", "target", "abs_err")


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def rows_to_csv(rows) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for row in rows:
        lines.append(",".join(_fmt(getattr(row, c)) for c in CSV_COLUMNS))
    return "\n".join(lines) + "\n"


def rows_to_json(rows) -> str:
    return json.dumps([{c: getattr(r, c) for c in CSV_COLUMNS} for r in rows], indent=2) + "\n"


def convergence_sweep(spec: FamilySpec, sizes, target: AsymptoticTarget | None) -> list[SweepRow]:
    """One row per size: realize the family, measure ADF, compare to target."""
    rows = []
    for size in sizes:
        spec_i = families.with_size(spec, size)
        seq, shift_used = realize(spec_i)
        a = float(corr.adf(seq))
        params = f"size={size} shift={shift_used}"
        if spec.resize_ratio is not None:
            params += f" resize={spec.resize_ratio:g}"
        rows.append(
            SweepRow(
                family=spec.kind,
                length=len(seq),
                params=params,
                adf_f=a,
                target=None if target is None else target.value,
                abs_err=None if target is None else abs(a - target.value),
            )
        )
    return rows


def monte_carlo_baseline(length: int, trials: int, rng_seed: int) -> tuple[Fraction, Fraction]:
    """Sample means of ADF(f) and CDF(f, g) over trials independent uniform
    random pairs (f, g) of the given length, as exact Fractions.

    Trial t draws f from the generator seeded trial_seed(rng_seed, 2t) and
    g from trial_seed(rng_seed, 2t+1), so any partitioning of the trial
    range reproduces the same means.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if length < 1:
        raise ValueError("length must be >= 1")
    adf_num = 0
    cdf_num = 0
    for t in range(trials):
        f = random_pm1(SplitMix64(trial_seed(rng_seed, 2 * t)), length)
        g = random_pm1(SplitMix64(trial_seed(rng_seed, 2 * t + 1)), length)
        cff = np.correlate(f, f, mode="full")
        cfg = np.correlate(f, g, mode="full")
        adf_num += int(np.dot(cff, cff)) - length * length
        cdf_num += int(np.dot(cfg, cfg))
    denom = trials * length * length
    return Fraction(adf_num, denom), Fraction(cdf_num, denom)


def _pair_row(name, params, f, g, target: float) -> SweepRow:
    rep = corr.psc(f, g)
    return SweepRow(
        family=name,
        length=len(f),
        params=params,
        adf_f=float(rep.adf_f),
        adf_g=float(rep.adf_g),
        cdf=float(rep.cdf),
        psc=rep.psc,
        target=target,
        abs_err=abs(rep.psc - target),
    )


def _half_legendre_best(p: int) -> tuple[int, BinarySequence, BinarySequence]:
    """Shift minimizing the PSC of the half-Legendre pair."""
    base = families.legendre(p)
    ext = base.terms * 2
    half = (p - 1) // 2
    best = None
    for r in range(p):
        cut = ext[r : r + 2 * half]
        fa = np.array(cut[:half], dtype=np.int64)
        fb = np.array(cut[half:], dtype=np.int64)
        caa = np.correlate(fa, fa, mode="full")
        cbb = np.correlate(fb, fb, mode="full")
        cab = np.correlate(fa, fb, mode="full")
        n = half * half
        adf_a = (int(np.dot(caa, caa)) - n) / n
        adf_b = (int(np.dot(cbb, cbb)) - n) / n
        val = math.sqrt(adf_a * adf_b) + int(np.dot(cab, cab)) / n
        if best is None or val < best[0]:
            best = (val, r)
    r = best[1]
    return r, *families.half_legendre_pair(p, r)


def report_pairs(construction: str, **params) -> list[SweepRow]:
    """Build a pair construction, search shifts where required, and report
    measured demerit factors against the construction's asymptotic PSC."""
    if construction == "golay":
        lengths = params.pop("lengths")
        _no_extra(params)
        rows = []
        for ell in lengths:
            pair = golay.compose_to_length(ell)
            rows.append(_pair_row("golay", "composed", pair.a, pair.b, TARGETS["psc-golay"].value))
        return rows

    if construction == "typical_mseq":
        n, d = params.pop("n"), params.pop("d")
        _no_extra(params)
        ctx = families.make_binary_field(n)
        ell = ctx.order
        pows = families.power_of_two_residues(ell)
        if d % ell in pows or (-d) % ell in pows:
            raise ValueError(f"typical construction requires |d| not a power of 2 mod {ell}")
        f, g = families.msequence_pair(ctx, d)
        return [_pair_row("typical_mseq", f"n={n} d={d} shifts=0/0", f, g,
                          TARGETS["psc-typical-mseq"].value)]

    if construction == "reversing_mseq":
        n = params.pop("n")
        k = params.pop("k", 0)
        _no_extra(params)
        ctx = families.make_binary_field(n)
        d = (-(1 << k)) % ctx.order
        f0, g0 = families.msequence_pair(ctx, d)
        (rf, rg), _ = best_pair_shifts(f0, g0, "cdf")
        f, g = cyclic_shift(f0, rf), cyclic_shift(g0, rg)
        return [_pair_row("reversing_mseq", f"n={n} d=-2^{k} shifts={rf}/{rg}", f, g,
                          TARGETS["psc-reversing-mseq"].value)]

    if construction == "half_legendre":
        p = params.pop("p")
        _no_extra(params)
        r, f, g = _half_legendre_best(p)
        return [_pair_row("half_legendre", f"p={p} shift={r}", f, g,
                          TARGETS["psc-half-legendre"].value)]

    if construction == "quartic_pair":
        p = params.pop("p")
        _no_extra(params)
        ctx = families.make_prime_field(p)
        f0, g0 = families.quartic_f(ctx), families.quartic_g(ctx)
        (rf, rg), _ = best_pair_shifts(f0, g0, "psc")
        f, g = cyclic_shift(f0, rf), cyclic_shift(g0, rg)
        return [_pair_row("quartic_pair", f"p={p} shifts={rf}/{rg}", f, g,
                          TARGETS["psc-quartic"].value)]

    if construction == "legendre_plus_quartic":
        p = params.pop("p")
        _no_extra(params)
        ctx = families.make_prime_field(p)
        hf = families.legendre(p)
        qf = families.quartic_f(ctx)
        rf, _ = best_shift(hf)
        rg, _ = best_shift(qf)
        f, g = cyclic_shift(hf, rf), cyclic_shift(qf, rg)
        return [_pair_row("legendre_plus_quartic", f"p={p} shifts={rf}/{rg}", f, g,
                          TARGETS["psc-legendre-quartic"].value)]

    if construction == "rsl_pair":
        seed_f, seed_g = params.pop("seed_f"), params.pop("seed_g")
        signs = params.pop("signs")
        depth = params.pop("depth")
        _no_extra(params)
        stems = golay.rsl_pair_stems(seed_f, seed_g, signs, depth)
        f, g = stems[-1]
        return [_pair_row("rsl_pair", f"seed_len={len(seed_f)} depth={depth}", f, g,
                          TARGETS["psc-rsl-best"].value)]

    raise ValueError(f"unknown pair construction {construction!r}")


def _no_extra(params: dict):
    if params:
        raise ValueError(f"unexpected parameters {sorted(params)}")
