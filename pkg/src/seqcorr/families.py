"""Character-based sequence families and shift/decimate/resize transforms.

Families: m-sequences over GF(2^n) (additive character of traces), Legendre
sequences (quadratic character), and the two quartic cyclotomic sequences
for p = 1 mod 4.  Transforms: cyclic shift, decimation, truncation and
periodic appending to an arbitrary length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .gf import (
    BinaryFieldContext,
    PrimeFieldContext,
    is_prime,
    make_binary_field,
    make_prime_field,
    quadratic_character,
    trace,
)
from .sequence import BinarySequence


def msequence(ctx: BinaryFieldContext, char_shift: int = 1) -> BinarySequence:
    """Length 2^n - 1 sequence with term j = (-1)^Tr(char_shift * alpha^j).

    char_shift = 1 gives the naturally shifted (Galois) form; any other
    nonzero value only rotates it cyclically.
    """
    if char_shift == 0:
        raise ValueError("character shift 0 gives the trivial character")
    if not 0 < char_shift < (1 << ctx.n):
        raise ValueError(f"character shift {char_shift} is not a nonzero field element")
    cur = char_shift
    terms = []
    for _ in range(ctx.order):
        terms.append(-1 if trace(ctx, cur) else 1)
        cur = ctx.mul(cur, ctx.generator)
    return BinarySequence(tuple(terms))


def decimate(f: BinarySequence, d: int) -> BinarySequence:
    """Term j of the output is term (d*j mod l) of the input."""
    ell = len(f)
    if math.gcd(d % ell, ell) != 1:
        raise ValueError(f"decimation {d} is not invertible mod {ell}")
    return BinarySequence(tuple(f[d * j % ell] for j in range(ell)))


def power_of_two_residues(ell: int) -> set[int]:
    """The residues 2^k mod ell; decimating by these is degenerate for
    m-sequences of length ell = 2^n - 1."""
    out = set()
    v = 1 % ell
    while v not in out:
        out.add(v)
        v = v * 2 % ell
    return out


def legendre(p: int) -> BinarySequence:
    """Length-p sequence: +1 at 0 and at nonzero squares, -1 at nonsquares."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    terms = [1] + [quadratic_character(p, j) for j in range(1, p)]
    return BinarySequence(tuple(terms))


def _quartic(ctx: PrimeFieldContext, plus_cosets: tuple[int, int]) -> BinarySequence:
    if ctx.p % 4 != 1:
        raise ValueError(f"quartic sequences require p = 1 mod 4, got p = {ctx.p}")
    terms = [1]
    for j in range(1, ctx.p):
        terms.append(1 if ctx.coset_index[j] in plus_cosets else -1)
    return BinarySequence(tuple(terms))


def quartic_f(ctx: PrimeFieldContext) -> BinarySequence:
    """+1 on {0} and cosets R0, R1 of the fourth powers; -1 on R2, R3."""
    return _quartic(ctx, (0, 1))


def quartic_g(ctx: PrimeFieldContext) -> BinarySequence:
    """+1 on {0} and cosets R0, R3 of the fourth powers; -1 on R1, R2."""
    return _quartic(ctx, (0, 3))


def cyclic_shift(f: BinarySequence, r: int) -> BinarySequence:
    """Term j of the output is term (j + r mod l) of the input."""
    ell = len(f)
    r %= ell
    if r == 0:
        return f
    return BinarySequence(f.terms[r:] + f.terms[:r])


def resize(f: BinarySequence, m: int) -> BinarySequence:
    """Truncate (m < l) or periodically append (m > l) to length m."""
    if m < 1:
        raise ValueError(f"target length must be >= 1, got {m}")
    ell = len(f)
    if m == ell:
        return f
    reps = -(-m // ell)
    return BinarySequence((f.terms * reps)[:m])


def half_legendre_pair(p: int, r: int = 0) -> tuple[BinarySequence, BinarySequence]:
    """Shift the Legendre sequence by r, drop the last term, cut into halves."""
    h = cyclic_shift(legendre(p), r)
    half = (p - 1) // 2
    return (
        BinarySequence(h.terms[:half]),
        BinarySequence(h.terms[half : 2 * half]),
    )


def msequence_pair(
    ctx: BinaryFieldContext, d: int, shift_f: int = 0, shift_g: int = 0
) -> tuple[BinarySequence, BinarySequence]:
    """(shifted Galois sequence, shifted decimation of it by d).

    Decimations by powers of 2 are degenerate (they reproduce the sequence)
    and are rejected; d = -2^k gives the reversing construction.
    """
    ell = ctx.order
    if d % ell in power_of_two_residues(ell):
        raise ValueError(f"degenerate decimation: {d} is a power of 2 mod {ell}")
    base = msequence(ctx, 1)
    return cyclic_shift(base, shift_f), cyclic_shift(decimate(base, d), shift_g)


# ---------------------------------------------------------------------------
# Family descriptors: `kind:key=value,...`, e.g.
#   mseq:n=10,char=1
#   legendre:p=1019,shift=best,resize=1.0578
#   quartic_f:p=1013,shift=5

FAMILY_KINDS = ("mseq", "legendre", "quartic_f", "quartic_g")


@dataclass(frozen=True)
class FamilySpec:
    """A base family plus shift/resize transform parameters.

    shift is an integer, or the string "best" to request a search;
    resize_ratio scales the base length: m = round(ratio * l).
    """

    kind: str
    n: int | None = None
    char_shift: int = 1
    p: int | None = None
    shift: int | str = 0
    resize_ratio: float | None = None
    descriptor: str = field(default="", compare=False)

    def base_length(self) -> int:
        return (1 << self.n) - 1 if self.kind == "mseq" else self.p

    def __str__(self) -> str:
        return self.descriptor or self.kind


def parse_family(text: str) -> FamilySpec:
    head, _, rest = text.partition(":")
    kind = head.strip()
    if kind not in FAMILY_KINDS:
        raise ValueError(f"unknown family kind {kind!r}; expected one of {FAMILY_KINDS}")
    kv = {}
    if rest.strip():
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            if not eq:
                raise ValueError(f"malformed descriptor item {item!r}; expected key=value")
            kv[key.strip()] = value.strip()

    def take_int(key, default=None):
        if key not in kv:
            return default
        try:
            return int(kv.pop(key))
        except ValueError:
            raise ValueError(f"descriptor key {key} must be an integer") from None

    shift: int | str = 0
    if kv.get("shift") == "best":
        kv.pop("shift")
        shift = "best"
    else:
        shift = take_int("shift", 0)
    ratio = None
    if "resize" in kv:
        try:
            ratio = float(kv.pop("resize"))
        except ValueError:
            raise ValueError("descriptor key resize must be a number") from None
        if ratio <= 0:
            raise ValueError("resize ratio must be positive")

    if kind == "mseq":
        n = take_int("n")
        if n is None:
            raise ValueError("mseq descriptor requires n=<degree>")
        spec = FamilySpec(kind, n=n, char_shift=take_int("char", 1), shift=shift,
                          resize_ratio=ratio, descriptor=text)
    else:
        p = take_int("p")
        if p is None:
            raise ValueError(f"{kind} descriptor requires p=<prime>")
        spec = FamilySpec(kind, p=p, shift=shift, resize_ratio=ratio, descriptor=text)
    if kv:
        raise ValueError(f"unknown descriptor keys {sorted(kv)} for {kind}")
    return spec


def with_size(spec: FamilySpec, size: int) -> FamilySpec:
    """Copy of spec with its size parameter (n or p) replaced."""
    if spec.kind == "mseq":
        return FamilySpec(spec.kind, n=size, char_shift=spec.char_shift,
                          shift=spec.shift, resize_ratio=spec.resize_ratio)
    return FamilySpec(spec.kind, p=size, shift=spec.shift, resize_ratio=spec.resize_ratio)


def build_base(spec: FamilySpec) -> BinarySequence:
    """The family's base sequence, before shift/resize transforms."""
    if spec.kind == "mseq":
        if spec.n is None:
            raise ValueError("mseq family needs an extension degree n")
        return msequence(make_binary_field(spec.n), spec.char_shift)
    if spec.p is None:
        raise ValueError(f"{spec.kind} family needs a prime p")
    if spec.kind == "legendre":
        return legendre(spec.p)
    ctx = make_prime_field(spec.p)
    return quartic_f(ctx) if spec.kind == "quartic_f" else quartic_g(ctx)


def resized_length(spec: FamilySpec, base_len: int) -> int:
    if spec.resize_ratio is None:
        return base_len
    m = round(spec.resize_ratio * base_len)
    return max(m, 1)


def realize_fixed(spec: FamilySpec) -> BinarySequence:
    """Build the sequence for a spec whose shift is a concrete integer."""
    if spec.shift == "best":
        raise ValueError("shift=best requires a shift search (see analysis.realize)")
    out = cyclic_shift(build_base(spec), spec.shift)
    m = resized_length(spec, len(out))
    return resize(out, m) if m != len(out) else out
