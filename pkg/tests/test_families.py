import random

import pytest

from seqcorr import (
    BinarySequence,
    cyclic_shift,
    decimate,
    half_legendre_pair,
    legendre,
    make_binary_field,
    make_prime_field,
    msequence,
    msequence_pair,
    periodic_xcorr,
    quartic_f,
    quartic_g,
    resize,
)
from seqcorr.families import (
    FamilySpec,
    build_base,
    parse_family,
    power_of_two_residues,
    realize_fixed,
    with_size,
)
from seqcorr.gf import is_prime

from oracles import random_sequence


def all_rotations(f):
    return {cyclic_shift(f, r).terms for r in range(len(f))}


class TestMSequence:
    def test_degree_three_galois_form(self):
        ctx = make_binary_field(3)
        assert msequence(ctx).to_line() == "-++-+--"

    def test_degree_two_shape_and_balance(self):
        seq = msequence(make_binary_field(2))
        assert len(seq) == 3
        assert sum(1 for t in seq if t == 1) == 1

    def test_character_shift_rotates(self):
        ctx = make_binary_field(4)
        base = msequence(ctx, 1)
        for c in (2, 3, 7, 11):
            assert msequence(ctx, c).terms in all_rotations(base)

    def test_trivial_character_rejected(self):
        ctx = make_binary_field(3)
        with pytest.raises(ValueError):
            msequence(ctx, 0)

    def test_balance_and_two_level_autocorrelation(self):
        for n in range(2, 11):
            seq = msequence(make_binary_field(n))
            assert sum(seq.terms) == -1
            spec = periodic_xcorr(seq, seq)
            assert spec[0] == len(seq)
            assert all(spec[s] == -1 for s in range(1, len(seq)))


class TestDecimate:
    def test_identity(self):
        f = BinarySequence((1, -1, 1, 1, -1))
        assert decimate(f, 1).terms == f.terms

    def test_degenerate_decimation_fixes_galois_sequence(self):
        seq = msequence(make_binary_field(3))
        assert decimate(seq, 2).terms == seq.terms
        seq5 = msequence(make_binary_field(5))
        for d in (2, 4, 8, 16):
            assert decimate(seq5, d).terms == seq5.terms

    def test_reversing_decimation_reverses_up_to_rotation(self):
        seq = msequence(make_binary_field(3))
        rev = BinarySequence(seq.terms[::-1])
        assert decimate(seq, -1).terms in all_rotations(rev)

    def test_non_coprime_rejected(self):
        f = BinarySequence((1,) * 6)
        with pytest.raises(ValueError):
            decimate(f, 2)

    def test_composition_law(self):
        rng = random.Random(31)
        f = random_sequence(rng, 15)
        for d1, d2 in ((2, 4), (7, 11), (4, 13)):
            assert decimate(decimate(f, d1), d2).terms == decimate(f, d1 * d2 % 15).terms

    def test_power_of_two_residues(self):
        assert power_of_two_residues(7) == {1, 2, 4}
        assert power_of_two_residues(31) == {1, 2, 4, 8, 16}


class TestLegendre:
    def test_small_primes(self):
        assert legendre(3).to_line() == "++-"
        assert legendre(5).to_line() == "++--+"
        assert legendre(7).to_line() == "+++-+--"

    def test_rejects_non_odd_primes(self):
        for bad in (2, 9, 15):
            with pytest.raises(ValueError):
                legendre(bad)

    def test_two_level_periodic_autocorrelation_for_three_mod_four(self):
        for p in (7, 11, 19, 23, 31, 43, 47, 59, 67, 71, 79, 83, 103, 107, 127, 131, 139,
                  151, 163, 167, 179, 191, 199):
            assert p % 4 == 3 and is_prime(p)
            h = legendre(p)
            spec = periodic_xcorr(h, h)
            assert all(spec[s] == -1 for s in range(1, p))


class TestQuartic:
    def test_p13_supports(self):
        ctx = make_prime_field(13)
        f = quartic_f(ctx)
        g = quartic_g(ctx)
        assert {j for j in range(13) if f[j] == 1} == {0, 1, 2, 3, 5, 6, 9}
        assert {j for j in range(13) if g[j] == 1} == {0, 1, 3, 9, 8, 11, 7}

    def test_product_is_legendre_pattern(self):
        for p in (13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 109, 113, 137, 149, 157,
                  173, 181, 193, 197):
            ctx = make_prime_field(p)
            f = quartic_f(ctx)
            g = quartic_g(ctx)
            h = legendre(p)
            assert tuple(a * b for a, b in zip(f, g)) == h.terms

    def test_rejects_three_mod_four(self):
        ctx = make_prime_field(7)
        with pytest.raises(ValueError):
            quartic_f(ctx)
        with pytest.raises(ValueError):
            quartic_g(ctx)


class TestTransforms:
    def test_cyclic_shift_examples(self):
        f = BinarySequence((1, -1, -1))
        assert cyclic_shift(f, 0).terms == f.terms
        assert cyclic_shift(f, 3).terms == f.terms
        assert cyclic_shift(f, 1).terms == (-1, -1, 1)
        assert cyclic_shift(f, -1).terms == (-1, 1, -1)

    def test_resize_examples(self):
        f = BinarySequence((1, -1, 1))
        assert resize(f, 3).terms == f.terms
        assert resize(f, 5).terms == (1, -1, 1, 1, -1)
        assert resize(f, 2).terms == (1, -1)
        with pytest.raises(ValueError):
            resize(f, 0)

    def test_resize_round_trip(self):
        rng = random.Random(32)
        f = random_sequence(rng, 9)
        for m in (9, 13, 27, 40):
            assert resize(resize(f, m), 9).terms == f.terms


class TestHalfLegendre:
    def test_p5_example(self):
        a, b = half_legendre_pair(5, 0)
        assert a.to_line() == "++"
        assert b.to_line() == "--"

    def test_p7_example(self):
        a, b = half_legendre_pair(7, 0)
        assert a.to_line() == "+++"
        assert b.to_line() == "-+-"

    def test_shapes_for_various_shifts(self):
        for p in (5, 7, 13, 29):
            for r in (0, 1, p - 1):
                a, b = half_legendre_pair(p, r)
                assert len(a) == len(b) == (p - 1) // 2

    def test_shift_slides_the_window(self):
        p = 11
        h = legendre(p)
        a, b = half_legendre_pair(p, 4)
        expect = cyclic_shift(h, 4).terms[: p - 1]
        assert a.terms + b.terms == expect


class TestMSequencePair:
    def test_degenerate_decimations_rejected(self):
        ctx = make_binary_field(5)
        for d in (1, 2, 4, 8, 16, 32, 64):
            with pytest.raises(ValueError):
                msequence_pair(ctx, d)

    def test_typical_pair_is_cyclically_inequivalent(self):
        ctx = make_binary_field(5)
        f, g = msequence_pair(ctx, 3)
        assert g.terms not in all_rotations(f)

    def test_reversing_pair_reverses(self):
        ctx = make_binary_field(5)
        f, g = msequence_pair(ctx, -1)
        assert g.terms in all_rotations(BinarySequence(f.terms[::-1]))

    def test_shifts_applied(self):
        ctx = make_binary_field(5)
        f0, g0 = msequence_pair(ctx, 3)
        f2, g5 = msequence_pair(ctx, 3, shift_f=2, shift_g=5)
        assert f2.terms == cyclic_shift(f0, 2).terms
        assert g5.terms == cyclic_shift(g0, 5).terms


class TestFamilySpec:
    def test_parse_mseq(self):
        spec = parse_family("mseq:n=10,char=3")
        assert spec.kind == "mseq" and spec.n == 10 and spec.char_shift == 3
        assert spec.base_length() == 1023

    def test_parse_legendre_with_search_and_resize(self):
        spec = parse_family("legendre:p=1019,shift=best,resize=1.0578")
        assert spec.p == 1019
        assert spec.shift == "best"
        assert spec.resize_ratio == pytest.approx(1.0578)

    def test_parse_fixed_shift(self):
        spec = parse_family("quartic_f:p=13,shift=5")
        assert spec.shift == 5
        assert realize_fixed(spec).terms == cyclic_shift(quartic_f(make_prime_field(13)), 5).terms

    def test_parse_errors(self):
        for bad in (
            "unknown:p=3",
            "legendre",
            "legendre:p",
            "legendre:p=abc",
            "legendre:p=13,bogus=1",
            "mseq:char=1",
            "legendre:p=13,resize=-1",
        ):
            with pytest.raises(ValueError):
                parse_family(bad)

    def test_with_size_and_build_base(self):
        spec = parse_family("legendre:p=7")
        assert build_base(with_size(spec, 11)).to_line() == legendre(11).to_line()
        mspec = FamilySpec("mseq", n=3)
        assert build_base(mspec).to_line() == "-++-+--"

    def test_realize_fixed_rejects_search_spec(self):
        with pytest.raises(ValueError):
            realize_fixed(parse_family("legendre:p=7,shift=best"))
