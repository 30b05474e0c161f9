import pytest

from seqcorr.gf import (
    find_primitive_element,
    is_prime,
    make_binary_field,
    make_prime_field,
    prime_factors,
    quadratic_character,
    quartic_coset_index,
    trace,
)


class TestPrimality:
    def test_small_values(self):
        primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 997, 1009}
        for n in range(-2, 50):
            assert is_prime(n) == (n in primes)
        assert is_prime(997) and is_prime(1009)
        assert not is_prime(1001) and not is_prime(2**16 + 1 - 2)

    def test_large_composite_and_prime(self):
        assert is_prime((1 << 61) - 1)  # Mersenne prime
        assert not is_prime((1 << 61) - 3)

    def test_prime_factors(self):
        assert prime_factors(1) == []
        assert prime_factors(2**5 * 3 * 49) == [2, 3, 7]
        assert prime_factors(1023) == [3, 11, 31]


class TestBinaryField:
    def test_degree_three_modulus_is_least_primitive(self):
        ctx = make_binary_field(3)
        assert ctx.modulus == 0b1011  # x^3 + x + 1
        assert ctx.generator == 0b10

    def test_degree_two_modulus(self):
        assert make_binary_field(2).modulus == 0b111  # only irreducible quadratic

    def test_out_of_range_degrees(self):
        for n in (1, 0, -3, 25):
            with pytest.raises(ValueError):
                make_binary_field(n)

    def test_generator_has_full_order(self):
        for n in (2, 3, 4, 5, 8, 11):
            ctx = make_binary_field(n)
            seen = set()
            cur = 1
            for _ in range(ctx.order):
                seen.add(cur)
                cur = ctx.mul(cur, ctx.generator)
            assert cur == 1
            assert len(seen) == ctx.order

    def test_trace_examples(self):
        ctx = make_binary_field(3)
        assert trace(ctx, 0) == 0
        assert trace(ctx, 1) == 1
        assert trace(ctx, ctx.generator) == 0

    def test_trace_linearity_and_frobenius(self):
        for n in (2, 3, 4, 6, 8):
            ctx = make_binary_field(n)
            for x in range(1 << n):
                assert trace(ctx, x) == trace(ctx, ctx.mul(x, x))
                for y in range(0, 1 << n, 5):
                    assert trace(ctx, x ^ y) == trace(ctx, x) ^ trace(ctx, y)

    def test_trace_balance(self):
        for n in range(2, 17):
            ctx = make_binary_field(n)
            ones = sum(trace(ctx, x) for x in range(1 << n))
            assert ones == 1 << (n - 1)

    def test_element_range_checked(self):
        ctx = make_binary_field(3)
        with pytest.raises(ValueError):
            trace(ctx, 8)

    def test_context_printable(self):
        text = str(make_binary_field(3))
        assert "0xb" in text and "2" in text


class TestPrimeField:
    def test_least_primitive_roots(self):
        assert find_primitive_element(7) == 3
        assert find_primitive_element(13) == 2
        assert find_primitive_element(3) == 2

    def test_rejects_non_primes_and_even(self):
        for bad in (2, 8, 15, 1):
            with pytest.raises(ValueError):
                find_primitive_element(bad)

    def test_quadratic_character_examples(self):
        assert quadratic_character(7, 2) == 1
        assert quadratic_character(7, 3) == -1
        assert quadratic_character(7, 0) == 0

    def test_quadratic_character_multiplicative(self):
        p = 13
        for a in range(1, p):
            for b in range(1, p):
                assert quadratic_character(p, a * b % p) == quadratic_character(
                    p, a
                ) * quadratic_character(p, b)

    def test_quadratic_character_rejects_bad_modulus(self):
        with pytest.raises(ValueError):
            quadratic_character(9, 2)
        with pytest.raises(ValueError):
            quadratic_character(2, 1)

    def test_quartic_cosets_p13(self):
        ctx = make_prime_field(13)
        assert ctx.generator == 2
        assert quartic_coset_index(ctx, 3) == 0
        assert quartic_coset_index(ctx, 6) == 1
        assert quartic_coset_index(ctx, 11) == 3
        # fourth powers mod 13 are {1, 3, 9}
        assert {j for j in range(1, 13) if quartic_coset_index(ctx, j) == 0} == {1, 3, 9}

    def test_quartic_coset_sizes_and_product_law(self):
        for p in (13, 17, 29, 37):
            ctx = make_prime_field(p)
            sizes = [0, 0, 0, 0]
            for j in range(1, p):
                sizes[quartic_coset_index(ctx, j)] += 1
            assert sizes == [(p - 1) // 4] * 4
            for a in range(1, p, 3):
                for b in range(1, p, 5):
                    lhs = (quartic_coset_index(ctx, a) + quartic_coset_index(ctx, b)) % 4
                    assert lhs == quartic_coset_index(ctx, a * b % p)

    def test_quartic_requires_one_mod_four(self):
        ctx = make_prime_field(7)
        with pytest.raises(ValueError):
            quartic_coset_index(ctx, 3)
        ctx13 = make_prime_field(13)
        with pytest.raises(ValueError):
            quartic_coset_index(ctx13, 0)

    def test_context_printable(self):
        assert "13" in str(make_prime_field(13))
