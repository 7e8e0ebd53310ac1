from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from motzkinmod.modmath import (
    MalformedWordError,
    Modulus,
    NonInvertibleError,
    NotPrimeError,
    from_digits,
    inverse_table,
    is_prime,
    mod_inverse,
    mod_pow,
    primes_up_to,
    to_digits,
)

SMALL_PRIMES = primes_up_to(97)


def test_to_digits_examples():
    assert to_digits(19, 5) == [3, 4]
    assert to_digits(0, 5) == [0]
    assert to_digits(124, 5) == [4, 4, 4]


def test_from_digits_examples():
    assert from_digits([3, 4], 5) == 19
    assert from_digits([0, 3, 4], 5) == 19  # leading zeros are harmless
    assert from_digits([], 5) == 0
    with pytest.raises(MalformedWordError):
        from_digits([5, 0], 5)


def test_no_leading_zero_in_canonical_output():
    for n in (1, 5, 24, 25, 26, 3124):
        assert to_digits(n, 5)[0] != 0


@given(st.integers(min_value=0, max_value=10**6 - 1), st.sampled_from(SMALL_PRIMES))
def test_digit_round_trip(n, p):
    assert from_digits(to_digits(n, p), p) == n


def test_mod_inverse_examples():
    assert mod_inverse(2, 5) == 3
    assert mod_inverse(1, 7) == 1
    assert mod_inverse(4, 5) == 4
    with pytest.raises(NonInvertibleError):
        mod_inverse(0, 5)


def test_mod_pow_examples():
    assert mod_pow(2, 2, 5) == 4  # (-3)^2 mod 5
    for r in range(1, 7):
        assert mod_pow(r, 0, 7) == 1
    assert mod_pow(3, -1, 7) == 5
    with pytest.raises(NonInvertibleError):
        mod_pow(0, -1, 7)


def test_fermat_little_theorem_all_primes_to_200():
    for p in primes_up_to(200):
        for r in range(1, p):
            assert mod_pow(r, p - 1, p) == 1


def test_inverse_table_matches_mod_inverse():
    for p in (2, 3, 5, 31, 97):
        inv = inverse_table(p)
        for i in range(1, p):
            assert inv[i] == mod_inverse(i, p)


def test_modulus_rejects_composites():
    Modulus(2)
    Modulus(97)
    for bad in (0, 1, 4, 91, 10**6):
        with pytest.raises(NotPrimeError):
            Modulus(bad)


def test_is_prime_agrees_with_sieve():
    sieve = set(primes_up_to(1000))
    for n in range(1001):
        assert is_prime(n) == (n in sieve)


@given(
    st.integers(-10**9, 10**9),
    st.integers(1, 10**9),
    st.integers(-10**9, 10**9),
    st.integers(1, 10**9),
)
def test_fraction_arithmetic_is_exact(a, b, c, d):
    # cross-multiplied integer identity for the sum
    s = Fraction(a, b) + Fraction(c, d)
    assert s * b * d == a * d + c * b
    assert s.denominator > 0
    from math import gcd

    assert gcd(abs(s.numerator), s.denominator) == 1
