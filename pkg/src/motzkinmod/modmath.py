"""Modular arithmetic, base-p digit words, and exact rationals.

Residues are plain ints in ``[0, p)``; the prime itself travels in a
:class:`Modulus` attached to table and report objects.  Densities are
:class:`fractions.Fraction` end to end -- floating point only ever appears
in display code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ExactRatio = Fraction


class NotPrimeError(ValueError):
    """Raised when a modulus fails the primality check."""


class NonInvertibleError(ZeroDivisionError):
    """Raised when inverting 0 (or a unit that does not exist) mod p."""


class MalformedWordError(ValueError):
    """Raised for digit words containing digits outside [0, p)."""


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test.

    Intended range is moduli below ~10^7, where trial division is plenty
    fast and leaves no probabilistic doubt.
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def ensure_prime(p: int) -> int:
    if not is_prime(p):
        raise NotPrimeError(f"modulus {p} is not prime")
    return p


@dataclass(frozen=True)
class Modulus:
    """A prime modulus, verified at construction."""

    p: int

    def __post_init__(self) -> None:
        ensure_prime(self.p)

    def __int__(self) -> int:
        return self.p


def to_digits(n: int, p: int) -> list[int]:
    """Base-p digits of n, most-significant first.

    The canonical form has no leading zero except for n = 0, which is the
    single digit [0].
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return [0]
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    digits.reverse()
    return digits


def from_digits(digits, p: int) -> int:
    """Integer value of a most-significant-first digit word.

    Leading zeros are allowed (words are equivalent up to zero padding);
    the empty word denotes 0.
    """
    n = 0
    for d in digits:
        if not 0 <= d < p:
            raise MalformedWordError(f"digit {d} out of range for base {p}")
        n = n * p + d
    return n


def mod_inverse(r: int, p: int) -> int:
    if r % p == 0:
        raise NonInvertibleError(f"{r} is not invertible mod {p}")
    return pow(r, -1, p)


def mod_pow(r: int, e: int, p: int) -> int:
    """r**e mod p, with negative exponents routed through the inverse."""
    r %= p
    if e < 0:
        if r == 0:
            raise NonInvertibleError(f"0 has no negative powers mod {p}")
        r = pow(r, -1, p)
        e = -e
    return pow(r, e, p)


def inverse_table(p: int) -> list[int]:
    """Inverses of 1..p-1 mod p in O(p); slot 0 is a placeholder."""
    inv = [0] * p
    if p > 1:
        inv[1] = 1
    for i in range(2, p):
        inv[i] = (p - (p // i) * inv[p % i]) % p
    return inv


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by a byte sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for q in range(2, int(n**0.5) + 1):
        if sieve[q]:
            start = q * q
            sieve[start : n + 1 : q] = bytearray(len(range(start, n + 1, q)))
    return [i for i, flag in enumerate(sieve) if flag]
