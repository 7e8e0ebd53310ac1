"""Fast evaluation of T_n, M_n, and shift combos at arbitrary n.

T is evaluated as the product of table entries over the base-p digits of
n.  Shift combinations need slightly more bookkeeping because adding i
to n can carry: the digit word is parsed into the canonical form
``q m (p-1)^k n0`` (a maximal run of p-1 digits between the last digit
and the rest), after which the combination factors into two short sums
against the table.  The all-run word is covered by the leading-zero
convention, which supplies m = 0 and an empty q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modmath import mod_inverse
from .tables import ShiftCombo, TTable, MTable, UnsupportedWidthError


class HypothesisViolation(ValueError):
    """A digit-evaluation shortcut was asked to run outside its hypotheses.

    ``hypothesis`` names the failed premise so callers can pick a
    fallback (table, combination, or oracle route).
    """

    def __init__(self, hypothesis: str, detail: str):
        self.hypothesis = hypothesis
        super().__init__(f"{hypothesis}: {detail}")


@dataclass(frozen=True)
class CanonicalForm:
    """Digit word of n split as q m (p-1)^k n0 (m, k unset in plain form)."""

    n0: int
    tail: bool
    q: tuple[int, ...] = ()
    m: int | None = None
    k: int | None = None


def parse_tail(n: int, p: int, h: int) -> CanonicalForm:
    """Split the digit word of n for a combination of width h.

    Plain form (n0 < p-h): no shift can carry past the last digit, so q
    is simply everything before it.  Tail form: k counts the maximal run
    of (p-1) digits right before n0, m is the digit in front of the run
    (0 if the word ran out, per the zero-padding convention), and q is
    the remaining prefix.
    """
    if not 0 < h < p:
        raise UnsupportedWidthError(f"need 0 < h < p (got h={h}, p={p})")
    if n < 0:
        raise ValueError("n must be non-negative")
    rest, n0 = divmod(n, p)
    if n0 < p - h:
        digits = []
        q = rest
        while q:
            q, d = divmod(q, p)
            digits.append(d)
        return CanonicalForm(n0=n0, tail=False, q=tuple(reversed(digits)))
    k = 0
    while rest % p == p - 1:
        rest //= p
        k += 1
    rest, m = divmod(rest, p) if rest else (0, 0)
    digits = []
    while rest:
        rest, d = divmod(rest, p)
        digits.append(d)
    return CanonicalForm(n0=n0, tail=True, q=tuple(reversed(digits)), m=m, k=k)


def t_eval(ttable: TTable, n: int) -> int:
    """T_n mod p as the digit product of table entries."""
    p = ttable.p
    t = ttable.values
    if n < p:
        return t[n]
    acc = 1
    while n:
        n, d = divmod(n, p)
        acc = acc * t[d] % p
    return acc


def word_eval(ttable: TTable, digits) -> int:
    """Digit product over an explicit word (most-significant first)."""
    acc = 1
    p = ttable.p
    for d in digits:
        acc = acc * ttable.values[d] % p
    return acc


def combo_eval(combo: ShiftCombo, ttable: TTable, n: int, scaled: bool = False) -> int:
    """b_n = sum_i alphas[i] * T_{n+i} mod p via the canonical-form split.

    Valid for any parameters with h < p; only digit multiplicativity is
    used.  ``scaled=True`` divides by the combo scale (p must not divide
    it).
    """
    p = ttable.p
    t = ttable.values
    h = combo.h
    cf = parse_tail(n, p, h)
    n0 = cf.n0
    if not cf.tail:
        s = 0
        for i, alpha in enumerate(combo.alphas):
            s += alpha * t[n0 + i]
        val = t_eval(ttable, n // p) * (s % p) % p
    else:
        tq = word_eval(ttable, cf.q)
        c = p - n0 - 1 if h > p - n0 - 1 else h  # C_{n0} = min(h, p-n0-1)
        s1 = 0
        for i in range(c + 1):
            s1 += combo.alphas[i] * t[n0 + i]
        s2 = 0
        for i in range(p - n0, h + 1):
            s2 += combo.alphas[i] * t[i - (p - n0)]
        run = pow(t[p - 1], cf.k, p)
        val = tq * (t[cf.m] * run * s1 + t[cf.m + 1] * s2) % p
    if scaled:
        val = val * mod_inverse(combo.scale, p) % p
    return val


def m_eval(ttable: TTable, mtable: MTable, n: int) -> int:
    """M_n mod p by the three-case digit formula.

    Hypotheses (checked loudly): p > 2, p does not divide a, and p does
    not divide the discriminant b^2 - 4a^2 (the last powers of the
    discriminant below can be negative).  Zeros among the T table
    entries are fine -- they only make some products vanish, which is
    exactly what the true value does.
    """
    p = ttable.p
    a = ttable.params.a % p
    b = ttable.params.b % p
    disc = ttable.discriminant_mod
    if p == 2:
        raise HypothesisViolation("p_equals_2", "three-case formula needs p > 2")
    if a == 0:
        raise HypothesisViolation("p_divides_a", "M_n = b^n branch; use the table or oracle")
    if disc == 0:
        raise HypothesisViolation(
            "p_divides_discriminant", "discriminant powers are not invertible; use combos or oracle"
        )
    t = ttable.values
    cf = parse_tail(n, p, 2)
    if not cf.tail:
        return t_eval(ttable, n // p) * mtable.values[cf.n0] % p
    tq = word_eval(ttable, cf.q)
    inv2a2 = mod_inverse(2 * a * a, p)
    run = pow(t[p - 1], cf.k + 1, p)
    if cf.n0 == p - 2:
        core = (b * t[cf.m] * run - t[cf.m + 1]) % p
        return tq * core * inv2a2 % p
    # n0 = p-1: reflect m to l = p-2-m and compensate with a discriminant power
    l = p - 2 - cf.m
    e = (cf.m + 1 - (p - 1) // 2) % (p - 1)
    core = (b * t[l] - run * t[l + 1]) % p
    return pow(disc, e, p) * tq * core * inv2a2 % p
