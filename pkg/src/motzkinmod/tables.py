"""First-p tables of T, M, and shift combinations mod p.

Everything mod p is determined by these finite tables: T is
digit-multiplicative, so T_0..T_{p-1} (plus the forced tail entries
T_p = T_1*T_0 and T_{p+1} = T_1^2) pin down the whole sequence, and M
follows from T through the exact identity
``2a^2*M_n = (4a^2-b^2)T_n + 2b*T_{n+1} - T_{n+2}``.

The T recurrence is only run for n < p, where the leading coefficient n
is invertible; the M recurrence is never run mod p at all (its leading
coefficient n+2 vanishes at n = p-2).  Degenerate parameter classes
(p | a, p = 2) are handled by named branches, never silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .modmath import Modulus, inverse_table, mod_inverse, NonInvertibleError
from .oracle import WEIGHT_MOTZKIN, oracle_seq_mod


@dataclass(frozen=True)
class SeqParams:
    """Step weights: a colors for up/down steps, b colors for level steps."""

    a: int
    b: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.a


class UnsupportedWidthError(ValueError):
    """Raised when a shift combination is at least as wide as the modulus."""


@dataclass(frozen=True)
class ShiftCombo:
    """Coefficients of b_n = sum_i alphas[i] * T_{n+i}.

    ``scale`` records the constant tying the combination back to a target
    sequence (combo value = scale * target term), e.g. 2a^2 for the
    Motzkin numbers and 2 for the half-integer sequences of the OEIS
    trio.  Zero sets agree whenever p does not divide the scale.
    """

    alphas: tuple[int, ...]
    scale: int = 1
    name: str = "custom"

    def __post_init__(self) -> None:
        if not self.alphas:
            raise ValueError("combo needs at least one coefficient")
        if self.alphas[-1] == 0:
            raise ValueError("leading (highest-shift) coefficient must be nonzero")

    @property
    def h(self) -> int:
        return len(self.alphas) - 1


def motzkin_combo(a: int = 1, b: int = 1) -> ShiftCombo:
    """b_n = (4a^2-b^2)T_n + 2b*T_{n+1} - T_{n+2} = 2a^2 * M_n."""
    return ShiftCombo((4 * a * a - b * b, 2 * b, -1), scale=2 * a * a, name="motzkin")


NAMED_COMBOS = {
    # each combo equals 2 * (the OEIS sequence term), valid for a = b = 1
    "a005717": ShiftCombo((-1, 1), scale=2, name="a005717"),
    "a005043": ShiftCombo((3, -1), scale=2, name="a005043"),
    "a005773": ShiftCombo((1, 1), scale=2, name="a005773"),
}


@dataclass(frozen=True)
class TTable:
    """T_0..T_{p+1} mod p (the two extra entries are digit products)."""

    params: SeqParams
    modulus: Modulus
    values: tuple[int, ...]
    zero_digits: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        zeros = tuple(j for j in range(self.modulus.p) if self.values[j] == 0)
        object.__setattr__(self, "zero_digits", zeros)

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def has_zero(self) -> bool:
        return bool(self.zero_digits)

    @property
    def t_pm1(self) -> int:
        return self.values[self.p - 1]

    @property
    def discriminant_mod(self) -> int:
        return self.params.discriminant % self.p

    def value_near(self, j: int) -> int:
        """T_j for 0 <= j < 2p (one digit-product step past the table)."""
        if j < self.p + 2:
            return self.values[j]
        return self.values[1] * self.values[j - self.p] % self.p


@dataclass(frozen=True)
class MTable:
    """M_0..M_{p-1} mod p, with the branch that produced it."""

    params: SeqParams
    modulus: Modulus
    values: tuple[int, ...]
    branch: str  # 'from_t' | 'power_of_b' | 'oracle_p2'

    @property
    def p(self) -> int:
        return self.modulus.p


def t_table(p: int, a: int = 1, b: int = 1) -> TTable:
    """T_0..T_{p+1} mod p via the two-term recurrence.

    Division by n is legal for 1 <= n <= p-1; the entries at p and p+1
    are forced by the digit-product law (T_p = T_1*T_0, T_{p+1} = T_1^2).
    """
    modulus = Modulus(p)
    params = SeqParams(a, b)
    a %= p
    b %= p
    disc = params.discriminant % p
    values = [1] * (p + 2)
    if p >= 2:
        values[1] = b
    inv = inverse_table(p)
    for n in range(2, p):
        num = b * (2 * n - 1) * values[n - 1] - disc * (n - 1) * values[n - 2]
        values[n] = num * inv[n] % p
    values[p] = values[1] * values[0] % p
    values[p + 1] = values[1] * values[1] % p
    return TTable(params, modulus, tuple(values))


def m_table(p: int, a: int = 1, b: int = 1, ttable: TTable | None = None) -> MTable:
    """M_0..M_{p-1} mod p.

    Branches: p = 2 falls back to the integer oracle per entry; p | a
    collapses P to the constant b, giving M_n = b^n; otherwise M is
    read off the T table through the 2a^2*M_n identity.
    """
    modulus = Modulus(p)
    params = SeqParams(a, b)
    if p == 2:
        values = tuple(oracle_seq_mod(a, b, n, WEIGHT_MOTZKIN, p) for n in range(p))
        return MTable(params, modulus, values, branch="oracle_p2")
    if a % p == 0:
        bb = b % p
        values = tuple(pow(bb, n, p) for n in range(p))
        return MTable(params, modulus, values, branch="power_of_b")
    if ttable is None:
        ttable = t_table(p, a, b)
    t = ttable.values
    aa, bb = a % p, b % p
    c0 = (4 * aa * aa - bb * bb) % p
    inv2a2 = mod_inverse(2 * aa * aa, p)
    values = tuple(
        (c0 * t[n] + 2 * bb * t[n + 1] - t[n + 2]) * inv2a2 % p for n in range(p)
    )
    return MTable(params, modulus, values, branch="from_t")


def combo_table(combo: ShiftCombo, ttable: TTable, scaled: bool = False) -> list[int]:
    """b_0..b_{p-1} mod p for a shift combination.

    With ``scaled=True`` the values are divided by the combo's scale,
    recovering the target sequence itself (requires p not dividing the
    scale).
    """
    p = ttable.p
    h = combo.h
    if h >= p:
        raise UnsupportedWidthError(f"combo width h={h} needs p > h (got p={p})")
    values = []
    for n in range(p):
        s = 0
        for i, alpha in enumerate(combo.alphas):
            s += alpha * ttable.value_near(n + i)
        values.append(s % p)
    if scaled:
        if combo.scale % p == 0:
            raise NonInvertibleError(
                f"scale {combo.scale} vanishes mod {p}; combo values do not determine the sequence"
            )
        inv = mod_inverse(combo.scale, p)
        values = [v * inv % p for v in values]
    return values
