"""Reflection symmetries of the first-p tables, checked exhaustively.

T_{p-1-k} is (b^2-4a^2)^((p-1)/2-k) times T_k mod p, and the Motzkin
analogue reflects around p-3 with exponent (p-3)/2-k.  Both are proved
facts, so a nonempty violation list means an implementation bug; the
reports carry every offending index rather than a bare boolean.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modmath import Modulus
from .tables import SeqParams, m_table, t_table


@dataclass(frozen=True)
class SymmetryReport:
    modulus: Modulus
    params: SeqParams
    theorem: str
    checked_upto: int  # k ranges over 0..checked_upto inclusive
    violations: tuple[tuple[int, int, int], ...]  # (k, lhs, rhs)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_t_symmetry(p: int, a: int = 1, b: int = 1) -> SymmetryReport:
    """Verify T_{p-1-k} = disc^((p-1)/2-k) * T_k for 0 <= k <= (p-1)/2."""
    if p <= 2:
        raise ValueError("trinomial symmetry needs p > 2")
    tt = t_table(p, a, b)
    t = tt.values
    disc = tt.discriminant_mod
    half = (p - 1) // 2
    violations = []
    power = 1  # disc^((p-1)/2 - k), walked down from k = half
    for k in range(half, -1, -1):
        lhs = t[p - 1 - k]
        rhs = power * t[k] % p
        if lhs != rhs:
            violations.append((k, lhs, rhs))
        power = power * disc % p
    violations.reverse()
    return SymmetryReport(tt.modulus, tt.params, "t_reflection", half, tuple(violations))


def check_m_symmetry(p: int, a: int = 1, b: int = 1) -> SymmetryReport:
    """Verify M_{p-3-k} = disc^((p-3)/2-k) * M_k for 0 <= k <= (p-3)/2."""
    if p <= 3:
        raise ValueError("Motzkin symmetry needs p > 3")
    mt = m_table(p, a, b)
    m = mt.values
    disc = SeqParams(a, b).discriminant % p
    half = (p - 3) // 2
    violations = []
    power = 1
    for k in range(half, -1, -1):
        lhs = m[p - 3 - k]
        rhs = power * m[k] % p
        if lhs != rhs:
            violations.append((k, lhs, rhs))
        power = power * disc % p
    violations.reverse()
    return SymmetryReport(mt.modulus, mt.params, "m_reflection", half, tuple(violations))


def t_pm1_square_check(p: int, a: int = 1, b: int = 1) -> bool:
    """(T_{p-1})^2 = 1 mod p, valid when p > 2 and p does not divide the discriminant."""
    if p <= 2:
        raise ValueError("needs p > 2")
    tt = t_table(p, a, b)
    if tt.discriminant_mod == 0:
        raise ValueError("p divides b^2 - 4a^2; T_{p-1} vanishes instead")
    return tt.t_pm1 * tt.t_pm1 % p == 1


def motzkin_pm2_criterion(p: int) -> tuple[bool, bool]:
    """(p divides M_{p-2}, p = 1 mod 3) -- the two sides of the biconditional."""
    if p == 2:
        return (False, False)  # M_0 = 1
    mt = m_table(p)
    return (mt.values[p - 2] == 0, p % 3 == 1)
