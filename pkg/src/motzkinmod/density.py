"""Exact densities of residues in the sequences mod p.

A shift combination b_n vanishes mod p exactly when, after the digit
word of n is split as ``q m (p-1)^k n0``, either T_q vanishes or a
finite condition on (n0, m, parity of k) holds.  Summing the geometric
weight of each string class gives the density of 0 as an exact rational
with three auditable pieces:

* plain strings (last digit below p-h)        -- weight 1/p each,
* tail strings with even run length k         -- weight 1/((p-1)(p+1)),
* tail strings with odd run length k          -- weight 1/((p-1)p(p+1)).

If some T_j vanishes below p the density of 0 is 1 outright (an
external result this package only spot-checks empirically); the finite
counting machinery here still tracks such zeros exactly, which is what
lets :func:`count_zeros_exact` agree with brute enumeration even at
degenerate primes.
"""

from __future__ import annotations

import dataclasses
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .digits import HypothesisViolation, combo_eval, m_eval
from .modmath import Modulus, mod_inverse
from .tables import (
    MTable,
    NAMED_COMBOS,
    SeqParams,
    ShiftCombo,
    TTable,
    UnsupportedWidthError,
    combo_table,
    m_table,
    motzkin_combo,
    t_table,
)


class DegenerateCaseError(ValueError):
    """Exact counting cannot run; the message points at enumeration."""


class BudgetExceededError(RuntimeError):
    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration needs {required} evaluations, over the budget of {budget}; "
            f"pass a larger budget to force it"
        )


@dataclass(frozen=True)
class DensityReport:
    modulus: Modulus
    params: SeqParams
    sequence_id: str
    d0: Fraction
    # (plain, even-run tail, odd-run tail); None when a degenerate branch
    # or the p=2 case table produced d0 directly
    case_contributions: tuple[Fraction, Fraction, Fraction] | None
    degenerate: str | None  # 't_zero' | 'p_divides_discriminant' | 'p_equals_2' | 'p_divides_a'
    lower_bound: Fraction | None
    nonzero_density: Fraction | None = None
    generation_status: str | None = None  # 'generates' | 'fails_to_generate'


def _tail_sums(combo: ShiftCombo, ttable: TTable, n0: int) -> tuple[int, int]:
    """The two short sums the tail condition is built from."""
    p = ttable.p
    t = ttable.values
    h = combo.h
    c = min(h, p - n0 - 1)
    s1 = sum(combo.alphas[i] * t[n0 + i] for i in range(c + 1)) % p
    s2 = sum(combo.alphas[i] * t[i - (p - n0)] for i in range(p - n0, h + 1)) % p
    return s1, s2


def tail_condition_sets(combo: ShiftCombo, ttable: TTable) -> dict[int, tuple[list[int], list[int]]]:
    """For each tail digit n0 in [p-h, p): the m-sets for even and odd runs.

    m in [0, p-1) lands in the even set when
    ``T_m*s1 + T_{m+1}*s2 = 0`` and in the odd set when
    ``T_m*T_{p-1}*s1 + T_{m+1}*s2 = 0`` (the run contributes
    T_{p-1}^k, which squares to 1).
    """
    p = ttable.p
    t = ttable.values
    sets: dict[int, tuple[list[int], list[int]]] = {}
    for n0 in range(p - combo.h, p):
        s1, s2 = _tail_sums(combo, ttable, n0)
        s1_odd = s1 * t[p - 1] % p
        even = [m for m in range(p - 1) if (t[m] * s1 + t[m + 1] * s2) % p == 0]
        odd = [m for m in range(p - 1) if (t[m] * s1_odd + t[m + 1] * s2) % p == 0]
        sets[n0] = (even, odd)
    return sets


def plain_zero_set(combo: ShiftCombo, ttable: TTable) -> list[int]:
    """Indices n < p-h with b_n = 0 mod p."""
    raw = combo_table(combo, ttable)
    return [n for n in range(ttable.p - combo.h) if raw[n] == 0]


def density_zero_generic(
    combo: ShiftCombo, p: int, a: int = 1, b: int = 1, sequence_id: str | None = None
) -> DensityReport:
    """Density of 0 in a shift combination of T mod p, as an exact rational.

    If some T_j = 0 below p the density is 1 (flagged); otherwise the
    plain/even/odd case counts are assembled with their geometric
    weights.
    """
    tt = t_table(p, a, b)
    seq_id = sequence_id or combo.name
    if combo.h >= p:
        raise UnsupportedWidthError(f"combo width h={combo.h} needs p > h (got p={p})")
    if tt.has_zero:
        return DensityReport(
            tt.modulus, tt.params, seq_id, Fraction(1), None, "t_zero", None
        )
    plain = plain_zero_set(combo, tt)
    sets = tail_condition_sets(combo, tt)
    n_even = sum(len(ev) for ev, _ in sets.values())
    n_odd = sum(len(od) for _, od in sets.values())
    contributions = (
        Fraction(len(plain), p),
        Fraction(n_even, (p - 1) * (p + 1)),
        Fraction(n_odd, (p - 1) * p * (p + 1)),
    )
    return DensityReport(
        tt.modulus, tt.params, seq_id, sum(contributions, Fraction(0)), contributions, None, None
    )


def density_zero_motzkin(p: int, a: int = 1, b: int = 1) -> DensityReport:
    """Density of 0 in M_n mod p.

    Branch order: a T-zero below p forces density 1; p = 2 uses the
    hand-computed case table; p | a (with p odd and p not dividing b)
    means M_n = b^n, which never vanishes; otherwise the plain set is
    read off the M table and the two tail sets are counted once and
    weighted twice, since the last digit can be either p-2 or p-1.
    """
    modulus = Modulus(p)
    params = SeqParams(a, b)
    lower = Fraction(2, p * (p - 1)) if p > 2 and a % p == 1 and b % p == 1 else None
    tt = t_table(p, a, b)
    if tt.has_zero:
        return DensityReport(modulus, params, "motzkin", Fraction(1), None, "t_zero", lower)
    if tt.discriminant_mod == 0:
        # unreachable: for p > 2 it forces T_{p-1} = 0 and at p = 2 it
        # forces T_1 = 0, both caught above; kept for the stated order
        return DensityReport(
            modulus, params, "motzkin", Fraction(1), None, "p_divides_discriminant", lower
        )
    if p == 2:
        # no T-zero here, so b is odd
        d0 = Fraction(0) if a % 2 == 0 else Fraction(1, 3)
        return DensityReport(modulus, params, "motzkin", d0, None, "p_equals_2", lower)
    if a % p == 0:
        return DensityReport(modulus, params, "motzkin", Fraction(0), None, "p_divides_a", lower)
    t = tt.values
    bb = b % p
    tp1 = tt.t_pm1
    mt = m_table(p, a, b, ttable=tt)
    plain = [n for n in range(p - 2) if mt.values[n] == 0]
    even = [m for m in range(p - 1) if (bb * t[m] - tp1 * t[m + 1]) % p == 0]
    odd = [m for m in range(p - 1) if (bb * t[m] - t[m + 1]) % p == 0]
    contributions = (
        Fraction(len(plain), p),
        Fraction(2 * len(even), (p - 1) * (p + 1)),
        Fraction(2 * len(odd), (p - 1) * p * (p + 1)),
    )
    return DensityReport(
        modulus, params, "motzkin", sum(contributions, Fraction(0)), contributions, None, lower
    )


# named-sequence tail conditions: c*T_m = sign * [T_{p-1}] * T_{m+1},
# with the T_{p-1} factor present in the even-run set only
_NAMED_RULES = {"a005717": (1, 1), "a005043": (3, 1), "a005773": (1, -1)}


def density_zero_named(sequence_id: str, p: int) -> DensityReport:
    """Density of 0 in A005717, A005043 (Riordan), or A005773 mod p (a=b=1).

    The two m-sets land over a common denominator (p-1)(p+1): the plain
    set coincides with the odd-run set for these widths, which folds the
    1/p piece into a factor of p on that count.
    """
    if sequence_id not in _NAMED_RULES:
        raise ValueError(f"unknown sequence id {sequence_id!r}")
    if p == 2:
        raise ValueError(
            f"{sequence_id} density formulas need p > 2; enumerate via the oracle instead"
        )
    c, sign = _NAMED_RULES[sequence_id]
    modulus = Modulus(p)
    params = SeqParams(1, 1)
    lower = Fraction(1, p - 1)
    tt = t_table(p)
    if tt.has_zero:
        return DensityReport(modulus, params, sequence_id, Fraction(1), None, "t_zero", lower)
    t = tt.values
    tp1 = tt.t_pm1
    even = [m for m in range(p - 1) if (c * t[m] - sign * tp1 * t[m + 1]) % p == 0]
    odd = [m for m in range(p - 1) if (c * t[m] - sign * t[m + 1]) % p == 0]
    contributions = (
        Fraction(len(odd), p),
        Fraction(len(even), (p - 1) * (p + 1)),
        Fraction(len(odd), (p - 1) * p * (p + 1)),
    )
    d0 = Fraction(len(even) + p * len(odd), (p - 1) * (p + 1))
    assert d0 == sum(contributions, Fraction(0))
    return DensityReport(modulus, params, sequence_id, d0, contributions, None, lower)


def count_zeros_exact(combo: ShiftCombo, p: int, N: int, a: int = 1, b: int = 1) -> int:
    """|{n < p^N : b_n = 0 mod p}| by closed-form counting, no enumeration.

    Works over length-N digit strings with leading zeros.  T-zeros among
    the table entries are handled exactly (a prefix q kills b_n whenever
    it contains a zero digit of T, and strings avoiding those digits are
    counted by powers of p - #zeros); only p | b^2-4a^2 is refused,
    because the run factor T_{p-1}^k then stops alternating.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    tt = t_table(p, a, b)
    if combo.h >= p:
        raise UnsupportedWidthError(f"combo width h={combo.h} needs p > h (got p={p})")
    if tt.discriminant_mod == 0:
        raise DegenerateCaseError(
            f"p={p} divides b^2-4a^2; closed-form counting does not apply, use count_zeros_enum"
        )
    if combo.scale % p == 0:
        raise DegenerateCaseError(
            f"p={p} divides the combo scale {combo.scale}; zeros of the combination "
            f"say nothing about the sequence, use enumeration on the sequence itself"
        )
    raw = combo_table(combo, tt)
    if N == 0:
        return 1 if raw[0] == 0 else 0
    g = p - len(tt.zero_digits)  # digits with T nonzero
    h = combo.h
    plain_zeros = sum(1 for n in range(p - h) if raw[n] == 0)
    plain_nonzeros = (p - h) - plain_zeros
    total = plain_zeros * p ** (N - 1) + plain_nonzeros * (p ** (N - 1) - g ** (N - 1))
    sets = tail_condition_sets(combo, tt)
    for even, odd in sets.values():
        for k in range(N - 1):
            matches = len(even) if k % 2 == 0 else len(odd)
            free = N - 2 - k
            total += matches * p**free + (p - 1 - matches) * (p**free - g**free)
        # all-run boundary word: q empty, m = 0 supplied by zero padding
        boundary = even if (N - 1) % 2 == 0 else odd
        if 0 in boundary:
            total += 1
    return total


def count_zeros_enum(
    combo: ShiftCombo, p: int, N: int, a: int = 1, b: int = 1, budget: int = 10**8
) -> int:
    """|{n < p^N : b_n = 0 mod p}| by evaluating the combination at every n."""
    total = p**N
    if total > budget:
        raise BudgetExceededError(total, budget)
    tt = t_table(p, a, b)
    return sum(1 for n in range(total) if combo_eval(combo, tt, n) == 0)


def exact_zero_fraction(combo: ShiftCombo, p: int, N: int, a: int = 1, b: int = 1) -> Fraction:
    return Fraction(count_zeros_exact(combo, p, N, a, b), p**N)


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def multiplicative_generates(values, p: int) -> bool:
    """Do the given units generate all of F_p^x?

    Decided against each maximal subgroup: for every prime q | p-1 some
    value must fall outside the index-q subgroup (i.e. have
    v^((p-1)/q) != 1).
    """
    order = p - 1
    for q in _factorize(order):
        if all(pow(v, order // q, p) == 1 for v in values):
            return False
    return True


def subgroup_order(values, p: int) -> int:
    """Order of the subgroup of F_p^x generated by the given units."""
    order = p - 1
    factors = _factorize(order)
    result = 1
    for v in values:
        o = order
        for q, e in factors.items():
            for _ in range(e):
                if o % q == 0 and pow(v, o // q, p) == 1:
                    o //= q
                else:
                    break
        result = result * o // math.gcd(result, o)
    return result


def transition_graph_regular(ttable: TTable) -> bool:
    """Check the value-transition multigraph is p-regular in and out.

    States are F_p^x; state i has one outgoing edge per digit d, landing
    on i*T_d.  Out-degree p is by construction; in-degrees are counted
    directly.  Needs a zero-free table (otherwise edges leave the unit
    group).
    """
    p = ttable.p
    if ttable.has_zero:
        raise ValueError("transition graph needs a zero-free T table")
    indeg = [0] * p
    for i in range(1, p):
        for d in range(p):
            indeg[i * ttable.values[d] % p] += 1
    return all(indeg[j] == p for j in range(1, p))


def value_densities(p: int, a: int = 1, b: int = 1) -> DensityReport:
    """Motzkin density report with the nonzero-value density filled in.

    The density (1 - D0)/(p-1) for each nonzero residue is only claimed
    when the nonzero T values generate F_p^x; otherwise the status says
    so and the field stays empty.
    """
    tt = t_table(p, a, b)
    report = density_zero_motzkin(p, a, b)
    units = sorted({v for v in tt.values[: tt.p] if v})
    generates = multiplicative_generates(units, p)
    if not tt.has_zero and p <= 2000:
        assert transition_graph_regular(tt), "transition graph lost p-regularity (bug)"
    nonzero = Fraction(1 - report.d0, p - 1) if generates and p > 1 else None
    return dataclasses.replace(
        report,
        nonzero_density=nonzero,
        generation_status="generates" if generates else "fails_to_generate",
    )


def empirical_value_counts(
    p: int, N: int, a: int = 1, b: int = 1, budget: int = 10**8
) -> Counter[int]:
    """Histogram of M_n mod p over n < p^N.

    Uses the three-case digit formula when its hypotheses hold, else the
    Motzkin combination divided by 2a^2 (valid whenever p is odd and
    p does not divide a).
    """
    total = p**N
    if total > budget:
        raise BudgetExceededError(total, budget)
    tt = t_table(p, a, b)
    counts: Counter[int] = Counter()
    if p == 2:
        raise HypothesisViolation("p_equals_2", "no fast per-index route mod 2; use the oracle")
    if a % p == 0:
        bb = b % p
        for n in range(total):
            counts[pow(bb, n, p)] += 1
        return counts
    if tt.discriminant_mod != 0:
        mt = m_table(p, a, b, ttable=tt)
        for n in range(total):
            counts[m_eval(tt, mt, n)] += 1
        return counts
    combo = motzkin_combo(a, b)
    inv = mod_inverse(combo.scale, p)
    for n in range(total):
        counts[combo_eval(combo, tt, n) * inv % p] += 1
    return counts
