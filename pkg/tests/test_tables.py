import random

import pytest

from motzkinmod.modmath import NonInvertibleError, primes_up_to
from motzkinmod.oracle import WEIGHT_MOTZKIN, WEIGHT_ONE, oracle_prefix
from motzkinmod.tables import (
    NAMED_COMBOS,
    ShiftCombo,
    UnsupportedWidthError,
    combo_table,
    m_table,
    motzkin_combo,
    t_table,
)


def test_t_table_examples():
    assert t_table(5).values == (1, 1, 3, 2, 4, 1, 1)
    assert t_table(3).values == (1, 1, 0, 1, 1)
    assert t_table(5, 0, 1).values == (1,) * 7  # P collapses to 1


def test_m_table_examples():
    assert m_table(5).values == (1, 1, 2, 4, 4)
    assert m_table(5, 0, 2).values == (1, 2, 4, 3, 1)  # 2^n mod 5
    assert m_table(2).values == (1, 1)
    assert m_table(2).branch == "oracle_p2"
    assert m_table(5, 0, 2).branch == "power_of_b"
    assert m_table(5).branch == "from_t"


def test_combo_table_examples():
    tt = t_table(5)
    assert combo_table(NAMED_COMBOS["a005043"], tt, scaled=True) == [1, 0, 1, 1, 3]
    # A005717 prefix is 0,1,2,6,16 -> mod 5
    assert combo_table(NAMED_COMBOS["a005717"], tt, scaled=True) == [0, 1, 2, 1, 1]
    assert combo_table(motzkin_combo(1, 1), tt, scaled=True) == list(m_table(5).values)


def test_combo_table_scale_must_be_invertible():
    with pytest.raises(NonInvertibleError):
        combo_table(NAMED_COMBOS["a005717"], t_table(2), scaled=True)


def test_combo_width_bound():
    with pytest.raises(UnsupportedWidthError):
        combo_table(motzkin_combo(1, 1), t_table(2))


def test_shift_combo_validation():
    with pytest.raises(ValueError):
        ShiftCombo(())
    with pytest.raises(ValueError):
        ShiftCombo((1, 0))
    assert motzkin_combo(2, 1).alphas == (15, 2, -1)
    assert motzkin_combo(2, 1).scale == 8


def test_forced_tail_entries():
    rng = random.Random(1105)
    for p in primes_up_to(97):
        for _ in range(4):
            a, b = rng.randrange(p), rng.randrange(p)
            tt = t_table(p, a, b)
            assert tt.values[p] == tt.values[1] * tt.values[0] % p
            assert tt.values[p + 1] == tt.values[1] ** 2 % p


def test_tables_match_oracle_over_sampled_parameters():
    rng = random.Random(60103)
    for p in primes_up_to(97):
        pairs = {(1, 1), (0, 1 % p), (1, 0)}
        while len(pairs) < min(8, p * p):
            pairs.add((rng.randrange(p), rng.randrange(p)))
        for a, b in pairs:
            t_or, m_or = oracle_prefix(a, b, p + 1, [WEIGHT_ONE, WEIGHT_MOTZKIN])
            tt = t_table(p, a, b)
            mt = m_table(p, a, b, ttable=tt)
            assert all(tt.values[n] == t_or[n] % p for n in range(p + 2))
            assert all(mt.values[n] == m_or[n] % p for n in range(p))


def test_zero_digit_bookkeeping():
    assert t_table(7).zero_digits == (3,)
    assert t_table(5).zero_digits == ()
    assert t_table(3).zero_digits == (2,)
    assert t_table(7).has_zero and not t_table(5).has_zero


def test_pm2_divisibility_iff_one_mod_three():
    for p in primes_up_to(500):
        if p < 5:
            continue
        mt = m_table(p)
        assert (mt.values[p - 2] == 0) == (p % 3 == 1)


def test_discriminant_bookkeeping():
    assert t_table(5).discriminant_mod == 2  # -3 mod 5
    assert t_table(3).discriminant_mod == 0
