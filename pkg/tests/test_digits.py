import random

import pytest
from hypothesis import given, settings, strategies as st

from motzkinmod.digits import (
    CanonicalForm,
    HypothesisViolation,
    combo_eval,
    m_eval,
    parse_tail,
    t_eval,
    word_eval,
)
from motzkinmod.modmath import from_digits
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


def test_parse_tail_examples():
    assert parse_tail(13, 5, 2) == CanonicalForm(n0=3, tail=True, q=(), m=2, k=0)
    # all-run word: zero padding supplies m = 0
    assert parse_tail(124, 5, 2) == CanonicalForm(n0=4, tail=True, q=(), m=0, k=2)
    assert parse_tail(7, 5, 2) == CanonicalForm(n0=2, tail=False, q=(1,))


def test_parse_tail_reassembles():
    rng = random.Random(7)
    for _ in range(300):
        p = rng.choice([3, 5, 7, 11])
        h = rng.randrange(1, min(p, 4))
        n = rng.randrange(0, p**6)
        cf = parse_tail(n, p, h)
        if cf.tail:
            digits = list(cf.q) + [cf.m] + [p - 1] * cf.k + [cf.n0]
        else:
            digits = list(cf.q) + [cf.n0]
        assert from_digits(digits, p) == n
        if cf.tail:
            assert cf.m != p - 1 or cf.k == 0  # k is the maximal run
            if cf.n0 >= p - h and cf.k == 0 and cf.m == p - 1:
                pytest.fail("run not maximal")


def test_parse_tail_width_bound():
    with pytest.raises(UnsupportedWidthError):
        parse_tail(10, 5, 5)
    with pytest.raises(UnsupportedWidthError):
        parse_tail(10, 5, 0)


def test_t_eval_examples():
    tt = t_table(5)
    assert t_eval(tt, 7) == 3  # T_7 = 393
    assert t_eval(tt, 26) == 1  # digits 101
    assert t_eval(tt, 0) == 1
    assert t_eval(t_table(11), 0) == 1


def test_m_eval_examples():
    tt, mt = t_table(5), m_table(5)
    assert m_eval(tt, mt, 13) == 0
    assert m_eval(tt, mt, 9) == 0
    assert m_eval(tt, mt, 7) == 2


def test_combo_eval_examples():
    tt = t_table(5)
    assert combo_eval(NAMED_COMBOS["a005043"], tt, 1) == 0
    assert combo_eval(motzkin_combo(1, 1), tt, 13) == 0  # 2*M_13
    for combo in (NAMED_COMBOS["a005717"], motzkin_combo(1, 1), ShiftCombo((1, 2, 3))):
        tab = combo_table(combo, tt)
        assert [combo_eval(combo, tt, n) for n in range(5)] == tab


def test_m_eval_hypothesis_errors():
    with pytest.raises(HypothesisViolation) as err:
        m_eval(t_table(2), m_table(2), 1)
    assert err.value.hypothesis == "p_equals_2"
    with pytest.raises(HypothesisViolation) as err:
        m_eval(t_table(5, 0, 1), m_table(5, 0, 1), 1)
    assert err.value.hypothesis == "p_divides_a"
    with pytest.raises(HypothesisViolation) as err:
        m_eval(t_table(3), m_table(3), 1)
    assert err.value.hypothesis == "p_divides_discriminant"


def test_digit_product_law_exhaustive():
    # t_eval against the integer oracle for every n < p^3
    for p in (3, 5, 7):
        for a in range(3):
            for b in range(3):
                (t_or,) = oracle_prefix(a, b, p**3 - 1, [WEIGHT_ONE])
                tt = t_table(p, a, b)
                assert all(t_eval(tt, n) == t_or[n] % p for n in range(p**3))


def test_three_case_law_exhaustive():
    for p in (5, 7, 11):
        (m_or,) = oracle_prefix(1, 1, p**3 - 1, [WEIGHT_MOTZKIN])
        tt, mt = t_table(p), m_table(p)
        assert all(m_eval(tt, mt, n) == m_or[n] % p for n in range(p**3))


def test_three_case_law_parameter_grid():
    p = 5
    for a in range(1, p):
        for b in range(p):
            if (b * b - 4 * a * a) % p == 0:
                continue
            (m_or,) = oracle_prefix(a, b, p**2 - 1, [WEIGHT_MOTZKIN])
            tt = t_table(p, a, b)
            mt = m_table(p, a, b, ttable=tt)
            assert all(m_eval(tt, mt, n) == m_or[n] % p for n in range(p**2))


def test_combo_eval_matches_direct_summation():
    rng = random.Random(41)
    configs = [
        (5, NAMED_COMBOS["a005717"]),
        (7, NAMED_COMBOS["a005043"]),
        (11, motzkin_combo(1, 1)),
        (13, ShiftCombo((2, 0, 5, -1))),
    ]
    for p, combo in configs:
        tt = t_table(p)
        for _ in range(10**4 // len(configs)):
            n = rng.randrange(0, 10**9)
            direct = sum(alpha * t_eval(tt, n + i) for i, alpha in enumerate(combo.alphas)) % p
            assert combo_eval(combo, tt, n) == direct


def test_recurrence_free_spot_check():
    rng = random.Random(99)
    for p in (3, 5, 7, 11, 13):
        tt = t_table(p)
        for _ in range(100):
            n = rng.randrange(0, 10**9)
            d = rng.randrange(p)
            assert t_eval(tt, n * p + d) == t_eval(tt, n) * tt.values[d] % p


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_word_multiplicativity(data):
    p = data.draw(st.sampled_from([3, 5, 7, 11]))
    u = data.draw(st.lists(st.integers(0, p - 1), max_size=8))
    v = data.draw(st.lists(st.integers(0, p - 1), max_size=8))
    tt = t_table(p)
    assert word_eval(tt, u + v) == word_eval(tt, u) * word_eval(tt, v) % p
    # and the word value is the value at the concatenated index
    assert word_eval(tt, u + v) == t_eval(tt, from_digits(u + v, p))
