import pytest

from motzkinmod.oracle import (
    WEIGHT_MOTZKIN,
    WEIGHT_ONE,
    WEIGHT_ONE_MINUS_X,
    WEIGHT_ONE_PLUS_X,
    WEIGHT_X,
    ct,
    degree,
    m_values_recurrence,
    oracle_ct,
    oracle_prefix,
    oracle_seq_mod,
    poly_mul,
    step_poly,
    t_values_recurrence,
)

P111 = {-1: 1, 0: 1, 1: 1}
GRID = [(a, b) for a in range(-3, 4) for b in range(-3, 4)]


def test_poly_mul_examples():
    assert poly_mul(P111, {0: 1}) == P111
    assert poly_mul(P111, P111) == {-2: 1, -1: 2, 0: 3, 1: 2, 2: 1}
    assert poly_mul({0: 1, 1: -1}, {0: 1, 1: 1}) == {0: 1, 2: -1}


def test_poly_mul_drops_cancelled_terms():
    assert poly_mul({0: 1, 1: 1}, {0: 1, 1: -1}) == {0: 1, 2: -1}
    assert 1 not in poly_mul({0: 1, 1: 1}, {0: 1, 1: -1})


def test_ct_and_degree():
    assert ct(P111) == 1
    assert ct({1: 4}) == 0
    assert degree({-3: 2, 1: 1}) == 3
    assert degree({}) == 0


def test_central_trinomial_prefix():
    assert [oracle_ct(1, 1, n) for n in range(5)] == [1, 1, 3, 7, 19]


def test_motzkin_prefix():
    assert [oracle_ct(1, 1, n, WEIGHT_MOTZKIN) for n in range(3)] == [1, 1, 2]


def test_weighted_constant_terms():
    assert oracle_ct(1, 1, 0, WEIGHT_ONE_MINUS_X) == 1
    assert oracle_ct(2, 1, 2, WEIGHT_ONE) == 9  # 1 + 2*(2*2)


def test_oracle_seq_mod_examples():
    assert oracle_seq_mod(1, 1, 4, WEIGHT_ONE, 5) == 4  # 19 mod 5
    assert oracle_seq_mod(1, 1, 13, WEIGHT_MOTZKIN, 5) == 0  # 41835 = 5 * 8367
    assert oracle_seq_mod(1, 1, 9, WEIGHT_MOTZKIN, 5) == 0  # 835 = 5 * 167


def test_oracle_cap():
    with pytest.raises(ValueError):
        oracle_ct(1, 1, 2001)
    assert oracle_ct(1, 1, 60, cap=60) == oracle_prefix(1, 1, 60)[0][60]
    with pytest.raises(ValueError):
        oracle_ct(1, 1, 61, cap=60)


def test_prefix_matches_single_value_route():
    for a, b in ((1, 1), (2, -1), (0, 3)):
        t_pref, m_pref = oracle_prefix(a, b, 40, [WEIGHT_ONE, WEIGHT_MOTZKIN])
        for n in range(0, 41, 7):
            assert t_pref[n] == oracle_ct(a, b, n)
            assert m_pref[n] == oracle_ct(a, b, n, WEIGHT_MOTZKIN)


def test_motzkin_from_trinomial_identity():
    # 2a^2 M_n = (4a^2-b^2) T_n + 2b T_{n+1} - T_{n+2} over the integers
    for a, b in GRID:
        t, m = oracle_prefix(a, b, 42, [WEIGHT_ONE, WEIGHT_MOTZKIN])
        for n in range(41):
            assert 2 * a * a * m[n] == (4 * a * a - b * b) * t[n] + 2 * b * t[n + 1] - t[n + 2]


def test_trinomial_two_term_recurrence():
    for a, b in GRID:
        (t,) = oracle_prefix(a, b, 40)
        disc = b * b - 4 * a * a
        for n in range(2, 41):
            assert n * t[n] == b * (2 * n - 1) * t[n - 1] - disc * (n - 1) * t[n - 2]


def test_motzkin_two_term_recurrence():
    for a, b in GRID:
        (m,) = oracle_prefix(a, b, 40, [WEIGHT_MOTZKIN])
        disc = b * b - 4 * a * a
        for n in range(2, 41):
            assert (n + 2) * m[n] == b * (2 * n + 1) * m[n - 1] - disc * (n - 1) * m[n - 2]


def test_recurrence_prefixes_match_polynomial_route():
    for a, b in ((1, 1), (-2, 3), (3, 0)):
        t_pref, m_pref = oracle_prefix(a, b, 40, [WEIGHT_ONE, WEIGHT_MOTZKIN])
        assert t_values_recurrence(a, b, 40) == t_pref
        assert m_values_recurrence(a, b, 40) == m_pref


def test_x_reflection_symmetry():
    # ct(x * P^n) = ct(x^-1 * P^n): the coefficient lists are palindromic
    for a, b in ((1, 1), (2, -3)):
        left, right = oracle_prefix(a, b, 40, [{1: 1}, {-1: 1}])
        assert left == right


def test_half_integer_weight_relations():
    # with a=b=1: 2*ct(P^n x) = T_{n+1}-T_n, 2*ct(P^n(1-x)) = 3T_n-T_{n+1},
    # 2*ct(P^n(1+x)) = T_n+T_{n+1}
    t, sx, r, s = oracle_prefix(1, 1, 41, [WEIGHT_ONE, WEIGHT_X, WEIGHT_ONE_MINUS_X, WEIGHT_ONE_PLUS_X])
    for n in range(41):
        assert 2 * sx[n] == t[n + 1] - t[n]
        assert 2 * r[n] == 3 * t[n] - t[n + 1]
        assert 2 * s[n] == t[n] + t[n + 1]


def test_known_oeis_prefixes():
    t, m, sx, r, s = oracle_prefix(
        1, 1, 9, [WEIGHT_ONE, WEIGHT_MOTZKIN, WEIGHT_X, WEIGHT_ONE_MINUS_X, WEIGHT_ONE_PLUS_X]
    )
    assert t == [1, 1, 3, 7, 19, 51, 141, 393, 1107, 3139]
    assert m == [1, 1, 2, 4, 9, 21, 51, 127, 323, 835]
    assert sx == [0, 1, 2, 6, 16, 45, 126, 357, 1016, 2907]
    assert r == [1, 0, 1, 1, 3, 6, 15, 36, 91, 232]
    assert s == [1, 2, 5, 13, 35, 96, 267, 750, 2123, 6046]


def test_step_poly_drops_zero_coefficients():
    assert step_poly(0, 1) == {0: 1}
    assert step_poly(1, 0) == {-1: 1, 1: 1}
