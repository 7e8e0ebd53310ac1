"""Brute-force ground truth over the integers.

Every sequence handled by this package is the constant term of
``P(x)^n * Q(x)`` for ``P = a/x + b + a*x`` and a fixed Laurent weight
``Q``.  This module evaluates those constant terms directly with
arbitrary-precision integer coefficients; it is the trust anchor against
which the mod-p machinery is validated, and it is deliberately
unoptimized (O(n^2) coefficient work per prefix, capped by default).

Two independent routes are provided and cross-checked in the tests:

* the polynomial route (:func:`oracle_ct`, :func:`oracle_prefix`), and
* the two-term recurrences (:func:`t_values_recurrence`,
  :func:`m_values_recurrence`), run over exact integers.
"""

from __future__ import annotations

# A Laurent polynomial is a finitely supported {exponent: coefficient}
# map over the integers; zero coefficients are never stored.
LaurentPoly = dict[int, int]

WEIGHT_ONE: LaurentPoly = {0: 1}
WEIGHT_MOTZKIN: LaurentPoly = {0: 1, 2: -1}  # 1 - x^2
WEIGHT_X: LaurentPoly = {1: 1}
WEIGHT_ONE_MINUS_X: LaurentPoly = {0: 1, 1: -1}
WEIGHT_ONE_PLUS_X: LaurentPoly = {0: 1, 1: 1}

DEFAULT_CAP = 2000


def step_poly(a: int, b: int) -> LaurentPoly:
    """P = a*x^-1 + b + a*x (zero coefficients dropped)."""
    poly = {}
    if a:
        poly[-1] = a
        poly[1] = a
    if b:
        poly[0] = b
    return poly


def poly_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Exact convolution product of two Laurent polynomials."""
    out: LaurentPoly = {}
    for ef, cf in f.items():
        for eg, cg in g.items():
            e = ef + eg
            c = out.get(e, 0) + cf * cg
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def ct(f: LaurentPoly) -> int:
    """Constant term (coefficient of x^0)."""
    return f.get(0, 0)


def degree(f: LaurentPoly) -> int:
    """Largest |exponent| with nonzero coefficient (0 for the zero poly)."""
    return max((abs(e) for e in f), default=0)


def oracle_ct(a: int, b: int, n: int, weight: LaurentPoly | None = None, cap: int = DEFAULT_CAP) -> int:
    """ct(P^n * weight) by repeated dict multiplication.

    Speed belongs elsewhere; this stays within ``cap`` so an accidental
    huge n cannot wedge a test run.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise ValueError(f"oracle capped at n <= {cap} (asked for {n}); raise cap= explicitly")
    if weight is None:
        weight = WEIGHT_ONE
    p = step_poly(a, b)
    acc: LaurentPoly = {0: 1}
    for _ in range(n):
        acc = poly_mul(acc, p)
    return ct(poly_mul(acc, weight))


def oracle_prefix(
    a: int,
    b: int,
    nmax: int,
    weights: list[LaurentPoly] | None = None,
    cap: int = DEFAULT_CAP,
) -> list[list[int]]:
    """ct(P^n * w) for n = 0..nmax and each weight w, in one pass.

    Uses a dense coefficient list (index i holds the coefficient of
    x^(i - n) at step n) instead of dicts, so the per-step cost is three
    shifted big-int additions over the support.  Returns one list per
    weight.
    """
    if nmax > cap:
        raise ValueError(f"oracle capped at n <= {cap} (asked for {nmax}); raise cap= explicitly")
    if weights is None:
        weights = [WEIGHT_ONE]
    coeffs = [1]
    results: list[list[int]] = [[] for _ in weights]

    def emit(n: int) -> None:
        for res, w in zip(results, weights):
            # coefficient of x^(-e) sits at index n - e
            total = 0
            for e, c in w.items():
                i = n - e
                if 0 <= i < len(coeffs):
                    total += c * coeffs[i]
            res.append(total)

    emit(0)
    for n in range(1, nmax + 1):
        mid = coeffs if b == 1 else [b * c for c in coeffs]
        outer = coeffs if a == 1 else [a * c for c in coeffs]
        nxt = outer + [0, 0]
        nxt[1:-1] = [x + y for x, y in zip(nxt[1:-1], mid)]
        nxt[2:] = [x + y for x, y in zip(nxt[2:], outer)]
        coeffs = nxt
        emit(n)
    return results


def oracle_seq_mod(a: int, b: int, n: int, weight: LaurentPoly, p: int, cap: int = DEFAULT_CAP) -> int:
    """oracle_ct reduced mod p."""
    return oracle_ct(a, b, n, weight, cap=cap) % p


def t_values_recurrence(a: int, b: int, nmax: int) -> list[int]:
    """Exact T_0..T_nmax via n*T_n = b(2n-1)T_{n-1} - (b^2-4a^2)(n-1)T_{n-2}.

    The division by n is exact because the T_n are integers; this is
    asserted rather than assumed.
    """
    disc = b * b - 4 * a * a
    values = [1]
    if nmax >= 1:
        values.append(b)
    for n in range(2, nmax + 1):
        num = b * (2 * n - 1) * values[n - 1] - disc * (n - 1) * values[n - 2]
        q, r = divmod(num, n)
        assert r == 0, f"trinomial recurrence not divisible at n={n}"
        values.append(q)
    return values


def m_values_recurrence(a: int, b: int, nmax: int) -> list[int]:
    """Exact M_0..M_nmax via (n+2)M_n = b(2n+1)M_{n-1} - (b^2-4a^2)(n-1)M_{n-2}."""
    disc = b * b - 4 * a * a
    values = [1]
    if nmax >= 1:
        values.append(b)
    for n in range(2, nmax + 1):
        num = b * (2 * n + 1) * values[n - 1] - disc * (n - 1) * values[n - 2]
        q, r = divmod(num, n + 2)
        assert r == 0, f"Motzkin recurrence not divisible at n={n}"
        values.append(q)
    return values
