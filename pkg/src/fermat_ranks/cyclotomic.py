"""Exact evaluation of integer combinations of roots of unity.

A root of unity exp(2*pi*i*t) is represented by its exponent t, a Fraction
taken mod 1.  Sums are reduced modulo the cyclotomic polynomial, so a sum
that happens to be rational is recognised exactly.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional, Tuple


def _poly_divmod(num: List[int], den: List[int]) -> Tuple[List[int], List[int]]:
    # coefficient lists, lowest degree first; den is monic
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    q = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            q[k - dd] = c
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    return q, num[:dd] or [0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


def rational_value(terms: Iterable[Tuple[int, Fraction]]) -> Optional[Fraction]:
    """Value of sum(c * exp(2*pi*i*t)) if it is rational, else None."""
    terms = [(c, Fraction(t) % 1) for c, t in terms]
    if not terms:
        return Fraction(0)
    n = math.lcm(*(t.denominator for _, t in terms))
    coeffs = [0] * n
    for c, t in terms:
        coeffs[int(t * n)] += c
    _, rem = _poly_divmod(coeffs, list(cyclotomic_polynomial(n)))
    if any(rem[1:]):
        return None
    return Fraction(rem[0])
