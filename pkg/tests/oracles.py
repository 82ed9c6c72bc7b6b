"""Independent oracles used by the test suite.

Everything here is deliberately naive and shares no code with the package:
two-variable symmetric polynomials are raw monomial dictionaries, Schur
coefficients are extracted by triangular elimination, determinants come
from the full permutation sum, and the insertion constraint is brute-force
enumerated.  Slow is fine; independent is the point.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


# --- two-variable monomial polynomials -------------------------------------

def mono_mul(p: dict, q: dict) -> dict:
    out = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def mono_add(p: dict, q: dict) -> dict:
    out = dict(p)
    for k, v in q.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def schur_monomials(a: int, b: int) -> dict:
    """s[a, b](x1, x2) = (x1 x2)^b * (x1^(a-b) + x1^(a-b-1) x2 + ... + x2^(a-b))."""
    return {(b + p, a - p): 1 for p in range(a - b + 1)}


def to_schur_coeffs(p: dict) -> dict:
    """Expand a symmetric two-variable polynomial in the Schur basis.

    Peels leading monomials: the coefficient of x1^a x2^b with a >= b is the
    Schur coefficient of s[a, b] once larger partitions are removed.
    """
    p = dict(p)
    out = {}
    while p:
        a, b = max((k for k in p if k[0] >= k[1]), key=lambda k: (k[0], k[1]))
        c = p[(a, b)]
        out[(a, b)] = c
        p = mono_add(p, {k: -c * v for k, v in schur_monomials(a, b).items()})
    return out


def product_of_chern_factors(d: int) -> dict:
    """prod_{k=0}^{d} (k x1 + (d - k) x2), expanded monomially."""
    poly = {(0, 0): 1}
    for k in range(d + 1):
        factor = {}
        if k:
            factor[(1, 0)] = k
        if d - k:
            factor[(0, 1)] = d - k
        poly = mono_mul(poly, factor)
    return poly


def oracle_integrate(p: dict, N: int) -> int:
    """Integral over G(2, N): the s[N-2, N-2] coefficient of the expansion."""
    return to_schur_coeffs(p).get((N - 2, N - 2), 0)


def oracle_line_count(n: int, degrees, j: int) -> int:
    degrees = tuple(degrees)
    N = n + len(degrees) + 1
    e = 1 + sum(d - 1 for d in degrees)
    poly = schur_monomials(n - j - 1, 0)
    poly = mono_mul(poly, schur_monomials(n - e + j, 0))
    for d in degrees:
        poly = mono_mul(poly, product_of_chern_factors(d))
    return oracle_integrate(poly, N)


def oracle_schur_product(N: int, ab, cd) -> dict:
    """Schur-basis product in G(2, N) straight from monomials (truncated)."""
    prod = mono_mul(schur_monomials(*ab), schur_monomials(*cd))
    return {k: v for k, v in to_schur_coeffs(prod).items() if k[0] <= N - 2}


# --- determinants by permutation sum ----------------------------------------

def permutation_det(rows):
    """Full Leibniz expansion; fine for dimension <= 7."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = _parity(perm)
        term = 1
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total + (term if sign > 0 else -term)
    return total


def _parity(perm) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                     if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


# --- insertion constraint, brute force --------------------------------------

def brute_force_constraint(n: int, e: int, k_w: int, k_max: int = 4) -> frozenset:
    """All (k, j + m) with 1 <= j, m <= n - 1 satisfying the dimension balance."""
    found = set()
    for k in range(1, k_max + 1):
        for j in range(1, n):
            for m in range(1, n):
                if (n - j) + (n - m) + (n - 2 * e + 3) * k_w == (n + 2 - e) * k + (n - 3):
                    found.add((k, j + m))
    return frozenset(found)
