"""Dense univariate polynomials over duck-typed commutative scalars.

Coefficients live in any commutative ring with exact arithmetic (Fraction,
MPoly, Jet).  The division-based operations -- gcd, resultant, discriminant
-- require Fraction coefficients and are exact.  ``numeric_roots`` is the
only approximate routine in the package; any distinctness claim derived
from it must be corroborated by an exact nonzero discriminant before use
in a certificate.

Sign convention.  ``resultant(f, g)`` equals the determinant of the
Sylvester matrix whose first deg(g) rows carry the coefficients of f, so
``resultant(f, g) == (-1) ** (deg f * deg g) * resultant(g, f)`` and
``resultant(x - 1, x + 1) == 2``.  ``discriminant(f)`` is
``(-1) ** (m (m - 1) / 2) * resultant(f, f') / lc(f)`` with m = deg f,
giving ``b**2 - 4*c`` for a monic quadratic.  Certificates only ever use
(non)vanishing, never the sign.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import mpmath


class RootFindingError(RuntimeError):
    """Numeric root iteration failed to converge; never silently ignored."""


class UniPoly:
    """Univariate polynomial, dense, lowest degree first; () is the zero poly."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = UniPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x):
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def map_coeffs(self, fn) -> "UniPoly":
        return UniPoly(tuple(fn(c) for c in self.coeffs))

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return (len(self.coeffs) == len(other.coeffs)
                    and all(a == b for a, b in zip(self.coeffs, other.coeffs)))
        return self == UniPoly.constant(other)

    __hash__ = None

    def __str__(self, var="x"):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            power = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not power:
                parts.append(str(c))
            elif c == 1:
                parts.append(power)
            else:
                cs = str(c)
                interior = cs[1:] if cs.startswith("-") else cs
                if any(ch in interior for ch in " +-*"):
                    cs = f"({cs})"
                parts.append(f"{cs}*{power}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"


def poly_divmod(f: UniPoly, g: UniPoly):
    """Quotient and remainder; requires an invertible leading coefficient."""
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = Fraction(1) / g.leading
    quot = [0] * max(0, f.degree - g.degree + 1)
    rem = list(f.coeffs)
    while len(rem) >= len(g.coeffs):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(g.coeffs):
            break
        k = len(rem) - len(g.coeffs)
        q = rem[-1] * inv_lead
        quot[k] = q
        for i, c in enumerate(g.coeffs):
            rem[k + i] = rem[k + i] - q * c
        rem.pop()
    return UniPoly(quot), UniPoly(rem)


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor over the rationals."""
    a, b = f, g
    while not b.is_zero:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a.is_zero:
        return a
    return a * (Fraction(1) / a.leading)


def resultant(f: UniPoly, g: UniPoly):
    """Exact resultant over Fraction coefficients (see module docstring).

    Computed by the classical remainder-sequence recursion: with
    r = f mod g, res(f, g) = (-1)^(deg f * deg g) * lc(g)^(deg f - deg r)
    * res(g, r).  Fraction normalization keeps intermediate growth tame at
    the degrees this package meets.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        return Fraction(1)
    if m < n:
        sign = -1 if (m * n) % 2 else 1
        return sign * resultant(g, f)
    if n == 0:
        return Fraction(g.leading) ** m
    _, r = poly_divmod(f, g)
    if r.is_zero:
        return Fraction(0)
    sign = -1 if (m * n) % 2 else 1
    return sign * Fraction(g.leading) ** (m - r.degree) * resultant(g, r)


def discriminant(f: UniPoly):
    """(-1)^(m(m-1)/2) * resultant(f, f') / lc(f); nonzero iff f squarefree."""
    if f.is_zero:
        raise ValueError("discriminant of the zero polynomial is undefined")
    m = f.degree
    if m < 1:
        raise ValueError("discriminant needs degree >= 1")
    if m == 1:
        return Fraction(1)
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / Fraction(f.leading)


@dataclass(frozen=True)
class RootReport:
    """Numeric root approximations with gap data.

    ``min_gap`` is the smallest pairwise distance between approximations;
    ``gap_lower_bound`` subtracts twice the iteration error bound, so it is
    a defensible lower bound on the true minimal root distance whenever the
    iteration converged.  Distinctness used in certificates is always
    re-grounded in the exact discriminant, never in these numbers alone.
    """

    roots: tuple
    min_gap: object
    error_bound: object
    gap_lower_bound: object


def numeric_roots(f: UniPoly, digits: int = 50, maxsteps: int | None = None) -> RootReport:
    """Approximate all complex roots by simultaneous (Durand-Kerner) iteration.

    Requires Fraction (or int) coefficients and degree >= 1.  Raises
    RootFindingError if the iteration does not converge; never returns a
    silently wrong answer.
    """
    if f.is_zero or f.degree < 1:
        raise ValueError("numeric_roots needs a nonzero polynomial of degree >= 1")
    if maxsteps is None:
        maxsteps = 100 + 12 * digits
    with mpmath.workdps(digits + 15):
        coeffs = []
        for c in reversed(f.coeffs):
            c = Fraction(c)
            coeffs.append(mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator))
        try:
            roots, err = mpmath.polyroots(coeffs, maxsteps=maxsteps, error=True, extraprec=30)
        except mpmath.libmp.libhyper.NoConvergence as exc:
            raise RootFindingError(
                f"root iteration did not converge in {maxsteps} steps at {digits} digits"
            ) from exc
        roots = tuple(roots)
        if len(roots) >= 2:
            min_gap = min(abs(a - b) for a, b in itertools.combinations(roots, 2))
        else:
            min_gap = mpmath.inf
        lower = min_gap - 2 * err
        if lower < 0:
            lower = mpmath.mpf(0)
    return RootReport(roots=roots, min_gap=min_gap, error_bound=err, gap_lower_bound=lower)
