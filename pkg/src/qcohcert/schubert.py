"""Schubert calculus for lines: the cohomology ring of G(2, N).

G(2, N) parametrizes lines in P^(N-1).  Classes are integer combinations
of two-row Schur classes s[a, b] with N - 2 >= a >= b >= 0; s[a, b] has
cohomological degree 2(a + b), s[c] := s[c, 0] is the locus of lines
meeting a fixed linear subspace of codimension c + 1, and s[N-2, N-2] is
the point class.

Products use the two-variable expansion

    s[a, b] * s[c, d] = sum_{i=0}^{min(a-b, c-d)} s[a + c - i, b + d + i],

which is the Pieri/Littlewood-Richardson rule specialized to two rows
(derived from s[a, b] = (x1 x2)^b * h_{a-b} in the two Chern roots of the
dual tautological bundle); indices with a > N - 2 die in the ring.

The enumerative payload: on a general complete intersection of dimension n
and multidegree (d_1, ..., d_r) in P^(n+r), the number of lines meeting two
general linear subspaces of codimension n - j and n + 1 - e + j is

    integral of prod_i c_top(Sym^{d_i} S*) . s[n-j-1] . s[n-e+j]

over G(2, n + r + 1), where e = 1 + sum (d_i - 1).  This count, divided by
the degree d = prod d_i, is the normalized line invariant that pins the
boundary coefficients of the quantum operator matrices.  It relies on the
standing assumption that the family of lines on a general member has the
expected dimension.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def _valid_index(N: int, a: int, b: int) -> bool:
    return 0 <= b <= a <= N - 2


class GrassmannClass:
    """Integer combination of two-row Schur classes on G(2, N)."""

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms=None):
        if N < 2:
            raise ValueError("G(2, N) needs N >= 2")
        clean = {}
        if terms:
            for (a, b), coeff in terms.items():
                if not _valid_index(N, a, b):
                    raise ValueError(f"index ({a}, {b}) invalid in G(2, {N})")
                if not isinstance(coeff, int):
                    raise TypeError("coefficients must be integers")
                if coeff:
                    clean[(a, b)] = coeff
        self.N = N
        self.terms = clean

    @classmethod
    def schur(cls, N: int, a: int, b: int = 0) -> "GrassmannClass":
        return cls(N, {(a, b): 1})

    @classmethod
    def one(cls, N: int) -> "GrassmannClass":
        return cls(N, {(0, 0): 1})

    @classmethod
    def zero(cls, N: int) -> "GrassmannClass":
        return cls(N)

    def _check(self, other: "GrassmannClass"):
        if self.N != other.N:
            raise ValueError(f"mixed ambient Grassmannians G(2,{self.N}) and G(2,{other.N})")

    def __add__(self, other):
        if not isinstance(other, GrassmannClass):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for idx, c in other.terms.items():
            s = terms.get(idx, 0) + c
            if s:
                terms[idx] = s
            else:
                terms.pop(idx, None)
        return GrassmannClass(self.N, terms)

    def __neg__(self):
        return GrassmannClass(self.N, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, GrassmannClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GrassmannClass(self.N, {i: c * other for i, c in self.terms.items()})
        if not isinstance(other, GrassmannClass):
            return NotImplemented
        self._check(other)
        top = self.N - 2
        terms = {}
        for (a, b), c1 in self.terms.items():
            for (c, d), c2 in other.terms.items():
                coeff = c1 * c2
                for i in range(min(a - b, c - d) + 1):
                    p, q = a + c - i, b + d + i
                    if p > top:
                        continue  # dies in the ring
                    s = terms.get((p, q), 0) + coeff
                    if s:
                        terms[(p, q)] = s
                    else:
                        terms.pop((p, q), None)
        return GrassmannClass(self.N, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = GrassmannClass.one(self.N)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, GrassmannClass):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    __hash__ = None

    def integrate(self) -> int:
        """Coefficient of the point class s[N-2, N-2]; 0 on lower degrees."""
        return self.terms.get((self.N - 2, self.N - 2), 0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items()):
            name = f"s[{a},{b}]"
            parts.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"GrassmannClass(N={self.N}, {self.terms!r})"


def integrate(x: GrassmannClass) -> int:
    return x.integrate()


def sym_power_top_chern(d: int, N: int) -> GrassmannClass:
    """Top Chern class of Sym^d S* on G(2, N), in the Schur basis.

    With x1, x2 the Chern roots of S*, the class is the product of the
    d + 1 linear factors k*x1 + (d-k)*x2.  Opposite factors pair into the
    symmetric quadratics

        (k*x1 + (d-k)*x2)((d-k)*x1 + k*x2)
            = k(d-k) s[2] + (k^2 - k(d-k) + (d-k)^2) s[1,1],

    with a middle factor (d/2) s[1] left over for even d.  Homogeneous of
    degree d + 1 with non-negative coefficients.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    result = GrassmannClass.one(N)
    s2 = _schur_or_zero(N, 2, 0)
    s11 = _schur_or_zero(N, 1, 1)
    s1 = _schur_or_zero(N, 1, 0)
    for k in range((d + 1) // 2):
        result = result * (k * (d - k) * s2 + (k * k - k * (d - k) + (d - k) ** 2) * s11)
    if d % 2 == 0:
        result = result * ((d // 2) * s1)
    return result


def _schur_or_zero(N: int, a: int, b: int) -> GrassmannClass:
    if _valid_index(N, a, b):
        return GrassmannClass.schur(N, a, b)
    return GrassmannClass.zero(N)


def line_invariant(n: int, degrees, j: int) -> tuple[int, Fraction]:
    """Raw line count d*l_j and the normalized invariant l_j.

    Counts lines on a general (n, degrees) complete intersection meeting two
    general linear subspaces of codimension n - j and n + 1 - e + j; the
    second value divides by the degree d.  Raises ValueError when either
    Schubert condition falls outside G(2, n + r + 1).
    """
    degrees = tuple(degrees)
    if n < 1 or any(d < 1 for d in degrees):
        raise ValueError("need n >= 1 and positive degrees")
    r = len(degrees)
    N = n + r + 1
    e = 1 + sum(d - 1 for d in degrees)
    alpha = n - j - 1          # codimension (n - j) incidence condition
    beta = n - e + j           # codimension (n + 1 - e + j) incidence condition
    if not (_valid_index(N, alpha, 0) and _valid_index(N, beta, 0)):
        raise ValueError(f"j={j} out of range for (n={n}, degrees={degrees})")
    cls = GrassmannClass.schur(N, alpha) * GrassmannClass.schur(N, beta)
    for d in degrees:
        cls = cls * sym_power_top_chern(d, N)
    count = cls.integrate()
    deg = 1
    for d in degrees:
        deg *= d
    return count, Fraction(count, deg)


@dataclass(frozen=True)
class LineInvariantTable:
    """All defined line invariants of one complete intersection.

    ``counts[j]`` is the integer d*l_j, ``values[j]`` the Fraction l_j.
    Whether l_j itself is integral is never assumed; consumers use the pair.
    """

    n: int
    degrees: tuple
    counts: dict = field(compare=True)
    values: dict = field(compare=True)

    @classmethod
    def compute(cls, n: int, degrees) -> "LineInvariantTable":
        degrees = tuple(degrees)
        counts, values = {}, {}
        r = len(degrees)
        e = 1 + sum(d - 1 for d in degrees)
        lo = max(0, e - n)
        hi = min(n - 1, e + r - 1)
        for j in range(lo, hi + 1):
            counts[j], values[j] = line_invariant(n, degrees, j)
        return cls(n=n, degrees=degrees, counts=counts, values=values)
