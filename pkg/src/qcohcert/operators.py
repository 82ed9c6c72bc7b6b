"""Deformed quantum-multiplication matrices on the hyperplane subring.

Conventions.  The invariant subring of an n-dimensional complete
intersection has basis H^0, ..., H^n (powers of the hyperplane class).
Matrices act row-by-input: entry (j, m) is the H^m-coefficient of the
product applied to H^j.  The single deformation coordinate is the
coefficient of H^(n - 2e + 4) in the deformation direction; all deformed
entries are order-two jets in that coordinate (or in its rescaling
t = delta * coordinate for the rescaled operator), so every computation is
exact modulo squares.

Band structure (derived from degree bookkeeping with first Chern class
(n + 2 - e) * H, and pinned by the determinant identities in the tests):

  * classical cup product:  (j, j + 1) = 1;
  * degree-one quantum:     (j, j + 1 - (n + 2 - e)) = b_{j - n + e};
  * one deformation insertion, degree one:
                            (j, j + 2 - e) = a_{j - e + 3} * coordinate;
  * one insertion, degree two ("corner"):
                            (n, 0) = 2 * c1 * coordinate.

The insertion-index bookkeeping only defines coefficients for basis indices
1..n-1; when e = 3 this forces a_1 = a_{n-e+3} = a_n = 0.  Interior a_i and
b_i are not pinned by the line counts; they stay opaque symbols (or caller-
supplied values) and provably cancel from every certified quantity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .matrices import Matrix, char_poly, det
from .polys import UniPoly
from .rings import Jet, MPoly, as_jet


@dataclass(frozen=True)
class CompleteIntersection:
    """Smooth complete intersection of dimension n and multidegree degrees.

    Degrees are canonicalized to a descending tuple and must all be >= 2
    (degree-one factors just cut down the ambient space; drop them with
    ``normalize_degrees`` first).  An empty tuple is projective space.
    """

    n: int
    degrees: tuple

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("dimension n must be a positive integer")
        degrees = tuple(sorted(self.degrees, reverse=True))
        if any(not isinstance(d, int) or d < 2 for d in degrees):
            raise ValueError("degrees must be integers >= 2 (normalize linear factors away)")
        object.__setattr__(self, "degrees", degrees)

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def degree(self) -> int:
        out = 1
        for d in self.degrees:
            out *= d
        return out

    @property
    def e(self) -> int:
        return 1 + sum(d - 1 for d in self.degrees)

    @property
    def fano_index(self) -> int:
        return self.n + 2 - self.e

    @property
    def is_fano(self) -> bool:
        return self.e <= self.n + 1

    @property
    def satisfies_degree_bound(self) -> bool:
        """The regime in which the deformation computation is valid."""
        return self.n > 2 * self.e - 3

    @property
    def is_exception(self) -> bool:
        return self.n == 7 and self.e == 3

    @property
    def delta(self) -> Fraction:
        """Rescaling ratio (n - 2e + 3) / (n - e + 2); in (0, 1) in-regime."""
        if self.fano_index == 0:
            raise ValueError("delta undefined: n - e + 2 = 0")
        return Fraction(self.n - 2 * self.e + 3, self.n - self.e + 2)

    @property
    def degree_power_product(self) -> int:
        """prod d_i^(d_i): the origin charpoly constant of the quantum band."""
        out = 1
        for d in self.degrees:
            out *= d ** d
        return out

    def __str__(self):
        return f"X({self.n}; {','.join(map(str, self.degrees)) or 'P^n'})"


def normalize_degrees(n: int, degrees) -> tuple[CompleteIntersection, int]:
    """Drop degree-one factors (each cuts the ambient space down by one).

    Returns the normalized variety and how many factors were dropped.
    """
    degrees = tuple(degrees)
    if any(not isinstance(d, int) or d < 1 for d in degrees):
        raise ValueError("degrees must be integers >= 1")
    kept = tuple(d for d in degrees if d >= 2)
    return CompleteIntersection(n, kept), len(degrees) - len(kept)


def _require_deformation_regime(ci: CompleteIntersection):
    if ci.e < 3:
        raise ValueError(f"{ci}: deformation matrices need e >= 3 (got e={ci.e})")
    if not ci.satisfies_degree_bound:
        raise ValueError(f"{ci}: hypothesis n > 2e - 3 fails (n={ci.n}, e={ci.e})")


@dataclass(frozen=True)
class CoeffTable:
    """Operator coefficients a_1..a_{n-e+3}, b_1..b_e, c1 (1-based).

    Entries are exact scalars or opaque symbols.  The forced zeros
    a_1 = a_{n-e+3} = 0 at e = 3 are applied by every constructor.
    """

    a: tuple
    b: tuple
    c1: object

    def a_val(self, i: int):
        return self.a[i - 1]

    def b_val(self, i: int):
        return self.b[i - 1]

    @classmethod
    def symbolic(cls, ci: CompleteIntersection) -> "CoeffTable":
        """Fully opaque coefficients (with the e = 3 forced zeros)."""
        e = ci.e
        b = tuple(MPoly.symbol(f"b{i}") for i in range(1, e + 1))
        c1 = MPoly.symbol("c1")
        if e < 3:
            return cls(a=(), b=b, c1=c1)
        a = [MPoly.symbol(f"a{i}") for i in range(1, ci.n - e + 4)]
        if e == 3:
            a[0] = Fraction(0)
            a[-1] = Fraction(0)
        return cls(a=tuple(a), b=b, c1=c1)

    @classmethod
    def beauville(cls, ci: CompleteIntersection, l0: Fraction,
                  unpinned: str = "symbol", rng=None) -> "CoeffTable":
        """Line-count specialization of the boundary coefficients.

        Pins b_1 = b_e = l0 and c1 = l0^2 / 2; for e > 3 additionally
        a_1 = a_{n-e+3} = l0, while e = 3 forces those to zero.  Interior
        coefficients are GW invariants outside the line counts; they become
        opaque symbols (``unpinned="symbol"``) or exact rationals drawn from
        ``rng`` (``unpinned="random"``).  They cancel from every certified
        quantity either way.
        """
        _require_deformation_regime(ci)
        l0 = Fraction(l0)
        e = ci.e
        top = ci.n - e + 3

        def fill(kind: str, i: int):
            if unpinned == "symbol":
                return MPoly.symbol(f"{kind}{i}")
            if unpinned == "random":
                return Fraction(rng.randint(-100, 100), rng.randint(1, 100))
            raise ValueError(f"unknown unpinned mode {unpinned!r}")

        a = [fill("a", i) for i in range(1, top + 1)]
        b = [fill("b", i) for i in range(1, e + 1)]
        b[0] = l0
        b[e - 1] = l0
        if e == 3:
            a[0] = Fraction(0)
            a[top - 1] = Fraction(0)
        else:
            a[0] = l0
            a[top - 1] = l0
        return cls(a=tuple(a), b=tuple(b), c1=l0 * l0 / 2)


def b_sum_consistent(ci: CompleteIntersection, b_values) -> bool:
    """Check sum(b_i) == prod d_i^(d_i), the origin charpoly identity.

    Useful when a caller supplies a full coefficient table; nothing in the
    package asserts individual interior values.
    """
    total = sum(Fraction(v) for v in b_values)
    return total == ci.degree_power_product


def insertion_constraint_solutions(n: int, e: int, k_w: int) -> frozenset:
    """Solutions (k, j + m) of the insertion dimension constraint.

    For one input and one output insertion at basis indices j, m in
    [1, n-1], plus k_w insertions of the deformation direction, degree-k
    contributions must satisfy

        (n - j) + (n - m) + (n - 2e + 3) * k_w = (n + 2 - e) * k + (n - 3).

    Only k_w in {0, 1} occurs modulo the square of the deformation
    coordinate; larger k_w is rejected.
    """
    if e < 3 or n <= 2 * e - 3:
        raise ValueError(f"constraint analysis needs e >= 3 and n > 2e - 3 (n={n}, e={e})")
    if k_w not in (0, 1):
        raise ValueError(f"k_w={k_w} unsupported: computations are exact mod coordinate^2")
    solutions = set()
    k = 1
    while True:
        s = n + 3 + (n - 2 * e + 3) * k_w - (n + 2 - e) * k
        if s < 2:
            break
        if s <= 2 * n - 2:
            j = max(1, s - (n - 1))
            m = s - j
            assert 1 <= m <= n - 1
            assert (n - j) + (n - m) + (n - 2 * e + 3) * k_w == (n + 2 - e) * k + (n - 3)
            solutions.add((k, s))
        k += 1
    return frozenset(solutions)


def _jet(c=0, l=0) -> Jet:
    return Jet(1, c, (l,))


def _zeros_matrix(dim: int, jets: bool):
    z = _jet() if jets else Fraction(0)
    return [[z for _ in range(dim)] for _ in range(dim)]


def origin_product_matrix(ci: CompleteIntersection, coeffs: CoeffTable) -> Matrix:
    """Undeformed hyperplane multiplication: classical band plus b band.

    Defined for every Fano case (e <= n + 1); scalar entries, no jets.
    """
    if not ci.is_fano:
        raise ValueError(f"{ci} is not Fano")
    n, e = ci.n, ci.e
    if len(coeffs.b) != e:
        raise ValueError(f"need {e} quantum coefficients, got {len(coeffs.b)}")
    rows = _zeros_matrix(n + 1, jets=False)
    for j in range(n):
        rows[j][j + 1] = rows[j][j + 1] + 1
    for j in range(n + 1 - e, n + 1):
        rows[j][j - (n + 1 - e)] = rows[j][j - (n + 1 - e)] + coeffs.b_val(j - n + e)
    return Matrix(rows)


def hyperplane_product_matrix(ci: CompleteIntersection, coeffs: CoeffTable) -> Matrix:
    """Hyperplane multiplication deformed to first order, mod coordinate^2.

    Jets are in the raw deformation coordinate (not yet rescaled).
    """
    _require_deformation_regime(ci)
    n, e = ci.n, ci.e
    rows = _zeros_matrix(n + 1, jets=True)
    for j in range(n):
        rows[j][j + 1] = rows[j][j + 1] + _jet(c=1)
    for j in range(n + 1 - e, n + 1):
        m = j - (n + 1 - e)
        rows[j][m] = rows[j][m] + _jet(c=coeffs.b_val(j - n + e))
    for j in range(e - 2, n + 1):
        m = j + 2 - e
        rows[j][m] = rows[j][m] + _jet(l=coeffs.a_val(j - e + 3))
    rows[n][0] = rows[n][0] + _jet(l=2 * coeffs.c1)
    return Matrix(rows)


def deformation_direction_matrix(ci: CompleteIntersection, coeffs: CoeffTable) -> Matrix:
    """Multiplication by the deformation direction, needed only mod coordinate.

    Scalar entries: the classical band shifted by n - 2e + 4, the a band
    without the coordinate factor, and a bare c1 corner.
    """
    _require_deformation_regime(ci)
    n, e = ci.n, ci.e
    shift = n - 2 * e + 4
    rows = _zeros_matrix(n + 1, jets=False)
    for j in range(n + 1):
        if j + shift <= n:
            rows[j][j + shift] = rows[j][j + shift] + 1
        m = j + 2 - e
        if m >= 0 and 1 <= j - e + 3 <= n - e + 3:
            rows[j][m] = rows[j][m] + coeffs.a_val(j - e + 3)
    rows[n][0] = rows[n][0] + coeffs.c1
    return Matrix(rows)


def rescaled_operator_matrix(ci: CompleteIntersection, coeffs: CoeffTable) -> Matrix:
    """Matrix A(t) of the rescaled deformed operator, jets in t.

    t = delta * coordinate; the operator itself is -(n - e + 2) times the
    rescaled combination, so eigenvalue distinctness transfers verbatim.
    Bands: classical 1s, the b band unchanged, -t on the shifted classical
    band, a_i^* = (1/delta - 1) a_i on the a band, and the corner
    c1^* = (2/delta - 1) c1.
    """
    _require_deformation_regime(ci)
    n, e = ci.n, ci.e
    dinv = 1 / ci.delta
    rows = _zeros_matrix(n + 1, jets=True)
    for j in range(n):
        rows[j][j + 1] = rows[j][j + 1] + _jet(c=1)
    for j in range(n + 1 - e, n + 1):
        m = j - (n + 1 - e)
        rows[j][m] = rows[j][m] + _jet(c=coeffs.b_val(j - n + e))
    shift = n - 2 * e + 4
    for j in range(n + 1):
        if j + shift <= n:
            rows[j][j + shift] = rows[j][j + shift] + _jet(l=-1)
        m = j + 2 - e
        if m >= 0 and 1 <= j - e + 3 <= n - e + 3:
            rows[j][m] = rows[j][m] + _jet(l=(dinv - 1) * coeffs.a_val(j - e + 3))
    rows[n][0] = rows[n][0] + _jet(l=(2 * dinv - 1) * coeffs.c1)
    return Matrix(rows)


def det_linear_coefficient(a_matrix: Matrix):
    """The t-coefficient of det A(t) mod t^2, by the jet determinant."""
    d = as_jet(det(a_matrix), 1)
    return d.linear[0]


def column_derivative_dets(a_matrix: Matrix) -> tuple:
    """det of A(0) with one column replaced by its t-derivative, per column.

    Exactly one summand per column of the product-rule expansion of
    det A(t); their sum is the t-coefficient of the determinant.
    """
    n = a_matrix.n
    const = [[v.constant for v in row] for row in a_matrix.rows]
    deriv = [[v.linear[0] for v in row] for row in a_matrix.rows]
    out = []
    for i in range(n):
        rows = [list(r) for r in const]
        for k in range(n):
            rows[k][i] = deriv[k][i]
        out.append(det(Matrix(rows)))
    return tuple(out)


def det_linear_closed_form(ci: CompleteIntersection, coeffs: CoeffTable):
    """Closed form of the t-coefficient of det A(t).

    (-1)^n (c1^* - a_1^* b_e - a_{n-e+3}^* b_1 - b_1 b_e), depending only on
    the boundary coefficients.
    """
    _require_deformation_regime(ci)
    dinv = 1 / ci.delta
    c1s = (2 * dinv - 1) * coeffs.c1
    a1s = (dinv - 1) * coeffs.a_val(1)
    atops = (dinv - 1) * coeffs.a_val(ci.n - ci.e + 3)
    b1 = coeffs.b_val(1)
    be = coeffs.b_val(ci.e)
    bracket = c1s - a1s * be - atops * b1 - b1 * be
    return bracket if ci.n % 2 == 0 else -bracket


def deformed_char_poly(a_matrix: Matrix) -> UniPoly:
    """Characteristic polynomial of A(t): monic over jets, degree n + 1."""
    return char_poly(a_matrix)


def origin_char_poly(ci: CompleteIntersection, coeffs: CoeffTable) -> UniPoly:
    """Characteristic polynomial of the undeformed hyperplane operator."""
    return char_poly(origin_product_matrix(ci, coeffs))


def substitute_coordinate(a_matrix: Matrix, value) -> Matrix:
    """Evaluate every jet entry at a coordinate value (exact: jets are affine)."""
    return a_matrix.map_entries(lambda v: v.evaluate((value,)))


def enumerate_cases(n_max: int, deg_max: int = 5, r_max: int = 3,
                    n_min: int = 3, deg_min: int = 2) -> list:
    """All sweep cases (n, degrees) with n > 2e - 3, lexicographically sorted."""
    cases = []
    for n in range(n_min, n_max + 1):
        for r in range(1, r_max + 1):
            for combo in itertools.combinations_with_replacement(
                    range(deg_max, deg_min - 1, -1), r):
                ci = CompleteIntersection(n, combo)
                if ci.satisfies_degree_bound:
                    cases.append(ci)
    cases.sort(key=lambda c: (c.n, c.degrees))
    return cases


def matrix_to_json(m: Matrix) -> dict:
    """JSON form of a jet matrix with rational coefficients."""
    def frac(x):
        x = Fraction(x)
        return {"num": x.numerator, "den": x.denominator}

    entries = [[{"constant": frac(v.constant), "linear": [frac(u) for u in v.linear]}
                for v in row] for row in m.rows]
    return {"dimension": m.n, "entries": entries}


def matrix_from_json(data: dict) -> Matrix:
    def frac(d):
        return Fraction(d["num"], d["den"])

    rows = []
    for row in data["entries"]:
        rows.append([Jet(len(v["linear"]), frac(v["constant"]),
                         tuple(frac(u) for u in v["linear"])) for v in row])
    m = Matrix(rows)
    if m.n != data["dimension"]:
        raise ValueError("dimension mismatch in serialized matrix")
    return m
