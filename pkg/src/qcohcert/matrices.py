"""Square matrices over duck-typed commutative scalar rings.

``det`` uses cofactor (Laplace) expansion with memoization on the set of
unused columns -- expansion by minors, division-free, so it is valid over
rings with non-unit elements (jets whose constant term vanishes are
nilpotent-plus-constant and admit no elimination pivots).  Rows are visited
sparsest first and zero entries are skipped, which keeps the state space
small on the banded operator matrices this package produces.

``char_poly`` is deliberately a different engine: power-sum traces of
matrix powers combined through Newton's identities.  The only divisions
are by the integers 1..n, which are units in every coefficient ring used
here (all are Q-algebras), so the result is exact.  Having two independent
engines lets the test suite cross-check det(lambda*I - M) against
char_poly(M) nontrivially.
"""

from __future__ import annotations

from fractions import Fraction

from .polys import UniPoly


class Matrix:
    """Immutable square matrix; entries are any exact commutative scalars."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("empty matrix")
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.n = n
        self.rows = rows

    @classmethod
    def identity(cls, n: int, one=1, zero=0) -> "Matrix":
        return cls(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def map_entries(self, fn) -> "Matrix":
        return Matrix(tuple(tuple(fn(v) for v in row) for row in self.rows))

    def __add__(self, other):
        if not isinstance(other, Matrix) or other.n != self.n:
            return NotImplemented
        return Matrix(tuple(tuple(a + b for a, b in zip(ra, rb))
                            for ra, rb in zip(self.rows, other.rows)))

    def __sub__(self, other):
        if not isinstance(other, Matrix) or other.n != self.n:
            return NotImplemented
        return Matrix(tuple(tuple(a - b for a, b in zip(ra, rb))
                            for ra, rb in zip(self.rows, other.rows)))

    def __neg__(self):
        return self.map_entries(lambda v: -v)

    def __rmul__(self, scalar):
        return self.map_entries(lambda v: scalar * v)

    def __matmul__(self, other):
        if not isinstance(other, Matrix) or other.n != self.n:
            return NotImplemented
        n = self.n
        cols = tuple(zip(*other.rows))
        out = []
        for i in range(n):
            row = self.rows[i]
            out.append(tuple(sum(a * b for a, b in zip(row, col)) for col in cols))
        return Matrix(out)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.n == other.n and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    __hash__ = None

    def __repr__(self):
        body = ",\n        ".join(repr(list(r)) for r in self.rows)
        return f"Matrix([{body}])"

    def det(self):
        return det(self)

    def char_poly(self) -> UniPoly:
        return char_poly(self)


def _permutation_parity(order) -> int:
    sign = 1
    seen = [False] * len(order)
    for start in range(len(order)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det(m: Matrix):
    """Exact determinant by memoized expansion by minors.

    Total on every well-formed matrix; never divides, so jets and symbolic
    entries are safe.
    """
    n = m.n
    sparse_rows = []
    for row in m.rows:
        sparse_rows.append(tuple((j, v) for j, v in enumerate(row) if not (v == 0)))
    order = sorted(range(n), key=lambda i: (len(sparse_rows[i]), i))
    row_sign = _permutation_parity(order)
    entries = [sparse_rows[i] for i in order]

    memo = {}

    def minor(mask, depth):
        # mask: bitset of still-unused columns; depth: rows consumed so far
        if mask == 0:
            return 1
        cached = memo.get(mask)
        if cached is not None:
            return cached
        total = 0
        for col, value in entries[depth]:
            bit = 1 << col
            if not mask & bit:
                continue
            sub = minor(mask ^ bit, depth + 1)
            if sub == 0:
                continue
            term = value * sub
            # parity of the column's rank among the still-unused columns
            if (mask & (bit - 1)).bit_count() % 2:
                total = total - term
            else:
                total = total + term
        memo[mask] = total
        return total

    return row_sign * minor((1 << n) - 1, 0)


def _sparse_rows(m: Matrix):
    return {i: {j: v for j, v in enumerate(row) if not (v == 0)}
            for i, row in enumerate(m.rows)}


def char_poly(m: Matrix) -> UniPoly:
    """Characteristic polynomial det(x*I - M), monic of degree n.

    Power sums p_k = tr(M^k) are accumulated with sparse products, then
    converted to elementary symmetric functions by Newton's identities
    (divisions by integers only; exact over Q-algebras).
    """
    n = m.n
    base = _sparse_rows(m)
    power = base
    psums = []
    for k in range(1, n + 1):
        if k > 1:
            nxt = {}
            for i, row in power.items():
                acc = {}
                for j, v in row.items():
                    for l, w in base.get(j, {}).items():
                        prod = v * w
                        if l in acc:
                            acc[l] = acc[l] + prod
                        else:
                            acc[l] = prod
                nxt[i] = {l: v for l, v in acc.items() if not (v == 0)}
            power = nxt
        trace = 0
        for i in range(n):
            d = power.get(i, {}).get(i)
            if d is not None:
                trace = trace + d
        psums.append(trace)
    elem = [1]
    for k in range(1, n + 1):
        acc = 0
        sign = 1
        for i in range(1, k + 1):
            term = elem[k - i] * psums[i - 1]
            acc = acc + term if sign > 0 else acc - term
            sign = -sign
        elem.append(Fraction(1, k) * acc)
    coeffs = []
    for j in range(n + 1):
        e = elem[n - j]
        coeffs.append(e if (n - j) % 2 == 0 else -e)
    return UniPoly(coeffs)
