import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from qcohcert.matrices import Matrix, char_poly, det
from qcohcert.polys import UniPoly
from qcohcert.rings import Jet, MPoly

from oracles import permutation_det

fractions = st.fractions(min_value=-30, max_value=30, max_denominator=10)


def random_fraction_matrix(rng, n, density=1.0):
    return Matrix([[Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                    if rng.random() < density else Fraction(0)
                    for _ in range(n)] for _ in range(n)])


def random_jet_matrix(rng, n, density=1.0):
    def entry():
        if rng.random() >= density:
            return Jet(1, 0, (0,))
        return Jet(1, Fraction(rng.randint(-5, 5)), (Fraction(rng.randint(-5, 5)),))
    return Matrix([[entry() for _ in range(n)] for _ in range(n)])


def test_det_spec_examples():
    t = Jet.variable(1, 0)
    one = Jet.const(1, 1)
    assert det(Matrix([[t, one], [one, t]])) == -1
    assert det(Matrix.identity(7)) == 1
    assert det(Matrix([[1, 2], [3, 4]])) == -2


def test_det_matches_permutation_expansion():
    rng = random.Random(11)
    for n in range(1, 7):
        for _ in range(8):
            m = random_fraction_matrix(rng, n, density=0.8)
            assert det(m) == permutation_det(m.rows)


def test_det_over_jets_matches_permutation_expansion():
    rng = random.Random(13)
    for n in range(1, 6):
        for _ in range(6):
            m = random_jet_matrix(rng, n, density=0.8)
            assert det(m) == permutation_det(m.rows)


def test_det_multilinear_in_a_column():
    rng = random.Random(17)
    for _ in range(20):
        n = rng.randint(2, 5)
        a = random_fraction_matrix(rng, n)
        col = rng.randrange(n)
        scale = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        rows = [list(r) for r in a.rows]
        for i in range(n):
            rows[i][col] = rows[i][col] * scale
        assert det(Matrix(rows)) == scale * det(a)


def test_det_alternating_in_columns():
    rng = random.Random(19)
    for _ in range(20):
        n = rng.randint(2, 5)
        a = random_fraction_matrix(rng, n)
        i, j = rng.sample(range(n), 2)
        rows = []
        for row in a.rows:
            row = list(row)
            row[i], row[j] = row[j], row[i]
            rows.append(row)
        assert det(Matrix(rows)) == -det(a)
        rows = [list(r) for r in a.rows]
        for k in range(n):
            rows[k][i] = rows[k][j]
        assert det(Matrix(rows)) == 0


def test_det_jet_linear_coefficient_is_column_derivative_sum():
    # product rule: the linear coefficient equals the sum over columns of the
    # determinant with that single column differentiated at 0
    rng = random.Random(23)
    for n in range(2, 9):
        m = random_jet_matrix(rng, n, density=0.9)
        d = det(m)
        const = [[v.constant for v in row] for row in m.rows]
        deriv = [[v.linear[0] for v in row] for row in m.rows]
        total = Fraction(0)
        for i in range(n):
            rows = [list(r) for r in const]
            for k in range(n):
                rows[k][i] = deriv[k][i]
            total += det(Matrix(rows))
        expected_const = det(Matrix(const))
        assert d == Jet(1, expected_const, (total,))


def test_char_poly_spec_examples():
    assert char_poly(Matrix([[0] * 4] * 4)) == UniPoly.monomial(4)
    c = MPoly.symbol("c")
    assert char_poly(Matrix([[0, c], [1, 0]])) == UniPoly([-c, 0, 1])


def test_char_poly_monic_with_det_constant_term():
    rng = random.Random(29)
    for n in range(1, 7):
        m = random_fraction_matrix(rng, n)
        p = char_poly(m)
        assert p.degree == n
        assert p.is_monic
        assert p.coeff(0) == det(-m)


def test_char_poly_agrees_with_direct_determinant():
    rng = random.Random(31)
    for n in range(1, 7):
        for _ in range(5):
            m = random_fraction_matrix(rng, n, density=0.7)
            p = char_poly(m)
            lam = Fraction(rng.randint(-10, 10), rng.randint(1, 5))
            shifted = Matrix([[ (lam if i == j else 0) - m[i, j]
                                for j in range(n)] for i in range(n)])
            assert p(lam) == det(shifted)


def test_char_poly_over_jets():
    z = Jet.variable(1, 0)
    m = Matrix([[z, Jet.const(1, 1)], [Jet.const(1, 2), z]])
    p = char_poly(m)
    # det(xI - m) = (x - z)^2 - 2 = x^2 - 2zx + (z^2 - 2) -> truncated
    assert p == UniPoly([Jet(1, -2, (0,)), Jet(1, 0, (-2,)), Jet.const(1, 1)])


def test_matrix_operations():
    a = Matrix([[1, 2], [3, 4]])
    b = Matrix([[0, 1], [1, 0]])
    assert a @ b == Matrix([[2, 1], [4, 3]])
    assert a + b == Matrix([[1, 3], [4, 4]])
    assert 2 * a == Matrix([[2, 4], [6, 8]])
    assert (a - a) == Matrix([[0, 0], [0, 0]])
    with pytest.raises(ValueError):
        Matrix([[1, 2]])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.data())
def test_det_product_rule_for_scalar_matrices(n, data):
    entries = data.draw(st.lists(fractions, min_size=2 * n * n, max_size=2 * n * n))
    a = Matrix([entries[i * n:(i + 1) * n] for i in range(n)])
    b = Matrix([entries[n * n + i * n: n * n + (i + 1) * n] for i in range(n)])
    assert det(a @ b) == det(a) * det(b)
