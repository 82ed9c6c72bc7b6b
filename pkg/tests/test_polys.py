import itertools
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from qcohcert.polys import (RootFindingError, UniPoly, discriminant,
                            numeric_roots, poly_divmod, poly_gcd, resultant)
from qcohcert.rings import Jet, MPoly

fractions = st.fractions(min_value=-100, max_value=100, max_denominator=20)
small_polys = st.lists(fractions, min_size=0, max_size=6).map(UniPoly)

x = UniPoly.monomial(1)


def test_normalization_strips_leading_zeros():
    assert UniPoly([1, 2, 0, 0]).degree == 1
    assert UniPoly([0]).is_zero
    assert UniPoly([]).degree == -1


def test_evaluation_and_derivative():
    f = x ** 3 - 2 * x + 1
    assert f(Fraction(2)) == 5
    assert f.derivative() == 3 * x ** 2 - 2


@settings(max_examples=250, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_unipoly_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) * h == f * h + g * h
    assert (f * g) * h == f * (g * h)


@settings(max_examples=150, deadline=None)
@given(small_polys, small_polys, fractions)
def test_coefficientwise_ops_agree_with_evaluation(f, g, v):
    assert (f + g)(v) == f(v) + g(v)
    assert (f * g)(v) == f(v) * g(v)


def test_divmod_reconstructs():
    f = x ** 4 + 3 * x ** 2 - 1
    g = x ** 2 + 1
    q, r = poly_divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


def test_gcd_examples():
    f = (x - 1) * (x + 2) ** 2
    g = (x + 2) * (x - 5)
    assert poly_gcd(f, g) == x + 2
    assert poly_gcd(f, UniPoly()) == f * Fraction(1, f.leading)


def test_resultant_sign_convention():
    assert resultant(x - 1, x + 1) == 2
    assert resultant(x + 1, x - 1) == -2


def test_resultant_zero_poly_rejected():
    with pytest.raises(ValueError):
        resultant(UniPoly(), x)


def test_resultant_detects_common_roots():
    f = (x - 2) * (x + 3)
    g = (x - 2) * (x - 7)
    assert resultant(f, g) == 0


@settings(max_examples=200, deadline=None)
@given(st.lists(fractions, min_size=1, max_size=4),
       st.lists(fractions, min_size=1, max_size=4))
def test_resultant_vanishes_iff_gcd_nonconstant(cf, cg):
    f, g = UniPoly(cf), UniPoly(cg)
    if f.is_zero or g.is_zero:
        return
    shared = poly_gcd(f, g)
    assert (resultant(f, g) == 0) == (shared.degree > 0)


def test_discriminant_quadratic_formula():
    rng = random.Random(7)
    for _ in range(50):
        b = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        c = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        f = x ** 2 + b * x + c
        assert discriminant(f) == b * b - 4 * c


def test_discriminant_quadratic_symbolic_via_sylvester_oracle():
    # 3x3 Sylvester determinant of (x^2 + bx + c, 2x + b) as an oracle
    from qcohcert.matrices import Matrix, det
    b, c = MPoly.symbol("b"), MPoly.symbol("c")
    sylvester = Matrix([
        [1, b, c],
        [2, b, 0],
        [0, 2, b],
    ])
    # disc = (-1)^(2*1/2) * res / lc = -res for a monic quadratic
    assert -det(sylvester) == b * b - 4 * c


def test_discriminant_cubic_squarefree():
    f = x ** 3 - 2 * x + 1  # (x - 1)(x^2 + x - 1), squarefree
    assert discriminant(f) != 0
    assert discriminant((x - 1) ** 2) == 0


def test_discriminant_degree_one_is_one():
    assert discriminant(3 * x + 5) == 1


# --- numeric roots -------------------------------------------------------------


def test_numeric_roots_closed_form_example():
    f = UniPoly([0, -4, 0, 0, 0, 1])  # x(x^4 - 4)
    report = numeric_roots(f)
    assert len(report.roots) == 5
    with mpmath.workdps(60):
        assert abs(report.min_gap - mpmath.sqrt(2)) < mpmath.mpf("1e-40")
    assert report.gap_lower_bound > 1.4142


def test_numeric_roots_repeated_root_gap_zero():
    report = numeric_roots(x ** 2, digits=30)
    assert report.min_gap < mpmath.mpf("1e-20")
    assert discriminant(x ** 2) == 0


def test_numeric_roots_multiplicity_structure_example():
    f = UniPoly([0, 0, -27, 0, 0, 0, 1])  # x^6 - 27 x^2
    report = numeric_roots(f)
    near_zero = [r for r in report.roots if abs(r) < mpmath.mpf("1e-10")]
    assert len(near_zero) == 2
    others = [r for r in report.roots if abs(r) >= mpmath.mpf("1e-10")]
    assert len(others) == 4
    target = mpmath.mpf(27) ** (mpmath.mpf(1) / 4)
    assert all(abs(abs(r) - target) < mpmath.mpf("1e-30") for r in others)


def test_numeric_roots_rejects_constants():
    with pytest.raises(ValueError):
        numeric_roots(UniPoly([3]))
    with pytest.raises(ValueError):
        numeric_roots(UniPoly())


def test_numeric_roots_nonconvergence_is_explicit():
    with pytest.raises(RootFindingError):
        numeric_roots((x - 1) * (x - 2) * (x - 3), maxsteps=1)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=12))
def test_squarefree_implies_positive_numeric_gap(coeffs):
    f = UniPoly([Fraction(c) for c in coeffs])
    if f.is_zero or f.degree < 2:
        return
    if discriminant(f) == 0:
        return
    report = numeric_roots(f)
    assert report.min_gap > mpmath.mpf("1e-8")


def test_polys_over_jets():
    z = Jet.variable(1, 0)
    g = UniPoly([-(z), Jet.const(1, 0), Jet.const(1, 1)])  # y^2 - z
    assert g.is_monic
    assert g.coeff(0) == -z
    val = g(Jet.const(1, Fraction(2)))
    assert val == Jet(1, 4, (-1,))
