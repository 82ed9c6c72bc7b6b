"""Exact coefficient rings: opaque-symbol polynomials and order-two jets.

Scalars throughout the package are duck-typed: anything supporting +, -, *
and == (including mixed arithmetic with int and ``fractions.Fraction``)
works as a coefficient.  ``Fraction`` is the base field.  ``MPoly`` adds
exact polynomials in named commuting symbols whose values are never
assumed.  ``Jet`` implements truncated power series modulo
(z_1, ..., z_N)^2, the coefficient ring of every first-order deformation
in this package.
"""

from __future__ import annotations

from fractions import Fraction


class NonUnitError(ArithmeticError):
    """Raised when inverting a ring element that is not a unit."""


def _invert_scalar(c):
    """Multiplicative inverse of a scalar, or NonUnitError."""
    if c == 0:
        raise NonUnitError("zero constant term is not invertible")
    try:
        return Fraction(1) / c
    except (TypeError, ZeroDivisionError, ValueError) as exc:
        raise NonUnitError(f"cannot invert {c!r}") from exc


def _merge_monomials(m1, m2):
    # monomials are sorted tuples of (symbol, exponent); two-pointer merge
    out = []
    i = j = 0
    while i < len(m1) and j < len(m2):
        s1, e1 = m1[i]
        s2, e2 = m2[j]
        if s1 == s2:
            out.append((s1, e1 + e2))
            i += 1
            j += 1
        elif s1 < s2:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


class MPoly:
    """Exact polynomial over Fraction in named commuting symbols.

    Terms map sorted ((symbol, exponent), ...) tuples to nonzero Fraction
    coefficients.  Symbols are opaque; no relations are ever assumed.
    Arithmetic mixes freely with int and Fraction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff != 0:
                    clean[tuple(mono)] = coeff
        self.terms = clean

    @classmethod
    def _raw(cls, terms):
        # internal: terms already canonical (Fraction values, no zeros)
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def symbol(cls, name: str) -> "MPoly":
        return cls._raw({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, value) -> "MPoly":
        value = Fraction(value)
        return cls._raw({(): value} if value else {})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def as_constant(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms.get((), Fraction(0))

    def variables(self) -> set:
        return {s for mono in self.terms for s, _ in mono}

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e for _, e in mono) for mono in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = _coerce_mpoly(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = terms.get(mono, 0) + coeff
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return MPoly._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce_mpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_mpoly(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _merge_monomials(m1, m2)
                s = terms.get(mono, 0) + c1 * c2
                if s:
                    terms[mono] = s
                else:
                    terms.pop(mono, None)
        return MPoly._raw(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = MPoly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, MPoly) and other.is_constant:
            return self / other.as_constant()
        return NotImplemented

    def __rtruediv__(self, other):
        # only constants are units; enables Fraction(1) / MPoly.const(q)
        if self.is_constant:
            c = self.as_constant()
            if c == 0:
                raise ZeroDivisionError("division by zero polynomial")
            return _coerce_mpoly(other) * (Fraction(1) / c)
        raise ValueError(f"cannot divide by non-constant polynomial {self}")

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(): Fraction(other)}
        return NotImplemented

    __hash__ = None

    def subs(self, values: dict):
        """Substitute scalars (or polynomials) for some of the symbols."""
        result = 0
        for mono, coeff in self.terms.items():
            term = coeff
            for sym, exp in mono:
                if sym in values:
                    factor = values[sym]
                else:
                    factor = MPoly.symbol(sym)
                for _ in range(exp):
                    term = term * factor
            result = result + term
        if isinstance(result, MPoly) and result.is_constant:
            return result.as_constant()
        return result

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-sum(e for _, e in kv[0]), kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self._sorted_terms():
            factors = [f"{s}^{e}" if e > 1 else s for s, e in mono]
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(str(coeff) + "*" + "*".join(factors))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return f"MPoly({self})"


def _coerce_mpoly(x):
    if isinstance(x, MPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return MPoly.const(x)
    return NotImplemented


def as_jet(x, num_vars: int) -> "Jet":
    """Coerce a scalar (or jet) to a jet; sums over jets can degenerate."""
    if isinstance(x, Jet):
        if x.num_vars != num_vars:
            raise ValueError(f"jet has {x.num_vars} variables, expected {num_vars}")
        return x
    return Jet(num_vars, x)


class Jet:
    """Truncated power series c + sum_i u_i * z_i, arithmetic mod (z_1..z_N)^2.

    Products drop every term of total degree >= 2, so a jet is determined by
    its constant part and the vector of linear coefficients.  A jet is a unit
    exactly when its constant part is invertible in the scalar ring.
    """

    __slots__ = ("num_vars", "constant", "linear")

    def __init__(self, num_vars: int, constant=0, linear=None):
        if num_vars < 0:
            raise ValueError("num_vars must be >= 0")
        if linear is None:
            linear = (0,) * num_vars
        else:
            linear = tuple(linear)
            if len(linear) != num_vars:
                raise ValueError(f"expected {num_vars} linear coefficients, got {len(linear)}")
        self.num_vars = num_vars
        self.constant = constant
        self.linear = linear

    @classmethod
    def const(cls, num_vars: int, value) -> "Jet":
        return cls(num_vars, value)

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "Jet":
        if not 0 <= index < num_vars:
            raise ValueError(f"variable index {index} out of range")
        lin = [0] * num_vars
        lin[index] = 1
        return cls(num_vars, 0, lin)

    def _check(self, other: "Jet"):
        if self.num_vars != other.num_vars:
            raise ValueError(f"mixed jet sizes: {self.num_vars} and {other.num_vars}")

    def __add__(self, other):
        if isinstance(other, Jet):
            self._check(other)
            return Jet(self.num_vars, self.constant + other.constant,
                       tuple(a + b for a, b in zip(self.linear, other.linear)))
        return Jet(self.num_vars, self.constant + other, self.linear)

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.num_vars, -self.constant, tuple(-u for u in self.linear))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            self._check(other)
            a, b = self.constant, other.constant
            return Jet(self.num_vars, a * b,
                       tuple(a * v + b * u for u, v in zip(self.linear, other.linear)))
        return Jet(self.num_vars, self.constant * other,
                   tuple(u * other for u in self.linear))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.invert()
        inv = _invert_scalar(other)
        return self * inv

    def invert(self) -> "Jet":
        """Inverse jet; requires an invertible constant part."""
        ic = _invert_scalar(self.constant)
        ic2 = ic * ic
        return Jet(self.num_vars, ic, tuple(-(ic2 * u) for u in self.linear))

    def evaluate(self, point) -> object:
        """Exact value of the affine function at a point of the base."""
        point = tuple(point)
        if len(point) != self.num_vars:
            raise ValueError("point dimension mismatch")
        value = self.constant
        for u, z in zip(self.linear, point):
            value = value + u * z
        return value

    def __eq__(self, other):
        if isinstance(other, Jet):
            return (self.num_vars == other.num_vars
                    and self.constant == other.constant
                    and all(u == v for u, v in zip(self.linear, other.linear)))
        # comparison against a scalar
        return self.constant == other and all(u == 0 for u in self.linear)

    __hash__ = None

    def __bool__(self):
        return not (self.constant == 0 and all(u == 0 for u in self.linear))

    def __str__(self):
        parts = [str(self.constant)]
        for i, u in enumerate(self.linear):
            if not (u == 0):
                name = "z" if self.num_vars == 1 else f"z{i + 1}"
                parts.append(f"({u})*{name}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Jet({self.num_vars}, {self.constant!r}, {self.linear!r})"
