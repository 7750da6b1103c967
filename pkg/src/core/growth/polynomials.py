#!/usr/bin/env python3
"""
Exact integer polynomials and rational functions in the variable `t`.

`IntPolynomial` keeps its coefficients as a tuple of Python integers
(index = degree) and delegates division, gcd and factorization to
sympy. `RationalFunction` is always built in canonical form so that two
equal functions compare equal field by field.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Union

# Third-party libraries
import sympy as sp

logger = logging.getLogger(__name__)

# Formal variable of every polynomial
T = sp.Symbol("t")


class GrowthException(Exception):
    """
    Base class of the growth computation errors.
    """

    def __init__(self, message: str = "Growth computation error."):
        super().__init__(message)


########################################################################
#                          Integer polynomial                          #
########################################################################


@dataclass(frozen=True)
class IntPolynomial:
    """
    Polynomial with exact integer coefficients, lowest degree first.
    The zero polynomial has no coefficient.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = [operator.index(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def from_poly(cls, poly: sp.Poly) -> "IntPolynomial":
        """
        Raises:
            ValueError: Some coefficient is not an integer.
        """
        try:
            poly = sp.Poly(poly, T).set_domain(sp.ZZ)
        except sp.CoercionFailed as e:
            raise ValueError(f"Non-integral polynomial {poly.as_expr()}") from e
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (coefficient,))

    @cached_property
    def poly(self) -> sp.Poly:
        """
        Returns:
            sp.Poly: The same polynomial over the integers.
        """
        return sp.Poly(list(reversed(self.coefficients)) or [0], T, domain=sp.ZZ)

    ### Properties

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """
        Returns:
            int: Degree, -1 for the zero polynomial.
        """
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def coefficient(self, degree: int) -> int:
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return 0

    def content(self) -> int:
        return math.gcd(*self.coefficients) if self.coefficients else 0

    ### Arithmetic

    @staticmethod
    def _coerce(other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        return IntPolynomial((operator.index(other),))

    def __add__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        other = self._coerce(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(size))
        )

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "IntPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return IntPolynomial(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        result = IntPolynomial.one()
        for _ in range(exponent):
            result = result * self
        return result

    def divmod(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """
        Euclidean division `self = q * other + r`, `deg r < deg other`.

        Raises:
            ZeroDivisionError: `other` is zero.
            ValueError: Quotient or remainder is not integral.
        """
        if other.is_zero:
            raise ZeroDivisionError("Polynomial division by zero")
        q, r = self.poly.div(other.poly)
        return IntPolynomial.from_poly(q), IntPolynomial.from_poly(r)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """
        Raises:
            ValueError: `other` doesn't divide `self` over the integers.
        """
        try:
            return IntPolynomial.from_poly(self.poly.exquo(other.poly))
        except sp.ExactQuotientFailed as e:
            raise ValueError(f"{other} doesn't divide {self}") from e

    def divides(self, other: "IntPolynomial") -> bool:
        """
        Returns:
            bool: `True` if `self` divides `other` over the rationals.
        """
        return other.poly.rem(self.poly).is_zero

    def gcd(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_poly(self.poly.gcd(other.poly))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coefficients))[1:])

    def square_free_part(self) -> "IntPolynomial":
        """
        Returns:
            IntPolynomial: Primitive product of the distinct irreducible
                factors.
        """
        if self.degree < 1:
            return IntPolynomial.one()
        return IntPolynomial.from_poly(self.poly.sqf_part())

    def reversed(self, degree: int) -> "IntPolynomial":
        """
        Returns:
            IntPolynomial: `t^degree * p(1/t)`.

        Raises:
            ValueError: `degree` below the polynomial degree.
        """
        if degree < self.degree:
            raise ValueError(f"Cannot reverse a degree {self.degree} polynomial in {degree}")
        padded = self.coefficients + (0,) * (degree + 1 - len(self.coefficients))
        return IntPolynomial(tuple(reversed(padded)))

    def __call__(self, x: Fraction | int) -> Fraction:
        """
        Exact evaluation by Horner's rule.
        """
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    ### Rendering

    def render(self) -> str:
        """
        Descending degrees with explicit signs, e.g. `6t^7+2t-2`.
        """
        if self.is_zero:
            return "0"
        parts = []
        for degree in range(self.degree, -1, -1):
            c = self.coefficients[degree]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            magnitude = "" if abs(c) == 1 and degree > 0 else str(abs(c))
            power = "" if degree == 0 else ("t" if degree == 1 else f"t^{degree}")
            parts.append(f"{sign}{magnitude}{power}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def as_expr(self) -> sp.Expr:
        return self.poly.as_expr()


def bracket(n: int) -> IntPolynomial:
    """
    The polynomial `[n] = 1 + t + ... + t^(n-1)`.

    Raises:
        ValueError: `n < 1`.
    """
    if n < 1:
        raise ValueError(f"[n] requires n >= 1, got {n}")
    return IntPolynomial((1,) * n)


def product(factors: Iterable[IntPolynomial]) -> IntPolynomial:
    result = IntPolynomial.one()
    for factor in factors:
        result = result * factor
    return result


########################################################################
#                           Rational function                          #
########################################################################


@dataclass(frozen=True)
class RationalFunction:
    """
    Quotient of two integer polynomials. Use `canonical()` to build one:
    coprime numerator and denominator, unit content, positive leading
    coefficient of the denominator.
    """

    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self):
        if self.denominator.is_zero:
            raise ZeroDivisionError("Rational function with a zero denominator")

    @classmethod
    def canonical(
        cls, numerator: IntPolynomial, denominator: IntPolynomial
    ) -> "RationalFunction":
        """
        Raises:
            ZeroDivisionError: Zero denominator.
        """
        if denominator.is_zero:
            raise ZeroDivisionError("Rational function with a zero denominator")

        p, q = numerator.poly, denominator.poly
        common = p.gcd(q)
        p, q = p.exquo(common), q.exquo(common)

        p, q = IntPolynomial.from_poly(p), IntPolynomial.from_poly(q)
        k = math.gcd(p.content(), q.content())
        p = IntPolynomial(tuple(c // k for c in p.coefficients))
        q = IntPolynomial(tuple(c // k for c in q.coefficients))
        if q.leading_coefficient < 0:
            p, q = -p, -q
        return cls(p, q)

    @classmethod
    def from_expr(cls, expr: sp.Expr) -> "RationalFunction":
        """
        Canonical form of a sympy rational expression in `t`.
        """
        num, den = sp.fraction(sp.cancel(sp.together(expr)))
        num_q = sp.Poly(num, T, domain=sp.QQ)
        den_q = sp.Poly(den, T, domain=sp.QQ)
        # num/den = (num_z/cn) / (den_z/cd)
        cn, num_z = num_q.clear_denoms(convert=True)
        cd, den_z = den_q.clear_denoms(convert=True)
        return cls.canonical(
            IntPolynomial.from_poly(num_z) * int(cd),
            IntPolynomial.from_poly(den_z) * int(cn),
        )

    def __call__(self, x: Fraction | int) -> Fraction:
        return self.numerator(x) / self.denominator(x)

    def as_expr(self) -> sp.Expr:
        return self.numerator.as_expr() / self.denominator.as_expr()

    def render(self) -> str:
        return f"({self.numerator.render()})/({self.denominator.render()})"

    def __str__(self) -> str:
        return self.render()
