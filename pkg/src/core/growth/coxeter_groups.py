#!/usr/bin/env python3
"""
Irreducible finite Coxeter groups and their growth polynomials.

The growth polynomial of a finite Coxeter group with exponents
m_1, ..., m_k is the product of the brackets [m_i + 1]. Reducible groups
multiply the polynomials of their components.

---
IdealGrowth - Growth and volume toolkit for ideal Coxeter polyhedra

Author: IdealGrowth contributors
Copyright (C) 2025 IdealGrowth contributors
License: AGPL-3.0 <https://www.gnu.org/licenses/>
"""

# Standard libraries
import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import Final, Iterable, Optional, Union

# Internal libraries
from .polynomials import GrowthException, IntPolynomial, bracket, product

logger = logging.getLogger(__name__)

_SYMBOL_REGEX: Final = re.compile(r"^(I2)\((\d+)\)$|^([ABDEFH])(\d+)$")

# Exponents of the exceptional groups
_EXCEPTIONAL_EXPONENTS: Final = {
    ("E", 6): (1, 4, 5, 7, 8, 11),
    ("E", 7): (1, 5, 7, 9, 11, 13, 17),
    ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
    ("F", 4): (1, 5, 7, 11),
    ("H", 3): (1, 5, 9),
    ("H", 4): (1, 11, 19, 29),
}


class InvalidGroupSymbol(GrowthException):
    """
    The symbol doesn't name an irreducible finite Coxeter group.
    """

    def __init__(self, symbol: str, reason: str = "not a finite Coxeter group"):
        self.symbol = symbol
        super().__init__(f"Invalid group symbol '{symbol}': {reason}.")


class CoxeterFamily(Enum):
    A = "A"
    B = "B"
    D = "D"
    E = "E"
    F = "F"
    H = "H"
    I2 = "I2"


@dataclass(frozen=True)
class FiniteGroupSymbol:
    """
    An irreducible finite Coxeter group, e.g. `A3`, `H4` or `I2(5)`.
    `m` is only used by the dihedral family.
    """

    family: CoxeterFamily
    rank: int
    m: Optional[int] = None

    def __post_init__(self):
        family, n = self.family, self.rank
        if family is CoxeterFamily.I2:
            if n != 2 or self.m is None or self.m < 3:
                raise InvalidGroupSymbol(str(self), "I2(m) requires m >= 3")
            return
        if self.m is not None:
            raise InvalidGroupSymbol(str(self), "only I2 takes an order parameter")

        valid = {
            CoxeterFamily.A: n >= 1,
            CoxeterFamily.B: n >= 2,
            CoxeterFamily.D: n >= 4,
            CoxeterFamily.E: n in (6, 7, 8),
            CoxeterFamily.F: n == 4,
            CoxeterFamily.H: n in (3, 4),
        }[family]
        if not valid:
            raise InvalidGroupSymbol(str(self), f"rank {n} not allowed")

    @classmethod
    def parse(cls, text: str) -> "FiniteGroupSymbol":
        """
        Parse a single irreducible symbol.

        Raises:
            InvalidGroupSymbol: Unrecognized text or invalid parameters.
        """
        match = _SYMBOL_REGEX.match(text.strip())
        if not match:
            raise InvalidGroupSymbol(text, "unrecognized syntax")
        if match.group(1):
            return cls(CoxeterFamily.I2, 2, int(match.group(2)))
        return cls(CoxeterFamily(match.group(3)), int(match.group(4)))

    @property
    def exponents(self) -> tuple[int, ...]:
        n = self.rank
        match self.family:
            case CoxeterFamily.A:
                return tuple(range(1, n + 1))
            case CoxeterFamily.B:
                return tuple(range(1, 2 * n, 2))
            case CoxeterFamily.D:
                return tuple(sorted((*range(1, 2 * n - 2, 2), n - 1)))
            case CoxeterFamily.I2:
                return (1, self.m - 1)
            case _:
                return _EXCEPTIONAL_EXPONENTS[(self.family.value, n)]

    def __str__(self) -> str:
        if self.family is CoxeterFamily.I2:
            return f"I2({self.m})"
        return f"{self.family.value}{self.rank}"


def parse_group(text: str) -> tuple[FiniteGroupSymbol, ...]:
    """
    Parse an `x`-separated product of irreducible symbols, e.g. `A1xA1`.

    Raises:
        InvalidGroupSymbol: Some component is invalid.
    """
    parts = [part for part in text.strip().split("x")]
    if not all(parts):
        raise InvalidGroupSymbol(text, "empty component")
    return tuple(FiniteGroupSymbol.parse(part) for part in parts)


def finite_growth(
    symbol: Union[FiniteGroupSymbol, Iterable[FiniteGroupSymbol]],
) -> IntPolynomial:
    """
    Growth polynomial of a finite Coxeter group, the product of the
    brackets `[m_i + 1]` over the exponents of every component.
    """
    symbols = (symbol,) if isinstance(symbol, FiniteGroupSymbol) else tuple(symbol)
    return product(bracket(e + 1) for s in symbols for e in s.exponents)


A1: Final = FiniteGroupSymbol(CoxeterFamily.A, 1)


def dihedral(label: int) -> tuple[FiniteGroupSymbol, ...]:
    """
    Returns:
        tuple[FiniteGroupSymbol, ...]: The finite group generated by two
            reflections meeting at angle pi/label, `A1xA1` for label 2.
    """
    if label == 2:
        return (A1, A1)
    return (FiniteGroupSymbol(CoxeterFamily.I2, 2, label),)
