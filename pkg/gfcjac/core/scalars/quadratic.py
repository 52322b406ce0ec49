"""
Exact arithmetic in a real or imaginary quadratic field Q(sqrt(d)).

A QuadraticNumber a + b*sqrt(d) always has b != 0; operations whose result
lands in Q return a plain Fraction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Tuple, Union

import sympy

from gfcjac.core.errors import InputError, MixedFieldError

RationalLike = Union[int, Fraction]


def squarefree_part(d: int) -> Tuple[int, int]:
    """
    Split an integer as d = s**2 * d0 with d0 square-free.

    Args:
        d: Nonzero integer

    Returns:
        Tuple (s, d0) with s > 0
    """
    if d == 0:
        raise InputError("sqrt(0) does not define a quadratic field")
    s, d0 = 1, (-1 if d < 0 else 1)
    for prime, exp in sympy.factorint(abs(d)).items():
        s *= prime ** (exp // 2)
        if exp % 2:
            d0 *= prime
    return s, d0


def rational_sqrt(x: RationalLike) -> Optional[Fraction]:
    """Non-negative rational square root of x, or None when x is not a rational square."""
    x = Fraction(x)
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


class QuadraticNumber:
    """
    The number a + b*sqrt(d) with rational a, b and square-free d != 0, 1.

    Instances are immutable. Mixing two different fields raises
    MixedFieldError instead of building a compositum.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a: RationalLike, b: RationalLike, d: int):
        s, d0 = squarefree_part(int(d))
        if s != 1 or d0 == 1:
            raise InputError(f"d must be square-free and different from 1, got {d}")
        self._a = Fraction(a)
        self._b = Fraction(b)
        self._d = int(d)

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> "QuadraticNumber":
        obj = object.__new__(cls)
        obj._a, obj._b, obj._d = a, b, d
        return obj

    @classmethod
    def make(cls, a: RationalLike, b: RationalLike, d: int) -> Union[Fraction, "QuadraticNumber"]:
        """
        Build a + b*sqrt(d), normalizing d to its square-free part.

        Returns a Fraction when the result is rational.
        """
        s, d0 = squarefree_part(int(d))
        b = Fraction(b) * s
        if b == 0 or d0 == 1:
            return Fraction(a) + (b if d0 == 1 else 0)
        return cls._raw(Fraction(a), b, d0)

    @staticmethod
    def _normalized(a: Fraction, b: Fraction, d: int) -> Union[Fraction, "QuadraticNumber"]:
        if b == 0:
            return a
        return QuadraticNumber._raw(a, b, d)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    def _coerce(self, other) -> Optional["QuadraticNumber"]:
        if isinstance(other, QuadraticNumber):
            if other._d != self._d:
                raise MixedFieldError(
                    f"cannot combine Q(sqrt({self._d})) with Q(sqrt({other._d}))"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadraticNumber._raw(Fraction(other), Fraction(0), self._d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._normalized(self._a + o._a, self._b + o._b, self._d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._normalized(self._a - o._a, self._b - o._b, self._d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._normalized(o._a - self._a, o._b - self._b, self._d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a = self._a * o._a + self._d * self._b * o._b
        b = self._a * o._b + self._b * o._a
        return self._normalized(a, b, self._d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Field norm a**2 - d*b**2 (never zero for b != 0)."""
        return self._a * self._a - self._d * self._b * self._b

    def inverse(self) -> "QuadraticNumber":
        n = self.norm()
        return QuadraticNumber._raw(self._a / n, -self._b / n, self._d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o._b == 0:
            if o._a == 0:
                raise ZeroDivisionError("division by zero")
            return self._normalized(self._a / o._a, self._b / o._a, self._d)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result: Union[Fraction, QuadraticNumber] = Fraction(1)
        base: Union[Fraction, QuadraticNumber] = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def sqrt(self) -> Optional[Union[Fraction, "QuadraticNumber"]]:
        """
        Square root inside the same field, or None when there is none.

        Solves (u + v*sqrt(d))**2 = a + b*sqrt(d) through the norm.
        """
        s = rational_sqrt(self.norm())
        if s is None:
            return None
        for t in (s, -s):
            u = rational_sqrt((self._a + t) / 2)
            if u is None or u == 0:
                continue
            candidate = self._normalized(u, self._b / (2 * u), self._d)
            if candidate * candidate == self:
                return candidate
        return None

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return (self._a, self._b, self._d) == (other._a, other._b, other._d)
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __complex__(self):
        root = math.sqrt(abs(self._d))
        if self._d < 0:
            return complex(float(self._a), float(self._b) * root)
        return complex(float(self._a) + float(self._b) * root, 0.0)

    def __repr__(self):
        return f"QuadraticNumber({self._a}, {self._b}, {self._d})"

    def __str__(self):
        head = "" if self._a == 0 else f"{self._a}"
        sign = "-" if self._b < 0 else ("+" if head else "")
        return f"{head}{sign}{abs(self._b)}*sqrt({self._d})"
