"""
Arbitrary-precision complex scalars built on mpmath.

Every operation runs under ``mpmath.workprec`` at the larger precision of its
operands. Equality is approximate: two values are equal when their distance
is below 2**(-precision/2) relative to their size.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

import mpmath

from gfcjac.core.errors import InputError
from gfcjac.core.scalars.quadratic import QuadraticNumber

MIN_PRECISION = 64
DEFAULT_PRECISION = 256


def _to_mpc(value):
    """Convert a lower-tier scalar to mpmath.mpc at the current working precision."""
    if isinstance(value, BigComplex):
        return mpmath.mpc(value.value)
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return mpmath.mpc(value)
    if isinstance(value, Fraction):
        return mpmath.mpc(mpmath.mpf(value.numerator) / value.denominator)
    if isinstance(value, QuadraticNumber):
        a = mpmath.mpf(value.a.numerator) / value.a.denominator
        b = mpmath.mpf(value.b.numerator) / value.b.denominator
        return mpmath.mpc(a) + b * mpmath.sqrt(mpmath.mpf(value.d))
    if isinstance(value, (float, complex, mpmath.mpf, mpmath.mpc)):
        return mpmath.mpc(value)
    raise TypeError(f"cannot convert {type(value).__name__} to BigComplex")


class BigComplex:
    """Complex number carried at a fixed binary precision."""

    __slots__ = ("_value", "_precision", "_tolerance_bits")

    def __init__(self, value=0, precision: int = DEFAULT_PRECISION, tolerance_bits: Optional[int] = None):
        """
        Args:
            value: int, Fraction, QuadraticNumber, BigComplex, float, complex or mpmath number
            precision: Working precision in bits (>= 64)
            tolerance_bits: Equality tolerance exponent; defaults to precision // 2
        """
        if precision < MIN_PRECISION:
            raise InputError(f"precision must be at least {MIN_PRECISION} bits, got {precision}")
        self._precision = int(precision)
        self._tolerance_bits = int(tolerance_bits) if tolerance_bits else self._precision // 2
        with mpmath.workprec(self._precision):
            self._value = _to_mpc(value)

    @classmethod
    def from_parts(cls, real: str, imag: str, precision: int = DEFAULT_PRECISION) -> "BigComplex":
        """Build from decimal strings, parsed at the target precision."""
        with mpmath.workprec(precision):
            try:
                value = mpmath.mpc(mpmath.mpf(real), mpmath.mpf(imag))
            except (ValueError, TypeError) as e:
                raise InputError(f"malformed complex literal ({real}, {imag})") from e
        return cls._wrap(value, precision)

    @classmethod
    def _wrap(cls, value, precision: int, tolerance_bits: Optional[int] = None) -> "BigComplex":
        obj = object.__new__(cls)
        obj._value = value
        obj._precision = precision
        obj._tolerance_bits = tolerance_bits or precision // 2
        return obj

    @property
    def value(self):
        return self._value

    @property
    def precision(self) -> int:
        return self._precision

    @property
    def real(self):
        return self._value.real

    @property
    def imag(self):
        return self._value.imag

    @property
    def tolerance(self):
        """Relative tolerance 2**(-tolerance_bits)."""
        with mpmath.workprec(self._precision):
            return mpmath.ldexp(mpmath.mpf(1), -self._tolerance_bits)

    def _binary(self, other, op, reflected: bool = False):
        if isinstance(other, BigComplex):
            precision = max(self._precision, other._precision)
            tol_bits = min(self._tolerance_bits, other._tolerance_bits)
        elif isinstance(other, (int, Fraction, QuadraticNumber, float, complex)) and not isinstance(other, bool):
            precision, tol_bits = self._precision, self._tolerance_bits
        else:
            return NotImplemented
        with mpmath.workprec(precision):
            x, y = self._value, _to_mpc(other)
            result = op(y, x) if reflected else op(x, y)
        return BigComplex._wrap(result, precision, tol_bits)

    def __add__(self, other):
        return self._binary(other, lambda x, y: x + y)

    def __radd__(self, other):
        return self._binary(other, lambda x, y: x + y, reflected=True)

    def __sub__(self, other):
        return self._binary(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return self._binary(other, lambda x, y: x - y, reflected=True)

    def __mul__(self, other):
        return self._binary(other, lambda x, y: x * y)

    def __rmul__(self, other):
        return self._binary(other, lambda x, y: x * y, reflected=True)

    def __truediv__(self, other):
        return self._binary(other, lambda x, y: x / y)

    def __rtruediv__(self, other):
        return self._binary(other, lambda x, y: x / y, reflected=True)

    def __neg__(self):
        with mpmath.workprec(self._precision):
            result = -self._value
        return BigComplex._wrap(result, self._precision, self._tolerance_bits)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        with mpmath.workprec(self._precision):
            result = self._value ** exponent
        return BigComplex._wrap(result, self._precision, self._tolerance_bits)

    def __abs__(self):
        with mpmath.workprec(self._precision):
            return abs(self._value)

    def sqrt(self) -> "BigComplex":
        """Principal square root."""
        with mpmath.workprec(self._precision):
            result = mpmath.sqrt(self._value)
        return BigComplex._wrap(result, self._precision, self._tolerance_bits)

    def is_zero(self) -> bool:
        with mpmath.workprec(self._precision):
            return abs(self._value) <= self.tolerance

    def close_to(self, other, tolerance=None) -> bool:
        """
        Approximate equality |x - y| <= tol * max(1, |x|, |y|).

        Args:
            other: Any scalar convertible to BigComplex
            tolerance: Optional absolute/relative tolerance overriding the default
        """
        with mpmath.workprec(self._precision):
            y = _to_mpc(other)
            tol = mpmath.mpf(tolerance) if tolerance is not None else self.tolerance
            scale = max(mpmath.mpf(1), abs(self._value), abs(y))
            return abs(self._value - y) <= tol * scale

    def __eq__(self, other):
        try:
            return self.close_to(other)
        except TypeError:
            return NotImplemented

    # Approximate equality cannot be made consistent with hashing.
    __hash__ = None  # type: ignore[assignment]

    def __complex__(self):
        return complex(self._value)

    def digits(self) -> int:
        """Significant decimal digits shown when formatting."""
        return max(15, int(self._precision * math.log10(2)))

    def __repr__(self):
        return f"BigComplex({self}, precision={self._precision})"

    def __str__(self):
        with mpmath.workprec(self._precision):
            n = self.digits()
            return f"c({mpmath.nstr(self._value.real, n)},{mpmath.nstr(self._value.imag, n)})"


def root_of_unity(m: int, k: int = 1, precision: int = DEFAULT_PRECISION) -> BigComplex:
    """exp(2*pi*i*k/m) at the given precision."""
    with mpmath.workprec(precision):
        value = mpmath.mpc(mpmath.expjpi(mpmath.mpf(2 * k) / m))
    return BigComplex._wrap(value, precision)
