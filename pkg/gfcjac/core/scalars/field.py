"""
Scalar tiers, the point at infinity, and the textual scalar syntax.

Scalar syntax (CLI and JSON):
    "3/4", "-2"                 rational
    "inf"                       the point at infinity
    "1/2+3/2*sqrt(5)"           quadratic a + b*sqrt(d)
    "c(0.25,-1.1)"              BigComplex
    "sym:lambda1"               symbolic label or sympy expression
"""

from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Union

from gfcjac.core.errors import InputError, MixedFieldError, UnsupportedModeError
from gfcjac.core.scalars.numeric import DEFAULT_PRECISION, BigComplex
from gfcjac.core.scalars.quadratic import QuadraticNumber, rational_sqrt
from gfcjac.core.scalars.symbolic import Symbolic


class _Infinity:
    """The point at infinity of the Riemann sphere (singleton)."""

    _instance: Optional["_Infinity"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("gfcjac.infinity")

    def __reduce__(self):
        return (_Infinity, ())

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"


INFINITY = _Infinity()

Scalar = Union[Fraction, QuadraticNumber, BigComplex, Symbolic, _Infinity]


class ScalarMode(Enum):
    """Arithmetic tier of a collection of scalars."""
    RATIONAL = "rational"
    QUADRATIC = "quadratic"
    NUMERIC = "numeric"
    SYMBOLIC = "symbolic"

    @property
    def exact(self) -> bool:
        return self in (ScalarMode.RATIONAL, ScalarMode.QUADRATIC)


def is_infinity(x) -> bool:
    return x is INFINITY


def as_scalar(value) -> Scalar:
    """Coerce ints and strings to Scalars; reject floats."""
    if isinstance(value, bool):
        raise InputError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (Fraction, QuadraticNumber, BigComplex, Symbolic, _Infinity)):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, (float, complex)):
        raise InputError(f"floating-point value {value!r} is ambiguous; use a rational or c(re,im)")
    raise InputError(f"unsupported scalar type {type(value).__name__}")


def mode_of(values: Iterable) -> ScalarMode:
    """Highest arithmetic tier present (symbolic > numeric > quadratic > rational)."""
    mode = ScalarMode.RATIONAL
    for value in values:
        if isinstance(value, Symbolic):
            return ScalarMode.SYMBOLIC
        if isinstance(value, BigComplex):
            mode = ScalarMode.NUMERIC
        elif isinstance(value, QuadraticNumber) and mode is ScalarMode.RATIONAL:
            mode = ScalarMode.QUADRATIC
    return mode


def field_discriminant(values: Iterable) -> Optional[int]:
    """The common d of all quadratic values, or None when every value is rational."""
    d: Optional[int] = None
    for value in values:
        if isinstance(value, QuadraticNumber):
            if d is not None and d != value.d:
                raise MixedFieldError(f"parameters mix Q(sqrt({d})) and Q(sqrt({value.d}))")
            d = value.d
    return d


def is_zero(x) -> bool:
    if x is INFINITY:
        return False
    if isinstance(x, (BigComplex, Symbolic)):
        return x.is_zero()
    return x == 0


def scalars_equal(x, y) -> bool:
    """Equality on the Riemann sphere: exact, tolerance-based or symbolic as the tier requires."""
    if x is INFINITY or y is INFINITY:
        return x is y
    return is_zero(x - y)


def sqrt_in_field(x, d: Optional[int] = None):
    """
    Square root staying exact when possible.

    Args:
        x: Rational, quadratic, BigComplex or symbolic scalar
        d: Optional ambient quadratic field Q(sqrt(d)) for rational x

    Returns:
        A root, or None when an exact input has no root in Q or Q(sqrt(d))
    """
    if x is INFINITY:
        raise InputError("sqrt of infinity is undefined")
    if isinstance(x, (BigComplex, Symbolic)):
        return x.sqrt()
    if isinstance(x, QuadraticNumber):
        return x.sqrt()
    x = Fraction(x)
    root = rational_sqrt(x)
    if root is not None:
        return root
    if d is not None:
        # x = c**2 * d for rational c
        c = rational_sqrt(x / d)
        if c is not None:
            return QuadraticNumber.make(0, c, d)
    return None


def to_big_complex(x, precision: int = DEFAULT_PRECISION) -> BigComplex:
    if x is INFINITY:
        raise InputError("infinity has no BigComplex value")
    if isinstance(x, Symbolic):
        raise UnsupportedModeError("symbolic scalars have no numeric value")
    if isinstance(x, BigComplex) and x.precision >= precision:
        return x
    return BigComplex(x, precision)


_RATIONAL = r"[+-]?\d+(?:/\d+)?"
_RATIONAL_RE = re.compile(rf"^\s*({_RATIONAL}|[+-]?\d*\.\d+)\s*$")
_QUADRATIC_RE = re.compile(
    rf"^\s*(?P<a>{_RATIONAL})?\s*(?P<sign>[+-])?\s*(?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?"
    r"sqrt\(\s*(?P<d>-?\d+)\s*\)\s*$"
)
_COMPLEX_RE = re.compile(r"^\s*c\(\s*(?P<re>[^,()]+?)\s*,\s*(?P<im>[^,()]+?)\s*\)\s*$")


def parse_scalar(text: str, precision: Optional[int] = None) -> Scalar:
    """
    Parse the textual scalar syntax.

    Args:
        text: Scalar literal
        precision: Bits for ``c(re,im)`` literals (default 256)

    Returns:
        Parsed Scalar
    """
    if not isinstance(text, str) or not text.strip():
        raise InputError("empty scalar literal")
    raw = text.strip()
    if raw.lower() in ("inf", "oo", "infinity", "∞"):
        return INFINITY
    if raw.startswith("sym:"):
        return Symbolic.parse(raw[4:].strip())
    if _RATIONAL_RE.match(raw):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"malformed rational {text!r}") from e
    match = _COMPLEX_RE.match(raw)
    if match:
        return BigComplex.from_parts(match["re"], match["im"], precision or DEFAULT_PRECISION)
    match = _QUADRATIC_RE.match(raw)
    if match:
        if match["a"] is not None and match["sign"] is None:
            raise InputError(f"malformed quadratic scalar {text!r}: missing sign before sqrt term")
        a = Fraction(match["a"]) if match["a"] is not None else Fraction(0)
        try:
            b = Fraction(match["b"]) if match["b"] is not None else Fraction(1)
        except ZeroDivisionError as e:
            raise InputError(f"malformed quadratic scalar {text!r}") from e
        if match["sign"] == "-":
            b = -b
        return QuadraticNumber.make(a, b, int(match["d"]))
    raise InputError(f"malformed scalar {text!r}")


def format_scalar(x) -> str:
    """Inverse of parse_scalar (BigComplex values are rounded to their displayed digits)."""
    if x is INFINITY:
        return "inf"
    return str(x)
