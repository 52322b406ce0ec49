"""
Symbolic branch parameters backed by sympy expressions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

import sympy
from sympy.parsing.sympy_parser import parse_expr

from gfcjac.core.errors import InputError, UnsupportedModeError
from gfcjac.core.scalars.numeric import BigComplex
from gfcjac.core.scalars.quadratic import QuadraticNumber


def to_sympy(value) -> sympy.Expr:
    """Exact scalar -> sympy expression. BigComplex is refused."""
    if isinstance(value, Symbolic):
        return value.expr
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return sympy.Integer(value)
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, QuadraticNumber):
        return to_sympy(value.a) + to_sympy(value.b) * sympy.sqrt(value.d)
    if isinstance(value, BigComplex):
        raise UnsupportedModeError("symbolic and BigComplex scalars cannot be mixed")
    raise TypeError(f"cannot convert {type(value).__name__} to a symbolic scalar")


class Symbolic:
    """
    A sympy expression standing for a branch parameter.

    Equality is decided by ``sympy.cancel`` (rational functions) with a
    ``sympy.simplify`` fallback; instances are unhashable for that reason.
    """

    __slots__ = ("_expr",)

    def __init__(self, expr: Union[str, sympy.Expr]):
        if isinstance(expr, str):
            if not expr.isidentifier():
                raise InputError(f"symbol label must be an identifier, got {expr!r}")
            expr = sympy.Symbol(expr)
        self._expr = sympy.sympify(expr)

    @classmethod
    def parse(cls, text: str) -> "Symbolic":
        """Parse a label such as ``lambda1`` or an expression such as ``(l2-1)/(l1-1)``."""
        try:
            if text.isidentifier():
                return cls(sympy.Symbol(text))
            return cls(parse_expr(text))
        except (sympy.SympifyError, SyntaxError, TypeError) as e:
            raise InputError(f"malformed symbolic scalar {text!r}") from e

    @property
    def expr(self) -> sympy.Expr:
        return self._expr

    @property
    def free_symbols(self):
        return self._expr.free_symbols

    def _binary(self, other, op, reflected: bool = False):
        try:
            other_expr = to_sympy(other)
        except TypeError:
            return NotImplemented
        x, y = self._expr, other_expr
        return Symbolic(op(y, x) if reflected else op(x, y))

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
        return Symbolic(-self._expr)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        return Symbolic(self._expr ** exponent)

    def sqrt(self) -> "Symbolic":
        return Symbolic(sympy.sqrt(self._expr))

    def simplified(self) -> "Symbolic":
        return Symbolic(sympy.factor(sympy.cancel(self._expr)))

    def is_zero(self) -> bool:
        reduced = sympy.cancel(sympy.together(self._expr))
        if reduced == 0:
            return True
        return sympy.simplify(reduced) == 0

    def __eq__(self, other):
        try:
            other_expr = to_sympy(other)
        except (TypeError, UnsupportedModeError):
            return NotImplemented
        return Symbolic(self._expr - other_expr).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return f"Symbolic({self._expr})"

    def __str__(self):
        return f"sym:{sympy.sstr(self.simplified().expr)}"
