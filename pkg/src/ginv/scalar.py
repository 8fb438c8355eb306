"""Exact arithmetic in Q(i), the field of Gaussian rationals.

A value is a pair of arbitrary-precision rationals (real and imaginary
part).  The rational substrate is ``gmpy2.mpq`` when available (a C
implementation with the same contract: values are always stored reduced
with a positive denominator, so scalar equality is structural) and falls
back to ``fractions.Fraction``.  Set ``GINV_PURE_PYTHON=1`` to force the
stdlib path; ``scripts/benchmark_substrate.py`` compares the two.

The text form of a scalar is fixed by one grammar, shared with the matrix
document format of :mod:`ginv.cli`:

    scalar := real | imag | real sign uimag
    real   := rat
    imag   := ['-'] urat 'i' | ['-'] 'i'        (bare 'i' on input only)
    uimag  := urat 'i'
    rat    := ['-'] urat
    urat   := digits ['/' nonzero-digits]

Canonical output is reduced, omits a denominator of 1 and a zero imaginary
part, renders zero as "0", and always writes the imaginary coefficient
explicitly ("1+1i", "-2/3i").
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Union

from .errors import ParseError

if os.environ.get("GINV_PURE_PYTHON"):
    _Q = Fraction
    SUBSTRATE = "fractions.Fraction"
else:
    try:
        from gmpy2 import mpq as _Q

        SUBSTRATE = "gmpy2.mpq"
    except ImportError:  # pragma: no cover - exercised via GINV_PURE_PYTHON
        _Q = Fraction
        SUBSTRATE = "fractions.Fraction"

_Q_ZERO = _Q(0)
_Q_ONE = _Q(1)
_RATIONAL = (int, Fraction, type(_Q_ZERO))

RationalLike = Union[int, Fraction]
ScalarLike = Union["GaussianRational", int, Fraction]


class GaussianRational:
    """An element of Q(i), immutable by convention and always reduced."""

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        self.re = _Q(re)
        self.im = _Q(im)

    @classmethod
    def _raw(cls, re, im) -> "GaussianRational":
        # internal fast path: arguments are already substrate rationals
        z = object.__new__(cls)
        z.re = re
        z.im = im
        return z

    # -- field operations -------------------------------------------------

    def __add__(self, other: ScalarLike) -> "GaussianRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "GaussianRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: ScalarLike) -> "GaussianRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: ScalarLike) -> "GaussianRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.im and not other.im:
            return GaussianRational._raw(self.re * other.re, _Q_ZERO)
        return GaussianRational._raw(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "GaussianRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other.im:
            if not other.re:
                raise ZeroDivisionError("division by zero in Q(i)")
            return GaussianRational._raw(self.re / other.re, self.im / other.re)
        n = other.re * other.re + other.im * other.im
        return GaussianRational._raw(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other: ScalarLike) -> "GaussianRational":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self) -> "GaussianRational":
        return self

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _RATIONAL):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def norm2(self):
        """re^2 + im^2; zero exactly when the scalar is zero."""
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        return scalar_format(self)

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"


def _coerce(value: ScalarLike) -> GaussianRational | None:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, _RATIONAL):
        return GaussianRational._raw(_Q(value), _Q_ZERO)
    return None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I_UNIT = GaussianRational(0, 1)


def scalar_arith(op: str, lhs: ScalarLike, rhs: ScalarLike) -> GaussianRational:
    """Dispatch one exact field operation: add, sub, mul or div."""
    a, b = _coerce(lhs), _coerce(rhs)
    if a is None or b is None:
        raise TypeError("operands must be Gaussian rationals")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown scalar operation {op!r}")


def scalar_conjugate(z: ScalarLike) -> GaussianRational:
    z = _coerce(z)
    if z is None:
        raise TypeError("operand must be a Gaussian rational")
    return z.conjugate()


# -- parsing ---------------------------------------------------------------


def scalar_parse(token: str) -> GaussianRational:
    """Parse one scalar token; raise ParseError with a character offset."""
    if not isinstance(token, str):
        raise ParseError("scalar token must be text")
    if token == "":
        raise ParseError("empty scalar token", offset=0)

    pos = 0
    negative = token.startswith("-")
    if negative:
        pos = 1

    # bare imaginary unit: 'i' or '-i'
    if pos < len(token) and token[pos] == "i":
        if pos + 1 != len(token):
            raise ParseError("trailing characters after 'i'", offset=pos + 1)
        return GaussianRational(0, -1 if negative else 1)

    first, pos = _parse_urat(token, pos)
    if negative:
        first = -first

    if pos == len(token):
        return GaussianRational(first)

    if token[pos] == "i":
        if pos + 1 != len(token):
            raise ParseError("trailing characters after 'i'", offset=pos + 1)
        return GaussianRational(0, first)

    if token[pos] in "+-":
        sign = 1 if token[pos] == "+" else -1
        pos += 1
        mag, pos = _parse_urat(token, pos)
        if pos == len(token) or token[pos] != "i":
            raise ParseError("expected 'i' to close the imaginary part", offset=pos)
        if pos + 1 != len(token):
            raise ParseError("trailing characters after 'i'", offset=pos + 1)
        return GaussianRational(first, sign * mag)

    raise ParseError(f"unexpected character {token[pos]!r}", offset=pos)


def _parse_urat(token: str, pos: int):
    start = pos
    while pos < len(token) and token[pos].isdigit():
        pos += 1
    if pos == start:
        got = token[pos] if pos < len(token) else "end of token"
        raise ParseError(f"expected digits, got {got!r}", offset=pos)
    numerator = int(token[start:pos])
    if pos < len(token) and token[pos] == "/":
        pos += 1
        dstart = pos
        while pos < len(token) and token[pos].isdigit():
            pos += 1
        if pos == dstart:
            raise ParseError("expected digits after '/'", offset=pos)
        denominator = int(token[dstart:pos])
        if denominator == 0:
            raise ParseError("zero denominator", offset=dstart)
        return _Q(numerator, denominator), pos
    return _Q(numerator), pos


# -- formatting ------------------------------------------------------------


def scalar_format(z: ScalarLike) -> str:
    """Canonical text for a scalar; inverse of scalar_parse on its output."""
    z = _coerce(z)
    if z is None:
        raise TypeError("operand must be a Gaussian rational")
    if not z.im:
        return str(z.re)
    if not z.re:
        return f"{z.im}i"
    sign = "+" if z.im > 0 else "-"
    return f"{z.re}{sign}{abs(z.im)}i"
