"""Exact Gaussian-rational scalars.

The ground field at desk scale is Q(i): numbers a + b*i with rational a, b.
Every identity checked by this package is a polynomial identity over this
field, so equality is exact and "equals zero" is decidable.  There is no
floating-point mode.

Scalars serialize as strings like ``"3"``, ``"-3/4"``, ``"1/2*i"`` or
``"3/4+1/2*i"``; :func:`parse_scalar` accepts the same grammar.
"""

from __future__ import annotations

import numbers
import re as _re
from fractions import Fraction

from .errors import ParseError

_RationalLike = (int, Fraction)


class Scalar:
    """An element a + b*i of Q(i), with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- predicates ---------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    @property
    def is_zero(self):
        return not self.re and not self.im

    @property
    def is_real(self):
        return not self.im

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(other.re - self.re, other.im - self.im)

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            if not self.im and not other.im:
                return Scalar(self.re * other.re)
            a, b, c, d = self.re, self.im, other.re, other.im
            return Scalar(a * c - b * d, a * d + b * c)
        if isinstance(other, _RationalLike):
            return Scalar(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero Scalar")
        if not other.im:
            return Scalar(self.re / other.re, self.im / other.re)
        n = other.re * other.re + other.im * other.im
        a, b, c, d = self.re, self.im, other.re, other.im
        return Scalar((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__truediv__(self)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return ONE
        if n < 0:
            return (ONE / self) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        return Scalar(self.re, -self.im)

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, numbers.Rational):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"Scalar({render_scalar(self)!r})"

    def sort_key(self):
        return (self.re, self.im)


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, _RationalLike):
        return Scalar(value)
    return NotImplemented


def scalar(value) -> Scalar:
    """Coerce an int, Fraction or Scalar into a Scalar."""
    out = _coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot coerce {value!r} to Scalar")
    return out


ZERO = Scalar(0)
ONE = Scalar(1)
IMAG = Scalar(0, 1)


def _render_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render_scalar(s: Scalar) -> str:
    if not s.im:
        return _render_rational(s.re)
    if s.im == 1:
        imag = "i"
    elif s.im == -1:
        imag = "-i"
    else:
        imag = f"{_render_rational(s.im)}*i"
    if not s.re:
        return imag
    sign = "+" if s.im > 0 else "-"
    mag = abs(s.im)
    imag = "i" if mag == 1 else f"{_render_rational(mag)}*i"
    return f"{_render_rational(s.re)}{sign}{imag}"


_CHUNK = _re.compile(r"[+-][^+-]+")


def parse_scalar(text: str) -> Scalar:
    """Parse ``"a/b"`` / ``"a/b+c/d*i"`` style strings into a Scalar.

    Tolerates spaces, a Unicode minus, and ``i`` with or without the ``*``.
    """
    if isinstance(text, Scalar):
        return text
    if isinstance(text, _RationalLike):
        return Scalar(text)
    if not isinstance(text, str):
        raise ParseError(f"expected a scalar string, got {text!r}")
    s = text.strip().replace(" ", "").replace("−", "-")
    if not s:
        raise ParseError("empty scalar string")
    if s[0] not in "+-":
        s = "+" + s
    chunks = _CHUNK.findall(s)
    if "".join(chunks) != s:
        raise ParseError(f"malformed scalar {text!r}")
    re_part = im_part = None
    for chunk in chunks:
        sign = -1 if chunk[0] == "-" else 1
        body = chunk[1:]
        try:
            if body.endswith("i"):
                core = body[:-1].rstrip("*")
                value = Fraction(1) if core == "" else Fraction(core)
                if im_part is not None:
                    raise ParseError(f"two imaginary parts in {text!r}")
                im_part = sign * value
            else:
                if re_part is not None:
                    raise ParseError(f"two real parts in {text!r}")
                re_part = sign * Fraction(body)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"malformed scalar {text!r}") from exc
    return Scalar(re_part or 0, im_part or 0)
