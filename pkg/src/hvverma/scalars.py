"""Exact arithmetic in Q and in real quadratic fields Q(sqrt d).

A :class:`FieldScalar` is ``a + b*sqrt(d)`` with ``a``, ``b`` rational and
``d`` a square-free positive integer.  ``d == 1`` marks a plain rational, and
any scalar with ``b == 0`` is normalised to ``d == 1`` so that equality is
plain tuple equality of the canonical form.

Text form is ``p/q+r/s√d`` with reduced fractions, the radical coefficient
omitted when it is 1, e.g. ``-1+√2``, ``3-2√2``, ``1/2√3``.  ``sqrt`` is
accepted in place of ``√`` when parsing.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import FieldMismatchError, ParseError


@lru_cache(maxsize=None)
def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


class FieldScalar:
    __slots__ = ("a", "b", "d", "_hash")

    def __init__(self, a=0, b=0, d: int = 1):
        a = Fraction(a)
        b = Fraction(b)
        if d != 1 and not is_squarefree(d):
            raise ValueError(f"radicand must be square-free and positive, got {d}")
        if d < 1:
            raise ValueError(f"radicand must be positive, got {d}")
        if d == 1:
            a, b = a + b, Fraction(0)
        elif b == 0:
            d = 1
        self.a = a
        self.b = b
        self.d = d
        self._hash = None

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> FieldScalar:
        # trusted constructor: a, b already Fractions, d already validated
        obj = object.__new__(cls)
        if b == 0:
            d = 1
        obj.a = a
        obj.b = b
        obj.d = d
        obj._hash = None
        return obj

    @classmethod
    def sqrt(cls, d: int) -> FieldScalar:
        """The scalar ``sqrt(d)``; ``d`` may carry square factors."""
        if d < 1:
            raise ValueError("only real square roots of positive integers")
        k = 1
        core = d
        f = 2
        while f * f <= core:
            while core % (f * f) == 0:
                core //= f * f
                k *= f
            f += 1
        if core == 1:
            return cls(k)
        return cls(0, k, core)

    # -- coercion -------------------------------------------------------
    @staticmethod
    def coerce(x) -> FieldScalar:
        if isinstance(x, FieldScalar):
            return x
        if isinstance(x, (int, Fraction, Rational)):
            return FieldScalar._raw(Fraction(x), Fraction(0), 1)
        if isinstance(x, str):
            return parse_scalar(x)
        raise TypeError(f"cannot interpret {x!r} as a field scalar")

    @staticmethod
    def _common_d(x: FieldScalar, y: FieldScalar) -> int:
        if x.d == 1:
            return y.d
        if y.d == 1 or y.d == x.d:
            return x.d
        raise FieldMismatchError(f"cannot combine elements of Q(√{x.d}) and Q(√{y.d})")

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        try:
            o = FieldScalar.coerce(other)
        except TypeError:
            return NotImplemented
        d = FieldScalar._common_d(self, o)
        return FieldScalar._raw(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return FieldScalar._raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = FieldScalar.coerce(other)
        except TypeError:
            return NotImplemented
        d = FieldScalar._common_d(self, o)
        return FieldScalar._raw(self.a - o.a, self.b - o.b, d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldScalar._raw(self.a * other, self.b * other, self.d)
        try:
            o = FieldScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if o.d == 1:
            return FieldScalar._raw(self.a * o.a, self.b * o.a, self.d)
        if self.d == 1:
            return FieldScalar._raw(self.a * o.a, self.a * o.b, o.d)
        d = FieldScalar._common_d(self, o)
        return FieldScalar._raw(self.a * o.a + d * self.b * o.b, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def inverse(self) -> FieldScalar:
        if self.b == 0:
            if self.a == 0:
                raise ZeroDivisionError("inverse of zero")
            return FieldScalar._raw(1 / self.a, Fraction(0), 1)
        norm = self.a * self.a - self.d * self.b * self.b
        return FieldScalar._raw(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        try:
            o = FieldScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return FieldScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def sign(self) -> int:
        """Sign under the real embedding ``sqrt(d) > 0``."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        sb = 1 if b > 0 else -1
        if a == 0:
            return sb
        sa = 1 if a > 0 else -1
        if sa == sb:
            return sa
        # opposite signs: the larger magnitude wins, a^2 vs d*b^2 never tie
        return sa if a * a > self.d * b * b else sb

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    # -- comparison (real embedding) -------------------------------------
    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.a) if self.b == 0 else hash((self.a, self.b, self.d))
        return self._hash

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    # -- text -----------------------------------------------------------
    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"FieldScalar({format_scalar(self)!r})"


ZERO = FieldScalar._raw(Fraction(0), Fraction(0), 1)
ONE = FieldScalar._raw(Fraction(1), Fraction(0), 1)


def _frac(q: Fraction) -> str:
    return str(q)


def format_scalar(x: FieldScalar) -> str:
    if x.b == 0:
        return _frac(x.a)
    coef = abs(x.b)
    rad = ("" if coef == 1 else _frac(coef)) + f"√{x.d}"
    if x.a == 0:
        return ("-" if x.b < 0 else "") + rad
    return f"{_frac(x.a)}{'-' if x.b < 0 else '+'}{rad}"


_TERM = re.compile(r"^(?P<sign>[+-]?)(?P<num>\d+(?:/\d+)?)?(?:\*?√(?P<rad>\d+))?$")


def _parse_term(term: str, whole: str) -> FieldScalar:
    m = _TERM.match(term)
    if not m or (m.group("num") is None and m.group("rad") is None):
        raise ParseError("malformed scalar term", whole, whole.find(term) if term else 0)
    sign = -1 if m.group("sign") == "-" else 1
    num = Fraction(m.group("num")) if m.group("num") is not None else Fraction(1)
    if m.group("num") is not None and num.denominator == 0:
        raise ParseError("zero denominator", whole)
    if m.group("rad") is None:
        return FieldScalar(sign * num)
    d = int(m.group("rad"))
    if d == 0:
        return ZERO
    return FieldScalar.sqrt(d) * (sign * num)


def parse_scalar(text: str) -> FieldScalar:
    """Parse ``p/q+r/s√d`` style text (also ``sqrt(d)``, ``2*sqrt2``)."""
    s = text.strip().replace(" ", "")
    s = re.sub(r"sqrt\(?(\d+)\)?", r"√\1", s)
    s = re.sub(r"√\((\d+)\)", r"√\1", s)
    if not s:
        raise ParseError("empty scalar", text, 0)
    try:
        # split before every sign that is not in leading position
        parts = re.split(r"(?<=.)(?=[+-])", s)
        if len(parts) > 2:
            raise ParseError("too many terms in scalar", text)
        value = ZERO
        for part in parts:
            value = value + _parse_term(part, text)
        return value
    except (ZeroDivisionError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc), text) from exc


def as_scalar(x) -> FieldScalar:
    return FieldScalar.coerce(x)
