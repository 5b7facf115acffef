"""Exact arithmetic in Q and in real quadratic fields Q(sqrt(d)).

Every coordinate handled by the package is a :class:`Scalar`, i.e. a value
``a + b*sqrt(d)`` with rational ``a`` and ``b``.  Nothing is ever rounded;
floats appear only in :meth:`Scalar.approx`, which is for display.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Optional, Union

__all__ = [
    "FieldSpec",
    "RATIONAL",
    "Scalar",
    "MixedFieldError",
    "ScalarSyntaxError",
    "scalar_parse",
    "scalar_format",
    "scalar_sign",
    "rational_embedding",
    "common_field",
]


class MixedFieldError(ValueError):
    """Raised when two scalars from different quadratic fields meet."""


class ScalarSyntaxError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        self.text = text
        self.pos = pos
        super().__init__(f"{msg} at position {pos} in {text!r}")


def _squarefree(d: int) -> bool:
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coordinate field: ``Q`` when ``d`` is None, else ``Q(sqrt(d))``."""

    d: Optional[int] = None

    def __post_init__(self):
        if self.d is not None:
            if not isinstance(self.d, int) or self.d < 2 or not _squarefree(self.d):
                raise ValueError(f"sqrt field needs a squarefree integer >= 2, got {self.d!r}")

    @property
    def is_rational(self) -> bool:
        return self.d is None

    def __str__(self) -> str:
        return "Q" if self.d is None else f"Q(sqrt{self.d})"


RATIONAL = FieldSpec()


def common_field(f1: FieldSpec, f2: FieldSpec) -> FieldSpec:
    if f1 == f2 or f2.d is None:
        return f1
    if f1.d is None:
        return f2
    raise MixedFieldError(f"cannot combine {f1} and {f2}")


RationalLike = Union[int, Fraction]


class Scalar:
    """Immutable element ``a + b*sqrt(d)`` of ``Q`` or ``Q(sqrt(d))``.

    Rational scalars (``b == 0``) combine freely with any quadratic field;
    scalars from two different quadratic fields cannot be mixed.
    """

    __slots__ = ("a", "b", "field")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0, field: FieldSpec = RATIONAL):
        a = Fraction(a)
        b = Fraction(b)
        if field.d is None and b != 0:
            raise ValueError("sqrt part must vanish in the rational field")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- construction helpers -------------------------------------------

    @classmethod
    def sqrt(cls, field: FieldSpec) -> "Scalar":
        return cls(0, 1, field)

    def _coerce(self, other) -> Optional["Scalar"]:
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Rational)):
            return Scalar(Fraction(other), 0, self.field)
        return None

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def d(self) -> Optional[int]:
        return self.field.d

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.a + o.a, self.b + o.b, common_field(self.field, o.field))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b, self.field)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.a - o.a, self.b - o.b, common_field(self.field, o.field))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = common_field(self.field, o.field)
        if self.b == 0 or o.b == 0:
            return Scalar(self.a * o.a, self.a * o.b + self.b * o.a, f)
        return Scalar(self.a * o.a + self.b * o.b * f.d, self.a * o.b + self.b * o.a, f)

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        return Scalar(self.a, -self.b, self.field)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - b^2 d`` (nonzero for nonzero elements)."""
        if self.b == 0:
            return self.a * self.a
        return self.a * self.a - self.b * self.b * self.field.d

    def inverse(self) -> "Scalar":
        if self.a == 0 and self.b == 0:
            raise ZeroDivisionError("Scalar division by zero")
        if self.b == 0:
            return Scalar(1 / self.a, 0, self.field)
        nrm = self.norm()
        return Scalar(self.a / nrm, -self.b / nrm, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        common_field(self.field, o.field)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- order ----------------------------------------------------------

    def sign(self) -> int:
        return scalar_sign(self)

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare Scalar with {type(other).__name__}")
        return (self - o).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.b == 0 and o.b == 0:
            return self.a == o.a
        return self.a == o.a and self.b == o.b and self.field == o.field

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.field.d))

    def floor(self) -> int:
        """Exact floor, seeded from a float estimate and corrected exactly."""
        if self.b == 0:
            return math.floor(self.a)
        k = math.floor(self.approx())
        while Scalar(k) > self:
            k -= 1
        while Scalar(k + 1) <= self:
            k += 1
        return k

    def frac(self) -> "Scalar":
        """Canonical representative of ``self`` modulo 1, in ``[0, 1)``."""
        return self - self.floor()

    def approx(self) -> float:
        if self.b == 0:
            return float(self.a)
        return float(self.a) + float(self.b) * math.sqrt(self.field.d)

    __float__ = approx

    def __repr__(self):
        if self.field.d is None:
            return f"Scalar({scalar_format(self)!r})"
        return f"Scalar({scalar_format(self)!r}, d={self.field.d})"

    def __str__(self):
        return scalar_format(self)


def scalar_sign(x: Scalar) -> int:
    """Exact sign of ``a + b*sqrt(d)`` without floating point."""
    sa = (x.a > 0) - (x.a < 0)
    sb = (x.b > 0) - (x.b < 0)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: the larger square wins; equality is impossible for squarefree d
    return sa if x.a * x.a > x.b * x.b * x.field.d else sb


def rational_embedding(x: Scalar) -> tuple[Fraction, Fraction]:
    """Coordinates of ``x`` in the Q-basis ``{1, sqrt(d)}``."""
    return (x.a, x.b)


def _format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def scalar_format(x: Scalar) -> str:
    """Render in the spec-file grammar, e.g. ``3``, ``-1/2``, ``1+2/3s``."""
    head = _format_fraction(x.a)
    if x.b == 0:
        return head
    sign = "-" if x.b < 0 else "+"
    return f"{head}{sign}{_format_fraction(abs(x.b))}s"


_TERM = re.compile(r"-?(\d+)(?:/(\d+))?")


def _parse_term(text: str, pos: int) -> tuple[Fraction, int]:
    m = _TERM.match(text, pos)
    if m is None:
        if text.startswith("-", pos):
            pos += 1
        raise ScalarSyntaxError(text, pos, "expected a number")
    num = int(m.group(1))
    if m.group(2) is not None:
        den = int(m.group(2))
        if den == 0:
            raise ScalarSyntaxError(text, m.start(2), "zero denominator")
    else:
        den = 1
    value = Fraction(num, den)
    if text[pos] == "-":
        value = -value
    return value, m.end()


def scalar_parse(text: str, field: FieldSpec = RATIONAL) -> Scalar:
    """Parse ``term`` or ``term (+|-) term "s"`` where ``s`` stands for sqrt(d)."""
    a, pos = _parse_term(text, 0)
    if pos == len(text):
        return Scalar(a, 0, field)
    if text[pos] not in "+-":
        raise ScalarSyntaxError(text, pos, "expected '+' or '-'")
    sign = -1 if text[pos] == "-" else 1
    b, pos = _parse_term(text, pos + 1)
    if pos >= len(text) or text[pos] != "s":
        raise ScalarSyntaxError(text, pos, "expected 's' after sqrt coefficient")
    if pos + 1 != len(text):
        raise ScalarSyntaxError(text, pos + 1, "trailing characters")
    if field.d is None:
        raise ScalarSyntaxError(text, pos, "sqrt term used without a 'sqrt' declaration")
    return Scalar(a, sign * b, field)
