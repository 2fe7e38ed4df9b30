"""Scalar backends: exact Gaussian rationals and double-precision complex.

Every coefficient in this package is either a :class:`QQi` (exact backend)
or a built-in ``complex`` (float backend).  Arithmetic code elsewhere is
written generically against ``+ - * /`` so the same routines run on both
backends; integer and ``Fraction`` literals mix freely with ``QQi``.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

#: default absolute tolerance for float-backend comparisons
TOLERANCE = 1e-12


class BackendError(ValueError):
    """An operation was requested that the scalar backend cannot perform."""


class ExactNormalizationError(BackendError):
    """Square-root normalization refused on the exact backend.

    Exact values are reached through degree-aware invariant scaling instead
    (divide a degree-d invariant by norm_sq**(d/2)); see the invariants module.
    """


class QQi:
    """Gaussian rational scalar: ``re + im*1j`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("QQi is immutable")

    # -- constructors ---------------------------------------------------
    @staticmethod
    def from_value(value) -> "QQi":
        """Coerce an int/Fraction/QQi into a QQi; reject floats."""
        if isinstance(value, QQi):
            return value
        if isinstance(value, Rational):
            return QQi(value)
        raise BackendError(f"cannot represent {value!r} exactly")

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QQi):
            return other
        if isinstance(other, Rational):
            return QQi(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QQi(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QQi(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QQi(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QQi(self.re * o.re - self.im * o.im,
                   self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero QQi")
        return QQi((self.re * o.re + self.im * o.im) / d,
                   (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return QQi(-self.re, -self.im)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = QQi(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "QQi":
        return QQi(self.re, -self.im)

    # -- queries -----------------------------------------------------------
    def abs2(self) -> Fraction:
        """Exact squared modulus."""
        return self.re * self.re + self.im * self.im

    def abs_exact(self) -> Fraction:
        """Exact modulus, defined when the value is real or pure imaginary."""
        if self.im == 0:
            return abs(self.re)
        if self.re == 0:
            return abs(self.im)
        raise BackendError(
            "modulus of a full complex rational is irrational; use the float backend")

    def is_real(self) -> bool:
        return self.im == 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __complex__(self):
        return float(self.re) + 1j * float(self.im)

    def __repr__(self):
        if self.im == 0:
            return f"QQi({self.re})"
        return f"QQi({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        if self.re == 0:
            return f"{format_rational(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{format_rational(self.re)}{sign}{format_rational(abs(self.im))}i"


ZERO = QQi(0)
ONE = QQi(1)
I = QQi(0, 1)


def coerce(value):
    """Map an arbitrary numeric literal into a backend scalar.

    ints, Fractions and QQi stay exact; float/complex become complex.
    """
    if isinstance(value, QQi):
        return value
    if isinstance(value, Rational):
        return QQi(value)
    if isinstance(value, (float, complex)):
        return complex(value)
    raise TypeError(f"unsupported scalar {value!r}")


def is_exact(value) -> bool:
    return isinstance(value, (QQi, Rational))


def to_complex(value) -> complex:
    return complex(value)


def conj(value):
    if isinstance(value, QQi):
        return value.conjugate()
    if isinstance(value, Rational):
        return value
    return value.conjugate()


def scalars_close(x, y, tol: float = TOLERANCE) -> bool:
    """Backend-aware equality: exact if both exact, tolerance otherwise."""
    if is_exact(x) and is_exact(y):
        return QQi.from_value(x) == QQi.from_value(y)
    return abs(complex(x) - complex(y)) <= tol


def format_rational(q: Fraction) -> str:
    """Render an exact rational as 'p' or 'p/q'."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse 'p' or 'p/q' into a Fraction."""
    return Fraction(text.strip())
