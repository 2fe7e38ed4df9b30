"""Functions of nilpotent commuting variables.

A function of n nilpotent commuting generators e_1..e_n (e_i**2 = 0,
e_i e_j = e_j e_i, e_1...e_n != 0) is a linear combination of the 2**n
square-free monomials.  Monomials are encoded as bitmasks: bit i-1 set
means e_i is present.  The vector space is isometric to the n-qubit
state space: mask m maps to the basis ket whose qubit i reads bit i-1
of m, with qubit 1 the most significant bit of the ket string
(1 = |00>, e_1 = |10>, e_2 = |01>, e_1 e_2 = |11> for n = 2).

All values are immutable after construction and every operation is a
pure function, so instances may be shared freely across threads.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .scalars import (
    QQi,
    TOLERANCE,
    BackendError,
    ExactNormalizationError,
    coerce,
    conj,
    format_rational,
    parse_rational,
)

MAX_VARIABLES = 16


def _check_n(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_VARIABLES:
        raise ValueError(f"variable count must be an integer in 1..{MAX_VARIABLES}, got {n!r}")


class EtaFunction:
    """Sparse function of n nilpotent commuting variables.

    coeffs maps bitmask -> scalar; absent masks are zero and stored zeros
    are pruned, so equal functions have identical maps on the exact backend.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        _check_n(n)
        clean = {}
        exact = True
        items = coeffs.items() if coeffs else ()
        for mask, value in items:
            if not 0 <= mask < (1 << n):
                raise ValueError(f"mask {mask} out of range for n={n}")
            c = coerce(value)
            if isinstance(c, complex):
                exact = False
            if c == 0:
                continue
            clean[mask] = c
        if not exact:
            clean = {m: complex(c) for m, c in clean.items() if complex(c) != 0}
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("EtaFunction is immutable")

    # -- backend ---------------------------------------------------------
    @property
    def exact(self) -> bool:
        return all(isinstance(c, QQi) for c in self.coeffs.values())

    def to_float(self) -> "EtaFunction":
        return EtaFunction(self.n, {m: complex(c) for m, c in self.coeffs.items()})

    # -- ring structure ----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, EtaFunction):
            if other.n != self.n:
                raise ValueError(f"mismatched variable counts {self.n} != {other.n}")
            out = dict(self.coeffs)
            for m, c in other.coeffs.items():
                out[m] = out.get(m, 0) + c
            return EtaFunction(self.n, out)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, EtaFunction):
            return self + (-1) * other
        return NotImplemented

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        if isinstance(scalar, EtaFunction):
            return NotImplemented
        return scale(scalar, self)

    def __mul__(self, other):
        if isinstance(other, EtaFunction):
            return multiply(self, other)
        return scale(other, self)

    def __eq__(self, other):
        if not isinstance(other, EtaFunction):
            return NotImplemented
        if self.n != other.n:
            return False
        if self.exact and other.exact:
            return self.coeffs == other.coeffs
        return self.allclose(other)

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def allclose(self, other: "EtaFunction", tol: float = TOLERANCE) -> bool:
        if self.n != other.n:
            return False
        masks = set(self.coeffs) | set(other.coeffs)
        return all(
            abs(complex(self.coeffs.get(m, 0)) - complex(other.coeffs.get(m, 0))) <= tol
            for m in masks
        )

    def __repr__(self):
        if not self.coeffs:
            return f"EtaFunction({self.n}, 0)"
        parts = []
        for m in sorted(self.coeffs):
            mono = monomial_name(m) or "1"
            parts.append(f"({self.coeffs[m]})*{mono}")
        return f"EtaFunction({self.n}, {' + '.join(parts)})"

    def constant_term(self):
        return self.coeffs.get(0, QQi(0) if self.exact else 0j)

    def is_zero(self) -> bool:
        return not self.coeffs


@dataclass(frozen=True)
class AmplitudeVector:
    """Dense n-qubit amplitudes indexed by the ket string b1..bn (qubit 1 = MSB)."""

    n: int
    amps: tuple

    def __post_init__(self):
        if len(self.amps) != 1 << self.n:
            raise ValueError(f"need {1 << self.n} amplitudes, got {len(self.amps)}")


def monomial_name(mask: int) -> str:
    """Human-readable monomial for a bitmask, e.g. 0b101 -> 'e1*e3'."""
    return "*".join(f"e{i + 1}" for i in range(mask.bit_length()) if mask >> i & 1)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def unit(n: int, value=1) -> EtaFunction:
    """The constant function value*1."""
    return EtaFunction(n, {0: value})


def variable(n: int, i: int) -> EtaFunction:
    """The generator e_i as a function of n variables (1-based index)."""
    _check_n(n)
    if not isinstance(i, int) or not 1 <= i <= n:
        raise ValueError(f"variable index {i} out of range 1..{n}")
    return EtaFunction(n, {1 << (i - 1): 1})


def variables_sum(n: int) -> EtaFunction:
    """e_1 + ... + e_n."""
    return EtaFunction(n, {1 << i: 1 for i in range(n)})


# ---------------------------------------------------------------------------
# ring operations
# ---------------------------------------------------------------------------

def add(f: EtaFunction, g: EtaFunction) -> EtaFunction:
    return f + g


def scale(c, f: EtaFunction) -> EtaFunction:
    c = coerce(c)
    return EtaFunction(f.n, {m: c * v for m, v in f.coeffs.items()})


def multiply(f: EtaFunction, g: EtaFunction) -> EtaFunction:
    """Bilinear product; e^I * e^J = 0 when I and J overlap, else e^(I|J)."""
    if f.n != g.n:
        raise ValueError(f"mismatched variable counts {f.n} != {g.n}")
    out = {}
    for m1, c1 in f.coeffs.items():
        for m2, c2 in g.coeffs.items():
            if m1 & m2:
                continue
            m = m1 | m2
            out[m] = out.get(m, 0) + c1 * c2
    return EtaFunction(f.n, out)


def conjugate(f: EtaFunction) -> EtaFunction:
    """Complex-conjugate every coefficient; monomials are untouched."""
    return EtaFunction(f.n, {m: conj(c) for m, c in f.coeffs.items()})


def inner_product(f: EtaFunction, g: EtaFunction):
    """<f, g> = sum over masks of conj(f_m) g_m (conjugate-linear in f)."""
    if f.n != g.n:
        raise ValueError(f"mismatched variable counts {f.n} != {g.n}")
    exact = f.exact and g.exact
    total = QQi(0) if exact else 0j
    for m, c in f.coeffs.items():
        other = g.coeffs.get(m)
        if other is not None:
            if exact:
                total = total + conj(c) * other
            else:
                total = total + complex(c).conjugate() * complex(other)
    return total


def norm_sq(f: EtaFunction):
    """<f, f>, returned as an exact Fraction or a float (always real >= 0)."""
    if f.exact:
        return sum((c.abs2() for c in f.coeffs.values()), Fraction(0))
    return sum(abs(complex(c)) ** 2 for c in f.coeffs.values())


def normalize(f: EtaFunction) -> EtaFunction:
    """Divide by the norm.  Float backend only; the exact backend defers to
    degree-aware invariant scaling because the norm is generally irrational."""
    ns = norm_sq(f)
    if ns == 0:
        raise ValueError("cannot normalize the zero function")
    if f.exact:
        raise ExactNormalizationError(
            "normalize() is unavailable on the exact backend: "
            "use degree-aware normalization (invariants.normalized_invariant)")
    r = math.sqrt(ns)
    return EtaFunction(f.n, {m: complex(c) / r for m, c in f.coeffs.items()})


def hodge_dual(f: EtaFunction) -> EtaFunction:
    """Send each monomial to the complementary variable set, coefficient kept."""
    full = (1 << f.n) - 1
    return EtaFunction(f.n, {full ^ m: c for m, c in f.coeffs.items()})


# ---------------------------------------------------------------------------
# analytic (series) functions
# ---------------------------------------------------------------------------

_SERIES_KINDS = ("cos", "sin", "exp")

# derivative cycles of cos/sin at 0 (period 4) as exact integers
_COS_CYCLE = (1, 0, -1, 0)
_SIN_CYCLE = (0, 1, 0, -1)


def apply_series(f: EtaFunction, kind: str, strict: bool = True) -> EtaFunction:
    """Evaluate cos/sin/exp of an eta-function via the terminating Taylor series.

    Split f = f0 + N with f0 the constant term; N is nilpotent with
    N**(n+1) = 0, so the series at f0 has at most n+1 terms.  With f0 = 0
    on the exact backend the result is exact (derivatives at 0 are 0, +-1).
    A nonzero exact f0 needs cos/sin/exp of a rational, which is irrational:
    strict=True raises, strict=False falls back to the float backend.
    """
    if kind not in _SERIES_KINDS:
        raise ValueError(f"unknown series kind {kind!r}; expected one of {_SERIES_KINDS}")
    f0 = f.constant_term()
    exact = f.exact
    if exact and f0 != 0:
        if strict:
            raise BackendError(
                f"{kind} of an exact function with nonzero constant term is "
                "irrational; pass strict=False or use the float backend")
        f = f.to_float()
        f0 = f.constant_term()
        exact = False

    nilpotent = EtaFunction(f.n, {m: c for m, c in f.coeffs.items() if m != 0})

    if exact:
        derivs = _exact_derivs(kind, f.n)
    else:
        derivs = _float_derivs(kind, complex(f0), f.n)

    total = unit(f.n, derivs[0]) if not _is_zero_scalar(derivs[0]) else EtaFunction(f.n)
    power = unit(f.n, 1 if exact else 1.0)
    kfact = Fraction(1)
    for k in range(1, f.n + 1):
        power = multiply(power, nilpotent)
        if power.is_zero():
            break
        kfact *= k
        coef = derivs[k]
        if _is_zero_scalar(coef):
            continue
        term_scale = coef / kfact if not exact else QQi(Fraction(coef, 1) / kfact)
        total = total + scale(term_scale, power)
    return total


def _is_zero_scalar(x) -> bool:
    return x == 0


def _exact_derivs(kind: str, n: int):
    if kind == "exp":
        return [1] * (n + 1)
    cyc = _COS_CYCLE if kind == "cos" else _SIN_CYCLE
    return [cyc[k % 4] for k in range(n + 1)]


def _float_derivs(kind: str, f0: complex, n: int):
    if kind == "exp":
        e = cmath.exp(f0)
        return [e] * (n + 1)
    c, s = cmath.cos(f0), cmath.sin(f0)
    if kind == "cos":
        cyc = (c, -s, -c, s)
    else:
        cyc = (s, c, -s, -c)
    return [cyc[k % 4] for k in range(n + 1)]


# ---------------------------------------------------------------------------
# binary-basis correspondence
# ---------------------------------------------------------------------------

def amp_index(mask: int, n: int) -> int:
    """Ket index of a monomial mask: qubit i (MSB first) reads bit i-1.

    Bit reversal in width n; an involution, so it also maps ket -> mask.
    """
    out = 0
    for i in range(n):
        if mask >> i & 1:
            out |= 1 << (n - 1 - i)
    return out


def to_amplitudes(f: EtaFunction) -> AmplitudeVector:
    size = 1 << f.n
    amps = [QQi(0) if f.exact else 0j] * size
    for m, c in f.coeffs.items():
        amps[amp_index(m, f.n)] = c
    return AmplitudeVector(f.n, tuple(amps))


def from_amplitudes(vec) -> EtaFunction:
    if isinstance(vec, AmplitudeVector):
        n, amps = vec.n, vec.amps
    else:
        amps = list(vec)
        size = len(amps)
        n = size.bit_length() - 1
        if 1 << n != size:
            raise ValueError(f"amplitude count {size} is not a power of two")
    coeffs = {}
    for ket, value in enumerate(amps):
        coeffs[amp_index(ket, n)] = value
    return EtaFunction(n, coeffs)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def to_json_dict(f: EtaFunction) -> dict:
    """JSON form {"n": n, "coeffs": {mask: [re, im]}}; exact parts as 'p/q'."""
    coeffs = {}
    for m in sorted(f.coeffs):
        c = f.coeffs[m]
        if isinstance(c, QQi):
            coeffs[str(m)] = [format_rational(c.re), format_rational(c.im)]
        else:
            coeffs[str(m)] = [c.real, c.imag]
    return {"n": f.n, "coeffs": coeffs}


def from_json_dict(data: dict) -> EtaFunction:
    coeffs = {}
    for key, (re, im) in data["coeffs"].items():
        if isinstance(re, str) or isinstance(im, str):
            coeffs[int(key)] = QQi(parse_rational(str(re)), parse_rational(str(im)))
        else:
            coeffs[int(key)] = complex(re, im)
    return EtaFunction(int(data["n"]), coeffs)
