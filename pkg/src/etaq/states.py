"""Named multiqubit states in eta-function form.

Every constructor returns an unnormalized exact representative together
with its exact squared norm; normalization happens only in float contexts
or through degree-aware invariant scaling.  The trigonometric states are
built by running the series expansion, never keyed in twice.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import algebra
from .algebra import EtaFunction, apply_series, hodge_dual, multiply, norm_sq, scale, unit, variable, variables_sum
from .scalars import coerce, is_exact, scalars_close


@dataclass(frozen=True)
class NamedState:
    """An unnormalized representative plus its squared norm."""

    label: str
    fn: EtaFunction
    norm_sq: object

    def __post_init__(self):
        actual = norm_sq(self.fn)
        if is_exact(actual) and is_exact(self.norm_sq):
            if Fraction(actual) != Fraction(self.norm_sq):
                raise ValueError(f"{self.label}: norm_sq {self.norm_sq} != <fn,fn> = {actual}")
        elif not scalars_close(actual, self.norm_sq):
            raise ValueError(f"{self.label}: norm_sq {self.norm_sq} != <fn,fn> = {actual}")

    def normalized_amplitudes(self) -> list:
        """Float amplitudes of the unit-normalized state."""
        r = math.sqrt(float(self.norm_sq))
        return [complex(a) / r for a in algebra.to_amplitudes(self.fn).amps]


@dataclass(frozen=True)
class FamilyParams:
    """Parameters (a, b, c, d) of the generic four-qubit family."""

    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        vals = (self.a, self.b, self.c, self.d)
        if all(complex(coerce(v)) == 0 for v in vals):
            raise ValueError("family parameters must not all vanish")


def _named(label: str, fn: EtaFunction) -> NamedState:
    return NamedState(label, fn, norm_sq(fn))


# ---------------------------------------------------------------------------
# canonical states
# ---------------------------------------------------------------------------

def ghz(n: int) -> NamedState:
    """1 - e1 e2 for n=2 (the cos form), 1 + e1..en for n=3,4."""
    if n not in (2, 3, 4):
        raise ValueError(f"ghz: unsupported qubit count {n}")
    top = (1 << n) - 1
    sign = -1 if n == 2 else 1
    return _named(f"GHZ{n}", EtaFunction(n, {0: 1, top: sign}))


def w(n: int) -> NamedState:
    """Sum of the single variables."""
    if n not in (2, 3, 4):
        raise ValueError(f"w: unsupported qubit count {n}")
    return _named(f"W{n}", variables_sum(n))


def cw(n: int) -> NamedState:
    """Uniform sum of the weight-2 monomials (cluster-Werner state)."""
    if n not in (3, 4):
        raise ValueError(f"cw: unsupported qubit count {n}")
    coeffs = {}
    for i in range(n):
        for j in range(i + 1, n):
            coeffs[(1 << i) | (1 << j)] = 1
    return _named(f"CW{n}", EtaFunction(n, coeffs))


def star_w(n: int = 4) -> NamedState:
    """Hodge dual of the n=4 W state (uniform weight-3 sum)."""
    if n != 4:
        raise ValueError("star_w is defined for n=4 only")
    return _named("STARW4", hodge_dual(w(4).fn))


def psi_c(n: int) -> NamedState:
    """cos(e1 + ... + en), unnormalized."""
    if n not in (2, 3, 4):
        raise ValueError(f"psi_c: unsupported qubit count {n}")
    return _named(f"PSIC{n}", apply_series(variables_sum(n), "cos"))


def psi_s(n: int) -> NamedState:
    """sin(e1 + ... + en), unnormalized."""
    if n not in (2, 3, 4):
        raise ValueError(f"psi_s: unsupported qubit count {n}")
    return _named(f"PSIS{n}", apply_series(variables_sum(n), "sin"))


def psi_cs() -> NamedState:
    """cos(e1 e2 + e3 e4) + sin(e1 e2 + e3 e4) = 1 + e1e2 + e3e4 - e1e2e3e4."""
    arg = multiply(variable(4, 1), variable(4, 2)) + multiply(variable(4, 3), variable(4, 4))
    fn = apply_series(arg, "cos") + apply_series(arg, "sin")
    expected = EtaFunction(4, {0b0000: 1, 0b0011: 1, 0b1100: 1, 0b1111: -1})
    assert fn == expected
    return _named("PSICS", fn)


# ---------------------------------------------------------------------------
# the generic four-qubit family
# ---------------------------------------------------------------------------

def _cos_difference(i, j, k, l) -> EtaFunction:
    """cos(e_i - e_j) - cos(e_k + e_l), expanded by the series."""
    ei, ej, ek, el = (variable(4, q) for q in (i, j, k, l))
    return apply_series(ei - ej, "cos") - apply_series(ek + el, "cos")


def g_abcd(params: FamilyParams) -> NamedState:
    """The generic-family state, built from series primitives.

    (a+d)/2 exp(e1e2e3e4) + (a-d)/2 (cos(e1-e2) - cos(e3+e4))
                          + (b+c)/2 (cos(e1-e3) - cos(e2+e4))
                          + (b-c)/2 (cos(e1-e4) - cos(e2+e3))
    """
    a, b, c, d = (coerce(v) for v in (params.a, params.b, params.c, params.d))
    half = Fraction(1, 2)
    top = multiply(multiply(variable(4, 1), variable(4, 2)),
                   multiply(variable(4, 3), variable(4, 4)))
    fn = (
        scale((a + d) * half, apply_series(top, "exp"))
        + scale((a - d) * half, _cos_difference(1, 2, 3, 4))
        + scale((b + c) * half, _cos_difference(1, 3, 2, 4))
        + scale((b - c) * half, _cos_difference(1, 4, 2, 3))
    )
    closed = EtaFunction(4, {
        0b0000: (a + d) * half, 0b1111: (a + d) * half,
        0b0011: (a - d) * half, 0b1100: (a - d) * half,
        0b0101: (b + c) * half, 0b1010: (b + c) * half,
        0b0110: (b - c) * half, 0b1001: (b - c) * half,
    })
    assert fn == closed
    return _named(f"G({params.a},{params.b},{params.c},{params.d})", fn)


def psi_ad(a, d) -> NamedState:
    """The a=b, c=d slice of the generic family."""
    if complex(coerce(a)) == 0 and complex(coerce(d)) == 0:
        raise ValueError("psi_ad: parameters must not both vanish")
    st = g_abcd(FamilyParams(a, a, d, d))
    return NamedState(f"PSIAD({a},{d})", st.fn, st.norm_sq)


def psi_a(a=1) -> NamedState:
    """a (1 + e1e3)(1 + e2e4) = a (1 + e1e3 + e2e4 + e1e2e3e4)."""
    if complex(coerce(a)) == 0:
        raise ValueError("psi_a: parameter must be nonzero")
    f13 = unit(4, 1) + multiply(variable(4, 1), variable(4, 3))
    f24 = unit(4, 1) + multiply(variable(4, 2), variable(4, 4))
    return _named(f"PSIA({a})", scale(a, multiply(f13, f24)))


def psi_d(d=1) -> NamedState:
    """d (e1 + e3)(e2 + e4) = d (e1e2 + e1e4 + e2e3 + e3e4)."""
    if complex(coerce(d)) == 0:
        raise ValueError("psi_d: parameter must be nonzero")
    f13 = variable(4, 1) + variable(4, 3)
    f24 = variable(4, 2) + variable(4, 4)
    return _named(f"PSID({d})", scale(d, multiply(f13, f24)))


# ---------------------------------------------------------------------------
# alpha families (float backend; ingredients are orthogonal and normalized)
# ---------------------------------------------------------------------------

def _unit_float(state: NamedState) -> EtaFunction:
    r = math.sqrt(float(state.norm_sq))
    return scale(1.0 / r, state.fn.to_float())


def psi_c_alpha(alpha: float) -> NamedState:
    """sin(alpha) CW4 + cos(alpha) GHZ4, both normalized."""
    fn = scale(math.sin(alpha), _unit_float(cw(4))) + scale(math.cos(alpha), _unit_float(ghz(4)))
    return NamedState(f"PSICALPHA({alpha})", fn, norm_sq(fn))


def psi_s_alpha(alpha: float) -> NamedState:
    """cos(alpha) W4 + sin(alpha) dual-W4, both normalized."""
    fn = scale(math.cos(alpha), _unit_float(w(4))) + scale(math.sin(alpha), _unit_float(star_w()))
    return NamedState(f"PSISALPHA({alpha})", fn, norm_sq(fn))


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

REGISTRY = {
    "GHZ2": lambda: ghz(2), "GHZ3": lambda: ghz(3), "GHZ4": lambda: ghz(4),
    "W2": lambda: w(2), "W3": lambda: w(3), "W4": lambda: w(4),
    "CW3": lambda: cw(3), "CW4": lambda: cw(4),
    "STARW4": star_w,
    "PSIC2": lambda: psi_c(2), "PSIC3": lambda: psi_c(3), "PSIC4": lambda: psi_c(4),
    "PSIS2": lambda: psi_s(2), "PSIS3": lambda: psi_s(3), "PSIS4": lambda: psi_s(4),
    "PSICS": psi_cs,
}

#: parametric constructors: name -> (arity, callable on scalars)
PARAMETRIC = {
    "G": (4, lambda a, b, c, d: g_abcd(FamilyParams(a, b, c, d))),
    "PSIAD": (2, psi_ad),
    "PSIA": (1, psi_a),
    "PSID": (1, psi_d),
    "PSICALPHA": (1, lambda a: psi_c_alpha(float(a))),
    "PSISALPHA": (1, lambda a: psi_s_alpha(float(a))),
}


def lookup(label: str) -> NamedState:
    """Resolve a plain registry label (no arguments)."""
    try:
        return REGISTRY[label]()
    except KeyError:
        raise KeyError(f"unknown state label {label!r}") from None
