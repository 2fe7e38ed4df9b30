"""Property harness: random states, random local unitaries, permutation
sweeps, and closed-form parameter sweeps against the known curves.

Trials and sweep points are independent; per-trial seeds are derived from
the master seed so execution order cannot change results.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, asdict
from fractions import Fraction
from itertools import permutations

import numpy as np

from .algebra import EtaFunction
from .invariants import AmplitudeTensor4, invariant_report
from .scalars import QQi
from .states import psi_ad, psi_c_alpha, psi_s_alpha

#: default tolerances (relative LU drift; absolute closed-form sweep error)
LU_TOL = 1e-9
SWEEP_TOL = 1e-10

CSV_HEADER = "parameter,f3_computed,f3_closed,f3_err,f2_computed,f2_closed,f2_err"


@dataclass(frozen=True)
class SweepRow:
    """One monotone at one sweep parameter against its closed form."""

    parameter: float
    monotone: str
    computed: float
    closed_form: float
    abs_error: float


@dataclass(frozen=True)
class InvarianceReport:
    """Outcome of an invariance check on one state."""

    trials: int
    max_drift_f3: float
    max_drift_f2: float
    tol: float

    @property
    def passed_f3(self) -> bool:
        return self.max_drift_f3 < self.tol

    @property
    def passed_f2(self) -> bool:
        return self.max_drift_f2 < self.tol

    @property
    def passed(self) -> bool:
        return self.passed_f3 and self.passed_f2


# ---------------------------------------------------------------------------
# random inputs
# ---------------------------------------------------------------------------

def random_state(n: int, seed: int, exact: bool = False) -> EtaFunction:
    """Deterministic nonzero random function of n variables.

    Float: standard complex Gaussian coefficients.  Exact: Gaussian-rational
    coefficients with numerators and denominators bounded by 100.
    """
    if not 1 <= n <= 6:
        raise ValueError(f"random_state supports 1 <= n <= 6, got {n}")
    rng = np.random.default_rng(seed)
    size = 1 << n
    if exact:
        coeffs = {}
        for m in range(size):
            re = Fraction(int(rng.integers(-100, 101)), int(rng.integers(1, 101)))
            im = Fraction(int(rng.integers(-100, 101)), int(rng.integers(1, 101)))
            coeffs[m] = QQi(re, im)
        fn = EtaFunction(n, coeffs)
        if fn.is_zero():
            fn = EtaFunction(n, {0: 1})
        return fn
    re = rng.standard_normal(size)
    im = rng.standard_normal(size)
    coeffs = {m: complex(re[m], im[m]) for m in range(size)}
    fn = EtaFunction(n, coeffs)
    if fn.is_zero():
        fn = EtaFunction(n, {0: 1.0})
    return fn


def random_local_unitary(seed: int) -> np.ndarray:
    """Haar 2x2 unitary: QR of a complex Gaussian with phase fixing."""
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def _apply_local(amp16, unitaries) -> list:
    """Apply U1 x U2 x U3 x U4 to a 16-amplitude vector."""
    arr = np.asarray([complex(a) for a in amp16], dtype=complex).reshape(2, 2, 2, 2)
    for axis, u in enumerate(unitaries):
        arr = np.tensordot(u, arr, axes=([1], [axis]))
        arr = np.moveaxis(arr, 0, axis)
    return list(arr.reshape(16))


# ---------------------------------------------------------------------------
# invariance checks
# ---------------------------------------------------------------------------

def _monotones_float(amps) -> tuple:
    rep = invariant_report(AmplitudeTensor4([complex(a) for a in amps]))
    return float(rep.F3abs), float(rep.F2abs)


def _rel_drift(base: float, new: float) -> float:
    scale = max(abs(base), 1e-30)
    return abs(new - base) / scale if abs(base) > 1e-15 else abs(new - base)


def check_lu_invariance(state, trials: int = 50, tol: float = LU_TOL,
                        seed: int = 0) -> InvarianceReport:
    """Drift of |F3|, |F2'| under random product unitaries."""
    amps = _state_amps(state)
    if all(abs(complex(a)) == 0 for a in amps):
        raise ValueError("zero state")
    f3, f2 = _monotones_float(amps)
    d3 = d2 = 0.0
    for t in range(trials):
        us = [random_local_unitary(seed * 100003 + 4 * t + k) for k in range(4)]
        nf3, nf2 = _monotones_float(_apply_local(amps, us))
        d3 = max(d3, _rel_drift(f3, nf3))
        d2 = max(d2, _rel_drift(f2, nf2))
    return InvarianceReport(trials=trials, max_drift_f3=d3, max_drift_f2=d2, tol=tol)


def check_permutation_invariance(state, tol: float = LU_TOL) -> InvarianceReport:
    """Drift of |F3|, |F2'| over all 24 qubit relabelings."""
    amps = _state_amps(state)
    if all(abs(complex(a)) == 0 for a in amps):
        raise ValueError("zero state")
    tensor = AmplitudeTensor4([complex(a) for a in amps])
    base = invariant_report(tensor)
    d3 = d2 = 0.0
    for perm in permutations((1, 2, 3, 4)):
        rep = invariant_report(tensor.permuted(perm))
        d3 = max(d3, _rel_drift(float(base.F3abs), float(rep.F3abs)))
        d2 = max(d2, _rel_drift(float(base.F2abs), float(rep.F2abs)))
    return InvarianceReport(trials=24, max_drift_f3=d3, max_drift_f2=d2, tol=tol)


def _state_amps(state) -> list:
    from . import algebra
    from .states import NamedState

    if isinstance(state, NamedState):
        return state.normalized_amplitudes()
    if isinstance(state, EtaFunction):
        return [complex(a) for a in algebra.to_amplitudes(state).amps]
    if isinstance(state, AmplitudeTensor4):
        return [complex(a) for a in state.amps]
    return [complex(a) for a in state]


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

def sweep_alpha(family: str, points: int = 100) -> list:
    """Monotones over a uniform alpha grid on [0, pi] for the c or s family.

    Closed forms: s family (1/2) sin^6(2a) and 3 sin^4(2a); c family the
    constants 1/2 and 3.
    """
    if family not in ("c", "s"):
        raise ValueError(f"family must be 'c' or 's', got {family!r}")
    if points < 2:
        raise ValueError("need at least 2 sweep points")
    rows = []
    for j in range(points):
        alpha = math.pi * j / (points - 1)
        state = psi_c_alpha(alpha) if family == "c" else psi_s_alpha(alpha)
        rep = invariant_report(AmplitudeTensor4.from_state(state))
        if family == "c":
            f3c, f2c = 0.5, 3.0
        else:
            s = math.sin(2 * alpha)
            f3c, f2c = 0.5 * s ** 6, 3 * s ** 4
        f3, f2 = float(rep.F3abs), float(rep.F2abs)
        rows.append(SweepRow(alpha, "f3", f3, f3c, abs(f3 - f3c)))
        rows.append(SweepRow(alpha, "f2", f2, f2c, abs(f2 - f2c)))
    return rows


def sweep_zeta(points: int = 20) -> list:
    """Monotones over the a=b, c=d family: a = 1, d on a rational grid in [0, 1].

    zeta = (2d/(1+d^2))^2 covers [0, 1] monotonically.  Evaluation is exact;
    rows carry the float images.  Closed forms: (1-z)^2 (z+1/2) and
    |(z-1)(z-3)|.
    """
    if points < 2:
        raise ValueError("need at least 2 sweep points")
    rows = []
    for j in range(points):
        d = Fraction(j, points - 1)
        zeta = (2 * d / (1 + d * d)) ** 2
        rep = invariant_report(AmplitudeTensor4.from_state(psi_ad(1, d)))
        f3c = (1 - zeta) ** 2 * (zeta + Fraction(1, 2))
        f2c = abs((zeta - 1) * (zeta - 3))
        rows.append(SweepRow(float(zeta), "f3", float(rep.F3abs), float(f3c),
                             float(abs(rep.F3abs - f3c))))
        rows.append(SweepRow(float(zeta), "f2", float(rep.F2abs), float(f2c),
                             float(abs(rep.F2abs - f2c))))
    return rows


def rows_to_csv(rows) -> str:
    """CSV with one line per parameter value (f3 and f2 side by side)."""
    by_param = {}
    for row in rows:
        by_param.setdefault(row.parameter, {})[row.monotone] = row
    lines = [CSV_HEADER]
    for param in sorted(by_param):
        pair = by_param[param]
        f3, f2 = pair.get("f3"), pair.get("f2")
        lines.append(",".join([
            repr(param),
            repr(f3.computed), repr(f3.closed_form), repr(f3.abs_error),
            repr(f2.computed), repr(f2.closed_form), repr(f2.abs_error),
        ]))
    return "\n".join(lines) + "\n"


def rows_to_json(rows) -> str:
    return json.dumps([asdict(r) for r in rows], indent=2)
