"""Acceptance criteria, one test per criterion, one printed line each.

Run with `pytest -s tests/test_acceptance.py` to see the lines; a plain
pytest run checks the same assertions silently.
"""
import itertools
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from etaq.algebra import EtaFunction, apply_series, multiply, to_amplitudes, unit
from etaq.invariants import (
    AmplitudeTensor4,
    cayley_H,
    flatten_rank,
    invariant_report,
    lmn,
    sextic_D,
)
from etaq.scalars import QQi
from etaq.states import ghz, lookup, psi_a, psi_ad, psi_c, psi_cs, psi_d, psi_s, w
from etaq.verify import (
    check_lu_invariance,
    check_permutation_invariance,
    random_state,
    sweep_alpha,
)

CLI = [sys.executable, "-m", "etaq.cli"]


def report(state):
    return invariant_report(AmplitudeTensor4.from_state(state))


def ok(line):
    print(f"[PASS] {line}")


def test_criterion_1_exact_anchors():
    for st in (psi_c(4), psi_s(4)):
        rep = report(st)
        assert rep.F3abs == Fraction(1, 2)
        assert rep.F2abs == 3
    rep = report(psi_cs())
    assert rep.F3abs == 1 and rep.F2abs == 1
    assert rep.H == 0 and rep.W == 0
    assert rep.Sigma == Fraction(1, 2) ** 7
    assert rep.Pi == Fraction(1, 2) ** 11
    ok("criterion 1: exact anchors |F3|,|F2'| on psi_c4/psi_s4/psi_cs with H,W,Sigma,Pi")


def test_criterion_2_alpha_sweep():
    rows = sweep_alpha("s", 100)
    assert len(rows) == 200
    assert all(r.abs_error < 1e-10 for r in rows)
    rows = sweep_alpha("c", 100)
    assert all(r.abs_error < 1e-10 for r in rows)
    assert all(r.closed_form == (0.5 if r.monotone == "f3" else 3.0) for r in rows)
    ok("criterion 2: alpha sweeps (100 points) match (1/2)sin^6, 3sin^4 and the constants")


def test_criterion_3_zeta_sweep_exact():
    zeros = []
    for j in range(20):
        d = Fraction(j, 19)
        zeta = (2 * d / (1 + d * d)) ** 2
        rep = report(psi_ad(1, d))
        assert rep.F2abs == abs((zeta - 1) * (zeta - 3))
        assert rep.F3abs == (1 - zeta) ** 2 * (zeta + Fraction(1, 2))
        if rep.F3abs == 0 or rep.F2abs == 0:
            assert rep.F3abs == 0 and rep.F2abs == 0
            zeros.append(zeta)
    assert zeros == [1]
    ok("criterion 3: zeta sweep exact, common zero only at zeta=1")


def test_criterion_4_factorization():
    for st in (psi_a(1), psi_d(1)):
        t = AmplitudeTensor4.from_state(st)
        assert flatten_rank(t, (1, 3)) == 1
        rep = invariant_report(t)
        assert rep.F3abs == 0 and rep.F2abs == 0
    ok("criterion 4: psi_a, psi_d rank-1 across 13|24 and both monotones exactly 0")


def test_criterion_5_trig_identity():
    for n in range(2, 7):
        for trial in range(50):
            fn = random_state(n, 7000 + 100 * n + trial, exact=True)
            fn = EtaFunction(n, {m: c for m, c in fn.coeffs.items() if m != 0})
            c = apply_series(fn, "cos")
            s = apply_series(fn, "sin")
            assert multiply(c, c) + multiply(s, s) == unit(n, 1)
    ok("criterion 5: cos^2+sin^2=1 exactly, 50 random states per n in 2..6")


def test_criterion_6_small_n_states():
    def kets(state):
        return {k: complex(a) for k, a in enumerate(to_amplitudes(state.fn).amps)
                if complex(a) != 0}

    assert kets(psi_c(3)) == {0b000: 1, 0b110: -1, 0b101: -1, 0b011: -1}
    assert kets(psi_s(3)) == {0b100: 1, 0b010: 1, 0b001: 1, 0b111: -1}
    assert kets(ghz(2)) == {0b00: 1, 0b11: -1}
    assert kets(w(2)) == {0b01: 1, 0b10: 1}
    ok("criterion 6: n=2,3 binary forms match coefficient-for-coefficient")


def test_criterion_7_lu_invariance():
    worst = 0.0
    for seed in range(20):
        rep = check_lu_invariance(random_state(4, 9000 + seed), trials=50,
                                  tol=1e-9, seed=seed)
        worst = max(worst, rep.max_drift_f3, rep.max_drift_f2)
        assert rep.passed
    ok(f"criterion 7: LU drift < 1e-9 on 20 states x 50 unitary 4-tuples (max {worst:.2e})")


def test_criterion_8_homogeneity_and_oracles():
    lams = [QQi(Fraction(3, 2)), QQi(Fraction(-2, 3), Fraction(1, 2))]
    for seed in range(100):
        t = AmplitudeTensor4.from_eta(random_state(4, 11000 + seed, exact=True))
        H = cayley_H(t)
        L, M, N = lmn(t)
        assert H == _naive_H(t.amps)
        assert (L, M, N) == _naive_lmn(t.amps)
        sigma = L * L + M * M + N * N
        pi = (L - M) * (M - N) * (N - L)
        lam = lams[seed % 2]
        ts = t.scaled(lam)
        assert cayley_H(ts) == lam ** 2 * H
        Ls, Ms, Ns = lmn(ts)
        assert (Ls, Ms, Ns) == (lam ** 4 * L, lam ** 4 * M, lam ** 4 * N)
        for split in ("12|34", "13|24", "14|23"):
            assert sextic_D(ts, split) == lam ** 6 * sextic_D(t, split)
        assert Ls * Ls + Ms * Ms + Ns * Ns == lam ** 8 * sigma
        assert (Ls - Ms) * (Ms - Ns) * (Ns - Ls) == lam ** 12 * pi
    ok("criterion 8: lambda^degree homogeneity and naive-loop oracle equality, 100 tensors")


def _naive_H(amps):
    total = QQi(0)
    for i, j, k, l in itertools.product((0, 1), repeat=4):
        sign = (-1) ** (i + j + k + l)
        total = total + sign * (amps[8 * i + 4 * j + 2 * k + l]
                                * amps[8 * (1 - i) + 4 * (1 - j) + 2 * (1 - k) + (1 - l)])
    return total * Fraction(1, 2)


def _naive_lmn(amps):
    mats = {"L": {}, "M": {}, "N": {}}
    for i, j, k, l in itertools.product((0, 1), repeat=4):
        a = amps[8 * i + 4 * j + 2 * k + l]
        mats["L"][(2 * i + j, 2 * k + l)] = a
        mats["M"][(2 * i + k, 2 * j + l)] = a
        mats["N"][(2 * i + l, 2 * j + k)] = a
    dets = {}
    for key, entries in mats.items():
        mat = [[entries[(r, c)] for c in range(4)] for r in range(4)]
        total = QQi(0)
        for perm in itertools.permutations(range(4)):
            sign = 1
            for x in range(4):
                for y in range(x + 1, 4):
                    if perm[x] > perm[y]:
                        sign = -sign
            prod = QQi(1)
            for r in range(4):
                prod = prod * mat[r][perm[r]]
            total = total + sign * prod
        dets[key] = total
    return dets["L"], -dets["M"], dets["N"]


def test_criterion_9_permutation_invariance():
    """Primary part that the algebra supports, plus the documented fallback.

    |F3| (through H, Sigma, Pi) is exactly invariant under all 24 relabelings
    on every state.  |F2'| cannot be: the only relabeling-invariant sextics
    are multiples of H^3, which contradict the zeta-family values, so the
    fallback of this criterion applies with the roles swapped: |F2'| is
    asserted on the symmetric anchor states and its random-state deviation is
    measured and documented.
    """
    worst_f2 = 0.0
    for seed in range(100):
        fn = random_state(4, 13000 + seed, exact=True)
        t = AmplitudeTensor4.from_eta(fn)
        base = invariant_report(t)
        for perm in itertools.permutations((1, 2, 3, 4)):
            rep = invariant_report(t.permuted(perm))
            # exact invariance of everything feeding |F3|
            assert rep.H == base.H
            assert rep.Sigma == base.Sigma
            assert rep.Pi == base.Pi
            f2_base, f2_perm = float(base.F2abs), float(rep.F2abs)
            if f2_base > 1e-12:
                worst_f2 = max(worst_f2, abs(f2_perm - f2_base) / f2_base)
    for label in ("PSIC4", "PSIS4", "PSICS", "GHZ4", "W4", "CW4", "STARW4"):
        rep = check_permutation_invariance(lookup(label), tol=1e-9)
        assert rep.passed, label
    ok("criterion 9: |F3| exactly relabeling-invariant on 100 random states; "
       "|F2'| invariant on the symmetric anchors "
       f"(documented |F2'| drift on generic states: max {worst_f2:.3e})")


@pytest.mark.xfail(reason="no polynomial W makes |F2'| relabeling-invariant while "
                          "matching the zeta-family values; see README and the "
                          "deviation documented by criterion 9", strict=True)
def test_criterion_9_strict_f2_on_random_states():
    for seed in range(10):
        rep = check_permutation_invariance(random_state(4, 13000 + seed, exact=False),
                                           tol=1e-9)
        assert rep.passed_f2


def test_criterion_10_cli_conformance():
    out = subprocess.run(CLI + ["invariants", "--state", "PSICS", "--exact", "--json"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["F3abs"] == "1" and data["F2abs"] == "1"
    assert data["Sigma"] == "1/128" and data["Pi"] == "1/2048"

    out = subprocess.run(CLI + ["invariants", "--state", "PSIC4", "--exact", "--json"],
                         capture_output=True, text=True)
    data = json.loads(out.stdout)
    assert data["F3abs"] == "1/2" and data["F2abs"] == "3"

    out = subprocess.run(CLI + ["classify", "--state", "PSIAD(1,1)"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "13|24: rank 1" in out.stdout

    out = subprocess.run(CLI + ["eval", "--n", "4", "--expr", "cos(e1+e5)"],
                         capture_output=True, text=True)
    assert out.returncode == 3
    assert "column 8" in out.stderr
    ok("criterion 10: CLI invocations produce the stated exact strings; parse errors exit 3")
