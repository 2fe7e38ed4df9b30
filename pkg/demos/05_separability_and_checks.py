"""Bipartition ranks, small-n measures, and the invariance checks.

Run:  python demos/05_separability_and_checks.py
"""
import math
from itertools import combinations

from etaq import AmplitudeTensor4, concurrence2, flatten_rank, three_tangle, to_amplitudes
from etaq.states import lookup, psi_a, psi_c, psi_d
from etaq.verify import check_lu_invariance, check_permutation_invariance, random_state

print("=" * 72)
print("flattening ranks over the 7 bipartitions (rank 1 <=> product cut)")
print("=" * 72)


def classify(name, state):
    t = AmplitudeTensor4.from_state(state)
    cells = []
    for size in (1, 2):
        for subset in combinations((1, 2, 3, 4), size):
            if size == 2 and 1 not in subset:
                continue
            rank = flatten_rank(t, subset)
            names = "".join(map(str, subset))
            cells.append(f"{names}:{rank}")
    print(f"{name:<12}" + "  ".join(cells))


for label in ("GHZ4", "W4", "PSICS"):
    classify(label, lookup(label))
classify("PSIA(1)", psi_a(1))
classify("PSID(1)", psi_d(1))
print("-> PSIA and PSID are products across 13|24: only residual 2-qubit entanglement")

print()
print("small-n measures")
print("-" * 72)
b = 1 / math.sqrt(2)
print("concurrence(Bell)        =", concurrence2([b, 0, 0, b]))
print("concurrence(|00>)        =", concurrence2([1, 0, 0, 0]))
print("three_tangle(GHZ3)       =", three_tangle([b, 0, 0, 0, 0, 0, 0, b]))
w3 = [0, 1, 1, 0, 1, 0, 0, 0]
print("three_tangle(W3)         =", three_tangle(w3))
amps = list(to_amplitudes(psi_c(3).fn).amps)
print("three_tangle(cos-state)  =", three_tangle(amps), " (GHZ-class maximal)")

print()
print("invariance spot checks")
print("-" * 72)
rep = check_lu_invariance(random_state(4, 42), trials=25, seed=1)
print(f"local-unitary drift on a random state: f3 {rep.max_drift_f3:.2e}, "
      f"f2 {rep.max_drift_f2:.2e} (tol {rep.tol:.0e})")
rep = check_permutation_invariance(random_state(4, 42))
print(f"relabeling drift on a random state:    f3 {rep.max_drift_f3:.2e}, "
      f"f2 {rep.max_drift_f2:.2e}")
print("-> |F3| is a relabeling invariant; |F2'| is not on generic states")
print("   (it is on every permutation-symmetric state and whenever H = 0; see README)")
rep = check_permutation_invariance(lookup("PSICS"))
print(f"relabeling drift on the cluster state: f3 {rep.max_drift_f3:.2e}, "
      f"f2 {rep.max_drift_f2:.2e}")
