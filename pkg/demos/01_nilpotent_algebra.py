"""Tour of the nilpotent-variable algebra.

Run:  python demos/01_nilpotent_algebra.py
"""
from etaq import (
    apply_series,
    hodge_dual,
    inner_product,
    multiply,
    norm_sq,
    to_amplitudes,
    unit,
    variable,
    variables_sum,
)
from etaq.verify import random_state

print("=" * 72)
print("nilpotent commuting variables: e_i^2 = 0, e_i e_j = e_j e_i")
print("=" * 72)

e1, e2 = variable(2, 1), variable(2, 2)
print("e1 * e1           =", multiply(e1, e1))
print("e1 * e2           =", multiply(e1, e2))
print("(e1-e2)*(e1-e2)   =", multiply(e1 - e2, e1 - e2))

print()
print("terminating series: cos, sin, exp")
print("-" * 72)
for n in (2, 3, 4):
    s = variables_sum(n)
    print(f"cos(e1+..+e{n}) =", apply_series(s, "cos"))
    print(f"sin(e1+..+e{n}) =", apply_series(s, "sin"))

top = multiply(multiply(variable(4, 1), variable(4, 2)),
               multiply(variable(4, 3), variable(4, 4)))
print("exp(e1*e2*e3*e4) =", apply_series(top, "exp"))

print()
print("the trigonometric identity survives nilpotency (exact check)")
print("-" * 72)
for n in (2, 4, 6):
    f = random_state(n, seed=n, exact=True)
    f = type(f)(n, {m: c for m, c in f.coeffs.items() if m != 0})
    c, s = apply_series(f, "cos"), apply_series(f, "sin")
    good = multiply(c, c) + multiply(s, s) == unit(n, 1)
    print(f"  n={n}: cos^2 F + sin^2 F == 1 :", "ok" if good else "BROKEN")

print()
print("inner product and the Hodge dual")
print("-" * 72)
w4 = variables_sum(4)
print("<W4, W4>      =", inner_product(w4, w4))
print("dual(W4)      =", hodge_dual(w4))
print("<*W4, *W4>    =", norm_sq(hodge_dual(w4)), " (dual is an isometry)")

print()
print("binary-basis correspondence (qubit 1 = most significant bit)")
print("-" * 72)
f = apply_series(variables_sum(2), "cos")
amps = to_amplitudes(f)
for ket, a in enumerate(amps.amps):
    print(f"  |{ket:02b}>  ->  {a}")
print("matches 1 - e1 e2 = |00> - |11| up to the 1/sqrt(2) normalizer")
