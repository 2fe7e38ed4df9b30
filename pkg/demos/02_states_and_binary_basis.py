"""The named-state zoo and its binary-basis forms.

Run:  python demos/02_states_and_binary_basis.py
"""
from etaq import REGISTRY, lookup, to_amplitudes
from etaq.algebra import amp_index
from etaq.states import cw, ghz, psi_c, psi_s, star_w, w

print("=" * 72)
print("named states: unnormalized exact representative + squared norm")
print("=" * 72)

for label in ("GHZ2", "W2", "PSIC3", "PSIS3", "CW4", "STARW4", "PSIC4", "PSIS4", "PSICS"):
    st = lookup(label)
    print(f"\n{label}:  norm^2 = {st.norm_sq}")
    amps = to_amplitudes(st.fn)
    kets = [f"{'+' if complex(a).real >= 0 else '-'}|{k:0{st.fn.n}b}>"
            for k, a in enumerate(amps.amps) if complex(a) != 0]
    print("  ", " ".join(kets))

print()
print("decompositions (exact, on unnormalized integer representatives)")
print("-" * 72)
print("cos(e1+e2+e3+e4) == GHZ4 - CW4 :", psi_c(4).fn == ghz(4).fn - cw(4).fn)
print("sin(e1+e2+e3+e4) == W4 - *W4   :", psi_s(4).fn == w(4).fn - star_w().fn)

print()
print("registry labels:", ", ".join(sorted(REGISTRY)))
print("parametric: G(a,b,c,d), PSIAD(a,d), PSIA(a), PSID(d), PSICALPHA(x), PSISALPHA(x)")

print()
print("monomial mask <-> ket index is bit reversal, e.g. n=4:")
for mask in (0b0001, 0b1000, 0b0101):
    print(f"  mask {mask:04b} (variables) -> ket |{amp_index(mask, 4):04b}>")
