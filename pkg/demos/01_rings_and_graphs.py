# Arithmetic in GR(4^2) and the Shrikhande distance.
from doobcodes.rings import GR16, OMEGA, PSI, UNITS, coset_class, tilde, unit_decompose
from doobcodes.space import DoobSpace, sh_dist

print("units:", " ".join(str(u) for u in UNITS))
print("psi =", PSI, " psi*psi =", PSI * PSI)

for x in GR16.elements():
    beta, flag = unit_decompose(x) if x.is_regular else (None, None)
    print(f"{x}  {coset_class(x).value:8s}  sh_dist(0,x)={sh_dist(GR16(0, 0), x)}  "
          f"decompose={beta}{' *psi' if flag else ''}")

print("tilde(w) =")
print(tilde(OMEGA))

space = DoobSpace(1, 1)
print(space, "has", space.size, "vertices, balls of", space.ball_size)
