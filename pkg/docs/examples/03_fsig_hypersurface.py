"""F-signature of hypersurfaces from splitting numbers."""
# %%
from frobsig import PolyRing, fsig_hypersurface
from frobsig.oracle import dense_splitting_number

S = PolyRing(("a", "b", "c"), 2)
f = S("b^2 + a*c")
rep = fsig_hypersurface(S, f, 4)
print("a_e / q^2:", [str(v) for v in rep.per_e_minimum])
print("estimate:", rep.minimum)

# %% small q cross-checked against dense linear algebra
for q in (2, 4):
    print(q, dense_splitting_number(f, q))

# %% the cusp is not strongly F-regular
T = PolyRing(("x", "y"), 2)
print(fsig_hypersurface(T, "y^2 + x^3", 4).per_e_minimum)
