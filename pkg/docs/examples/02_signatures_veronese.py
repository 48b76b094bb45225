"""F-rational signature estimates for the Veronese rings of degree 2 and 3."""
# %%
from frobsig import RingPresentation, csig_estimate, rsig_estimate, socle_basis
from frobsig.report import to_table

V2 = RingPresentation(2, "abc", ["b^2 - a*c"], name="veronese2")
V3 = RingPresentation(2, "abcd", ["b^2 - a*c", "c^2 - b*d", "b*c - a*d"], name="veronese3")

# %% V2 is Gorenstein: one socle element, one candidate
print(socle_basis(V2.ideal(["a", "c"])))
print(to_table(csig_estimate(V2, ["a", "c"], 4)))

# %% V3 has type 2; rsig only sees lines, csig also sees the whole socle
print(socle_basis(V3.ideal(["a", "d"])))
rs = rsig_estimate(V3, ["a", "d"], 3)
cs = csig_estimate(V3, ["a", "d"], 3)
print(to_table(rs))
print(to_table(cs))
print("csig < rsig:", cs.minimum < rs.minimum)
