"""Chain of inequalities, singularity flags and a deformation check."""
# %%
from frobsig import (RingPresentation, chain_check, deformation_check,
                     singularity_report)
from frobsig.report import to_table

V2 = RingPresentation(2, "abc", ["b^2 - a*c"], name="veronese2")
cusp = RingPresentation(2, "xy", ["y^2 - x^3"], weights=(2, 3), name="cusp")

# %%
for R, sop in ((V2, ["a", "c"]), (cusp, ["x"])):
    ch = chain_check(R, sop, 3)
    print(to_table(ch))

# %% multiplicity 2 quadric with csig 1/2
print(to_table(singularity_report(chain_check(V2, ["a", "c"], 3).csig.minimum, 2, 2)))

# %% cutting by c drops csig from 1/2 to 0
print(to_table(deformation_check(V2, "c", ["a", "c"], ["a"], 3)))
