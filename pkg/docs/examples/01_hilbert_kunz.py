"""Hilbert-Kunz lengths of the quadric cone b^2 = ac over F_2.

Run with ``python docs/examples/01_hilbert_kunz.py``.
"""
# %%
from frobsig import RingPresentation, bracket_power, colength, hk_sequence

R = RingPresentation(2, "abc", ["b^2 - a*c"], name="veronese2")
m = R.maximal_ideal()
print(R, " dim", R.d)

# %% raw lengths l(R/m^[q]) for q = 2, 4, 8, 16
for e in range(1, 5):
    print(e, colength(bracket_power(m, e)))

# %% the same numbers with the normalisation and a 1/q fit
rep = hk_sequence(R, m, 4)
for row in rep.rows:
    print(f"q={row.q:<3} length={row.length:<5} normalized={row.normalized}")
print("extrapolated e_HK:", rep.extrapolated)
print(rep.model_note)
