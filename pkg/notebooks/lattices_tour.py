"""
Six-dimensional LCS algebras from contact data, and their lattices
==================================================================

Run with ``python3 notebooks/lattices_tour.py``.
"""

from fractions import Fraction

from lcslab import catalog, check_paper_lattices, lcs_from_contact, parse_form
from lcslab.catalog import kf6_derivation
from lcslab.construct import double_extension
from lcslab.lattice import latt1
from lcslab.notation import format_salamon

# %%
# R x_D h5 with the rotation derivation and eta = e1.
h5 = catalog.get("h5").algebra
ext = lcs_from_contact(h5, parse_form("e1", 5), latt1(1))
print(format_salamon(ext.algebra))
print("omega =", ext.omega.fmt(), " theta =", ext.theta.fmt(), " kind:", ext.structure.kind)

# %%
# exp(t0 D) with t0 = pi/2 and b = 1/t0 preserves Gamma_k.
for k in (1, 2, 3):
    rep = check_paper_lattices("G1", k, "pi/2")
    print("G1 k=%d preserved: %s" % (k, rep.preserved))
rep = check_paper_lattices("G2", 1)
for label, A, chk in rep.levels:
    print(label, chk.preserved)
    print(A)

# %%
# Double extension of a flat Kaehler algebra by a symplectic derivation.
s = catalog.get("r3p0xR").algebra
de = double_extension(s, parse_form("-e14 + e23", 4), kf6_derivation(1, Fraction(1)))
print(format_salamon(de.algebra), de.omega.fmt(), de.structure.kind, de.spectrum_identity)
