"""
Type I algebras, twisted cohomology and the kind of an LCS structure
=====================================================================

A short walk through the library on four-dimensional examples.
Run with ``python3 notebooks/type_I_tour.py``.
"""

from lcslab import catalog, cohomology, find_imaginary_transversal, induced_spectrum
from lcslab import parse_form, structural_profile, verify_lcs
from lcslab.notation import format_salamon, format_vector

# %%
# Structural profiles of the four-dimensional catalog entries.
for name in ("h3xR", "n4", "r3p0xR", "d4p_0", "d4", "r3m1xR", "aff_r2"):
    g = catalog.get(name).algebra
    p = structural_profile(g)
    print("%-8s %-18s type I: %-5s unimodular: %s" % (name, format_salamon(g), p.type_I, p.unimodular))

# %%
# On a type I algebra the twisted cohomology vanishes for every nonzero closed theta.
g = catalog.get("r3p0xR").algebra
theta = parse_form("e4", 4)
print(cohomology(g, theta).dims)

# %%
# The structure e13 - e24 with Lee form e4 is LCS, exact and of the first kind.
st = verify_lcs(g, parse_form("e13 - e24", 4), theta)
print(st.kind, "eta =", st.eta.fmt(), "Lee vector:", format_vector(st.lee_vector))

# %%
# The tabulated form e12 + e13 - e24 fails d omega = theta ^ omega.
try:
    verify_lcs(g, parse_form("e12 + e13 - e24", 4), theta)
except Exception as exc:
    print(type(exc).__name__, exc)

# %%
# d4 is not of type I: no A with theta(A) = 1 has purely imaginary ad_A,
# and the twisted cohomology does not vanish.
d4 = catalog.get("d4").algebra
print(find_imaginary_transversal(d4, parse_form("e4", 4)))
print(cohomology(d4, parse_form("e4", 4)).dims)

# %%
# Where a transversal A exists, vanishing is read off the induced spectrum.
A = find_imaginary_transversal(g, theta)
sp = induced_spectrum(g, theta, A)
print("A =", format_vector(A), "1 in spectrum:", sp.contains_one)
