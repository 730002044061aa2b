import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from lcslab import catalog
from lcslab.catalog import kf6_derivation
from lcslab.construct import (
    contact_from_lcs,
    derivation_defects,
    derivation_space,
    double_extension,
    inner_derivation,
    is_derivation,
    lcs_from_contact,
    semidirect,
    symplectic_defects,
    symplectic_derivations,
)
from lcslab.errors import EtaDNotZero, NotADerivation, NotFirstKind, NotSymplectic, NotSymplecticDerivation
from lcslab.exactmath import Mat
from lcslab.exterior import KForm
from lcslab.lattice import latt1, latt2
from lcslab.lcs import Kind
from lcslab.liealg import center, structural_profile
from lcslab.notation import parse_form


def sympy_derivation_dim(g):
    """Independent count: nullity of the linear system D[x,y] = [Dx,y] + [x,Dy]."""
    n = g.dim
    d = sympy.symbols("d0:%d" % (n * n))
    D = sympy.Matrix(n, n, d)
    C = lambda i, j: sympy.Matrix([sympy.Rational(c.numerator, c.denominator) for c in g.table[i][j]])

    def br(x, y):
        out = sympy.zeros(n, 1)
        for i in range(n):
            for j in range(n):
                if x[i] and y[j]:
                    out += x[i] * y[j] * C(i, j)
        return out

    eqs = []
    E = sympy.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            lhs = D * C(i, j)
            rhs = br(D[:, i], E[:, j]) + br(E[:, i], D[:, j])
            eqs.extend(list(lhs - rhs))
    A, _ = sympy.linear_eq_to_matrix(eqs, d)
    return n * n - A.rank()


@pytest.mark.parametrize("name, dim", [("h3", 6), ("h5", 15), ("n1", 10), ("n2", 8), ("h", 7), ("d4", 5)])
def test_derivation_dims_against_sympy(name, dim):
    g = catalog.get(name).algebra
    assert derivation_space(g).dim == dim == sympy_derivation_dim(g)


@pytest.mark.parametrize("name", ["h5", "h", "ex6"])
@given(seed=st.integers(0, 10**6))
def test_derivations_and_commutators(name, seed):
    g = catalog.get(name).algebra
    ds = derivation_space(g)
    rng = random.Random(seed)
    A = ds.element([rng.randint(-3, 3) for _ in range(ds.dim)])
    B = ds.element([rng.randint(-3, 3) for _ in range(ds.dim)])
    assert is_derivation(g, A)
    assert ds.contains(A @ B - B @ A)


def test_inner_derivations():
    g = catalog.get("h").algebra
    for i in range(g.dim):
        assert is_derivation(g, inner_derivation(g, g.basis_vector(i)))


def test_non_derivation_reports_pairs():
    g = catalog.get("h3").algebra
    D = Mat([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    assert derivation_defects(g, D)
    with pytest.raises(NotADerivation):
        semidirect(g, D)


def test_semidirect_bracket():
    h5 = catalog.get("h5").algebra
    g = semidirect(h5, latt1(1))
    assert g.offset == 0
    assert g == catalog.get("g1", b=1).algebra
    assert g.bracket_str() == "[e0,e2]=e4, [e0,e3]=e5, [e0,e4]=-e2, [e2,e4]=e1, [e3,e5]=e1"


@pytest.mark.parametrize("family, base, latt, omega", [
    ("g1", "h5", latt1, "-e01 - e24 - e35"),
    ("g2", "h", latt2, "-e01 - e23 - e45"),
])
@pytest.mark.parametrize("b", [0, 1, Fraction(5, 2)])
def test_contact_to_lcs_round_trip(family, base, latt, omega, b):
    h = catalog.get(base)
    ext = lcs_from_contact(h.algebra, h.known_contact, latt(b))
    assert ext.algebra == catalog.get(family, b=b).algebra
    assert ext.omega == parse_form(omega, 6, offset=0, degree=2)
    assert ext.structure.kind is Kind.FIRST
    assert structural_profile(ext.algebra).type_I
    red = contact_from_lcs(ext.algebra, ext.omega, ext.theta, ext.eta)
    assert red.algebra == h.algebra
    assert red.eta == h.known_contact
    assert red.derivation == latt(b)
    assert red.theta_of_U == 1


def test_lcs_from_contact_guards():
    h5 = catalog.get("h5")
    D = Mat([[1 if (i, j) == (0, 0) else 0 for j in range(5)] for i in range(5)])
    with pytest.raises(NotADerivation):
        lcs_from_contact(h5.algebra, h5.known_contact, D)
    ds = derivation_space(h5.algebra)
    bad = next(B for B in ds.basis if any(B[0, j] for j in range(5)))
    with pytest.raises(EtaDNotZero):
        lcs_from_contact(h5.algebra, h5.known_contact, bad)


def test_contact_from_lcs_needs_first_kind():
    g = catalog.get("r3p0xR").algebra
    with pytest.raises(NotFirstKind):
        contact_from_lcs(g, parse_form("-e14 + e23", 4), KForm.zero(4, 1))


@pytest.mark.parametrize("a, b", [(1, 1), (2, 0), (Fraction(-1, 3), 5)])
def test_double_extension_kf6(a, b):
    s = catalog.get("r3p0xR").algebra
    ext = double_extension(s, parse_form("-e14 + e23", 4), kf6_derivation(a, b))
    g = ext.algebra
    assert ext.omega == parse_form("-e14 + e23 - e56", 6)
    assert ext.theta == parse_form("e6", 6)
    assert ext.structure.kind is Kind.FIRST
    V = ext.structure.lee_vector
    assert V == tuple(-x for x in ext.V)
    assert all(not any(g.bracket(V, g.basis_vector(i))) for i in range(g.dim))
    assert len(center(g)) == 1
    assert ext.spectrum_identity
    assert structural_profile(g).type_I


def test_symplectic_derivations_contain_kf6_family():
    s = catalog.get("r3p0xR").algebra
    beta = parse_form("-e14 + e23", 4)
    sd = symplectic_derivations(s, beta)
    assert sd.contains(kf6_derivation(1, 1))
    for B in sd.basis:
        assert not symplectic_defects(beta, B)


def test_double_extension_guards():
    s = catalog.get("r3p0xR").algebra
    with pytest.raises(NotSymplectic):
        double_extension(s, parse_form("e12", 4), kf6_derivation(1, 1))
    with pytest.raises(NotSymplecticDerivation):
        double_extension(s, parse_form("-e14 + e23", 4), Mat([[0, 0, 0, 1], [0] * 4, [0] * 4, [0] * 4]))
