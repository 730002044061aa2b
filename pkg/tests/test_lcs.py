import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from lcslab import catalog
from lcslab.errors import Degenerate, EvenDimension, NotContact, NotLcs, ThetaNotClosed
from lcslab.exactmath import pfaffian
from lcslab.exterior import KForm, cediff, interior, twisted_diff
from lcslab.lcs import (
    Kind,
    automorphism_algebra,
    classify_kind,
    contact_search,
    is_subalgebra,
    lcs_search,
    lee_form_of,
    nonvanishing_point,
    pfaffian_polynomial,
    verify_contact,
    verify_lcs,
)
from lcslab.notation import parse_form

from conftest import all_entries

LCS_ENTRIES = [e for e in all_entries() if e.known_lcs and e.lcs_valid]
LCS_IDS = ["%s%s" % (e.name, e.params or "") for e in LCS_ENTRIES]


@pytest.mark.parametrize("entry", LCS_ENTRIES, ids=LCS_IDS)
def test_known_structures_verify(entry):
    g = entry.algebra
    omega, theta = entry.known_lcs
    st_ = verify_lcs(g, omega, theta)
    assert interior(st_.lee_vector, omega) == theta.with_offset(g.offset)
    if st_.exact:
        assert twisted_diff(g, theta, st_.eta) == omega.with_offset(g.offset)
        assert interior(st_.anti_lee_vector, omega) == -st_.eta
    assert st_.pfaffian ** 2 == pfaffian(omega.as_matrix()) ** 2 != 0


@pytest.mark.parametrize("entry", LCS_ENTRIES, ids=LCS_IDS)
def test_automorphism_algebra_is_closed(entry):
    g = entry.algebra
    aut = automorphism_algebra(g, *entry.known_lcs)
    assert is_subalgebra(g, aut.basis)
    omega = entry.known_lcs[0]
    for x in aut.basis:
        for i in range(g.dim):
            for j in range(g.dim):
                y, z = g.basis_vector(i), g.basis_vector(j)
                assert omega(g.bracket(x, y), z) + omega(y, g.bracket(x, z)) == 0


@pytest.mark.parametrize("entry", LCS_ENTRIES, ids=LCS_IDS)
def test_first_kind_iff_exact_on_unimodular(entry):
    if not entry.expected_profile.get("unimodular"):
        return
    st_ = verify_lcs(entry.algebra, *entry.known_lcs)
    assert (st_.kind is Kind.FIRST) == st_.exact


@pytest.mark.parametrize("entry", LCS_ENTRIES, ids=LCS_IDS)
def test_lee_form_is_unique(entry):
    g = entry.algebra
    omega, theta = entry.known_lcs
    found, kernel = lee_form_of(g, omega)
    assert found == theta.with_offset(g.offset)
    assert kernel == []


@pytest.mark.parametrize("name, theta", [("d4", "e4"), ("h3xR", "e4"), ("n4", "e1"), ("ex6", "e6")])
@given(seed=st.integers(0, 10**6))
def test_lee_form_uniqueness_on_solution_space(name, theta, seed):
    g = catalog.get(name).algebra
    th = parse_form(theta, g.dim)
    res = lcs_search(g, th)
    rng = random.Random(seed)
    w = KForm.zero(g.dim, 2)
    for b in res.solution_basis:
        w = w + b * rng.randint(-3, 3)
    if not w or not pfaffian(w.as_matrix()):
        return
    found, kernel = lee_form_of(g, w)
    assert found == th and kernel == []


def test_verify_lcs_failures():
    g = catalog.get("r3p0xR").algebra
    with pytest.raises(NotLcs) as info:
        verify_lcs(g, parse_form("e12 + e13 - e24", 4), parse_form("e4", 4))
    assert info.value.defect == parse_form("-e124", 4)
    d4 = catalog.get("d4").algebra
    with pytest.raises(NotLcs):
        verify_lcs(d4, parse_form("e12 - e24", 4), parse_form("e4", 4))
    with pytest.raises(Degenerate) as info:
        verify_lcs(d4, parse_form("e14", 4), parse_form("e4", 4))
    assert len(info.value.kernel) == 2
    with pytest.raises(ThetaNotClosed):
        verify_lcs(catalog.get("h3xR").algebra, parse_form("e12 - e34", 4), parse_form("e3", 4))


def test_symplectic_case_has_no_kind():
    g = catalog.get("r3p0xR").algebra
    assert classify_kind(g, parse_form("-e14 + e23", 4), KForm.zero(4, 1)) is Kind.NOT_APPLICABLE


def test_second_kind_exists_off_type_I():
    # aff(R) x aff(R) has a non exact LCS structure
    g = catalog.get("aff_r2").algebra
    res = lcs_search(g, parse_form("e1", 4))
    assert res.status == "found"
    assert classify_kind(g, res.witness, parse_form("e1", 4)) in (Kind.FIRST, Kind.SECOND)


# -- search -------------------------------------------------------------------------


def test_lcs_search_refutes_ex6_e5():
    g = catalog.get("ex6").algebra
    res = lcs_search(g, parse_form("e5", 6))
    assert res.status == "refuted" and res.witness is None
    assert len(res.solution_basis) == 7


def test_lcs_search_is_seeded():
    g = catalog.get("d4").algebra
    a = lcs_search(g, parse_form("e4", 4), seed=3)
    b = lcs_search(g, parse_form("e4", 4), seed=3)
    assert a == b and a.status == "found"
    verify_lcs(g, a.witness, parse_form("e4", 4))


def test_odd_dimension_refuted():
    res = lcs_search(catalog.get("h3").algebra, parse_form("e1", 3))
    assert res.status == "refuted"


@pytest.mark.parametrize("name, theta", [("d4", "e4"), ("ex6", "e5"), ("h3xR", "e4")])
def test_pfaffian_polynomial_matches_sympy(name, theta):
    g = catalog.get(name).algebra
    basis = lcs_search(g, parse_form(theta, g.dim)).solution_basis
    xs = sympy.symbols("x0:%d" % len(basis))
    n = g.dim
    M = sympy.zeros(n, n)
    for x, b in zip(xs, basis):
        W = b.as_matrix()
        M += x * sympy.Matrix(n, n, lambda i, j: sympy.Rational(W[i, j].numerator, W[i, j].denominator))
    P = pfaffian_polynomial(basis)
    expr = sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod([x ** e for x, e in zip(xs, mon)])
               for mon, c in P.items())
    assert sympy.expand(expr ** 2 - M.det()) == 0


def test_nonvanishing_point():
    P = {(1, 1): Fraction(1), (2, 0): Fraction(-1)}  # xy - x^2
    pt = nonvanishing_point(P, 2, 2)
    x, y = pt
    assert x * y - x * x != 0


# -- contact ------------------------------------------------------------------------


@pytest.mark.parametrize("name", ["h3", "h5", "n1", "n2", "h"])
def test_contact_and_reeb(name):
    e = catalog.get(name)
    g = e.algebra
    cs = verify_contact(g, e.known_contact)
    R = cs.reeb_vector
    assert e.known_contact(R) == 1
    assert interior(R, cediff(g, e.known_contact)).is_zero()


def test_contact_failures():
    with pytest.raises(NotContact):
        verify_contact(catalog.get("h5").algebra, KForm.e(5, 1))
    with pytest.raises(EvenDimension):
        verify_contact(catalog.get("n4").algebra, KForm.e(4, 0))


def test_contact_search():
    cs = contact_search(catalog.get("n2").algebra, seed=1)
    assert cs is not None and cs.volume != 0
    assert contact_search(catalog.get("r3_-1").algebra) is not None
