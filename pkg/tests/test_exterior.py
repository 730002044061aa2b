from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from lcslab import catalog
from lcslab.errors import DimensionMismatch, ThetaNotClosed
from lcslab.exterior import (
    KForm,
    cediff,
    closed_one_forms,
    diff_matrix,
    interior,
    monomials,
    twisted_diff,
    wedge,
)

from conftest import all_entries

ENTRIES = all_entries()
IDS = ["%s%s" % (e.name, e.params or "") for e in ENTRIES]


@st.composite
def forms(draw, n, k):
    mons = monomials(n, k)
    vals = draw(st.lists(st.integers(-3, 3), min_size=len(mons), max_size=len(mons)))
    return KForm.from_vector(n, k, vals)


def test_monomial_order():
    assert monomials(4, 2) == tuple(combinations(range(4), 2))


def test_sign_normalisation():
    assert KForm(3, 2, {(1, 0): 1}) == KForm.e(3, 0, 1, coeff=-1)
    assert KForm(3, 2, {(1, 1): 5}).is_zero()
    assert KForm.e(4, 2, 0).coeff(0, 2) == -1


def test_fmt_respects_offset():
    w = KForm.e(6, 0, 1, coeff=-1, offset=0) - KForm.e(6, 2, 4, offset=0)
    assert w.fmt() == "-e01 - e24"
    assert w.with_offset(1).fmt() == "-e12 - e35"


@given(forms(4, 1), forms(4, 1))
def test_wedge_of_covectors_evaluates(a, b):
    x = (Fraction(1), Fraction(2), Fraction(0), Fraction(-1))
    y = (Fraction(0), Fraction(1), Fraction(3), Fraction(1))
    assert (a ^ b)(x, y) == a(x) * b(y) - a(y) * b(x)


@given(forms(5, 1), forms(5, 2), forms(5, 2))
def test_wedge_graded_commutative_and_associative(a, b, c):
    assert wedge(a, b) == wedge(b, a)
    assert wedge(a, a).is_zero()
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))
    assert wedge(b, c) == wedge(c, b)


def test_wedge_overflow_is_zero_of_right_degree():
    top = KForm.e(3, 0, 1, 2)
    w = wedge(top, KForm.e(3, 0))
    assert w.is_zero() and w.degree == 4


@given(forms(4, 2), st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_interior_is_first_slot(w, x):
    y = (Fraction(1), Fraction(0), Fraction(2), Fraction(-1))
    x = tuple(Fraction(v) for v in x)
    assert interior(x, w)(y) == w(x, y)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        KForm.e(3, 0) + KForm.e(4, 0)


# -- differentials on catalog algebras ----------------------------------------------


@pytest.mark.parametrize("entry", ENTRIES, ids=IDS)
def test_d_squared_is_zero(entry):
    g = entry.algebra
    for k in range(g.dim - 1):
        A, B = diff_matrix(g, None, k), diff_matrix(g, None, k + 1)
        if A is not None and B is not None:
            assert (B @ A).is_zero()
    for theta in closed_one_forms(g):
        for k in range(g.dim - 1):
            A, B = diff_matrix(g, theta, k), diff_matrix(g, theta, k + 1)
            if A is not None and B is not None:
                assert (B @ A).is_zero()


@pytest.mark.parametrize("name", ["h5", "n2", "h", "ex6"])
@given(data=st.data())
def test_d_is_an_antiderivation(name, data):
    g = catalog.get(name).algebra
    n = g.dim
    a = data.draw(forms(n, 1))
    b = data.draw(forms(n, 2))
    assert cediff(g, a ^ b) == (cediff(g, a) ^ b) - (a ^ cediff(g, b))
    assert cediff(g, cediff(g, b)).is_zero()


@pytest.mark.parametrize("name", ["h3", "n4", "d4", "n1"])
@given(data=st.data())
def test_d_on_one_forms_is_minus_bracket(name, data):
    g = catalog.get(name).algebra
    n = g.dim
    a = data.draw(forms(n, 1))
    da = cediff(g, a)
    for i in range(n):
        for j in range(n):
            x, y = g.basis_vector(i), g.basis_vector(j)
            assert da(x, y) == -a(g.bracket(x, y))


@pytest.mark.parametrize("name", ["h5", "ex6", "kf6"])
@given(data=st.data())
def test_twisted_d_squared(name, data):
    g = catalog.get(name, **({"a": 1, "b": 1} if name == "kf6" else {})).algebra
    thetas = closed_one_forms(g)
    coeffs = data.draw(st.lists(st.integers(-2, 2), min_size=len(thetas), max_size=len(thetas)))
    theta = KForm.zero(g.dim, 1)
    for c, t in zip(coeffs, thetas):
        theta = theta + t * c
    w = data.draw(forms(g.dim, 2))
    assert twisted_diff(g, theta, twisted_diff(g, theta, w)).is_zero()


def test_twisted_needs_closed_theta():
    g = catalog.get("h3").algebra
    with pytest.raises(ThetaNotClosed):
        twisted_diff(g, KForm.e(3, 2), KForm.e(3, 0))


def test_closed_one_forms_h5():
    g = catalog.get("h5").algebra
    assert [t.fmt() for t in closed_one_forms(g)] == ["e2", "e3", "e4", "e5"]
