import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from lcslab.errors import UnsupportedAngle, UnsupportedT0
from lcslab.exactmath import Mat, PiScalar
from lcslab.lattice import (
    CoordinateLattice,
    apply_h5,
    check_paper_lattices,
    exp_one_param,
    g2_tower_matrices,
    gamma_closure,
    gamma_k,
    group_product,
    h_inverse,
    jordan_chevalley,
    lattice_preserved,
    latt1,
    latt2,
    rotation_rates,
)

PI = PiScalar.pi()
HALF_PI = PiScalar.pi(1, Fraction(1, 2))


def to_sym(x):
    if isinstance(x, PiScalar):
        return sum(sympy.Rational(c.numerator, c.denominator) * sympy.pi ** p for p, c in x.terms.items())
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def sym_mat(M):
    return sympy.Matrix([[to_sym(a) for a in r] for r in M.rows])


# -- Jordan-Chevalley and exp ------------------------------------------------------


@pytest.mark.parametrize("D", [
    latt1(1),
    latt1(PiScalar.pi(-1, 2)),
    latt2(3),
    g2_tower_matrices(PiScalar.pi(-3, 8))[0],
    Mat([[0, -2, 1], [2, 0, 0], [0, 0, 0]]),
])
def test_jordan_chevalley(D):
    S, N = jordan_chevalley(D)
    assert S + N == D
    assert S @ N == N @ S
    assert (N ** D.nrows).is_zero()


def test_rotation_rates():
    assert rotation_rates(Mat([[0, -3, 0], [3, 0, 0], [0, 0, 0]])) == [0, 3]
    with pytest.raises(UnsupportedAngle):
        rotation_rates(Mat([[1, 0], [0, -1]]))
    with pytest.raises(UnsupportedAngle):
        rotation_rates(Mat([[0, -2], [1, 0]]))  # rate sqrt 2


@pytest.mark.parametrize("D, t", [
    (latt1(Fraction(2)), HALF_PI),
    (latt1(PiScalar.pi(-1, 1)), PI),
    (latt2(1), PiScalar.pi(1, 2)),
    (Mat([[0, -2, 0], [2, 0, 0], [0, 0, 0]]), PiScalar.pi(1, Fraction(3, 4))),
    (Mat([[0, 1, 0], [0, 0, 1], [0, 0, 0]]), Fraction(5)),
])
def test_exp_matches_sympy(D, t):
    E = exp_one_param(D, t)
    expected = (to_sym(t) * sym_mat(D)).exp()
    assert sympy.simplify(sym_mat(E) - expected) == sympy.zeros(D.nrows, D.nrows)


@given(st.integers(-8, 8), st.integers(-8, 8))
def test_exp_is_a_one_parameter_group(p, q):
    D = latt1(3)
    s, t = PiScalar.pi(1, Fraction(p, 2)), PiScalar.pi(1, Fraction(q, 2))
    assert exp_one_param(D, s) @ exp_one_param(D, t) == exp_one_param(D, s + t)


def test_exp_rejects_unsupported_angle():
    with pytest.raises(UnsupportedAngle):
        exp_one_param(latt1(1), PiScalar.pi(1, Fraction(1, 3)))
    with pytest.raises(UnsupportedAngle, match="non-rational"):
        jordan_chevalley(Mat([[1, 1], [0, 1]]).map(lambda x: x * PI))


# -- Heisenberg groups --------------------------------------------------------------


pts = st.lists(st.integers(-20, 20), min_size=5, max_size=5).map(lambda v: tuple(Fraction(x, 2) for x in v))
pts3 = st.lists(st.integers(-20, 20), min_size=3, max_size=3).map(lambda v: tuple(Fraction(x, 3) for x in v))


@given(pts, pts, pts)
def test_h5_group_axioms(a, b, c):
    e = (0,) * 5
    assert group_product("H5", a, e) == a
    assert group_product("H5", a, h_inverse(a)) == e
    assert group_product("H5", group_product("H5", a, b), c) == group_product("H5", a, group_product("H5", b, c))


@given(pts3, pts3, pts3)
def test_h3_group_axioms(a, b, c):
    assert group_product("H3", a, h_inverse(a)) == (0, 0, 0)
    assert group_product("H3", group_product("H3", a, b), c) == group_product("H3", a, group_product("H3", b, c))


@pytest.mark.parametrize("t", [HALF_PI, PI, PiScalar.pi(1, 2)])
@given(a=pts, b=pts)
def test_exp_of_latt1_is_a_group_automorphism(t, a, b):
    A = exp_one_param(latt1(t.inverse()), t)
    lhs = apply_h5(A, group_product("H5", a, b))
    rhs = group_product("H5", apply_h5(A, a), apply_h5(A, b))
    assert lhs == rhs


@pytest.mark.parametrize("k", [1, 2, 3, 5])
@pytest.mark.parametrize("kind", ["H3", "H5"])
def test_gamma_closure(k, kind):
    assert gamma_closure(k, kind, seed=k, samples=200)


def test_gamma_without_half_fails_closure():
    L = CoordinateLattice.diagonal(1, 1, 1, 1, 1)
    rng = random.Random(0)
    bad = 0
    for _ in range(50):
        a = L.point([rng.randint(-5, 5) for _ in range(5)])
        b = L.point([rng.randint(-5, 5) for _ in range(5)])
        bad += not L.contains(group_product("H5", a, b))
    assert bad > 0


# -- lattice checks -------------------------------------------------------------


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("t0", ["pi/2", "pi", "2pi"])
def test_g1_lattices(k, t0):
    rep = check_paper_lattices("G1", k, t0)
    assert rep.preserved
    assert rep.b * rep.t0 == 1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_g2_lattices(k):
    rep = check_paper_lattices("G2", k)
    assert rep.preserved
    assert len(rep.levels) == 3


def test_unsupported_t0():
    with pytest.raises(UnsupportedT0):
        check_paper_lattices("G1", 1, "pi/3")
    with pytest.raises(UnsupportedT0):
        check_paper_lattices("G1", 1)


def test_rescaled_lattice_is_not_preserved():
    A = exp_one_param(latt1(1), HALF_PI)  # b t0 = pi/2 is not rational
    assert not lattice_preserved(A, gamma_k(1)).preserved


class QSqrt3:
    """a + b*sqrt(3) with rational a, b; enough arithmetic for the negative control."""

    def __init__(self, a, b=0):
        self.a, self.b = Fraction(a), Fraction(b)

    @staticmethod
    def lift(x):
        if isinstance(x, QSqrt3):
            return x
        if isinstance(x, PiScalar):
            x = x.to_fraction()
        return QSqrt3(x)

    def __add__(self, o):
        o = QSqrt3.lift(o)
        return QSqrt3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt3(-self.a, -self.b)

    def __sub__(self, o):
        return self + -QSqrt3.lift(o)

    def __rsub__(self, o):
        return QSqrt3.lift(o) - self

    def __mul__(self, o):
        o = QSqrt3.lift(o)
        return QSqrt3(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = Fraction(o)
        return QSqrt3(self.a / o, self.b / o)

    def __eq__(self, o):
        o = QSqrt3.lift(o)
        return self.a == o.a and self.b == o.b

    __hash__ = None

    def __bool__(self):
        return bool(self.a or self.b)

    def is_integral(self):
        return self.b == 0 and self.a.denominator == 1


def sixth_turn_trig(r):
    # cos and sin of r*pi for r a multiple of 1/6 that is not a multiple of 1/2
    table = {
        Fraction(1, 3): (QSqrt3(Fraction(1, 2)), QSqrt3(0, Fraction(1, 2))),
        Fraction(-1, 3): (QSqrt3(Fraction(1, 2)), QSqrt3(0, Fraction(-1, 2))),
    }
    return table[Fraction(r)]


def test_pi_over_three_negative_control():
    t0 = PiScalar.pi(1, Fraction(1, 3))
    D = latt1(t0.inverse())
    A = exp_one_param(D, t0, trig=sixth_turn_trig)
    A_inv = exp_one_param(D, -t0, trig=sixth_turn_trig)
    assert A[1, 1] == QSqrt3(Fraction(1, 2))
    prod = A @ A_inv
    assert all(prod[i, j] == int(i == j) for i in range(5) for j in range(5))
    chk = lattice_preserved(A, gamma_k(1), A_inv)
    assert not chk.preserved
