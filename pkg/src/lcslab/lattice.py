"""Exact one-parameter groups ``exp(tD)`` and lattice checks in Heisenberg towers.

Everything is done over :class:`~lcslab.exactmath.PiScalar`.  Trigonometric
values are only produced at multiples of pi/2, where they lie in {0, 1, -1};
callers may pass their own ``trig`` hook for other angles.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    NonCommutingDecomposition,
    SingularMatrix,
    UnsupportedAngle,
    UnsupportedT0,
)
from .exactmath import (
    Mat,
    PiScalar,
    Q,
    adjugate,
    char_poly,
    det,
    inverse,
    is_integral,
    mat_poly_eval,
    poly_deriv,
    poly_divmod,
    rational_roots,
    squarefree_part,
)

HALF_PI_TRIG = {0: (1, 0), 1: (0, 1), 2: (-1, 0), 3: (0, -1)}


def default_trig(r: Fraction):
    """``(cos(r pi), sin(r pi))`` for ``2r`` an integer."""
    r = Q(r)
    twice = 2 * r
    if twice.denominator != 1:
        raise UnsupportedAngle("cos/sin of %s*pi is not in {0, 1, -1}" % r)
    c, s = HALF_PI_TRIG[int(twice) % 4]
    return Fraction(c), Fraction(s)


def _simplify(x):
    return x.simplify() if isinstance(x, PiScalar) else x


def _clean(M: Mat) -> Mat:
    return M.map(_simplify)


def _as_pi(t) -> PiScalar:
    return PiScalar.coerce(t)


def _rational_poly(p):
    out = []
    for c in p:
        c = _simplify(c)
        if isinstance(c, PiScalar):
            raise UnsupportedAngle("characteristic polynomial has non-rational coefficient %s" % c)
        out.append(c)
    return tuple(out)


def _is_nilpotent(N: Mat) -> bool:
    return (N ** N.nrows).map(_simplify).is_zero()


def jordan_chevalley(D: Mat):
    """``(S, N)`` with ``D = S + N``, S semisimple, N nilpotent, ``SN = NS``.

    Uses the Newton iteration ``S <- S - P(S) P'(S)^-1`` with P the squarefree
    part of the characteristic polynomial.  Entries may be PiScalars as long
    as the characteristic polynomial is rational.
    """
    D = _clean(D)
    P = squarefree_part(_rational_poly(char_poly(D)))
    dP = poly_deriv(P)
    S = D
    for _ in range(2 * D.nrows + 2):
        PS = _clean(mat_poly_eval(P, S))
        if PS.is_zero():
            break
        dPS = _clean(mat_poly_eval(dP, S))
        d = _simplify(det(dPS))
        if isinstance(d, PiScalar) or not d:
            raise NonCommutingDecomposition("Newton step for the semisimple part failed (det %s)" % d)
        S = _clean(S - PS @ adjugate(dPS).scale(1 / d))
    else:
        raise NonCommutingDecomposition("semisimple part did not converge")
    N = _clean(D - S)
    if not _is_nilpotent(N) or _clean(S @ N) != _clean(N @ S):
        raise NonCommutingDecomposition("D = S + N is not a commuting semisimple/nilpotent split")
    return S, N


def rotation_rates(S: Mat) -> list:
    """Distinct rates ``w >= 0`` with ``Spec(S) = {0} u {+-i w}``; each must be rational."""
    p = _rational_poly(char_poly(S))
    m = next(i for i, c in enumerate(p) if c)
    q = p[m:]
    if any(q[1::2]):
        raise UnsupportedAngle("semisimple part has non-imaginary eigenvalues")
    r = q[0::2]
    rates = [Fraction(0)] if m else []
    if len(r) > 1:
        sq = squarefree_part(r)
        roots = rational_roots(sq)
        if poly_divmod(sq, _prod_linear(roots))[1] or any(mu >= 0 for mu in roots):
            raise UnsupportedAngle("rotation rates are not rational")
        for mu in roots:
            w = _rational_sqrt(-mu)
            if w is None:
                raise UnsupportedAngle("rotation rate sqrt(%s) is irrational" % (-mu))
            rates.append(w)
    return sorted(set(rates))


def _prod_linear(roots):
    from .exactmath import poly_mul

    out = (Fraction(1),)
    for a in roots:
        out = poly_mul(out, (-a, Fraction(1)))
    return out


def _rational_sqrt(q: Fraction):
    from math import isqrt

    n, d = q.numerator, q.denominator
    a, b = isqrt(n), isqrt(d)
    if a * a == n and b * b == d:
        return Fraction(a, b)
    return None


def _angle(w: Fraction, t: PiScalar) -> Fraction:
    """``w t / pi`` for ``t = q pi``."""
    wt = t * w
    terms = wt.terms
    if not terms:
        return Fraction(0)
    if set(terms) != {1}:
        raise UnsupportedAngle("rotation angle %s is not a rational multiple of pi" % wt)
    return terms[1]


def exp_one_param(D: Mat, t, trig=default_trig) -> Mat:
    """``exp(t D)`` exactly.

    D must split as rotations with rational rates plus a commuting nilpotent
    part.  t is a Fraction or a PiScalar; rotations need t to be a rational
    multiple of pi, and ``trig(r)`` must return ``(cos(r pi), sin(r pi))``.
    """
    if not D.is_square():
        raise DimensionMismatch("exp of a non-square matrix")
    n = D.nrows
    t = _as_pi(t)
    S, N = jordan_chevalley(D)
    rates = rotation_rates(S)
    S2 = _clean(S @ S)
    eye = Mat.identity(n)
    values = [-(w * w) for w in rates]
    rot = Mat.zeros(n)
    for w, nu in zip(rates, values):
        E = eye
        for mu in values:
            if mu != nu:
                E = E @ (S2 - eye.scale(mu)).scale(1 / (nu - mu))
        E = _clean(E)
        if w == 0:
            block = E
        else:
            c, s = trig(_angle(w, t))
            block = E.scale(c) + (E @ S).scale(s * (1 / w))
        rot = rot + block
    # terminating series for exp(tN)
    term = eye
    expn = eye
    k = 1
    while True:
        term = _clean((term @ N).scale(t).scale(Fraction(1, k)))
        if term.is_zero():
            break
        expn = expn + term
        k += 1
        if k > n + 1:
            raise NonCommutingDecomposition("nilpotent series failed to terminate")
    return _clean(rot @ _clean(expn))


# -- lattices ---------------------------------------------------------------------


@dataclass(frozen=True)
class CoordinateLattice:
    """The set ``B Z^n``; B is an invertible (usually diagonal) matrix."""

    basis_matrix: Mat

    def __post_init__(self):
        if not det(self.basis_matrix):
            raise SingularMatrix("lattice basis is singular")

    @classmethod
    def diagonal(cls, *entries):
        n = len(entries)
        return cls(Mat([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]))

    @property
    def dim(self):
        return self.basis_matrix.nrows

    def point(self, ints):
        return tuple(_simplify(x) for x in self.basis_matrix @ tuple(Fraction(i) for i in ints))

    def contains(self, v) -> bool:
        c = inverse(self.basis_matrix) @ tuple(v)
        return all(is_integral(_simplify(x)) for x in c)


@dataclass(frozen=True)
class LatticeCheck:
    preserved: bool
    forward: Mat  # B^-1 A B
    backward: Mat  # B^-1 A^-1 B


def _integral(M: Mat) -> bool:
    return all(is_integral(_simplify(a)) for r in M.rows for a in r)


def lattice_preserved(A: Mat, L: CoordinateLattice, A_inv: Mat | None = None) -> LatticeCheck:
    """A maps ``L`` onto itself iff ``B^-1 A B`` and ``B^-1 A^-1 B`` are integral."""
    if A.shape != L.basis_matrix.shape:
        raise DimensionMismatch("matrix and lattice dimensions differ")
    if A_inv is None:
        A_inv = inverse(A)
    B = L.basis_matrix
    Bi = inverse(B)
    fwd = _clean(Bi @ A @ B)
    bwd = _clean(Bi @ A_inv @ B)
    return LatticeCheck(_integral(fwd) and _integral(bwd), fwd, bwd)


# -- Heisenberg groups -------------------------------------------------------------


def _s(x):
    return _simplify(x) if isinstance(x, PiScalar) else Q(x)


def h3_product(a, b):
    """``(z, x, y)``; ``z + z' + (xy' - x'y)/2``."""
    z, x, y = map(_s, a)
    z2, x2, y2 = map(_s, b)
    return tuple(map(_simplify_any, (z + z2 + (x * y2 - x2 * y) / 2, x + x2, y + y2)))


def h5_product(a, b):
    """``(z, x1, y1, x2, y2)``; symplectic pairs (x1, y1) and (x2, y2)."""
    z, x1, y1, x2, y2 = map(_s, a)
    w, u1, v1, u2, v2 = map(_s, b)
    zz = z + w + (x1 * v1 - u1 * y1 + x2 * v2 - u2 * y2) / 2
    return tuple(map(_simplify_any, (zz, x1 + u1, y1 + v1, x2 + u2, y2 + v2)))


def _simplify_any(x):
    return _simplify(x) if isinstance(x, PiScalar) else x


def h_inverse(a):
    return tuple(-_s(x) for x in a)


def group_product(kind: str, a, b):
    kind = kind.upper()
    sizes = {"H3": 3, "H5": 5}
    if kind not in sizes:
        raise ValueError("unknown group %r" % kind)
    if len(a) != sizes[kind] or len(b) != sizes[kind]:
        raise DimensionMismatch("%s elements have %d coordinates" % (kind, sizes[kind]))
    return h3_product(a, b) if kind == "H3" else h5_product(a, b)


# Algebra basis (e1..e5) of h5 versus group coordinates (z, x1, y1, x2, y2):
# [e2, e4] = e1 and [e3, e5] = e1, so z = e1, x1 = e2, y1 = e4, x2 = e3, y2 = e5.
H5_COORDS = (0, 1, 3, 2, 4)


def h5_from_basis(v):
    return tuple(v[i] for i in H5_COORDS)


def h5_to_basis(c):
    out = [None] * 5
    for pos, i in enumerate(H5_COORDS):
        out[i] = c[pos]
    return tuple(out)


def apply_h5(A: Mat, c):
    """Act by a matrix written on e1..e5 on group coordinates."""
    return h5_from_basis(tuple(_simplify_any(x) for x in A @ h5_to_basis(c)))


# -- the two families ------------------------------------------------------------


PI = PiScalar.pi()


def latt1(b) -> Mat:
    """Derivation of h5 (basis e1..e5) defining g_{1,b}."""
    return Mat([
        [0, 0, 0, 0, 0],
        [0, 0, 0, -1, 0],
        [0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, b, 0, 0],
    ])


def latt2(b) -> Mat:
    """Derivation of h (basis e1..e5) defining g_{2,b}."""
    return Mat([
        [0, 0, 0, 0, 0],
        [0, 0, -1, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 0, 0, 0, b],
        [0, 0, 0, 0, 0],
    ])


def g2_tower_matrices(b):
    """``ad_{e0}`` on (e4, e5, e1, e2, e3), ``ad_{e4}`` on (e5, e1, e2, e3), ``ad_{e5}`` on (e1, e2, e3)."""
    D = Mat([
        [0, b, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0],
        [0, 0, 0, 0, -1],
        [0, 0, 0, 1, 0],
    ])
    U = Mat([
        [0, 0, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 0],
        [0, 0, 0, 0],
    ])
    V = Mat([
        [0, 0, 0],
        [0, 0, 1],
        [0, -1, 0],
    ])
    return D, U, V


def gamma_k(k: int, dim: int = 5) -> CoordinateLattice:
    if k < 1:
        raise ValueError("k must be a positive integer")
    return CoordinateLattice.diagonal(Fraction(1, 2 * k), *([1] * (dim - 1)))


ALLOWED_T0 = {
    "pi/2": PiScalar.pi(1, Fraction(1, 2)),
    "pi": PiScalar.pi(1, 1),
    "2pi": PiScalar.pi(1, 2),
}


@dataclass(frozen=True)
class LatticeReport:
    family: str
    k: int
    t0: PiScalar | None
    b: PiScalar
    levels: tuple  # (label, A, LatticeCheck)
    closure: bool
    samples: int = 0

    @property
    def preserved(self) -> bool:
        return self.closure and all(chk.preserved for _, _, chk in self.levels)


def gamma_closure(k: int, kind: str = "H5", seed: int = 0, samples: int = 100) -> bool:
    """Products and inverses of random points of Gamma_k stay in Gamma_k."""
    dim = 5 if kind == "H5" else 3
    L = gamma_k(k, dim)
    rng = random.Random(seed)
    for _ in range(samples):
        a = L.point([rng.randint(-20, 20) for _ in range(dim)])
        b = L.point([rng.randint(-20, 20) for _ in range(dim)])
        if not (L.contains(group_product(kind, a, b)) and L.contains(h_inverse(a))):
            return False
    return True


def check_paper_lattices(family: str, k: int, t0=None, seed: int = 0) -> LatticeReport:
    family = family.upper()
    if family == "G1":
        if isinstance(t0, str):
            t0 = ALLOWED_T0.get(t0.replace(" ", "").replace("*", ""))
        if t0 is None or PiScalar.coerce(t0) not in ALLOWED_T0.values():
            raise UnsupportedT0("t0 must be one of pi/2, pi, 2pi")
        t0 = PiScalar.coerce(t0)
        b = t0.inverse()
        A = exp_one_param(latt1(b), t0)
        Ainv = exp_one_param(latt1(b), -t0)
        chk = lattice_preserved(A, gamma_k(k), Ainv)
        return LatticeReport("G1", k, t0, b, (("phi(t0) on Gamma_k", A, chk),),
                             gamma_closure(k, "H5", seed), 100)
    if family == "G2":
        b = PiScalar.pi(-3, 8)
        D, U, V = g2_tower_matrices(b)
        half_pi = PiScalar.pi(1, Fraction(1, 2))
        two_over_pi = PiScalar.pi(-1, 2)
        levels = []
        L1 = gamma_k(k, 3)
        A1 = exp_one_param(V, half_pi)
        levels.append(("rho(pi/2) on Gamma_k", A1,
                       lattice_preserved(A1, L1, exp_one_param(V, -half_pi))))
        L2 = CoordinateLattice.diagonal(half_pi, Fraction(1, 2 * k), 1, 1)
        A2 = exp_one_param(U, two_over_pi)
        levels.append(("psi(2/pi) on (pi/2)Z x Gamma_k", A2,
                       lattice_preserved(A2, L2, exp_one_param(U, -two_over_pi))))
        L3 = CoordinateLattice.diagonal(two_over_pi, half_pi, Fraction(1, 2 * k), 1, 1)
        A3 = exp_one_param(D, half_pi)
        levels.append(("phi(pi/2) on (2/pi)Z x (pi/2)Z x Gamma_k", A3,
                       lattice_preserved(A3, L3, exp_one_param(D, -half_pi))))
        return LatticeReport("G2", k, None, b, tuple(levels), gamma_closure(k, "H3", seed), 100)
    raise ValueError("family must be G1 or G2")
