"""Chevalley-Eilenberg and Morse-Novikov (twisted) cohomology of a Lie algebra."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DimensionMismatch, NotClosed, NotTransversal
from .exactmath import (
    Mat,
    Q,
    char_poly,
    kernel_basis,
    poly_eval,
    rank,
    solve,
    span_basis,
)
from .exterior import KForm, _require_closed, diff_matrix, monomials, twisted_diff


def _theta_or_none(g, theta):
    if theta is None:
        return None
    if theta.n != g.dim:
        raise DimensionMismatch("theta lives on dimension %d, algebra on %d" % (theta.n, g.dim))
    _require_closed(g, theta)
    return theta if theta else None


def _columns(M):
    return [] if M is None else [c for c in M.columns()]


def _complement(B: list, Z: list) -> list:
    """Vectors of Z (in order) that extend span(B) to span(B + Z)."""
    chosen = []
    cur = list(B)
    r = rank(cur) if cur else 0
    for z in Z:
        trial = cur + [z]
        r2 = rank(trial)
        if r2 > r:
            chosen.append(z)
            cur, r = trial, r2
    return chosen


@dataclass(frozen=True)
class CohomologyReport:
    theta: KForm
    dims: tuple
    representatives: tuple  # per degree, tuple of KForms

    @property
    def vanishes(self) -> bool:
        return not any(self.dims)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * d for k, d in enumerate(self.dims))


def cocycles_and_coboundaries(g, theta, k):
    """Bases (as coordinate vectors) of Z^k and B^k for ``d_theta``."""
    n = g.dim
    size = comb(n, k)
    if size == 0:
        return [], []
    D = diff_matrix(g, theta, k) if k < n else None
    if D is None:
        Z = [tuple(Fraction(int(i == j)) for i in range(size)) for j in range(size)]
    else:
        Z = kernel_basis(D)
    if k == 0:
        B = []
    else:
        Dp = diff_matrix(g, theta, k - 1)
        B = span_basis(_columns(Dp)) if Dp is not None else []
    return Z, B


def cohomology(g, theta: KForm | None = None) -> CohomologyReport:
    """Dimensions and representatives of ``H^k_theta(g)``, k = 0..n.

    ``theta`` None or zero gives ordinary Lie algebra cohomology.
    """
    th = _theta_or_none(g, theta)
    n = g.dim
    dims, reps = [], []
    for k in range(n + 1):
        Z, B = cocycles_and_coboundaries(g, th, k)
        H = _complement(B, Z)
        assert len(H) == len(Z) - len(B)
        dims.append(len(H))
        reps.append(tuple(KForm.from_vector(n, k, v, g.offset) for v in H))
    shown = theta if theta is not None else KForm.zero(n, 1, g.offset)
    return CohomologyReport(shown, tuple(dims), tuple(reps))


def betti_numbers(g) -> tuple:
    return cohomology(g, None).dims


def solve_potential(g, theta: KForm | None, omega: KForm):
    """Some ``eta`` with ``d_theta eta = omega``, or None if the class is nonzero."""
    th = _theta_or_none(g, theta)
    if omega.n != g.dim:
        raise DimensionMismatch("form on dimension %d, algebra of dimension %d" % (omega.n, g.dim))
    k = omega.degree
    if k == 0:
        raise ValueError("0-forms have no potential")
    zero = KForm.zero(g.dim, 1, g.offset)
    defect = twisted_diff(g, th if th is not None else zero, omega)
    if defect:
        raise NotClosed(defect)
    D = diff_matrix(g, th, k - 1)
    x = solve(D, omega.to_vector())
    if x is None:
        return None
    return KForm.from_vector(g.dim, k - 1, x, g.offset)


# -- induced action on H(ker theta) ---------------------------------------------


def coadjoint_matrix(M: Mat, k: int) -> Mat:
    """Matrix on ``Lambda^k`` of the derivation extending ``alpha -> -alpha o M``.

    ``M`` is the matrix of an endomorphism of the vector space; on covector
    coordinates the degree-one action is ``-M^T``.
    """
    m = M.nrows
    mons = monomials(m, k)
    index = {mon: i for i, mon in enumerate(mons)}
    rows = [[Fraction(0)] * len(mons) for _ in mons]
    for col, mon in enumerate(mons):
        for r, i in enumerate(mon):
            # -e^i o M = -sum_j M[i, j] e^j
            for j in range(m):
                c = M[i, j]
                if not c:
                    continue
                new = list(mon)
                new[r] = j
                if len(set(new)) < k:
                    continue
                perm = sorted(range(k), key=lambda t: new[t])
                sign = _perm_sign(perm)
                key = tuple(sorted(new))
                rows[index[key]][col] -= sign * c
    if not mons:
        return None
    return Mat(rows)


def _perm_sign(perm):
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


@dataclass(frozen=True)
class InducedSpectrum:
    A: tuple
    kernel_basis: tuple
    ad_matrix: Mat  # ad_A restricted to ker theta, in the kernel basis
    char_polys: tuple  # per degree k = 0..n-1, characteristic polynomial on H^k(ker theta)

    @property
    def contains_one(self) -> bool:
        return any(poly_eval(p, 1) == 0 for p in self.char_polys)


def induced_spectrum(g, theta: KForm, A) -> InducedSpectrum:
    """Spectra of the coadjoint action of ``ad_A`` on ``H^k(ker theta)``.

    The twisted complex of g is the mapping cone of ``rho - 1`` on the
    complex of ``h = ker theta``, where ``rho`` is the coadjoint action of A,
    so ``H_theta(g) = 0`` exactly when 1 is not an eigenvalue of ``rho`` on
    ``H(h)``.
    """
    from .liealg import kernel_subalgebra

    _require_closed(g, theta)
    A = tuple(Q(a) for a in A)
    val = sum(a * t for a, t in zip(A, theta.to_vector()))
    if val != 1:
        raise NotTransversal(val)
    ks = kernel_subalgebra(g, theta)
    h, K = ks.algebra, ks.basis
    m = h.dim
    from .exactmath import coordinates

    cols = [coordinates(K, g.bracket(A, kb)) for kb in K]
    M = Mat.from_columns(cols)
    polys = []
    for k in range(m + 1):
        Z, B = cocycles_and_coboundaries(h, None, k)
        H = _complement(B, Z)
        R = coadjoint_matrix(M, k)
        if k < m:
            D = diff_matrix(h, None, k)
            Rn = coadjoint_matrix(M, k + 1)
            if Rn is not None and D is not None and Rn @ D != D @ R:
                raise AssertionError("coadjoint action does not commute with d")
        if not H:
            polys.append((Fraction(1),))
            continue
        basis = H + B
        Bm = Mat.from_columns(basis)
        induced = []
        for z in H:
            c = solve(Bm, R @ z)
            assert c is not None, "induced map leaves the cocycles"
            induced.append(c[: len(H)])
        polys.append(char_poly(Mat.from_columns(induced)))
    return InducedSpectrum(A, K, M, tuple(polys))
