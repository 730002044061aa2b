"""Derivations and the two extension constructions producing LCS algebras.

* ``lcs_from_contact``: a contact algebra ``(h, eta)`` and a derivation ``D``
  with ``eta o D = 0`` give ``g = R e_0 + h`` with ``[e_0, x] = D x`` and the
  first-kind LCS ``omega = d_theta eta``, ``theta = e^0``.
* ``double_extension``: a symplectic algebra ``(s, beta)`` and a symplectic
  derivation ``E`` give ``g = s + R V + R U`` with
  ``[X, Y] = [X, Y]_s + beta(X, Y) V`` and ``[U, X] = E X``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    EtaDNotZero,
    NotADerivation,
    NotFirstKind,
    NotSymplectic,
    NotSymplecticDerivation,
    DimensionMismatch,
)
from .exactmath import Mat, Q, char_poly, coordinates, in_span, kernel_basis, pfaffian, poly_mul
from .exterior import KForm, cediff, twisted_diff
from .lcs import Kind, LcsStructure, verify_contact, verify_lcs
from .liealg import LieAlgebra, kernel_subalgebra


# -- derivations ----------------------------------------------------------------


@dataclass(frozen=True)
class DerivationSpace:
    parent: LieAlgebra
    basis: tuple  # of Mat

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, D: Mat) -> bool:
        if not self.basis:
            return D.is_zero()
        return in_span([_flat(B) for B in self.basis], _flat(D))

    def element(self, params) -> Mat:
        """Linear combination of the basis with the given coefficients."""
        params = list(params)
        if len(params) != self.dim:
            raise DimensionMismatch("expected %d parameters" % self.dim)
        n = self.parent.dim
        out = Mat.zeros(n)
        for p, B in zip(params, self.basis):
            out = out + B.scale(Q(p))
        return out


def _flat(M: Mat) -> tuple:
    return tuple(a for r in M.rows for a in r)


def _unflat(v, n) -> Mat:
    return Mat([v[i * n:(i + 1) * n] for i in range(n)])


def _derivation_rows(g):
    """Linear conditions on the row-major unknowns ``D[a, b] -> a*n + b``."""
    n = g.dim
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            cij = g.bracket_basis(i, j)
            for r in range(n):
                row = [Fraction(0)] * (n * n)
                # D[e_i, e_j]_r = sum_k c^k_ij D[r, k]
                for k, c in enumerate(cij):
                    if c:
                        row[r * n + k] += c
                # -[D e_i, e_j]_r = -sum_a D[a, i] c^r_aj
                for a in range(n):
                    c = g.bracket_basis(a, j)[r]
                    if c:
                        row[a * n + i] -= c
                # -[e_i, D e_j]_r = -sum_a D[a, j] c^r_ia
                for a in range(n):
                    c = g.bracket_basis(i, a)[r]
                    if c:
                        row[a * n + j] -= c
                if any(row):
                    rows.append(row)
    return rows


def derivation_space(g: LieAlgebra) -> DerivationSpace:
    n = g.dim
    rows = _derivation_rows(g)
    if not rows:
        vecs = [tuple(Fraction(int(i == j)) for i in range(n * n)) for j in range(n * n)]
    else:
        vecs = kernel_basis(rows)
    return DerivationSpace(g, tuple(_unflat(v, n) for v in vecs))


def derivation_defects(g: LieAlgebra, D: Mat) -> list:
    n = g.dim
    if D.shape != (n, n):
        raise DimensionMismatch("derivation must be %dx%d" % (n, n))
    out = []
    cols = D.columns()
    for i in range(n):
        for j in range(i + 1, n):
            lhs = D @ g.bracket_basis(i, j)
            rhs1 = g.bracket(cols[i], g.basis_vector(j))
            rhs2 = g.bracket(g.basis_vector(i), cols[j])
            defect = tuple(a - b - c for a, b, c in zip(lhs, rhs1, rhs2))
            if any(defect):
                out.append(((i, j), defect))
    return out


def is_derivation(g: LieAlgebra, D: Mat) -> bool:
    return not derivation_defects(g, D)


def inner_derivation(g, x) -> Mat:
    from .liealg import ad

    return ad(g, x)


# -- semidirect extension ----------------------------------------------------------


def semidirect(h: LieAlgebra, D: Mat, name=None, offset=None) -> LieAlgebra:
    """``R e_0 + h`` with ``[e_0, x] = D x``; e_0 comes first in the basis."""
    bad = derivation_defects(h, D)
    if bad:
        raise NotADerivation(bad, h.offset)
    m = h.dim
    br = {}
    for (i, j), v in h.constants.items():
        br[(i + 1, j + 1)] = (Fraction(0),) + v
    for j, col in enumerate(D.columns()):
        if any(col):
            br[(0, j + 1)] = (Fraction(0),) + tuple(Q(a) for a in col)
    off = h.offset - 1 if offset is None else offset
    return LieAlgebra(m + 1, br, name=name, offset=off)


@dataclass(frozen=True)
class LcsExtension:
    algebra: LieAlgebra
    omega: KForm
    theta: KForm
    eta: KForm
    structure: LcsStructure


def lcs_from_contact(h: LieAlgebra, eta: KForm, D: Mat, name=None) -> LcsExtension:
    verify_contact(h, eta)
    bad = derivation_defects(h, D)
    if bad:
        raise NotADerivation(bad, h.offset)
    row = tuple(sum(eta.to_vector()[k] * D[k, j] for k in range(h.dim)) for j in range(h.dim))
    if any(row):
        raise EtaDNotZero(row)
    g = semidirect(h, D, name=name)
    n = g.dim
    theta = KForm.e(n, 0, offset=g.offset)
    eta_g = KForm.covector((0,) + tuple(eta.to_vector()), g.offset)
    omega = twisted_diff(g, theta, eta_g)
    st = verify_lcs(g, omega, theta)
    return LcsExtension(g, omega, theta, eta_g, st)


@dataclass(frozen=True)
class ContactReduction:
    algebra: LieAlgebra  # h = ker theta, on the echelon basis of the kernel
    embedding: tuple  # vectors of g spanning h
    eta: KForm
    derivation: Mat  # ad_U restricted to h
    anti_lee_vector: tuple
    theta_of_U: Fraction


def contact_from_lcs(g: LieAlgebra, omega: KForm, theta: KForm, eta: KForm | None = None) -> ContactReduction:
    st = verify_lcs(g, omega, theta)
    if st.kind is not Kind.FIRST:
        raise NotFirstKind("the LCS structure is not of the first kind (%s)" % st.kind)
    if eta is None:
        eta = st.eta
    elif twisted_diff(g, theta, eta) != omega:
        raise NotFirstKind("supplied eta does not satisfy d_theta eta = omega")
    from .lcs import lee_vectors

    _, U = lee_vectors(g, omega, theta, eta)
    ks = kernel_subalgebra(g, theta)
    h, K = ks.algebra, ks.basis
    ev = eta.to_vector()
    eta_h = KForm.covector([sum(a * b for a, b in zip(ev, k)) for k in K], h.offset)
    verify_contact(h, eta_h)
    cols = [coordinates(K, g.bracket(U, k)) for k in K]
    Dm = Mat.from_columns(cols)
    tU = sum(a * b for a, b in zip(theta.to_vector(), U))
    return ContactReduction(h, K, eta_h, Dm, U, tU)


# -- symplectic double extension ---------------------------------------------------


def _check_symplectic(s, beta):
    if s.dim % 2:
        raise NotSymplectic("odd-dimensional algebra")
    if beta.degree != 2 or beta.n != s.dim:
        raise NotSymplectic("beta must be a 2-form on s")
    if cediff(s, beta):
        raise NotSymplectic("beta is not closed")
    if not pfaffian(beta.as_matrix()):
        raise NotSymplectic("beta is degenerate")


def symplectic_defects(beta: KForm, E: Mat) -> list:
    W = beta.as_matrix()
    n = W.nrows
    S = E.T() @ W + W @ E  # S[a, b] = beta(E e_a, e_b) + beta(e_a, E e_b)
    return [((a, b), S[a, b]) for a in range(n) for b in range(a + 1, n) if S[a, b]]


def symplectic_derivations(s: LieAlgebra, beta: KForm) -> DerivationSpace:
    _check_symplectic(s, beta)
    n = s.dim
    W = beta.as_matrix()
    rows = _derivation_rows(s)
    for a in range(n):
        for b in range(a + 1, n):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                # beta(E e_a, e_b) = sum_k E[k, a] W[k, b]
                row[k * n + a] += W[k, b]
                # beta(e_a, E e_b) = sum_k W[a, k] E[k, b]
                row[k * n + b] += W[a, k]
            rows.append(row)
    vecs = kernel_basis(rows)
    return DerivationSpace(s, tuple(_unflat(v, n) for v in vecs))


@dataclass(frozen=True)
class DoubleExtension:
    algebra: LieAlgebra
    omega: KForm
    theta: KForm
    eta: KForm
    structure: LcsStructure
    V: tuple
    U: tuple
    spectrum_identity: bool


def double_extension(s: LieAlgebra, beta: KForm, E: Mat, name=None) -> DoubleExtension:
    """Basis order ``(s-basis, V, U)``; ``theta = e^U`` and ``eta = -e^V``.

    With this sign of eta, ``omega = d eta - theta ^ eta = beta - e^{VU}``.
    """
    _check_symplectic(s, beta)
    bad = derivation_defects(s, E)
    if bad:
        raise NotSymplecticDerivation("E is not a derivation of s: %s" % NotADerivation(bad, s.offset))
    if symplectic_defects(beta, E):
        raise NotSymplecticDerivation("beta(E x, y) + beta(x, E y) != 0")
    m = s.dim
    n = m + 2
    iV, iU = m, m + 1
    W = beta.as_matrix()
    br = {}
    for i in range(m):
        for j in range(i + 1, m):
            v = list(s.bracket_basis(i, j)) + [W[i, j], Fraction(0)]
            if any(v):
                br[(i, j)] = tuple(v)
    for j, col in enumerate(E.columns()):
        if any(col):
            br[(iU, j)] = tuple(col) + (Fraction(0), Fraction(0))
    g = LieAlgebra(n, br, name=name, offset=s.offset)
    theta = KForm.e(n, iU, offset=g.offset)
    eta = KForm.e(n, iV, coeff=-1, offset=g.offset)
    omega = twisted_diff(g, theta, eta)
    st = verify_lcs(g, omega, theta)
    V = g.basis_vector(iV)
    U = g.basis_vector(iU)
    ok = _spectrum_identity(s, g)
    return DoubleExtension(g, omega, theta, eta, st, V, U, ok)


def _spectrum_identity(s, g) -> bool:
    """``charpoly(ad_X on g) = lambda^2 charpoly(ad_X on s)`` for basis X of s."""
    from .liealg import ad

    m = s.dim
    for j in range(m):
        ps = char_poly(ad(s, s.basis_vector(j)))
        pg = char_poly(ad(g, g.basis_vector(j)))
        if pg != poly_mul((Fraction(0), Fraction(0), Fraction(1)), ps):
            return False
    return True
