"""Locally conformally symplectic (LCS) and contact structures on Lie algebras."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from .cohomology import solve_potential
from .errors import (
    Degenerate,
    DimensionMismatch,
    EvenDimension,
    NotContact,
    NotLcs,
    ThetaZero,
)
from .exactmath import Mat, kernel_basis, pfaffian, solve, in_span
from .exterior import KForm, _require_closed, cediff, diff_matrix, wedge

DEFAULT_BUDGET = 512


class Kind(enum.Enum):
    FIRST = "FirstKind"
    SECOND = "SecondKind"
    NOT_APPLICABLE = "NotApplicable"  # theta = 0: the form is symplectic

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class AutomorphismAlgebra:
    """``g_omega = {x : omega([x,y],z) + omega(y,[x,z]) = 0 for all y, z}``."""

    basis: tuple
    lee_values: tuple = ()

    @property
    def dim(self):
        return len(self.basis)


@dataclass(frozen=True)
class LcsStructure:
    omega: KForm
    theta: KForm
    lee_vector: tuple
    eta: KForm | None
    anti_lee_vector: tuple | None
    kind: Kind
    automorphisms: AutomorphismAlgebra
    pfaffian: Fraction

    @property
    def symplectic(self) -> bool:
        return self.theta.is_zero()

    @property
    def exact(self) -> bool:
        return self.eta is not None


@dataclass(frozen=True)
class ContactStructure:
    eta: KForm
    reeb_vector: tuple
    volume: Fraction  # coefficient of e^{1..n} in eta ^ (d eta)^k


def _omega_matrix(omega: KForm) -> Mat:
    if omega.degree != 2:
        raise ValueError("omega must be a 2-form")
    return omega.as_matrix()


def check_degenerate(omega: KForm):
    """Return ``Pf(omega)``, raising Degenerate (with the kernel) when it is 0."""
    if omega.n % 2:
        raise Degenerate(kernel_basis(_omega_matrix(omega)))
    W = _omega_matrix(omega)
    pf = pfaffian(W)
    if not pf:
        raise Degenerate(kernel_basis(W))
    return pf


def _contract_solve(omega: KForm, alpha: KForm):
    """The unique x with ``i_x omega = alpha`` (omega nondegenerate)."""
    W = _omega_matrix(omega)
    # (i_x omega)_j = sum_i x_i W[i, j]
    x = solve(W.T(), alpha.to_vector())
    if x is None:
        raise Degenerate(kernel_basis(W))
    return x


def lcs_defect(g, omega: KForm, theta: KForm) -> KForm:
    return cediff(g, omega) - wedge(theta, omega).with_offset(g.offset)


def lee_vectors(g, omega: KForm, theta: KForm, eta: KForm | None = None):
    """``(V, U)`` with ``i_V omega = theta`` and ``i_U omega = -eta`` (U None without eta)."""
    check_degenerate(omega)
    V = _contract_solve(omega, theta)
    U = _contract_solve(omega, -eta) if eta is not None else None
    return V, U


def automorphism_algebra(g, omega: KForm, theta: KForm | None = None) -> AutomorphismAlgebra:
    n = g.dim
    W = _omega_matrix(omega)
    rows = []
    for a in range(n):
        for b in range(a + 1, n):
            row = []
            for i in range(n):
                xa = g.bracket_basis(i, a)
                xb = g.bracket_basis(i, b)
                # omega([e_i, e_a], e_b) + omega(e_a, [e_i, e_b])
                v = sum(xa[k] * W[k, b] for k in range(n) if xa[k])
                v += sum(W[a, k] * xb[k] for k in range(n) if xb[k])
                row.append(v)
            rows.append(row)
    basis = tuple(kernel_basis(rows)) if rows else tuple(g.basis_vector(i) for i in range(n))
    lee = ()
    if theta is not None:
        t = theta.to_vector()
        lee = tuple(sum(x * y for x, y in zip(b, t)) for b in basis)
    return AutomorphismAlgebra(basis, lee)


def is_subalgebra(g, basis) -> bool:
    basis = list(basis)
    if not basis:
        return True
    return all(in_span(basis, g.bracket(x, y)) for x in basis for y in basis)


def _kind_from(aut: AutomorphismAlgebra, theta: KForm) -> Kind:
    if theta.is_zero():
        return Kind.NOT_APPLICABLE
    return Kind.FIRST if any(aut.lee_values) else Kind.SECOND


def verify_lcs(g, omega: KForm, theta: KForm) -> LcsStructure:
    """Check ``d theta = 0``, ``d omega = theta ^ omega`` and ``Pf(omega) != 0``."""
    if omega.n != g.dim or theta.n != g.dim:
        raise DimensionMismatch("forms do not live on a %d-dimensional algebra" % g.dim)
    _require_closed(g, theta)
    defect = lcs_defect(g, omega, theta)
    if defect:
        raise NotLcs(defect)
    pf = check_degenerate(omega)
    V = _contract_solve(omega, theta)
    eta = solve_potential(g, theta, omega)
    U = _contract_solve(omega, -eta) if eta is not None else None
    aut = automorphism_algebra(g, omega, theta)
    return LcsStructure(
        omega=omega.with_offset(g.offset),
        theta=theta.with_offset(g.offset),
        lee_vector=V,
        eta=eta,
        anti_lee_vector=U,
        kind=_kind_from(aut, theta),
        automorphisms=aut,
        pfaffian=pf,
    )


def classify_kind(g, omega: KForm, theta: KForm) -> Kind:
    return verify_lcs(g, omega, theta).kind


def lee_form_of(g, omega: KForm):
    """All 1-forms theta with ``d omega = theta ^ omega``.

    Returns ``(theta, kernel)`` where ``theta`` is one solution and ``kernel``
    spans the solutions of ``theta ^ omega = 0``; ``(None, kernel)`` when
    there is no solution.  Closedness of theta is not assumed.
    """
    n = g.dim
    cols = [wedge(KForm.e(n, i, offset=g.offset), omega).to_vector() for i in range(n)]
    M = Mat.from_columns(cols)
    rhs = cediff(g, omega).to_vector()
    x = solve(M, rhs)
    K = [KForm.covector(v, g.offset) for v in kernel_basis(M)]
    if x is None:
        return None, K
    return KForm.covector(x, g.offset), K


# -- searches ---------------------------------------------------------------------


def _random_rational(rng: random.Random) -> Fraction:
    q = rng.randint(1, 4)
    return Fraction(rng.randint(-8 * q, 8 * q), q)


def _combine(basis, coeffs, n, degree, offset):
    out = KForm.zero(n, degree, offset)
    for c, b in zip(coeffs, basis):
        if c:
            out = out + b.scale(c)
    return out


@dataclass(frozen=True)
class LcsSearchResult:
    theta: KForm
    solution_basis: tuple
    witness: KForm | None
    status: str  # "found" or "refuted"
    samples: int = 0
    note: str = ""


# -- Pfaffian as a polynomial on the solution space --------------------------------
# Polynomials are dicts {exponent tuple: Fraction}.


def _pmul(p, q):
    out = {}
    for a, x in p.items():
        for b, y in q.items():
            e = tuple(i + j for i, j in zip(a, b))
            v = out.get(e, 0) + x * y
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def _padd(p, q, sign=1):
    out = dict(p)
    for e, y in q.items():
        v = out.get(e, 0) + sign * y
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def pfaffian_polynomial(basis) -> dict:
    """Pf(sum x_i b_i) as a polynomial in x_1..x_m (exact)."""
    m = len(basis)
    n = basis[0].n
    mats = [b.as_matrix() for b in basis]
    entry = {}
    for r in range(n):
        for c in range(n):
            lin = {}
            for i, M in enumerate(mats):
                if M[r, c]:
                    lin[tuple(int(k == i) for k in range(m))] = Fraction(M[r, c])
            entry[r, c] = lin
    one = {(0,) * m: Fraction(1)}
    memo = {}

    def pf(idx):
        if not idx:
            return one
        if idx in memo:
            return memo[idx]
        first, rest = idx[0], idx[1:]
        total = {}
        for pos, j in enumerate(rest):
            a = entry[first, j]
            if a:
                total = _padd(total, _pmul(a, pf(rest[:pos] + rest[pos + 1:])), 1 if pos % 2 == 0 else -1)
        memo[idx] = total
        return total

    return pf(tuple(range(n)))


def _substitute(p, i, v):
    out = {}
    for e, c in p.items():
        e2 = e[:i] + (0,) + e[i + 1:]
        w = out.get(e2, 0) + c * Fraction(v) ** e[i]
        if w:
            out[e2] = w
        else:
            out.pop(e2, None)
    return out


def nonvanishing_point(p, m: int, degree: int):
    """Integer point in {0..degree}^m where the nonzero polynomial p is nonzero.

    Variables are fixed one at a time; a nonzero polynomial of degree <= d in
    x_i stays nonzero for all but at most d of the d+1 candidate values.
    """
    point = []
    for i in range(m):
        for v in range(degree + 1):
            q = _substitute(p, i, v)
            if q:
                p = q
                point.append(v)
                break
        else:  # pragma: no cover - excluded by the degree bound
            raise AssertionError("degree bound violated")
    return point


def lcs_search(g, theta: KForm, seed: int = 0, budget: int = DEFAULT_BUDGET) -> LcsSearchResult:
    """Look for a nondegenerate omega with ``d omega = theta ^ omega``.

    The solutions form a linear space on which the Pfaffian is a homogeneous
    polynomial of degree n/2.  Basis elements and seeded random combinations
    are tried first.  Otherwise the Pfaffian is expanded symbolically: the zero
    polynomial refutes existence, and a nonzero one yields a witness.
    """
    _require_closed(g, theta)
    n = g.dim
    M = diff_matrix(g, theta, 2) if n > 2 else None
    if M is None:
        vecs = [tuple(Fraction(int(i == j)) for i in range(n * (n - 1) // 2)) for j in range(n * (n - 1) // 2)]
    else:
        vecs = kernel_basis(M)
    basis = tuple(KForm.from_vector(n, 2, v, g.offset) for v in vecs)
    m = len(basis)

    if n % 2 or m == 0:
        why = "odd dimension" if n % 2 else "only omega = 0 solves the equation"
        return LcsSearchResult(theta, basis, None, "refuted", 0, why)

    def nondeg(w):
        return bool(pfaffian(w.as_matrix()))

    samples = 0
    for b in basis:
        samples += 1
        if nondeg(b):
            return LcsSearchResult(theta, basis, b, "found", samples)
    rng = random.Random(seed)
    for _ in range(budget):
        samples += 1
        w = _combine(basis, [_random_rational(rng) for _ in range(m)], n, 2, g.offset)
        if w and nondeg(w):
            return LcsSearchResult(theta, basis, w, "found", samples)
    P = pfaffian_polynomial(basis)
    if not P:
        return LcsSearchResult(theta, basis, None, "refuted", samples,
                               "Pfaffian vanishes identically on the solution space")
    w = _combine(basis, nonvanishing_point(P, m, n // 2), n, 2, g.offset)
    assert nondeg(w)
    return LcsSearchResult(theta, basis, w, "found", samples)


def _top_coefficient(form: KForm):
    return form.coeff(*range(form.n)) if form.degree == form.n else Fraction(0)


def contact_volume(g, eta: KForm) -> Fraction:
    """Coefficient of ``eta ^ (d eta)^k`` on the top monomial (dim = 2k + 1)."""
    n = g.dim
    if n % 2 == 0:
        raise EvenDimension(n)
    de = cediff(g, eta)
    top = eta
    for _ in range(n // 2):
        top = wedge(top, de)
    return _top_coefficient(top)


def verify_contact(g, eta: KForm) -> ContactStructure:
    if eta.degree != 1 or eta.n != g.dim:
        raise DimensionMismatch("eta must be a 1-form on the algebra")
    vol = contact_volume(g, eta)
    if not vol:
        raise NotContact(eta)
    W = cediff(g, eta).as_matrix()
    rows = [list(eta.to_vector())] + [list(r) for r in W.T().rows]
    rhs = [1] + [0] * g.dim
    R = solve(rows, rhs)
    assert R is not None
    assert len(kernel_basis(rows)) == 0, "Reeb vector should be unique"
    return ContactStructure(eta.with_offset(g.offset), R, vol)


def contact_search(g, seed: int = 0, budget: int = DEFAULT_BUDGET):
    n = g.dim
    if n % 2 == 0:
        raise EvenDimension(n)
    for i in range(n):
        eta = KForm.e(n, i, offset=g.offset)
        if contact_volume(g, eta):
            return verify_contact(g, eta)
    rng = random.Random(seed)
    for _ in range(budget):
        eta = KForm.covector([_random_rational(rng) for _ in range(n)], g.offset)
        if eta and contact_volume(g, eta):
            return verify_contact(g, eta)
    return None


def require_nonzero(theta: KForm):
    if theta.is_zero():
        raise ThetaZero()
