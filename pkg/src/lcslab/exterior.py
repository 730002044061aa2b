"""Exterior forms on a Lie algebra and the (twisted) Chevalley-Eilenberg differential.

Forms are stored on the dual basis ``e^0 .. e^{n-1}`` internally.  Each form
carries a display ``offset`` (1 for the usual ``e^1 .. e^n``, 0 for the
six-dimensional families written with ``e^0 .. e^5``); it never takes part in
equality or arithmetic.

Sign convention: on 1-forms ``(d alpha)(x, y) = -alpha([x, y])``, extended as a
degree +1 antiderivation, so ``[e1, e4] = -e1`` reads ``de^1 = e^14``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import DimensionMismatch, LcsLabError, ThetaNotClosed
from .exactmath import Mat, Q, fmt_rat


def _sort_sign(idx):
    """Sign and sorted tuple of a sequence of indices; sign 0 on a repeat."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, None
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(idx))


class KForm:
    """An element of ``Lambda^k g*`` with exact coefficients."""

    __slots__ = ("n", "degree", "_items", "offset", "_hash")

    def __init__(self, n: int, degree: int, coeffs=None, offset: int = 1):
        if not 0 <= degree:
            raise ValueError("negative degree")
        clean = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise DimensionMismatch("monomial %s has wrong degree for a %d-form" % (idx, degree))
            if any(not 0 <= i < n for i in idx):
                raise DimensionMismatch("index out of range in %s (n=%d)" % (idx, n))
            sign, key = _sort_sign(idx)
            c = Q(c)
            if sign and c:
                clean[key] = clean.get(key, 0) + sign * c
        self.n = n
        self.degree = degree
        self._items = tuple(sorted((k, v) for k, v in clean.items() if v))
        self.offset = offset
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n, degree, offset=1):
        return cls(n, degree, {}, offset)

    @classmethod
    def one(cls, n, offset=1):
        return cls(n, 0, {(): 1}, offset)

    @classmethod
    def e(cls, n, *idx, coeff=1, offset=1):
        """Monomial on internal (0-based) indices."""
        return cls(n, len(idx), {tuple(idx): coeff}, offset)

    @classmethod
    def covector(cls, values, offset=1):
        values = [Q(v) for v in values]
        return cls(len(values), 1, {(i,): v for i, v in enumerate(values) if v}, offset)

    @classmethod
    def from_vector(cls, n, degree, v, offset=1):
        mons = monomials(n, degree)
        if len(v) != len(mons):
            raise DimensionMismatch("expected %d coordinates" % len(mons))
        return cls(n, degree, {m: c for m, c in zip(mons, v) if c}, offset)

    @classmethod
    def from_matrix(cls, M: Mat, offset=1):
        n = M.nrows
        return cls(n, 2, {(i, j): M[i, j] for i in range(n) for j in range(i + 1, n) if M[i, j]}, offset)

    # -- accessors ----------------------------------------------------------

    @property
    def coeffs(self) -> dict:
        return dict(self._items)

    def coeff(self, *idx):
        sign, key = _sort_sign(idx)
        if not sign:
            return Fraction(0)
        return sign * self.coeffs.get(key, Fraction(0))

    def to_vector(self) -> tuple:
        c = self.coeffs
        return tuple(c.get(m, Fraction(0)) for m in monomials(self.n, self.degree))

    def is_zero(self) -> bool:
        return not self._items

    def __bool__(self):
        return bool(self._items)

    def with_offset(self, offset):
        return KForm(self.n, self.degree, self.coeffs, offset)

    def as_matrix(self) -> Mat:
        """Gram matrix ``omega(e_i, e_j)`` of a 2-form."""
        if self.degree != 2:
            raise ValueError("as_matrix needs a 2-form")
        rows = [[Fraction(0)] * self.n for _ in range(self.n)]
        for (i, j), c in self._items:
            rows[i][j] = c
            rows[j][i] = -c
        return Mat(rows)

    def __call__(self, *vectors):
        """Evaluate on ``degree`` vectors (alternating multilinear)."""
        if len(vectors) != self.degree:
            raise DimensionMismatch("a %d-form takes %d vectors" % (self.degree, self.degree))
        from .exactmath import det

        total = Fraction(0)
        for idx, c in self._items:
            sub = Mat([[Q(v[i]) for v in vectors] for i in idx]) if idx else None
            total += c * (det(sub) if sub is not None else 1)
        return total

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, KForm):
            raise TypeError("expected a KForm")
        if self.n != other.n:
            raise DimensionMismatch("forms on %d- and %d-dimensional algebras" % (self.n, other.n))

    def __add__(self, other):
        self._check(other)
        if self.degree != other.degree:
            raise DimensionMismatch("cannot add a %d-form and a %d-form" % (self.degree, other.degree))
        c = self.coeffs
        for k, v in other._items:
            c[k] = c.get(k, 0) + v
        return KForm(self.n, self.degree, c, self.offset)

    def __neg__(self):
        return KForm(self.n, self.degree, {k: -v for k, v in self._items}, self.offset)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, q):
        q = Q(q)
        return KForm(self.n, self.degree, {k: q * v for k, v in self._items}, self.offset)

    def __mul__(self, q):
        return self.scale(q)

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return (self.n, self.degree, self._items) == (other.n, other.degree, other._items)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.degree, self._items))
        return self._hash

    def fmt(self, offset=None) -> str:
        off = self.offset if offset is None else offset
        if not self._items:
            return "0"
        out = []
        for idx, c in self._items:
            mono = "e" + "".join(str(i + off) for i in idx) if idx else ""
            mag = abs(c)
            if mono:
                term = mono if mag == 1 else "%s*%s" % (fmt_rat(mag), mono)
            else:
                term = fmt_rat(mag)
            if not out:
                out.append(("-" if c < 0 else "") + term)
            else:
                out.append(("- " if c < 0 else "+ ") + term)
        return " ".join(out)

    __str__ = fmt

    def __repr__(self):
        return "KForm(%d, %d, %r)" % (self.n, self.degree, self.fmt())


@lru_cache(maxsize=None)
def monomials(n: int, degree: int) -> tuple:
    """Strictly increasing index tuples in lexicographic order."""
    return tuple(combinations(range(n), degree))


def wedge(a: KForm, b: KForm) -> KForm:
    a._check(b)
    k = a.degree + b.degree
    if k > a.n:
        return _overflow(a, k)
    out = {}
    for ia, ca in a._items:
        for ib, cb in b._items:
            sign, key = _sort_sign(ia + ib)
            if sign:
                out[key] = out.get(key, 0) + sign * ca * cb
    return KForm(a.n, k, out, a.offset)


def _overflow(a, k):
    # degree above n: the form is zero, keep the bookkeeping degree
    f = KForm.__new__(KForm)
    f.n, f.degree, f._items, f.offset, f._hash = a.n, k, (), a.offset, None
    return f


def interior(x, alpha: KForm) -> KForm:
    """``i_x alpha``: contraction in the first slot."""
    if alpha.degree < 1:
        raise LcsLabError("interior product of a 0-form")
    if len(x) != alpha.n:
        raise DimensionMismatch("vector of length %d for forms on dimension %d" % (len(x), alpha.n))
    x = [Q(v) for v in x]
    out = {}
    for idx, c in alpha._items:
        for r, i in enumerate(idx):
            if x[i]:
                key = idx[:r] + idx[r + 1:]
                out[key] = out.get(key, 0) + (-1) ** r * x[i] * c
    return KForm(alpha.n, alpha.degree - 1, out, alpha.offset)


def basis_differentials(g) -> tuple:
    """``d e^k`` for every k, as 2-forms."""
    cached = getattr(g, "_d_basis", None)
    if cached is not None:
        return cached
    n = g.dim
    out = []
    for k in range(n):
        c = {}
        for i in range(n):
            for j in range(i + 1, n):
                v = g.table[i][j][k]
                if v:
                    c[(i, j)] = -v
        out.append(KForm(n, 2, c, g.offset))
    res = tuple(out)
    object.__setattr__(g, "_d_basis", res)
    return res


def cediff(g, alpha: KForm) -> KForm:
    """Chevalley-Eilenberg differential ``d alpha``."""
    if alpha.n != g.dim:
        raise DimensionMismatch("form on dimension %d, algebra of dimension %d" % (alpha.n, g.dim))
    n = g.dim
    k = alpha.degree
    if k >= n:
        return _overflow(alpha.with_offset(g.offset), k + 1)
    dB = basis_differentials(g)
    out = {}
    for idx, c in alpha._items:
        for r, i in enumerate(idx):
            rest_before, rest_after = idx[:r], idx[r + 1:]
            for ab, v in dB[i]._items:
                sign, key = _sort_sign(rest_before + ab + rest_after)
                if sign:
                    out[key] = out.get(key, 0) + (-1) ** r * sign * c * v
    return KForm(n, k + 1, out, g.offset)


def is_closed(g, alpha: KForm) -> bool:
    return cediff(g, alpha).is_zero()


def twisted_diff(g, theta: KForm, alpha: KForm) -> KForm:
    """``d_theta alpha = d alpha - theta ^ alpha``; theta must be closed."""
    _require_closed(g, theta)
    return cediff(g, alpha) - wedge(theta, alpha).with_offset(g.offset)


def _require_closed(g, theta):
    if theta.degree != 1:
        raise ValueError("theta must be a 1-form")
    if theta.n != g.dim:
        raise DimensionMismatch("theta lives on dimension %d, algebra on %d" % (theta.n, g.dim))
    dt = cediff(g, theta)
    if dt:
        raise ThetaNotClosed(dt)


@lru_cache(maxsize=4096)
def diff_matrix(g, theta: KForm | None, k: int) -> Mat:
    """Matrix of ``d_theta : Lambda^k -> Lambda^{k+1}`` in the monomial bases.

    Has ``C(n, k+1)`` rows and ``C(n, k)`` columns.  ``theta=None`` means the
    untwisted differential.
    """
    n = g.dim
    if theta is not None:
        _require_closed(g, theta)
    rows_n = comb(n, k + 1)
    cols = []
    for m in monomials(n, k):
        e = KForm(n, k, {m: 1}, g.offset)
        img = cediff(g, e)
        if theta is not None:
            img = img - wedge(theta, e)
        cols.append(img.to_vector())
    if rows_n == 0 or not cols:
        return None
    return Mat.from_columns(cols)


def closed_one_forms(g) -> list:
    """Canonical basis of the closed 1-forms ``{theta : d theta = 0}``."""
    from .exactmath import kernel_basis

    M = diff_matrix(g, None, 1)
    if M is None:
        return [KForm.covector([1 if i == j else 0 for i in range(g.dim)], g.offset) for j in range(g.dim)]
    return [KForm.covector(v, g.offset) for v in kernel_basis(M)]
