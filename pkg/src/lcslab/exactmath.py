"""Exact scalars, dense matrices and univariate polynomials.

Rationals are :class:`fractions.Fraction`.  :class:`PiScalar` extends them to
finite sums ``sum q_n pi**n`` (n may be negative), which is the smallest ring
holding the lattice data such as ``pi/2`` or ``8/pi^3``.

Matrices are small (n <= 8), dense and immutable.  Most routines are generic
over any commutative ring whose elements support ``+ - *`` and division by
integers; row reduction additionally needs a field and is restricted to
rationals.

Polynomials are tuples of Fractions, lowest degree first, with no trailing
zeros; the zero polynomial is ``()``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import (
    DimensionMismatch,
    NotSkewSymmetric,
    NotSquare,
    ParseError,
    SingularMatrix,
    ZeroPolynomial,
)

Rat = Fraction


def Q(x) -> Fraction:
    """Coerce ints, strings like ``"-3/4"`` and Fractions to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, PiScalar):
        return x.to_fraction()
    raise TypeError("cannot convert %r to an exact rational" % (x,))


def fmt_rat(q) -> str:
    q = Q(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


# ---------------------------------------------------------------------------
# PiScalar
# ---------------------------------------------------------------------------


class PiScalar:
    """Exact value ``sum_n q_n * pi**n`` with finitely many nonzero ``q_n``.

    >>> half_pi = PiScalar({1: Fraction(1, 2)})
    >>> two_over_pi = PiScalar({-1: 2})
    >>> half_pi * two_over_pi == 1
    True
    >>> str(PiScalar({-3: 8}))
    '8/pi^3'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = {0: terms}
        clean = {}
        for n, q in terms.items():
            q = Q(q)
            if q:
                clean[int(n)] = q
        self._terms = tuple(sorted(clean.items()))
        self._hash = None

    @classmethod
    def pi(cls, power=1, coeff=1) -> "PiScalar":
        return cls({power: coeff})

    @classmethod
    def coerce(cls, x) -> "PiScalar":
        if isinstance(x, PiScalar):
            return x
        return cls({0: Q(x)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_rational(self) -> bool:
        return all(n == 0 for n, _ in self._terms)

    def is_integral(self) -> bool:
        """True iff the value is an integer ``q * pi**0``."""
        if not self._terms:
            return True
        if len(self._terms) != 1:
            return False
        n, q = self._terms[0]
        return n == 0 and q.denominator == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("%s is not rational" % self)
        return self._terms[0][1] if self._terms else Fraction(0)

    def simplify(self):
        """Return a Fraction when no power of pi is present."""
        return self.to_fraction() if self.is_rational() else self

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, PiScalar):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == PiScalar({0: other})._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.simplify()) if self.is_rational() else hash(self._terms)
        return self._hash

    def __neg__(self):
        return PiScalar({n: -q for n, q in self._terms})

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            other = PiScalar.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for n, q in other._terms:
            out[n] = out.get(n, 0) + q
        return PiScalar(out)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = PiScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return PiScalar.coerce(other) - self

    def __mul__(self, other):
        try:
            other = PiScalar.coerce(other)
        except TypeError:
            return NotImplemented
        out = {}
        for a, p in self._terms:
            for b, q in other._terms:
                out[a + b] = out.get(a + b, 0) + p * q
        return PiScalar(out)

    __rmul__ = __mul__

    def inverse(self) -> "PiScalar":
        if not self.is_monomial():
            raise ZeroDivisionError("only nonzero monomials q*pi^n are invertible, got %s" % self)
        n, q = self._terms[0]
        return PiScalar({-n: 1 / q})

    def __truediv__(self, other):
        if isinstance(other, PiScalar):
            return self * other.inverse()
        try:
            q = Q(other)
        except TypeError:
            return NotImplemented
        return PiScalar({n: c / q for n, c in self._terms})

    def __rtruediv__(self, other):
        return PiScalar.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = PiScalar({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        return "PiScalar(%r)" % (str(self),)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = [_fmt_pi_term(n, q) for n, q in sorted(self._terms, key=lambda t: -t[0])]
        s = parts[0]
        for p in parts[1:]:
            s += " - " + p[1:] if p.startswith("-") else " + " + p
        return s


def _fmt_pi_term(n: int, q: Fraction) -> str:
    if n == 0:
        return fmt_rat(q)
    sign = "-" if q < 0 else ""
    q = abs(q)
    pw = "pi" if abs(n) == 1 else "pi^%d" % abs(n)
    num, den = q.numerator, q.denominator
    if n > 0:
        top = pw if num == 1 else "%d*%s" % (num, pw)
        return sign + (top if den == 1 else "%s/%d" % (top, den))
    bottom = pw if den == 1 else "%d*%s" % (den, pw)
    return "%s%d/%s" % (sign, num, bottom)


def parse_piscalar(text: str) -> PiScalar:
    """Parse a monomial such as ``pi/2``, ``2pi``, ``-3*pi^2/4``, ``8/pi^3`` or ``5/7``."""
    import re

    s = text.replace(" ", "").lower()
    m = re.fullmatch(
        r"([+-]?)(\d+)?\*?(pi(?:\^(\d+))?)?(?:/(\d+)?\*?(pi(?:\^(\d+))?)?)?", s
    )
    if not s or m is None or (m.group(2) is None and m.group(3) is None):
        raise ParseError("not a rational multiple of a power of pi", text)
    sign, num, pi_top, top_pow, den, pi_bot, bot_pow = m.groups()
    if "/" in s and den is None and pi_bot is None:
        raise ValueError("dangling '/' in %r" % text)
    q = Fraction(int(num) if num else 1, int(den) if den else 1)
    power = 0
    if pi_top:
        power += int(top_pow) if top_pow else 1
    if pi_bot:
        power -= int(bot_pow) if bot_pow else 1
    if sign == "-":
        q = -q
    return PiScalar({power: q})


def fmt_scalar(x) -> str:
    if isinstance(x, PiScalar):
        return str(x)
    return fmt_rat(x)


def is_integral(x) -> bool:
    if isinstance(x, PiScalar):
        return x.is_integral()
    if isinstance(x, (int, Fraction)):
        return Q(x).denominator == 1
    return x.is_integral()


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


class Mat:
    """Immutable dense matrix; entries are Fractions or PiScalars."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = tuple(tuple(_scalar(x) for x in r) for r in rows)
        if not rows:
            raise DimensionMismatch("a matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = width

    @classmethod
    def zeros(cls, m, n=None):
        n = m if n is None else n
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols):
        cols = list(cols)
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    @classmethod
    def block_diag(cls, *blocks):
        n = sum(b.nrows for b in blocks)
        rows = [[0] * n for _ in range(n)]
        at = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    rows[at + i][at + j] = b[i, j]
            at += b.nrows
        return cls(rows)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        self._same_shape(other)
        return Mat([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._same_shape(other)
        return Mat([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Mat([[-a for a in r] for r in self.rows])

    def scale(self, c):
        return Mat([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if isinstance(other, Mat):
            if self.ncols != other.nrows:
                raise DimensionMismatch("cannot multiply %s by %s" % (self.shape, other.shape))
            cols = other.columns()
            return Mat([[_dot(r, c) for c in cols] for r in self.rows])
        v = tuple(other)
        if len(v) != self.ncols:
            raise DimensionMismatch("vector of length %d for %s matrix" % (len(v), self.shape))
        return tuple(_dot(r, v) for r in self.rows)

    def T(self):
        return Mat(list(zip(*self.rows)))

    def trace(self):
        if not self.is_square():
            raise NotSquare("trace of non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def is_zero(self):
        return all(not a for r in self.rows for a in r)

    def map(self, f):
        return Mat([[f(a) for a in r] for r in self.rows])

    def __pow__(self, k):
        if not self.is_square():
            raise NotSquare("power of non-square matrix")
        out = Mat.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    def to_strings(self):
        return [[fmt_scalar(a) for a in r] for r in self.rows]

    def __repr__(self):
        return "Mat(%s)" % self.to_strings()

    def __str__(self):
        cells = self.to_strings()
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch("shapes %s and %s differ" % (self.shape, other.shape))


def _scalar(x):
    if isinstance(x, (Fraction, PiScalar)):
        return x
    if isinstance(x, (int, str)) and not isinstance(x, bool):
        return Fraction(x)
    if hasattr(x, "is_integral"):  # foreign exact rings (e.g. quadratic fields in tests)
        return x
    return Q(x)


def _dot(a, b):
    s = Fraction(0)
    for x, y in zip(a, b):
        if x and y:
            s = s + x * y
    return s


def vec(*xs):
    return tuple(Q(x) for x in xs)


# -- row reduction over Q ---------------------------------------------------


def rref(M):
    """Reduced row echelon form over Q; returns ``(rows, pivot_columns)``."""
    A = [[Q(x) for x in r] for r in (M.rows if isinstance(M, Mat) else M)]
    if not A:
        return [], []
    m, n = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M) -> int:
    return len(rref(M)[1])


def kernel_basis(M) -> list:
    """Canonical basis of ``{v : M v = 0}``.

    One vector per free column ``f`` of the RREF, with a 1 in slot ``f`` and
    zeros in every other free slot, so the result is the reduced echelon basis
    of the kernel and independent of how ``M`` was presented.
    """
    rows = M.rows if isinstance(M, Mat) else M
    ncols = len(rows[0])
    R, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(tuple(v))
    assert len(pivots) + len(basis) == ncols
    return basis


def solve(M, b):
    """One solution of ``M x = b`` (free variables set to 0) or None."""
    rows = M.rows if isinstance(M, Mat) else M
    if len(rows) != len(b):
        raise DimensionMismatch("right-hand side has length %d, expected %d" % (len(b), len(rows)))
    ncols = len(rows[0])
    aug = [list(r) + [Q(x)] for r, x in zip(rows, b)]
    R, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = R[i][ncols]
    return tuple(x)


def span_basis(vectors) -> list:
    """Echelon basis of the span (rows of the RREF)."""
    vectors = list(vectors)
    if not vectors:
        return []
    R, pivots = rref(vectors)
    return [tuple(R[i]) for i in range(len(pivots))]


def in_span(vectors, v) -> bool:
    vectors = list(vectors)
    if not any(any(x for x in u) for u in vectors):
        return not any(v)
    return solve(Mat.from_columns(vectors), v) is not None


def coordinates(basis, v):
    """Coefficients of ``v`` in ``basis`` (a list of vectors); None if not in span."""
    return solve(Mat.from_columns(basis), v)


def inverse(M: Mat) -> Mat:
    """Matrix inverse.

    Rational matrices use Gauss-Jordan.  Other rings go through the adjugate
    and need the determinant to be a unit (a nonzero ``q*pi^n``).
    """
    if not M.is_square():
        raise NotSquare("inverse of non-square matrix")
    n = M.nrows
    if all(isinstance(a, Fraction) for r in M.rows for a in r):
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M.rows)]
        R, pivots = rref(aug)
        if pivots[:n] != list(range(n)):
            raise SingularMatrix("matrix is singular")
        return Mat([r[n:] for r in R])
    d = det(M)
    if not d:
        raise SingularMatrix("matrix is singular")
    if isinstance(d, PiScalar) and not d.is_monomial():
        raise SingularMatrix("determinant %s is not invertible in the scalar ring" % d)
    dinv = d.inverse() if isinstance(d, PiScalar) else 1 / d
    return adjugate(M).scale(dinv).map(_simplify)


def _simplify(x):
    return x.simplify() if isinstance(x, PiScalar) else x


def det(M: Mat):
    """Determinant by Laplace expansion with memoised minors (any ring)."""
    if not M.is_square():
        raise NotSquare("determinant of non-square matrix")
    n = M.nrows
    rows = M.rows

    @lru_cache(maxsize=None)
    def minor(cols: frozenset):
        r = n - len(cols)
        if not cols:
            return Fraction(1)
        total = Fraction(0)
        for sign_pos, c in enumerate(sorted(cols)):
            a = rows[r][c]
            if a:
                term = a * minor(cols - {c})
                total = total + term if sign_pos % 2 == 0 else total - term
        return total

    return minor(frozenset(range(n)))


def adjugate(M: Mat) -> Mat:
    n = M.nrows
    if n == 1:
        return Mat([[1]])
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = Mat([[M[r, c] for c in range(n) if c != j] for r in range(n) if r != i])
            cof = det(sub)
            out[j][i] = cof if (i + j) % 2 == 0 else -cof
    return Mat(out)


def char_poly(M: Mat) -> tuple:
    """Monic ``det(lambda I - M)`` by Faddeev-LeVerrier, lowest degree first.

    Works over any ring containing Q; for PiScalar input the coefficients are
    PiScalars (simplified to Fractions when no power of pi survives).
    """
    if not M.is_square():
        raise NotSquare("characteristic polynomial of non-square matrix")
    n = M.nrows
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    Mk = Mat.zeros(n)
    eye = Mat.identity(n)
    for k in range(1, n + 1):
        Mk = M @ Mk + eye.scale(c[n - k + 1])
        c[n - k] = _simplify(-(M @ Mk).trace() / k)
    return tuple(c)


def mat_poly_eval(p, M: Mat) -> Mat:
    """``p(M)`` by Horner's rule."""
    n = M.nrows
    out = Mat.zeros(n)
    eye = Mat.identity(n)
    for a in reversed(p):
        out = out @ M + eye.scale(a)
    return out


def pfaffian(M: Mat):
    """Pfaffian by recursive expansion along the first row.

    ``Pf(M)**2 == det(M)``; for ``e12 - e34`` (entries ``M[0,1]=1, M[2,3]=-1``)
    the value is -1.
    """
    if not M.is_square():
        raise NotSquare("Pfaffian of non-square matrix")
    n = M.nrows
    for i in range(n):
        for j in range(n):
            if M[i, j] != -M[j, i]:
                raise NotSkewSymmetric("matrix is not skew-symmetric at (%d,%d)" % (i, j))
    if n % 2:
        raise NotSkewSymmetric("odd-size skew matrix has no Pfaffian")
    rows = M.rows

    @lru_cache(maxsize=None)
    def pf(idx: tuple):
        if not idx:
            return Fraction(1)
        first, rest = idx[0], idx[1:]
        total = Fraction(0)
        for pos, j in enumerate(rest):
            a = rows[first][j]
            if a:
                term = a * pf(rest[:pos] + rest[pos + 1:])
                total = total + term if pos % 2 == 0 else total - term
        return total

    return pf(tuple(range(n)))


# ---------------------------------------------------------------------------
# Polynomials over Q
# ---------------------------------------------------------------------------


def poly(*coeffs) -> tuple:
    return poly_trim(tuple(Q(c) for c in coeffs))


def poly_trim(p) -> tuple:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def poly_degree(p) -> int:
    p = poly_trim(p)
    return len(p) - 1 if p else -1


def poly_add(p, q):
    n = max(len(p), len(q))
    return poly_trim(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def poly_sub(p, q):
    return poly_add(p, tuple(-c for c in q))


def poly_mul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p, q):
    q = poly_trim(q)
    if not q:
        raise ZeroPolynomial("division by the zero polynomial")
    p = list(poly_trim(p))
    dq = len(q) - 1
    lead = q[-1]
    quot = [Fraction(0)] * max(len(p) - dq, 1)
    while len(p) - 1 >= dq and p:
        shift = len(p) - 1 - dq
        f = p[-1] / lead
        quot[shift] = f
        for i, c in enumerate(q):
            p[i + shift] -= f * c
        p = list(poly_trim(p))
    return poly_trim(quot), tuple(p)


def poly_monic(p):
    p = poly_trim(p)
    if not p:
        return p
    return tuple(c / p[-1] for c in p)


def poly_gcd(p, q):
    p, q = poly_trim(p), poly_trim(q)
    while q:
        p, q = q, poly_divmod(p, q)[1]
    return poly_monic(p)


def poly_deriv(p):
    return poly_trim(tuple(i * c for i, c in enumerate(p))[1:])


def poly_eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def squarefree_part(p):
    """``p / gcd(p, p')``, made monic."""
    p = poly_trim(p)
    if not p:
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    g = poly_gcd(p, poly_deriv(p))
    return poly_monic(poly_divmod(p, g)[0])


def poly_str(p, var="x") -> str:
    p = poly_trim(p)
    if not p:
        return "0"
    out = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else "%s^%d" % (var, i))
        mag = abs(c)
        coef = fmt_rat(mag)
        if mono:
            term = mono if mag == 1 else "%s*%s" % (coef, mono)
        else:
            term = coef
        if not out:
            out.append(("-" if c < 0 else "") + term)
        else:
            out.append(("- " if c < 0 else "+ ") + term)
    return " ".join(out)


def sturm_sequence(p) -> list:
    p = poly_trim(p)
    if not p:
        raise ZeroPolynomial("Sturm sequence of the zero polynomial")
    seq = [p, poly_deriv(p)]
    while seq[-1]:
        seq.append(tuple(-c for c in poly_divmod(seq[-2], seq[-1])[1]))
    return [s for s in seq if s]


def _sign_at(p, x) -> int:
    if x == math.inf or x == -math.inf:
        lead = p[-1]
        s = 1 if lead > 0 else -1
        if x == -math.inf and (len(p) - 1) % 2:
            s = -s
        return s
    v = poly_eval(p, Q(x))
    return (v > 0) - (v < 0)


def _variations(seq, x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p, lo=-math.inf, hi=math.inf) -> int:
    """Number of distinct real roots of the squarefree ``p`` in ``(lo, hi]``.

    ``lo``/``hi`` are rationals or ``-math.inf``/``math.inf`` (``None`` means
    the corresponding infinity).
    """
    lo = -math.inf if lo is None else lo
    hi = math.inf if hi is None else hi
    if not (lo < hi):
        raise ValueError("empty interval (%s, %s]" % (lo, hi))
    seq = sturm_sequence(p)
    return _variations(seq, lo) - _variations(seq, hi)


def spectrum_purely_imaginary(M: Mat) -> bool:
    """True iff every complex eigenvalue of the rational matrix ``M`` lies in iR."""
    p = char_poly(M)
    if any(isinstance(c, PiScalar) for c in p):
        raise TypeError("spectrum test needs a rational matrix")
    m = next(i for i, c in enumerate(p) if c)
    q = p[m:]
    if any(c for c in q[1::2]):
        return False
    r = q[0::2]
    if len(r) == 1:
        return True
    s = squarefree_part(r)
    return sturm_count(s, -math.inf, 0) == poly_degree(s)


def rational_roots(p) -> list:
    """Distinct rational roots of ``p``, ascending."""
    p = poly_trim(p)
    if not p:
        raise ZeroPolynomial("roots of the zero polynomial")
    roots = set()
    m = next(i for i, c in enumerate(p) if c)
    if m:
        roots.add(Fraction(0))
    q = p[m:]
    lcm = 1
    for c in q:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in q]
    a0, an = abs(ints[0]), abs(ints[-1])
    for num in _divisors(a0):
        for den in _divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if poly_eval(q, cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _divisors(n: int):
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))
