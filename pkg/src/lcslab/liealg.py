"""Lie algebras given by structure constants, and their structural predicates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import DimensionMismatch, JacobiViolation, ThetaZero
from .exactmath import Mat, Q, kernel_basis, span_basis, spectrum_purely_imaginary, coordinates
from .exterior import KForm, _require_closed

MAX_DIM = 8


def _zero(n):
    return (Fraction(0),) * n


def _unit(n, i):
    return tuple(Fraction(int(k == i)) for k in range(n))


class LieAlgebra:
    """Real Lie algebra with basis ``e_0 .. e_{n-1}`` and rational constants.

    ``brackets`` maps internal (0-based) pairs ``(i, j)`` to the vector
    ``[e_i, e_j]``, given either as a length-n sequence or a sparse dict
    ``{k: c}``.  Pairs with ``i > j`` are folded in by antisymmetry.  ``offset``
    only affects how indices are displayed.
    """

    __slots__ = ("dim", "name", "offset", "_c", "table", "_d_basis", "_hash")

    def __init__(self, dim: int, brackets=None, name: str | None = None, offset: int = 1, check: bool = True):
        if not 1 <= dim <= MAX_DIM:
            raise DimensionMismatch("dimension must be between 1 and %d, got %d" % (MAX_DIM, dim))
        c = {}
        for (i, j), v in (brackets or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatch("bracket index (%d,%d) out of range" % (i + offset, j + offset))
            if i == j:
                raise ValueError("[e_i, e_i] is zero by antisymmetry")
            v = self._as_vector(dim, v)
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            old = c.get((i, j), _zero(dim))
            c[(i, j)] = tuple(a + sign * b for a, b in zip(old, v))
        self.dim = dim
        self.name = name
        self.offset = offset
        self._c = tuple(sorted((k, v) for k, v in c.items() if any(v)))
        table = [[_zero(dim)] * dim for _ in range(dim)]
        for (i, j), v in self._c:
            table[i][j] = v
            table[j][i] = tuple(-a for a in v)
        self.table = tuple(tuple(r) for r in table)
        self._d_basis = None
        self._hash = None
        if check:
            bad = self.jacobi_violations()
            if bad:
                raise JacobiViolation(bad, offset)

    @staticmethod
    def _as_vector(dim, v):
        if isinstance(v, dict):
            out = [Fraction(0)] * dim
            for k, a in v.items():
                if not 0 <= k < dim:
                    raise DimensionMismatch("bracket component %d out of range" % k)
                out[k] += Q(a)
            return tuple(out)
        v = tuple(Q(a) for a in v)
        if len(v) != dim:
            raise DimensionMismatch("bracket vector has length %d, expected %d" % (len(v), dim))
        return v

    @classmethod
    def from_display(cls, dim, brackets, name=None, offset=1, check=True):
        """Build from brackets written with displayed indices.

        >>> h3 = LieAlgebra.from_display(3, {(1, 2): {3: 1}}, name="h3")
        >>> h3.bracket_basis(0, 1)
        (Fraction(0, 1), Fraction(0, 1), Fraction(1, 1))
        """
        shifted = {}
        for (i, j), v in brackets.items():
            if isinstance(v, dict):
                v = {k - offset: a for k, a in v.items()}
            shifted[(i - offset, j - offset)] = v
        return cls(dim, shifted, name=name, offset=offset, check=check)

    @classmethod
    def abelian(cls, n, name=None):
        return cls(n, {}, name=name or "R%d" % n)

    # -- data ---------------------------------------------------------------

    @property
    def constants(self) -> dict:
        """``{(i, j): [e_i, e_j]}`` for i < j with nonzero bracket (0-based)."""
        return dict(self._c)

    def renamed(self, name=None, offset=None):
        return LieAlgebra(self.dim, self.constants, name=self.name if name is None else name,
                          offset=self.offset if offset is None else offset, check=False)

    def label(self, i: int) -> int:
        return i + self.offset

    def basis_vector(self, i):
        return _unit(self.dim, i)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self._c))
        return self._hash

    def __repr__(self):
        label = " %s" % self.name if self.name else ""
        return "<LieAlgebra%s dim=%d %s>" % (label, self.dim, self.bracket_str())

    def bracket_str(self) -> str:
        parts = []
        for (i, j), v in self._c:
            rhs = KForm.covector(v, self.offset).fmt()
            parts.append("[e%d,e%d]=%s" % (i + self.offset, j + self.offset, rhs))
        return ", ".join(parts) if parts else "abelian"

    # -- bracket ------------------------------------------------------------

    def bracket_basis(self, i, j) -> tuple:
        return self.table[i][j]

    def bracket(self, x, y) -> tuple:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionMismatch("vectors must have length %d" % n)
        out = [Fraction(0)] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj or i == j:
                    continue
                f = xi * yj
                for k, c in enumerate(self.table[i][j]):
                    if c:
                        out[k] += f * c
        return tuple(out)

    def jacobi_violations(self) -> list:
        bad = []
        n = self.dim
        for i, j, k in combinations(range(n), 3):
            ei, ej, ek = (_unit(n, t) for t in (i, j, k))
            s = [Fraction(0)] * n
            for a, b, c in ((ei, ej, ek), (ej, ek, ei), (ek, ei, ej)):
                for t, v in enumerate(self.bracket(self.bracket(a, b), c)):
                    s[t] += v
            if any(s):
                bad.append(((i, j, k), tuple(s)))
        return bad


def validate(dim, brackets, name=None, offset=1) -> LieAlgebra:
    """Build an algebra from displayed-index brackets, raising on Jacobi failure."""
    return LieAlgebra.from_display(dim, brackets, name=name, offset=offset, check=True)


def ad(g: LieAlgebra, x) -> Mat:
    """Matrix of ``y -> [x, y]``; column j is ``[x, e_j]``."""
    if len(x) != g.dim:
        raise DimensionMismatch("vector of length %d for a %d-dimensional algebra" % (len(x), g.dim))
    x = tuple(Q(a) for a in x)
    return Mat.from_columns([g.bracket(x, g.basis_vector(j)) for j in range(g.dim)])


# -- subspaces ----------------------------------------------------------------


def bracket_span(g, U, W) -> list:
    """Echelon basis of ``[U, W]`` for subspaces given by spanning lists."""
    vecs = [g.bracket(u, w) for u in U for w in W]
    return span_basis([v for v in vecs if any(v)])


def derived_series_dims(g) -> list:
    cur = [g.basis_vector(i) for i in range(g.dim)]
    dims = [g.dim]
    while True:
        nxt = bracket_span(g, cur, cur)
        if len(nxt) == len(cur):
            return dims
        dims.append(len(nxt))
        cur = nxt
        if not cur:
            return dims


def lower_central_dims(g) -> list:
    full = [g.basis_vector(i) for i in range(g.dim)]
    cur = full
    dims = [g.dim]
    while True:
        nxt = bracket_span(g, full, cur)
        if len(nxt) == len(cur):
            return dims
        dims.append(len(nxt))
        cur = nxt
        if not cur:
            return dims


def center(g) -> list:
    """Basis of ``{x : [x, y] = 0 for all y}``."""
    n = g.dim
    rows = []
    for j in range(n):
        # x -> [x, e_j] = -ad_{e_j} x
        rows.extend((-ad(g, g.basis_vector(j))).rows)
    return kernel_basis(rows)


@dataclass(frozen=True)
class StructuralProfile:
    unimodular: bool
    solvable: bool
    nilpotent: bool
    type_I: bool | None
    center_dim: int
    derived_series_dims: tuple
    lower_central_dims: tuple

    def as_dict(self) -> dict:
        return {
            "unimodular": self.unimodular,
            "solvable": self.solvable,
            "nilpotent": self.nilpotent,
            "type_I": self.type_I,
            "center_dim": self.center_dim,
            "derived_series_dims": list(self.derived_series_dims),
            "lower_central_dims": list(self.lower_central_dims),
        }


def is_unimodular(g) -> bool:
    return all(ad(g, g.basis_vector(j)).trace() == 0 for j in range(g.dim))


def structural_profile(g: LieAlgebra) -> StructuralProfile:
    ds = derived_series_dims(g)
    lc = lower_central_dims(g)
    solvable = ds[-1] == 0
    nilpotent = lc[-1] == 0
    type_I = None
    if solvable:
        # Lie's theorem: eigenvalues of ad are linear in X, so the basis suffices
        type_I = all(spectrum_purely_imaginary(ad(g, g.basis_vector(j))) for j in range(g.dim))
    return StructuralProfile(
        unimodular=is_unimodular(g),
        solvable=solvable,
        nilpotent=nilpotent,
        type_I=type_I,
        center_dim=len(center(g)),
        derived_series_dims=tuple(ds),
        lower_central_dims=tuple(lc),
    )


# -- transversals and kernels ------------------------------------------------------


DEFAULT_BUDGET = 512


def _theta_vector(g, theta):
    _require_closed(g, theta)
    t = theta.to_vector()
    if not any(t):
        raise ThetaZero()
    return t


def transversal_candidates(g, theta, budget=DEFAULT_BUDGET):
    """Vectors A with theta(A) = 1, most natural first, at most ``budget`` of them."""
    t = _theta_vector(g, theta)
    n = g.dim
    norm2 = sum(a * a for a in t)
    base = tuple(a / norm2 for a in t)
    seen = set()
    count = 0

    def emit(v):
        nonlocal count
        if v in seen or count >= budget:
            return False
        seen.add(v)
        count += 1
        return True

    if emit(base):
        yield base
    for j in range(n):
        if t[j]:
            v = tuple(Fraction(int(k == j)) / t[j] for k in range(n))
            if emit(v):
                yield v
    K = kernel_basis([t])
    if not K:
        return
    m = len(K)
    combos = [c for c in product(range(-2, 3), repeat=m) if any(c)]
    combos.sort(key=lambda c: (sum(abs(x) for x in c), [-x for x in c]))
    for c in combos:
        if count >= budget:
            return
        v = tuple(base[i] + sum(ck * k[i] for ck, k in zip(c, K)) for i in range(n))
        if emit(v):
            yield v


def find_imaginary_transversal(g: LieAlgebra, theta: KForm, budget: int = DEFAULT_BUDGET):
    """Some A with theta(A) = 1 and ``ad_A`` of purely imaginary spectrum, or None.

    None only means the bounded search found nothing.
    """
    for A in transversal_candidates(g, theta, budget):
        if spectrum_purely_imaginary(ad(g, A)):
            return A
    return None


@dataclass(frozen=True)
class KernelSubalgebra:
    algebra: LieAlgebra
    basis: tuple  # embedding: column vectors in g spanning ker theta

    def embed(self, y):
        n = len(self.basis[0])
        return tuple(sum(Q(c) * b[i] for c, b in zip(y, self.basis)) for i in range(n))


def kernel_subalgebra(g: LieAlgebra, theta: KForm, name=None) -> KernelSubalgebra:
    """``ker theta`` as an algebra on its canonical echelon basis (displayed from 1)."""
    t = _theta_vector(g, theta)
    K = kernel_basis([t])
    m = len(K)
    brackets = {}
    for a in range(m):
        for b in range(a + 1, m):
            v = g.bracket(K[a], K[b])
            if any(v):
                brackets[(a, b)] = coordinates(K, v)
    h = LieAlgebra(m, brackets, name=name, offset=1) if m else None
    return KernelSubalgebra(h, tuple(K))


def invariant_fingerprint(g: LieAlgebra) -> dict:
    """Isomorphism invariants; different fingerprints mean non-isomorphic algebras."""
    from .cohomology import betti_numbers

    p = structural_profile(g)
    return {
        "dim": g.dim,
        "derived_series_dims": list(p.derived_series_dims),
        "lower_central_dims": list(p.lower_central_dims),
        "center_dim": p.center_dim,
        "betti": list(betti_numbers(g)),
        "unimodular": p.unimodular,
        "solvable": p.solvable,
        "nilpotent": p.nilpotent,
    }
