"""Named algebras with their known LCS and contact structures.

Brackets are written with displayed indices.  Entries whose recorded
structure is known to fail verification carry ``lcs_valid=False`` together
with a corrected structure; the self-audit checks both facts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import LcsLabError, MissingParam, UnknownName
from .exactmath import Mat, Q
from .exterior import KForm
from .liealg import LieAlgebra, structural_profile


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    known_lcs: tuple | None = None  # (omega, theta)
    known_contact: KForm | None = None
    expected_profile: dict = field(default_factory=dict)
    source: str = ""
    lcs_valid: bool = True
    corrected_lcs: tuple | None = None
    note: str = ""
    params: dict = field(default_factory=dict)


def form(text: str, n: int, offset: int = 1) -> KForm:
    from .notation import parse_form

    return parse_form(text, n, offset)


def _alg(dim, brackets, name, offset=1):
    return LieAlgebra.from_display(dim, brackets, name=name, offset=offset)


def _prof(**kw):
    return kw


# -- fixed algebras ---------------------------------------------------------------


def _aff_r():
    return CatalogEntry("aff_r", _alg(2, {(1, 2): {2: 1}}, "aff(R)"),
                        known_lcs=None,
                        expected_profile=_prof(solvable=True, nilpotent=False, unimodular=False, type_I=False),
                        source="two-dimensional non-abelian algebra")


def _h3():
    return CatalogEntry("h3", _alg(3, {(1, 2): {3: 1}}, "h3"),
                        known_contact=KForm.e(3, 2),
                        expected_profile=_prof(solvable=True, nilpotent=True, unimodular=True, type_I=True),
                        source="three-dimensional Heisenberg algebra")


def _r3_m1():
    return CatalogEntry("r3_-1", _alg(3, {(1, 2): {2: 1}, (1, 3): {3: -1}}, "r3,-1"),
                        expected_profile=_prof(solvable=True, nilpotent=False, unimodular=True, type_I=False),
                        source="rigid motions of Minkowski 2-space",
                        note="bracket data used; its structure string is (0,-12,13)")


def _r3p_0():
    return CatalogEntry("r3p_0", _alg(3, {(1, 2): {3: -1}, (1, 3): {2: 1}}, "r'3,0"),
                        expected_profile=_prof(solvable=True, nilpotent=False, unimodular=True, type_I=True),
                        source="rigid motions of the Euclidean plane")


def _n4():
    g = _alg(4, {(1, 4): {2: -1}, (2, 4): {3: -1}}, "n4")
    return CatalogEntry("n4", g, known_lcs=(form("e13 - e24", 4), form("e1", 4)),
                        expected_profile=_prof(solvable=True, nilpotent=True, unimodular=True, type_I=True),
                        source="four-dimensional filiform algebra (0,14,24,0)")


def _d4():
    g = _alg(4, {(1, 4): {1: -1}, (2, 4): {2: 1}, (1, 2): {3: 1}}, "d4")
    return CatalogEntry(
        "d4", g,
        known_lcs=(form("e12 - e24", 4), form("e4", 4)),
        expected_profile=_prof(solvable=True, nilpotent=False, unimodular=True, type_I=False),
        source="(14,-24,-12,0), sigma = 1",
        lcs_valid=False,
        corrected_lcs=(form("e12 - e34", 4), form("e4", 4)),
        note="e12 - e24 is degenerate and fails d omega = theta ^ omega; e12 - e34 works",
    )


def _d4p_0():
    g = _alg(4, {(1, 2): {3: 1}, (1, 4): {2: 1}, (2, 4): {1: -1}}, "d'4,0")
    return CatalogEntry("d4p_0", g, known_lcs=(form("e12 - e34", 4), form("e4", 4)),
                        expected_profile=_prof(solvable=True, nilpotent=False, unimodular=True, type_I=True),
                        source="(24,-14,-12,0)")


def _h3xR():
    g = _alg(4, {(1, 2): {3: 1}}, "h3xR")
    return CatalogEntry("h3xR", g, known_lcs=(form("e12 - e34", 4), form("e4", 4)),
                        expected_profile=_prof(solvable=True, nilpotent=True, unimodular=True, type_I=True),
                        source="(0,0,-12,0)")


def _r3p0xR_alg():
    return _alg(4, {(1, 2): {3: -1}, (1, 3): {2: 1}}, "r'3,0xR")


def _r3p0xR():
    return CatalogEntry("r3p0xR", _r3p0xR_alg(), known_lcs=(form("e13 - e24", 4), form("e4", 4)),
                        expected_profile=_prof(solvable=True, nilpotent=False, unimodular=True, type_I=True),
                        source="(0,-13,12,0), worked example form")


def _r3p0xR_t1():
    return CatalogEntry(
        "r3p0xR_t1", _r3p0xR_alg(),
        known_lcs=(form("e12 + e13 - e24", 4), form("e4", 4)),
        expected_profile=_prof(solvable=True, nilpotent=False, unimodular=True, type_I=True),
        source="(0,-13,12,0), tabulated form",
        lcs_valid=False,
        corrected_lcs=(form("e13 - e24", 4), form("e4", 4)),
        note="d omega - theta ^ omega = -e124 for the tabulated form",
    )


def _r3m1xR():
    g = _alg(4, {(1, 2): {2: 1}, (1, 3): {3: -1}}, "r3,-1xR")
    return CatalogEntry("r3m1xR", g,
                        expected_profile=_prof(solvable=True, nilpotent=False, unimodular=True, type_I=False),
                        source="product of r3,-1 with a line")


def _aff_r2():
    g = _alg(4, {(1, 2): {2: 1}, (3, 4): {4: 1}}, "aff(R)xaff(R)")
    return CatalogEntry("aff_r2", g,
                        expected_profile=_prof(solvable=True, nilpotent=False, unimodular=False, type_I=False),
                        source="product of two copies of aff(R)")


def _h5():
    g = _alg(5, {(2, 4): {1: 1}, (3, 5): {1: 1}}, "h5")
    return CatalogEntry("h5", g, known_contact=KForm.e(5, 0),
                        expected_profile=_prof(solvable=True, nilpotent=True, unimodular=True, type_I=True),
                        source="five-dimensional Heisenberg algebra")


def _n1():
    g = _alg(5, {(3, 4): {1: 1}, (2, 5): {1: 1}, (3, 5): {2: 1}}, "n1")
    return CatalogEntry("n1", g, known_contact=KForm.e(5, 0),
                        expected_profile=_prof(solvable=True, nilpotent=True, unimodular=True, type_I=True),
                        source="nilpotent contact algebra")


def _n2():
    g = _alg(5, {(3, 4): {1: 1}, (2, 5): {1: 1}, (3, 5): {2: 1}, (4, 5): {3: 1}}, "n2")
    return CatalogEntry("n2", g, known_contact=KForm.e(5, 0),
                        expected_profile=_prof(solvable=True, nilpotent=True, unimodular=True, type_I=True),
                        source="filiform contact algebra")


def _h():
    g = _alg(5, {(2, 3): {1: 1}, (2, 5): {3: 1}, (3, 5): {2: -1}, (4, 5): {1: 1}}, "h")
    return CatalogEntry("h", g, known_contact=KForm.e(5, 0),
                        expected_profile=_prof(solvable=True, nilpotent=False, unimodular=True, type_I=True),
                        source="solvable Sasakian algebra")


def _ex6():
    g = _alg(6, {(2, 3): {1: 1}, (2, 5): {2: 1}, (3, 5): {3: -1}, (4, 5): {1: 1}}, "ex6")
    return CatalogEntry("ex6", g, known_lcs=(form("e16 - e23 - e45", 6), form("e6", 6)),
                        expected_profile=_prof(solvable=True, nilpotent=False, unimodular=True, type_I=False),
                        source="six-dimensional non type I algebra with only first kind LCS")


def _g1(b):
    from .construct import semidirect
    from .lattice import latt1

    g = semidirect(_h5().algebra, latt1(b), name="g1,%s" % b)
    return CatalogEntry("g1", g, known_lcs=(form("-e01 - e24 - e35", 6, 0), form("e0", 6, 0)),
                        expected_profile=_prof(solvable=True, nilpotent=False, unimodular=True, type_I=True),
                        source="R e0 x h5 by the rotation derivation", params={"b": b})


def _g2(b):
    from .construct import semidirect
    from .lattice import latt2

    g = semidirect(_h().algebra, latt2(b), name="g2,%s" % b)
    return CatalogEntry("g2", g, known_lcs=(form("-e01 - e23 - e45", 6, 0), form("e0", 6, 0)),
                        expected_profile=_prof(solvable=True, nilpotent=False, unimodular=True, type_I=True),
                        source="R e0 x h by the rotation derivation", params={"b": b})


def kf6_derivation(a, b) -> Mat:
    """Symplectic derivation of (r'3,0 x R, -e14 + e23)."""
    return Mat([
        [0, 0, 0, 0],
        [0, 0, -b, 0],
        [0, b, 0, 0],
        [a, 0, 0, 0],
    ])


KF6_BETA = "-e14 + e23"


def _kf6(a, b):
    from .construct import double_extension

    a, b = Q(a), Q(b)
    if a == 0:
        raise LcsLabError("kf6 needs a != 0")
    ext = double_extension(_r3p0xR_alg(), form(KF6_BETA, 4), kf6_derivation(a, b), name="kf6")
    return CatalogEntry("kf6", ext.algebra, known_lcs=(form("-e14 + e23 - e56", 6), form("e6", 6)),
                        expected_profile=_prof(solvable=True, nilpotent=False, unimodular=True, type_I=True),
                        source="double extension of a flat Kaehler algebra", params={"a": a, "b": b})


_FIXED = {
    "aff_r": _aff_r,
    "h3": _h3,
    "r3_-1": _r3_m1,
    "r3p_0": _r3p_0,
    "n4": _n4,
    "d4": _d4,
    "d4p_0": _d4p_0,
    "h3xR": _h3xR,
    "r3p0xR": _r3p0xR,
    "r3p0xR_t1": _r3p0xR_t1,
    "r3m1xR": _r3m1xR,
    "aff_r2": _aff_r2,
    "h5": _h5,
    "n1": _n1,
    "n2": _n2,
    "h": _h,
    "ex6": _ex6,
}

_PARAM = {
    "g1": (("b",), _g1),
    "g2": (("b",), _g2),
    "kf6": (("a", "b"), _kf6),
}


def names() -> list:
    return list(_FIXED) + list(_PARAM)


def param_names(name: str) -> tuple:
    return _PARAM[name][0] if name in _PARAM else ()


def get(name: str, **params) -> CatalogEntry:
    if name in _FIXED:
        if params:
            raise LcsLabError("%s takes no parameters" % name)
        return _FIXED[name]()
    if name in _PARAM:
        keys, make = _PARAM[name]
        missing = [k for k in keys if k not in params]
        if missing:
            raise MissingParam("%s needs parameter(s) %s" % (name, ", ".join(missing)))
        extra = set(params) - set(keys)
        if extra:
            raise LcsLabError("unknown parameter(s) %s for %s" % (", ".join(sorted(extra)), name))
        return make(*(Q(params[k]) for k in keys))
    raise UnknownName("no catalog entry named %r" % name)


def abelian(n: int) -> CatalogEntry:
    g = LieAlgebra.abelian(n)
    return CatalogEntry("R%d" % n, g,
                        expected_profile=_prof(solvable=True, nilpotent=True, unimodular=True, type_I=True),
                        source="abelian")


def default_instances() -> list:
    """Every fixed entry plus representative parameter values."""
    out = [get(n) for n in _FIXED]
    for b in (0, 1, 2):
        out.append(get("g1", b=b))
        out.append(get("g2", b=b))
    out.append(get("kf6", a=1, b=1))
    out.append(get("kf6", a=2, b=0))
    return out


@dataclass(frozen=True)
class AuditLine:
    name: str
    ok: bool
    detail: str


def audit(entries=None) -> list:
    """Check every entry: Jacobi, profile, and the recorded validity of its structures."""
    from .lcs import verify_contact, verify_lcs

    results = []
    for e in entries if entries is not None else default_instances():
        problems = []
        g = e.algebra
        if g.jacobi_violations():
            problems.append("Jacobi")
        prof = structural_profile(g).as_dict()
        for k, v in e.expected_profile.items():
            if prof[k] != v:
                problems.append("%s=%s, expected %s" % (k, prof[k], v))
        if e.known_lcs is not None:
            try:
                verify_lcs(g, *e.known_lcs)
                ok = True
            except LcsLabError:
                ok = False
            if ok != e.lcs_valid:
                problems.append("recorded LCS %s" % ("unexpectedly valid" if ok else "fails"))
        if e.corrected_lcs is not None:
            try:
                verify_lcs(g, *e.corrected_lcs)
            except LcsLabError as exc:
                problems.append("corrected LCS fails: %s" % exc)
        if e.known_contact is not None:
            try:
                verify_contact(g, e.known_contact)
            except LcsLabError as exc:
                problems.append("contact form fails: %s" % exc)
        results.append(AuditLine(e.name, not problems, "; ".join(problems) or "ok"))
    return results
