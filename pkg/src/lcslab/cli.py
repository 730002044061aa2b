"""Command line interface: ``lcslab <command> ...``.

Exit codes: 0 verified, 1 refuted, 2 inconclusive, 64 usage error,
65 bad input data.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import catalog
from .cohomology import cohomology
from .construct import derivation_space, double_extension, lcs_from_contact
from .errors import (
    Degenerate,
    JacobiViolation,
    LcsLabError,
    NotContact,
    NotLcs,
    ThetaNotClosed,
)
from .exactmath import fmt_scalar
from .exterior import KForm
from .lattice import check_paper_lattices
from .lcs import contact_search, lcs_search, verify_contact, verify_lcs
from .liealg import structural_profile, find_imaginary_transversal
from .notation import (
    algebra_from_json,
    algebra_to_json,
    format_salamon,
    format_vector,
    parse_form,
    parse_matrix,
    parse_salamon,
)

EXIT = {"verified": 0, "refuted": 1, "inconclusive": 2}
EX_USAGE = 64
EX_DATAERR = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _default_seed() -> int:
    try:
        return int(os.environ.get("LCSLAB_SEED", "0"))
    except ValueError:
        return 0


# -- serialization ----------------------------------------------------------------


def s_vec(v):
    return [fmt_scalar(x) for x in v]


def s_mat(M):
    return M.to_strings() if M is not None else None


def s_form(f: KForm | None):
    return None if f is None else f.fmt()


# -- inputs ---------------------------------------------------------------------------


def _add_algebra_args(p):
    src = p.add_argument_group("algebra input")
    src.add_argument("--algebra", help="structure string such as (0,-13,12,0)")
    src.add_argument("--offset", type=int, default=None, help="first basis index (0 or 1)")
    src.add_argument("--file", help="JSON algebra file")
    src.add_argument("--catalog", help="catalog entry name")
    src.add_argument("--param", nargs="*", default=[], metavar="K=V", help="catalog parameters")


def _load(args):
    given = [x for x in (args.algebra, args.file, args.catalog) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --algebra, --file, --catalog")
    if args.algebra is not None:
        off = 1 if args.offset is None else args.offset
        return parse_salamon(args.algebra, offset=off), None
    if args.file is not None:
        try:
            with open(args.file) as fh:
                data = json.load(fh)
        except OSError as exc:
            raise UsageError(str(exc))
        except json.JSONDecodeError as exc:
            raise LcsLabError("invalid JSON: %s" % exc)
        return algebra_from_json(data), None
    params = {}
    for item in args.param:
        if "=" not in item:
            raise UsageError("parameters are written K=V, got %r" % item)
        k, v = item.split("=", 1)
        params[k.strip()] = v.strip()
    entry = catalog.get(args.catalog, **params)
    return entry.algebra, entry


def _form(text, g, degree=None):
    return parse_form(text, g.dim, g.offset, degree)


def _fingerprint(g) -> str:
    blob = json.dumps(algebra_to_json(g), sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _report(argv, g, status, results, certificates=None, seed=None):
    rep = {"command": list(argv), "status": status, "results": results,
           "certificates": certificates or {}}
    if g is not None:
        rep["input"] = {"algebra": format_salamon(g), "basis_offset": g.offset,
                        "dim": g.dim, "fingerprint": _fingerprint(g)}
    if seed is not None:
        rep["seed"] = seed
    return rep


# -- commands ---------------------------------------------------------------------


def cmd_validate(args, argv):
    try:
        g, _ = _load(args)
    except JacobiViolation as exc:
        viol = [{"triple": [t + (args.offset or 1) for t in ijk], "defect": s_vec(v)}
                for ijk, v in exc.violations]
        return _report(argv, None, "refuted", {"jacobi": False, "violations": viol})
    return _report(argv, g, "verified", {"jacobi": True, "brackets": g.bracket_str()})


def cmd_profile(args, argv):
    g, _ = _load(args)
    return _report(argv, g, "verified", structural_profile(g).as_dict())


def cmd_cohomology(args, argv):
    g, _ = _load(args)
    theta = _form(args.theta, g, 1) if args.theta else None
    rep = cohomology(g, theta)
    res = {"theta": s_form(rep.theta), "dims": list(rep.dims),
           "representatives": [[s_form(f) for f in fs] for fs in rep.representatives]}
    return _report(argv, g, "verified", res)


def _lcs_results(g, st):
    return {
        "lcs": True,
        "omega": s_form(st.omega),
        "theta": s_form(st.theta),
        "kind": str(st.kind),
        "symplectic": st.symplectic,
        "lee_vector": format_vector(st.lee_vector, g.offset),
        "exact": st.exact,
        "eta": s_form(st.eta),
        "anti_lee_vector": None if st.anti_lee_vector is None else format_vector(st.anti_lee_vector, g.offset),
        "pfaffian": fmt_scalar(st.pfaffian),
        "automorphism_dim": st.automorphisms.dim,
    }


def _lcs_failure(exc):
    if isinstance(exc, NotLcs):
        return {"lcs": False, "failed": "d omega = theta ^ omega", "defect": s_form(exc.defect)}
    if isinstance(exc, Degenerate):
        return {"lcs": False, "failed": "nondegeneracy", "pfaffian": "0",
                "kernel": [format_vector(v) for v in exc.kernel]}
    return {"lcs": False, "failed": "d theta = 0", "defect": s_form(exc.dtheta)}


def cmd_lcs_verify(args, argv):
    g, _ = _load(args)
    omega = _form(args.omega, g, 2)
    theta = _form(args.theta, g, 1)
    try:
        st = verify_lcs(g, omega, theta)
    except (NotLcs, Degenerate, ThetaNotClosed) as exc:
        return _report(argv, g, "refuted", _lcs_failure(exc))
    return _report(argv, g, "verified", _lcs_results(g, st))


def cmd_kind(args, argv):
    rep = cmd_lcs_verify(args, argv)
    if rep["status"] == "verified":
        rep["results"] = {"kind": rep["results"]["kind"], "exact": rep["results"]["exact"]}
    return rep


def cmd_lcs_search(args, argv):
    g, _ = _load(args)
    theta = _form(args.theta, g, 1)
    res = lcs_search(g, theta, seed=args.seed, budget=args.budget)
    status = {"found": "verified", "refuted": "refuted", "inconclusive": "inconclusive"}[res.status]
    out = {
        "theta": s_form(theta),
        "solution_space_dim": len(res.solution_basis),
        "solution_basis": [s_form(b) for b in res.solution_basis],
        "witness": s_form(res.witness),
        "samples": res.samples,
    }
    if res.witness is None:
        out["note"] = "degenerate on solution space: " + res.note
    return _report(argv, g, status, out, seed=args.seed)


def cmd_contact_verify(args, argv):
    g, _ = _load(args)
    eta = _form(args.eta, g, 1)
    try:
        cs = verify_contact(g, eta)
    except NotContact:
        return _report(argv, g, "refuted", {"contact": False, "eta": s_form(eta)})
    return _report(argv, g, "verified", {"contact": True, "eta": s_form(cs.eta),
                                         "reeb_vector": format_vector(cs.reeb_vector, g.offset),
                                         "volume": fmt_scalar(cs.volume)})


def cmd_contact_search(args, argv):
    g, _ = _load(args)
    cs = contact_search(g, seed=args.seed, budget=args.budget)
    if cs is None:
        return _report(argv, g, "inconclusive", {"contact": None}, seed=args.seed)
    return _report(argv, g, "verified", {"contact": True, "eta": s_form(cs.eta),
                                         "reeb_vector": format_vector(cs.reeb_vector, g.offset)},
                   seed=args.seed)


def cmd_derivations(args, argv):
    g, _ = _load(args)
    ds = derivation_space(g)
    return _report(argv, g, "verified", {"dim": ds.dim}, {"basis": [s_mat(B) for B in ds.basis]})


def _ext_results(ext):
    g = ext.algebra
    prof = structural_profile(g)
    return {
        "extended_algebra": format_salamon(g),
        "extended_basis_offset": g.offset,
        "omega": s_form(ext.omega),
        "theta": s_form(ext.theta),
        "kind": str(ext.structure.kind),
        "lee_vector": format_vector(ext.structure.lee_vector, g.offset),
        "type_I": prof.type_I,
    }


def cmd_extend_contact(args, argv):
    h, _ = _load(args)
    eta = _form(args.eta, h, 1)
    D = parse_matrix(args.derivation)
    ext = lcs_from_contact(h, eta, D)
    return _report(argv, h, "verified", _ext_results(ext))


def cmd_double_extend(args, argv):
    s, _ = _load(args)
    beta = _form(args.beta, s, 2)
    E = parse_matrix(args.derivation)
    ext = double_extension(s, beta, E)
    res = _ext_results(ext)
    res["spectrum_identity"] = ext.spectrum_identity
    return _report(argv, s, "verified", res)


def cmd_lattice_check(args, argv):
    rep = check_paper_lattices(args.family, args.k, args.t0, seed=args.seed)
    levels = [{"level": label, "preserved": chk.preserved, "matrix": s_mat(A),
               "conjugated": s_mat(chk.forward), "conjugated_inverse": s_mat(chk.backward)}
              for label, A, chk in rep.levels]
    res = {"family": rep.family, "k": rep.k, "t0": None if rep.t0 is None else fmt_scalar(rep.t0),
           "b": fmt_scalar(rep.b), "closure": rep.closure, "preserved": rep.preserved}
    return _report(argv, None, "verified" if rep.preserved else "refuted", res,
                   {"levels": levels}, seed=args.seed)


def cmd_catalog(args, argv):
    if args.action == "list":
        rows = [{"name": n, "params": list(catalog.param_names(n))} for n in catalog.names()]
        return _report(argv, None, "verified", {"entries": rows})
    if not args.name:
        raise UsageError("catalog show needs a name")
    params = dict(item.split("=", 1) for item in args.param if "=" in item)
    e = catalog.get(args.name, **params)
    g = e.algebra
    res = {"name": e.name, "source": e.source, "brackets": g.bracket_str(),
           "profile": structural_profile(g).as_dict()}
    if e.known_lcs:
        res["lcs"] = {"omega": s_form(e.known_lcs[0]), "theta": s_form(e.known_lcs[1]),
                      "valid": e.lcs_valid}
    if e.corrected_lcs:
        res["corrected_lcs"] = {"omega": s_form(e.corrected_lcs[0]), "theta": s_form(e.corrected_lcs[1])}
    if e.known_contact is not None:
        res["contact"] = s_form(e.known_contact)
    if e.note:
        res["note"] = e.note
    return _report(argv, g, "verified", res)


def cmd_transversal(args, argv):
    g, _ = _load(args)
    theta = _form(args.theta, g, 1)
    A = find_imaginary_transversal(g, theta, budget=args.budget)
    if A is None:
        return _report(argv, g, "inconclusive", {"transversal": None})
    return _report(argv, g, "verified", {"transversal": format_vector(A, g.offset)})


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lcslab", description="Exact checks for LCS and contact structures on Lie algebras.")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        return sp

    seed = _default_seed()
    for name, fn, help_ in (
        ("validate", cmd_validate, "check the Jacobi identity"),
        ("profile", cmd_profile, "unimodular / solvable / nilpotent / type I"),
    ):
        _add_algebra_args(add(name, fn, help_))
    sp = add("cohomology", cmd_cohomology, "(twisted) cohomology dimensions")
    _add_algebra_args(sp)
    sp.add_argument("--theta")
    for name, fn in (("lcs-verify", cmd_lcs_verify), ("kind", cmd_kind)):
        sp = add(name, fn, "verify an LCS structure" if name == "lcs-verify" else "first or second kind")
        _add_algebra_args(sp)
        sp.add_argument("--omega", required=True)
        sp.add_argument("--theta", required=True)
    sp = add("lcs-search", cmd_lcs_search, "search for a nondegenerate LCS form with given Lee form")
    _add_algebra_args(sp)
    sp.add_argument("--theta", required=True)
    sp.add_argument("--seed", type=int, default=seed)
    sp.add_argument("--budget", type=int, default=512)
    sp = add("transversal", cmd_transversal, "search A with theta(A)=1 and imaginary ad_A spectrum")
    _add_algebra_args(sp)
    sp.add_argument("--theta", required=True)
    sp.add_argument("--budget", type=int, default=512)
    sp = add("contact-verify", cmd_contact_verify, "verify a contact form and its Reeb vector")
    _add_algebra_args(sp)
    sp.add_argument("--eta", required=True)
    sp = add("contact-search", cmd_contact_search, "search for a contact form")
    _add_algebra_args(sp)
    sp.add_argument("--seed", type=int, default=seed)
    sp.add_argument("--budget", type=int, default=512)
    _add_algebra_args(add("derivations", cmd_derivations, "basis of the derivation algebra"))
    sp = add("extend-contact", cmd_extend_contact, "LCS algebra from a contact algebra and a derivation")
    _add_algebra_args(sp)
    sp.add_argument("--eta", required=True)
    sp.add_argument("--derivation", required=True, help='matrix such as "0 -1; 1 0"')
    sp = add("double-extend", cmd_double_extend, "double extension of a symplectic algebra")
    _add_algebra_args(sp)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--derivation", required=True)
    sp = add("lattice-check", cmd_lattice_check, "lattice invariance in the G1 / G2 families")
    sp.add_argument("--family", required=True, type=str.upper, choices=["G1", "G2"])
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--t0", default=None, help="pi/2, pi or 2pi (G1 only)")
    sp.add_argument("--seed", type=int, default=seed)
    sp = add("catalog", cmd_catalog, "list or show catalog entries")
    sp.add_argument("action", choices=["list", "show"])
    sp.add_argument("name", nargs="?")
    sp.add_argument("--param", nargs="*", default=[])
    return p


def _print_text(rep, out):
    out.write("status: %s\n" % rep["status"])
    if "input" in rep:
        out.write("algebra: %s\n" % rep["input"]["algebra"])
    for k, v in rep["results"].items():
        out.write("%s: %s\n" % (k, v if not isinstance(v, (list, dict)) else json.dumps(v)))
    for k, v in rep.get("certificates", {}).items():
        out.write("%s: %s\n" % (k, json.dumps(v)))


_VALUE_OPTS = ("--algebra", "--omega", "--theta", "--eta", "--beta", "--derivation")


def _glue_values(argv):
    """``--beta -e14+e23`` -> ``--beta=-e14+e23`` so leading minus signs survive argparse."""
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_OPTS and i + 1 < len(argv) and argv[i + 1][:1] == "-" and argv[i + 1][:2] != "--":
            out.append(a + "=" + argv[i + 1])
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def run(argv=None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_values(argv))
        if not getattr(args, "command", None):
            raise UsageError("a command is required")
        rep = args.func(args, argv)
    except UsageError as exc:
        sys.stderr.write("usage error: %s\n" % exc)
        return EX_USAGE
    except LcsLabError as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EX_DATAERR
    rep.setdefault("seed", getattr(args, "seed", _default_seed()))
    if args.json:
        out.write(json.dumps(rep, indent=2, sort_keys=True) + "\n")
    else:
        _print_text(rep, out)
    return EXIT[rep["status"]]


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
