"""Exact computations for locally conformally symplectic (LCS) and contact
structures on small real Lie algebras."""

from .errors import *  # noqa: F401,F403
from .exactmath import Mat, PiScalar, Q, char_poly, det, kernel_basis, pfaffian, rank
from .exterior import KForm, cediff, closed_one_forms, diff_matrix, twisted_diff, wedge
from .liealg import (
    LieAlgebra,
    StructuralProfile,
    ad,
    find_imaginary_transversal,
    kernel_subalgebra,
    structural_profile,
)
from .cohomology import betti_numbers, cohomology, induced_spectrum, solve_potential
from .lcs import (
    Kind,
    LcsStructure,
    classify_kind,
    contact_search,
    lcs_search,
    verify_contact,
    verify_lcs,
)
from .construct import (
    contact_from_lcs,
    derivation_space,
    double_extension,
    is_derivation,
    lcs_from_contact,
    semidirect,
)
from .lattice import check_paper_lattices, exp_one_param, jordan_chevalley, lattice_preserved
from .notation import format_salamon, parse_form, parse_matrix, parse_salamon
from . import catalog

__version__ = "0.1.0"
