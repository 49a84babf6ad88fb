"""Exact computations with colour Lie algebras, eps-orthogonal representations and their covariants."""

from .altmaps import (AltMap, LazyAltMap, StoredAltMap, alt_from_function, compare, compose, norm,
                      wedge)
from .catalog import (catalog_centralizer_J, catalog_fundamental_so, catalog_so_tensor_sl2,
                      preset)
from .colour_lie import ColourLieAlgebra, cla_validate, gl_eps, quad_validate, sl2_make, so_eps
from .covariants import covariant_checks, covariant_psi, covariant_Q, mathews_verify
from .curvature import CurvatureTensor, bianchi, curvature_from, is_special
from .document import Document, load_document, parse_document
from .extensions import extend, extend_sl2, heisenberg_grading, phi_validate
from .graded_linalg import FormEps, GradedSpace, dual_basis, form_validate
from .grading import AbelianGroup, CommutationFactor, super_sign, trivial_sign
from .representations import OrthRep, moment_map, mu_can, rep_tensor, rep_validate
from .scalars import QQ, Field, Fp
from .verdict import InternalInconsistency, Verdict

__all__ = [
    "AbelianGroup", "AltMap", "ColourLieAlgebra", "CommutationFactor", "CurvatureTensor",
    "Document", "Field", "FormEps", "Fp", "GradedSpace", "InternalInconsistency", "LazyAltMap",
    "OrthRep", "QQ", "StoredAltMap", "Verdict", "alt_from_function", "bianchi",
    "catalog_centralizer_J", "catalog_fundamental_so", "catalog_so_tensor_sl2", "cla_validate",
    "compare", "compose", "covariant_Q", "covariant_checks", "covariant_psi", "curvature_from",
    "dual_basis", "extend", "extend_sl2", "form_validate", "gl_eps", "heisenberg_grading",
    "is_special", "load_document", "mathews_verify", "moment_map", "mu_can", "norm",
    "parse_document", "phi_validate", "preset", "quad_validate", "rep_tensor", "rep_validate",
    "sl2_make", "so_eps", "super_sign", "trivial_sign", "wedge",
]
