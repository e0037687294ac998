"""Deleted joins and products of simplicial complexes, GF(2) homology,
the cohomological Z2-index, and non-embeddability certificates."""

from .complexes import (EMPTY, LinksIntersection, SimplicialComplex, cone,
                        cone_with_apex, cycle_complex, discrete_points, join,
                        link, links_intersection, simplex_skeleton)
from .config import CapExceeded, RunConfig, VerificationError
from .deleted import (CellComplex, ConeCollapseReport, JoinDecomposition,
                      Z2Complex, cone_collapse_report, cross_polytope_boundary,
                      deleted_join, deleted_product, verify_join_decomposition,
                      z2_join)
from .gf2 import BACKEND, ChainComplexGF2, GF2Matrix, betti, chain_complex
from .index import (CoverCocycle, DeltaQuotient, SphereCertificate,
                    cohomological_index, cover_class,
                    homology_sphere_certificate, index_of, index_report,
                    quotient)
from .iso import IsoResult, isomorphic
from .obstruction import (CERTIFIED, INDETERMINATE, NO_CERTIFICATE,
                          Certificate, certify_nonembeddable,
                          conelemma_check, corollary2_check, gvkf_check,
                          joindecomp_check, theorem1_check, theorem3a_check)
from .suite import run_suite, summary_table

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CERTIFIED", "CapExceeded", "CellComplex", "Certificate",
    "ChainComplexGF2", "ConeCollapseReport", "CoverCocycle", "DeltaQuotient",
    "EMPTY", "GF2Matrix", "INDETERMINATE", "IsoResult", "JoinDecomposition",
    "LinksIntersection", "NO_CERTIFICATE", "RunConfig", "SimplicialComplex",
    "SphereCertificate", "VerificationError", "Z2Complex", "betti",
    "certify_nonembeddable", "chain_complex", "cohomological_index", "cone",
    "cone_collapse_report", "cone_with_apex", "conelemma_check",
    "corollary2_check", "cover_class", "cross_polytope_boundary",
    "cycle_complex", "deleted_join", "deleted_product", "discrete_points",
    "gvkf_check", "homology_sphere_certificate", "index_of", "index_report",
    "isomorphic", "join", "joindecomp_check", "link", "links_intersection",
    "quotient", "run_suite", "simplex_skeleton", "summary_table",
    "theorem1_check", "theorem3a_check", "verify_join_decomposition",
    "z2_join",
]
