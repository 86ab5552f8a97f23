"""Factorizations of simplex, cross-polytope and cube skeleta into canonical spheres."""

from .designs import DesignInstance, construct_sqs, construct_sts, double_sqs, one_factorization, verify_design
from .divisibility import (
    ExceptionTable,
    Verdict,
    exact_binomial,
    feasible_range,
    in_divisibility_set,
    skeleton_feasibility,
)
from .errors import InfeasibleParameters, ParseError, UnsupportedConstruction
from .exact_cover import CoverProblem, CoverStatus, SearchBudget, search_design, solve_exact_cover
from .factorize import (
    Block,
    FactorizationCertificate,
    construct,
    cross_factorization,
    cube_factorization,
    decide_factorable_small,
    exponentiate_factorization,
    exponentiate_simplex,
    simplex_factorization_from_design,
)
from .polytope import (
    Face,
    Family,
    SkeletonSpec,
    boundary_faces,
    canonical_sphere_faces,
    enumerate_faces,
    face_count,
    is_even_skeleton,
)
from .verify import block_is_canonical, verify_certificate

__version__ = "0.1.0"
