"""Exact combinatorics of flag spheres: gamma vectors, Boolean decompositions
and Artinian reductions over the rationals."""

from .artinian import (
    GradedQuotient,
    artinian_dims,
    edge_partition_check,
    is_lsop,
    partition_of_unity_check,
    random_lsop,
    restriction_map,
)
from .balanced import (
    Coloring,
    SquarefreeAlgebra,
    coloring_lsop,
    find_proper_coloring,
    is_balanced,
    rainbow_faces,
    theta_monomial_in_B,
    theta_square_in_B,
)
from .complex import (
    CapacityError,
    FacetParseError,
    SimplicialComplex,
    clique_complex,
    format_facets,
    induced_subcomplex,
    is_flag,
    join,
    link,
    link_intersection_check,
    minimal_nonfaces,
    parse_facets,
    read_facets,
)
from .decomposition import (
    BooleanDecomposition,
    DecompositionError,
    build_gamma_complex,
    edge_link_survey,
    extract_boolean_decomposition,
    face_count_identity,
    verify_gamma_interpretation,
)
from .generators import (
    ShelledComplex,
    barycentric_subdivision,
    color_completion,
    compression_complex,
    cross_polytope_boundary,
    kk_is_valid_fvector,
    polygon,
    shelling_partition_check,
    simplex,
    simplex_boundary,
)
from .invariants import (
    IntegerVector,
    Kind,
    charney_davis_gamma_top,
    f_from_gamma,
    f_from_h,
    f_vector,
    gamma_from_h,
    gamma_to_h,
    h_from_f,
    h_vector,
    homology_ranks,
    is_homology_sphere,
)
from .linalg import RationalMatrix

__version__ = "0.1.0"

__all__ = [
    "artinian_dims",
    "barycentric_subdivision",
    "BooleanDecomposition",
    "build_gamma_complex",
    "CapacityError",
    "charney_davis_gamma_top",
    "clique_complex",
    "color_completion",
    "Coloring",
    "coloring_lsop",
    "compression_complex",
    "cross_polytope_boundary",
    "DecompositionError",
    "edge_link_survey",
    "edge_partition_check",
    "extract_boolean_decomposition",
    "f_from_gamma",
    "f_from_h",
    "f_vector",
    "face_count_identity",
    "FacetParseError",
    "find_proper_coloring",
    "format_facets",
    "gamma_from_h",
    "gamma_to_h",
    "GradedQuotient",
    "h_from_f",
    "h_vector",
    "homology_ranks",
    "induced_subcomplex",
    "IntegerVector",
    "is_balanced",
    "is_flag",
    "is_homology_sphere",
    "is_lsop",
    "join",
    "Kind",
    "kk_is_valid_fvector",
    "link",
    "link_intersection_check",
    "minimal_nonfaces",
    "parse_facets",
    "partition_of_unity_check",
    "polygon",
    "rainbow_faces",
    "random_lsop",
    "RationalMatrix",
    "read_facets",
    "restriction_map",
    "ShelledComplex",
    "shelling_partition_check",
    "simplex",
    "simplex_boundary",
    "SimplicialComplex",
    "SquarefreeAlgebra",
    "theta_monomial_in_B",
    "theta_square_in_B",
    "verify_gamma_interpretation",
]
