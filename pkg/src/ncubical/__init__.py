"""Neighborly cubical spheres from BBC sequences of simplicial balls."""

from .bbc import BBCError, BBCSequence, bbc_from_cyclic, build_direct, build_inductive, facet_type, validate_bbc
from .cubical import (
    CubicalComplex,
    boundary_cubical,
    f_vector_cubical,
    fissure,
    is_cubically_k_neighborly,
    mirror_complex,
)
from .face_encoding import SignVector, VertexSet, complement_decode, complement_encode, is_subface, sign_flip, subfaces
from .ncp import cge_facets, ncp_facet_count, phi_map, s_neighborly_sphere_facets
from .simplicial import (
    FVector,
    SimplicialComplex,
    boundary_complex,
    cone,
    f_vector_simplicial,
    gale_facets_cyclic,
    is_simplicially_k_neighborly,
    pulling_triangulation_cyclic,
)

__version__ = "0.1.0"
