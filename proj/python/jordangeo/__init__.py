"""Peirce calculus, spectral resolutions and the geometry of normal algebraic
elements in matrix JB*-triples.

Matrices are complex128 numpy arrays; the triple product is
{abc} = (ab*c + cb*a) / 2.
"""

from ._core import (
    JordanGeoError,
    Tolerance,
    are_orthogonal,
    box,
    chart,
    connect_type1,
    equivalent_elements,
    fiber_point,
    geodesic,
    geodesic_residual,
    is_normal,
    is_tangent,
    is_tripotent,
    jb_spectral,
    neher_equivalent,
    parse_matrix,
    peirce_dimensions,
    peirce_part,
    peirce_reflection,
    phi,
    phi_restricted_inverse,
    random_normal_element,
    riemann_metric,
    run_suite,
    serialize_matrix,
    signature,
    spectral_resolution,
    support,
    symmetry_at,
    tangent_space_basis,
    triple_product,
    unitary_connect,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
