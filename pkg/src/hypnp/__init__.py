"""Irregular Hodge polygons and Frobenius Newton polygons of hypergeometric data."""

from .charsum import (
    SumValue,
    build_field,
    hyp_sum,
    hyp_sum_bruteforce,
    resonant_decomposition_check,
)
from .errors import (
    ConventionError,
    DomainError,
    HypnpError,
    NewtonBelowHodgeError,
    PrecisionError,
    PreconditionError,
    ResourceError,
)
from .frobenius import FrobeniusReport, char_poly, compare, compare_all, newton_polygon
from .hodge import (
    Polygon,
    as_hodge_polygon,
    duality_pairing,
    hodge_numbers,
    irregular_hodge_polygon,
    theta,
)
from .padic import PadicElement, PadicRing, default_ring, gauss_sum
from .params import CharParams, HypParams, conjugate, is_nonresonant, normalize
from .polytope import (
    basis_exponents,
    build_facets,
    lattice_count_volume_check,
    volume,
    weight,
)

__version__ = "0.1.0"
