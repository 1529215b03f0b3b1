"""Exact Schubert calculus for the polar multiplicities, Euler
characteristics, Euler obstructions and Betti profiles of the links of
generic determinantal varieties.

Everything is computed over Z with arbitrary-precision integers; there is
no floating point anywhere in the pipeline.
"""

from .errors import ConsistencyError, DomainError
from .grass_ring import (
    GrassClass,
    GrassSpec,
    PresentationPoly,
    chern_quot,
    chern_sub,
    grassmann_relations,
    integrate,
    mul,
    oracle_quotient_ring,
    poincare,
    presentation_h,
    schubert_to_presentation,
)
from .links import (
    DetSpec,
    LinkProfile,
    OrbitPoincare,
    RealLinkBetti,
    KNOWN_REAL_LINK_TORSION,
    betti_real_link_rank1,
    betti_smooth_complex_link,
    betti_smooth_real_link,
    egz_factor,
    euler_complex_link,
    euler_step,
    grass_betti,
    hilbert_burch_chi_table,
    orbit_poincare,
    poincare_stiefel,
    poincare_unitary,
    smoothing_bounds,
)
from .partitions import (
    IntPolynomial,
    as_partition,
    conjugate,
    gaussian_binomial,
    partitions_in_box,
    weight,
)
from .polar import (
    DualityReport,
    PolarProfile,
    duality_check,
    euler_obstruction,
    polar_multiplicity,
    polar_profile,
)
from .tensor_calculus import (
    QUOT_TENSOR,
    SUB_TENSOR,
    CharSeries,
    ProdClass,
    ProdSpec,
    chern_tensor,
    chern_tensor_via_roots,
    integrate_prod,
    mul_prod,
    segre_tensor,
)

__version__ = "0.1.0"
