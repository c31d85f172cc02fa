"""Moment geometry of the diagonal SU(1,1) action on the bidisk and the
spectral distribution of its rotation numbers."""

from .disk import (
    BidiskPoint,
    MobiusTransform,
    act_bidisk,
    hyperbolic_disk_euclidean,
    poincare_distance,
    schwarz_distance,
    translate,
)
from .liealg import (
    ETA,
    LieVector,
    SpectralClass,
    SymplecticGenerator,
    XI,
    ZETA,
    adjoint,
    bform,
    bracket,
    classify,
    from_sp2,
    to_sp2,
)
from .moment import (
    SliceReduction,
    cone_preimage,
    moment_vector,
    mu_slice,
    mu_slice_invert,
    omega_of_pair,
    slice_reduce,
)
from .spectral import (
    SampleBatch,
    SpectralTable,
    WeightSpec,
    cdf_closed_derived,
    cdf_closed_paper_prop,
    cdf_closed_paper_u,
    cdf_quadrature,
    cdf_quadrature_batch,
    discrepancy_ledger,
    empirical_cdf,
    fiber_radius,
    ks_distance,
    mc_sample,
    mean_quadrature,
    pdf_closed_paper,
    pdf_quadrature,
    reweight_density,
    series_coefficient,
    truncated_second_moment,
)
from .verify import VerifyConfig, run_all, to_json

__version__ = "0.1.0"

__all__ = [
    "BidiskPoint",
    "ETA",
    "LieVector",
    "MobiusTransform",
    "SampleBatch",
    "SliceReduction",
    "SpectralClass",
    "SpectralTable",
    "SymplecticGenerator",
    "VerifyConfig",
    "WeightSpec",
    "XI",
    "ZETA",
    "act_bidisk",
    "adjoint",
    "bform",
    "bracket",
    "cdf_closed_derived",
    "cdf_closed_paper_prop",
    "cdf_closed_paper_u",
    "cdf_quadrature",
    "cdf_quadrature_batch",
    "classify",
    "cone_preimage",
    "discrepancy_ledger",
    "empirical_cdf",
    "fiber_radius",
    "from_sp2",
    "hyperbolic_disk_euclidean",
    "ks_distance",
    "mc_sample",
    "mean_quadrature",
    "moment_vector",
    "mu_slice",
    "mu_slice_invert",
    "omega_of_pair",
    "pdf_closed_paper",
    "pdf_quadrature",
    "poincare_distance",
    "reweight_density",
    "run_all",
    "schwarz_distance",
    "series_coefficient",
    "slice_reduce",
    "to_json",
    "to_sp2",
    "translate",
    "truncated_second_moment",
    "__version__",
]
