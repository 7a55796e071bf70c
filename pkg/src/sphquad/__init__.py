"""Spherical quadrilaterals with two integer angles.

Classification of spherical metrics on a quadrilateral with two integer
corner angles: existence and parameter normalization, certificate
polynomials for the accessory parameter, real-spectrum counting and curve
tracing, explicit developing-map construction, and independent
combinatorial counts via nets and chains.
"""

from sphquad.params import (
    AngleSet,
    CaseTag,
    CornerOrders,
    ExistenceResult,
    ExponentData,
    FeasibilityResult,
    InvalidAngles,
    NormalizedParams,
    NotRealizable,
    adjacent_orders,
    chain_orders,
    denormalize,
    existence_check,
    exponent_data,
    normalize,
    rational_feasible,
    real_lower_bound,
    triangle_exists,
    upper_bound,
)
from sphquad.heun import (
    CertPoly,
    DegenerateModulus,
    HeunForm,
    Origin,
    all_cert_polys,
    min_cert_poly,
)
from sphquad.spectra import (
    CountReport,
    CurveSample,
    SpectrumReport,
    VerifyReport,
    band_to_figure,
    count_real,
    curve_trace,
    figure_to_band,
    solve_lambda,
    verify_unitary,
    write_curve_csv,
)
from sphquad.developing import (
    DevelopingPair,
    WronskianResidual,
    assemble_developing_pair,
    exponent_system_ok,
    solve_exponent_system,
    wronskian_verify,
)
from sphquad.nets import (
    IJSequence,
    NegativeCount,
    NKType,
    QuadClass,
    count_aa_chains,
    count_ab_chains,
    count_adjacent,
    count_lemma_solutions,
    count_maximal,
    enumerate_aa_classes,
    enumerate_maximal_types,
    enumerate_quad_classes_adjacent,
    gf_coefficient,
    validate_type,
)

__version__ = "0.1.0"
