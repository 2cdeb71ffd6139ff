"""Exact verification of curvature identities and Riemann solitons on
three-dimensional normal almost contact metric manifolds given by
constant-structure frames."""

from .acm import (
    AcmStructure,
    AlphaBetaReport,
    ClassificationReport,
    alpha_beta,
    classify,
    eta_wedge_deta,
    make_structure,
    normality_check,
    ricci_operator_identities,
    structural_identities,
    validate_acm,
)
from .connection import (
    Connection,
    CurvaturePackage,
    constant_curvature_coefficient,
    covariant_derivative_operator,
    curvature_package,
    divergence,
    exterior_derivative_1form,
    hessian_from_gradient,
    koszul_connection,
    kulkarni_nomizu,
    lie_derivative_metric,
    sectional_curvature,
)
from .frame import (
    FrameManifold,
    Tensor,
    build_manifold,
    frac,
    tensor_contract,
    tensor_norm_squared,
    vector,
)
from .manifest import Manifest, load_fixture, parse_manifest
from .report import CheckEntry, CheckReport
from .soliton import (
    GradientSolitonInstance,
    SolitonInstance,
    SolitonReport,
    collinear_potential_verdicts,
    contraction_identity_check,
    divergence_free_soliton_verdicts,
    gradient_ars_check,
    integrability_check,
    ricci_soliton_residual,
    riemann_soliton_residual,
    soliton_report,
    soliton_type,
    solve_lambda,
)
from .suite import Geometry, ReportDocument, analyze, run_suite

__version__ = "0.1.0"

__all__ = [
    "AcmStructure",
    "alpha_beta",
    "AlphaBetaReport",
    "analyze",
    "build_manifold",
    "CheckEntry",
    "CheckReport",
    "ClassificationReport",
    "classify",
    "collinear_potential_verdicts",
    "Connection",
    "constant_curvature_coefficient",
    "contraction_identity_check",
    "covariant_derivative_operator",
    "curvature_package",
    "CurvaturePackage",
    "divergence",
    "divergence_free_soliton_verdicts",
    "eta_wedge_deta",
    "exterior_derivative_1form",
    "frac",
    "FrameManifold",
    "Geometry",
    "gradient_ars_check",
    "GradientSolitonInstance",
    "hessian_from_gradient",
    "integrability_check",
    "koszul_connection",
    "kulkarni_nomizu",
    "lie_derivative_metric",
    "load_fixture",
    "make_structure",
    "Manifest",
    "normality_check",
    "parse_manifest",
    "ReportDocument",
    "ricci_operator_identities",
    "ricci_soliton_residual",
    "riemann_soliton_residual",
    "run_suite",
    "sectional_curvature",
    "soliton_report",
    "soliton_type",
    "SolitonInstance",
    "SolitonReport",
    "solve_lambda",
    "structural_identities",
    "Tensor",
    "tensor_contract",
    "tensor_norm_squared",
    "validate_acm",
    "vector",
]

