"""Riemann, Ricci and gradient soliton residuals, plus hypothesis/conclusion
truth tables for the classification results on normal acm 3-manifolds.

A Riemann soliton is ``2R + lam g(KN)g + g(KN)L_Z g = 0``.  Its (1,4)
contraction is the Ricci-type equation ``L_Z g + 2S + (4 lam + 2 div Z) g = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import connection as cc
from .acm import AcmStructure, AlphaBetaReport
from .errors import PreconditionNotMet
from .frame import (
    DIM,
    FrameManifold,
    Tensor,
    basis,
    frac,
    metric_tensor,
    tensor_contract,
    tensor_norm_squared,
    vector,
)
from .report import CheckReport, fmt, residual_summary


@dataclass(frozen=True, eq=False)
class SolitonInstance:
    potential: np.ndarray
    lam: Fraction
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "potential", vector(self.potential))
        object.__setattr__(self, "lam", frac(self.lam))


@dataclass(frozen=True, eq=False)
class GradientSolitonInstance:
    """Soliton whose potential is the gradient ``V`` of an (unstored) function."""

    potential_gradient: np.ndarray
    lam: Fraction
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "potential_gradient", vector(self.potential_gradient))
        object.__setattr__(self, "lam", frac(self.lam))


def soliton_type(lam: Fraction) -> str:
    if lam > 0:
        return "expanding"
    return "steady" if lam == 0 else "shrinking"


@dataclass
class SolitonReport:
    residual_4tensor: Tensor
    residual_ricci: Tensor | None = None
    solved_lambda: Fraction | None = None
    type_tag: str | None = None
    verdicts: dict = field(default_factory=dict)
    checks: CheckReport = field(default_factory=CheckReport)

    @property
    def is_soliton(self) -> bool:
        return self.residual_4tensor.is_zero()


def riemann_soliton_residual(m: FrameManifold, conn: cc.Connection, pkg: cc.CurvaturePackage,
                             inst: SolitonInstance) -> Tensor:
    g = metric_tensor(m)
    lie = cc.lie_derivative_metric(m, conn, inst.potential)
    return pkg.riemann_04 * 2 + cc.kulkarni_nomizu(g, g) * inst.lam + cc.kulkarni_nomizu(g, lie)


def solve_lambda(m: FrameManifold, conn: cc.Connection, pkg: cc.CurvaturePackage, z) -> Fraction | None:
    """The unique constant lam making ``z`` a Riemann soliton potential, if any."""
    g = metric_tensor(m)
    fixed = riemann_soliton_residual(m, conn, pkg, SolitonInstance(z, 0)).components
    slope = cc.kulkarni_nomizu(g, g).components
    idx = next(i for i in np.ndindex(slope.shape) if slope[i] != 0)
    lam = -fixed[idx] / slope[idx]
    return lam if all(x == 0 for x in (fixed + lam * slope).flat) else None


def ricci_soliton_residual(m: FrameManifold, conn: cc.Connection, pkg: cc.CurvaturePackage,
                           inst: SolitonInstance) -> Tensor:
    lie = cc.lie_derivative_metric(m, conn, inst.potential)
    div = cc.divergence(m, conn, inst.potential)
    return lie + pkg.ricci * 2 + metric_tensor(m) * (4 * inst.lam + 2 * div)


def contraction_identity_check(m: FrameManifold, conn: cc.Connection, pkg: cc.CurvaturePackage,
                               inst: SolitonInstance) -> CheckReport:
    """The (1,4) trace of the Riemann-soliton residual equals the Ricci-type residual.

    Holds for every potential and every lam, soliton or not.
    """
    full = riemann_soliton_residual(m, conn, pkg, inst)
    contracted = tensor_contract(full, 0, 3, m)
    expected = ricci_soliton_residual(m, conn, pkg, inst)
    rep = CheckReport()
    rep.residual("contraction_identity", "cc2", contracted - expected,
                 ricci_residual_max=residual_summary(expected))
    return rep


def integrability_check(m: FrameManifold, conn: cc.Connection, pkg: cc.CurvaturePackage,
                        z, ricci_lambda, strict: bool = False) -> CheckReport:
    """``|L_Z g|^2 / 2 = dr(Z) + 2 div(lam' Z - QZ)`` for a Ricci soliton.

    The Ricci soliton is taken as ``L_Z g + 2S = 2 lam' g``.  If ``z`` is not
    a Ricci soliton for ``ricci_lambda`` the check is skipped, or raises
    :class:`PreconditionNotMet` when ``strict``.
    """
    z, lam = vector(z), frac(ricci_lambda)
    rep = CheckReport()
    lie = cc.lie_derivative_metric(m, conn, z)
    pre = lie + pkg.ricci * 2 - metric_tensor(m) * (2 * lam)
    if not pre.is_zero():
        msg = f"not a Ricci soliton with lambda' = {fmt(lam)}"
        if strict:
            raise PreconditionNotMet(msg)
        rep.skipped("integrability", "n1", msg)
        return rep
    lhs = tensor_norm_squared(lie, m) / 2
    w = lam * z - pkg.ricci_operator.components @ z
    rhs = 2 * cc.divergence(m, conn, w)  # dr(Z) = 0: r is constant
    rep.residual("integrability", "n1", np.array([lhs - rhs], dtype=object),
                 lhs=fmt(lhs), rhs=fmt(rhs))
    return rep


def soliton_report(m: FrameManifold, conn: cc.Connection, pkg: cc.CurvaturePackage,
                   inst: SolitonInstance) -> SolitonReport:
    residual = riemann_soliton_residual(m, conn, pkg, inst)
    ricci = ricci_soliton_residual(m, conn, pkg, inst)
    solved = solve_lambda(m, conn, pkg, inst.potential)
    rep = SolitonReport(residual, ricci, solved, soliton_type(inst.lam))
    rep.checks.residual("riemann_soliton", "cc1", residual,
                        name=inst.name, lam=fmt(inst.lam),
                        solved_lambda=None if solved is None else fmt(solved),
                        type=rep.type_tag)
    rep.checks.extend(contraction_identity_check(m, conn, pkg, inst))
    div = cc.divergence(m, conn, inst.potential)
    if residual.is_zero() and div == 0:
        lie = cc.lie_derivative_metric(m, conn, inst.potential)
        n3 = lie + pkg.ricci * 2 + metric_tensor(m) * (4 * inst.lam)
        rep.checks.residual("ricci_reduction", "n3", n3)
    return rep


@dataclass(frozen=True)
class DivergenceFreeVerdicts:
    """Truth table: soliton with div-free potential => quasi-Sasakian with curvature -lam."""

    h1_soliton: bool
    h2_divergence_free: bool
    c1_quasi_sasakian: bool
    c2_curvature_minus_lambda: bool
    scalar_is_minus_6_lambda: bool | None
    q_xi_is_minus_2_lambda_xi: bool | None

    @property
    def hypotheses(self) -> bool:
        return self.h1_soliton and self.h2_divergence_free

    @property
    def conclusions(self) -> bool:
        return self.c1_quasi_sasakian and self.c2_curvature_minus_lambda

    def to_dict(self) -> dict:
        return {
            "H1_riemann_soliton": self.h1_soliton,
            "H2_divergence_free": self.h2_divergence_free,
            "C1_quasi_sasakian": self.c1_quasi_sasakian,
            "C2_constant_curvature_minus_lambda": self.c2_curvature_minus_lambda,
            "r_equals_minus_6_lambda": self.scalar_is_minus_6_lambda,
            "Q_xi_equals_minus_2_lambda_xi": self.q_xi_is_minus_2_lambda_xi,
        }


def divergence_free_soliton_verdicts(m: FrameManifold, conn: cc.Connection, pkg: cc.CurvaturePackage,
                                     s: AcmStructure, ab: AlphaBetaReport,
                                     inst: SolitonInstance) -> DivergenceFreeVerdicts:
    h1 = riemann_soliton_residual(m, conn, pkg, inst).is_zero()
    h2 = cc.divergence(m, conn, inst.potential) == 0
    k = cc.constant_curvature_coefficient(pkg, m)
    r6 = qxi = None
    if h1 and h2:
        r6 = pkg.scalar == -6 * inst.lam
        qxi = all(x == 0 for x in pkg.ricci_operator.components @ s.xi + 2 * inst.lam * s.xi)
    return DivergenceFreeVerdicts(h1, h2, ab.alpha == 0, k is not None and k == -inst.lam, r6, qxi)


@dataclass(frozen=True)
class CollinearVerdicts:
    """Consistency facts for a potential ``Z = c xi`` with constant c."""

    c: Fraction
    divergence: Fraction
    predicted_lambda: Fraction
    supplied_lambda: Fraction | None
    residual_at_prediction_zero: bool
    residual_at_prediction: Tensor

    @property
    def lambda_matches(self) -> bool | None:
        if self.supplied_lambda is None:
            return None
        return self.supplied_lambda == self.predicted_lambda

    def to_dict(self) -> dict:
        return {
            "c": fmt(self.c),
            "div_Z": fmt(self.divergence),
            "predicted_lambda": fmt(self.predicted_lambda),
            "supplied_lambda": None if self.supplied_lambda is None else fmt(self.supplied_lambda),
            "lambda_matches_prediction": self.lambda_matches,
            "riemann_residual_at_prediction_zero": self.residual_at_prediction_zero,
            "riemann_residual_at_prediction_max": residual_summary(self.residual_at_prediction),
        }


def collinear_potential_verdicts(m: FrameManifold, conn: cc.Connection, pkg: cc.CurvaturePackage,
                                 s: AcmStructure, ab: AlphaBetaReport, c,
                                 lam=None) -> CollinearVerdicts:
    """For ``Z = c xi``: div Z, the forced value ``lam* = a^2 - b^2 - div Z``,
    and the Riemann-soliton residual at ``(Z, lam*)``."""
    c = frac(c)
    z = c * s.xi
    div = cc.divergence(m, conn, z)
    predicted = ab.alpha ** 2 - ab.beta ** 2 - div
    residual = riemann_soliton_residual(m, conn, pkg, SolitonInstance(z, predicted))
    return CollinearVerdicts(c, Fraction(div), Fraction(predicted),
                             None if lam is None else frac(lam), residual.is_zero(), residual)


def gradient_ars_check(m: FrameManifold, conn: cc.Connection, pkg: cc.CurvaturePackage,
                       ginst: GradientSolitonInstance,
                       ab: AlphaBetaReport | None = None) -> SolitonReport:
    """Gradient soliton ``2R + lam g(KN)g + g(KN)Hess = 0`` and its consequences.

    Reports closedness of V, the residual above, the residual of
    ``R(E,F)V = (nabla_F Q)E - (nabla_E Q)F`` (the scalar-gradient bracket
    vanishes because ``2 lam + lap`` is constant), and, when ``ab`` is given,
    the two branches of the quasi-Sasakian / constant-curvature dichotomy.
    """
    v = ginst.potential_gradient
    hess, closed = cc.hessian_from_gradient(m, conn, v)
    g = metric_tensor(m)
    residual = pkg.riemann_04 * 2 + cc.kulkarni_nomizu(g, g) * ginst.lam
    if hess.is_symmetric():
        residual = residual + cc.kulkarni_nomizu(g, hess)
    else:
        # the product needs symmetric input; use the raw formula on the asymmetric Hessian
        H, G = hess.components, m.metric
        residual = residual + Tensor(
            np.einsum("xw,yz->xyzw", G, H) + np.einsum("yz,xw->xyzw", G, H)
            - np.einsum("xz,yw->xyzw", G, H) - np.einsum("yw,xz->xyzw", G, H), "dddd")

    Q = pkg.ricci_operator
    nabla_q = [cc.covariant_derivative_operator(m, conn, Q, basis(i)).components for i in range(DIM)]
    gl12 = np.empty((DIM, DIM, DIM), dtype=object)
    for i in range(DIM):
        for j in range(DIM):
            gl12[i, j] = (cc.curvature_operator(pkg, basis(i), basis(j), v)
                          - nabla_q[j][:, i] + nabla_q[i][:, j])

    laplacian = cc.divergence(m, conn, v)
    rep = SolitonReport(residual, type_tag=soliton_type(ginst.lam))
    rep.checks.verdict("gradient_closed", "aa2", closed, name=ginst.name)
    rep.checks.residual("gradient_riemann_soliton", "aa2", residual,
                        name=ginst.name, lam=fmt(ginst.lam), laplacian=fmt(laplacian))
    rep.checks.residual("curvature_on_gradient", "gl12", gl12, name=ginst.name)
    rep.verdicts = {"closed": closed, "laplacian": fmt(laplacian)}
    if ab is not None:
        k = ab.alpha ** 2 - ab.beta ** 2
        curvature = cc.constant_curvature_coefficient(pkg, m)
        rep.verdicts.update(
            quasi_sasakian=ab.alpha == 0,
            scalar_is_minus_6k=pkg.scalar == -6 * k,
            constant_curvature_minus_k=curvature is not None and curvature == -k,
        )
        rep.verdicts["dichotomy_holds"] = rep.verdicts["quasi_sasakian"] or rep.verdicts["scalar_is_minus_6k"]
    return rep
