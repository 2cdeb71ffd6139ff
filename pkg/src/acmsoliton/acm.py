"""Almost contact metric structures on a frame: axioms, normality, alpha/beta,
the structural identity suite, and classification.

Every identity is evaluated with alpha and beta constant, so directional
derivatives of alpha, beta and r drop out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import connection as cc
from .frame import (
    DIM,
    FrameManifold,
    Tensor,
    basis,
    identity,
    is_zero,
    rational_array,
    solve_linear,
    vector,
)
from .report import CheckReport, fmt


@dataclass(frozen=True, eq=False)
class AcmStructure:
    """``phi`` is a matrix whose column j is ``phi(e_j)``; ``eta`` defaults to ``g(xi, .)``."""

    phi: np.ndarray
    xi: np.ndarray
    eta: np.ndarray

    def endomorphism(self) -> Tensor:
        return Tensor(self.phi, "ud")


def make_structure(m: FrameManifold, phi, xi, eta=None) -> AcmStructure:
    phi = rational_array(phi, (DIM, DIM))
    xi = vector(xi)
    eta = m.flat(xi) if eta is None else vector(eta)
    for a in (phi, xi, eta):
        a.flags.writeable = False
    return AcmStructure(phi, xi, eta)


def fundamental_form(m: FrameManifold, s: AcmStructure) -> Tensor:
    """``Phi(E,F) = g(E, phi F)``."""
    return Tensor(m.metric @ s.phi, "dd")


def validate_acm(m: FrameManifold, s: AcmStructure) -> CheckReport:
    phi, xi, eta, g = s.phi, s.xi, s.eta, m.metric
    rep = CheckReport()
    rep.residual("phi_squared", "a1", phi @ phi + identity() - np.outer(xi, eta))
    rep.residual("eta_xi", "a1", np.array([eta @ xi - 1], dtype=object))
    rep.residual("phi_xi", "a1", phi @ xi)
    rep.residual("eta_phi", "a1", eta @ phi)
    rep.residual("compatibility", "a5", phi.T @ g @ phi - (g - np.outer(eta, eta)))
    rep.residual("eta_dual", "a6", eta - g @ xi)
    big_phi = fundamental_form(m, s).components
    rep.residual("fundamental_form_antisymmetric", "a7", big_phi + big_phi.T,
                 fundamental_form=[[fmt(x) for x in row] for row in big_phi])
    return rep


def nijenhuis(m: FrameManifold, s: AcmStructure) -> np.ndarray:
    """``[phi,phi](e_i,e_j)`` as an array [i, j, k]."""
    phi = s.phi
    out = np.empty((DIM, DIM, DIM), dtype=object)
    for i in range(DIM):
        for j in range(DIM):
            ei, ej = basis(i), basis(j)
            pi, pj = phi @ ei, phi @ ej
            out[i, j] = (phi @ phi @ m.bracket(ei, ej) + m.bracket(pi, pj)
                         - phi @ m.bracket(pi, ej) - phi @ m.bracket(ei, pj))
    return out


def d_eta(m: FrameManifold, s: AcmStructure) -> Tensor:
    return cc.exterior_derivative_1form(m, Tensor(s.eta, "d"))


def normality_check(m: FrameManifold, s: AcmStructure) -> CheckReport:
    rep = CheckReport()
    residual = nijenhuis(m, s) + 2 * np.einsum("ij,k->ijk", d_eta(m, s).components, s.xi)
    rep.residual("normality", "a3", residual)
    return rep


@dataclass(frozen=True, eq=False)
class AlphaBetaReport:
    alpha: Fraction
    beta: Fraction
    b2_residual: np.ndarray  # column i: residual of the nabla xi formula along e_i

    @property
    def exact(self) -> bool:
        return is_zero(self.b2_residual)


def alpha_beta(m: FrameManifold, conn: cc.Connection, s: AcmStructure) -> AlphaBetaReport:
    """``alpha = div(xi)/2``, ``beta = tr(phi nabla xi)/2`` and the residual of
    ``nabla_E xi = alpha (E - eta(E) xi) - beta phi E``."""
    grad_xi = conn.derivative_matrix(s.xi)
    alpha = np.trace(grad_xi) / 2
    beta = np.trace(s.phi @ grad_xi) / 2
    predicted = alpha * (identity() - np.outer(s.xi, s.eta)) - beta * s.phi
    return AlphaBetaReport(Fraction(alpha), Fraction(beta), grad_xi - predicted)


def nabla_eta(conn: cc.Connection, s: AcmStructure) -> np.ndarray:
    """``(nabla_{e_i} eta)(e_j) = -eta(nabla_{e_i} e_j)``."""
    return -np.einsum("ijk,k->ij", conn.gamma, s.eta)


def structural_identities(m: FrameManifold, conn: cc.Connection, pkg: cc.CurvaturePackage,
                          s: AcmStructure, ab: AlphaBetaReport) -> CheckReport:
    a, b = ab.alpha, ab.beta
    phi, xi, eta, g = s.phi, s.xi, s.eta, m.metric
    k = a * a - b * b
    rep = CheckReport()
    grad_xi = conn.derivative_matrix(xi)
    phi_t = s.endomorphism()

    b1 = np.empty((DIM, DIM, DIM), dtype=object)
    b3 = np.empty((DIM, DIM, DIM), dtype=object)
    for i in range(DIM):
        ei = basis(i)
        nabla_phi = cc.covariant_derivative_operator(m, conn, phi_t, ei).components
        # g(phi nabla_E xi, F) xi - eta(F) phi nabla_E xi, read as a vector
        w = phi @ grad_xi[:, i]
        b1[i] = nabla_phi - (np.outer(xi, g @ w) - np.outer(w, eta))
        pe = phi @ ei
        b3[i] = nabla_phi - (a * (np.outer(xi, g @ pe) - np.outer(pe, eta))
                             + b * (np.outer(xi, g @ ei) - np.outer(ei, eta)))
    rep.residual("nabla_phi_via_xi", "b1", b1)
    rep.residual("nabla_xi", "b2", ab.b2_residual, alpha=fmt(a), beta=fmt(b))
    rep.residual("nabla_phi", "b3", b3)

    b4 = np.empty((DIM, DIM, DIM), dtype=object)
    phi2 = phi @ phi
    for i in range(DIM):
        for j in range(DIM):
            lhs = cc.curvature_operator(pkg, basis(i), basis(j), xi)
            rhs = (k * (eta[j] * phi2[:, i] - eta[i] * phi2[:, j])
                   + 2 * a * b * (eta[j] * phi[:, i] - eta[i] * phi[:, j]))
            b4[i, j] = lhs - rhs
    rep.residual("curvature_xi", "b4", b4)

    S = pkg.ricci.components
    rep.residual("ricci_xi", "b5", S @ xi + 2 * k * eta)
    rep.residual("xi_beta", "b6", np.array([2 * a * b], dtype=object))
    rep.residual("nabla_eta", "b7", nabla_eta(conn, s) - (a * (phi.T @ g @ phi) - b * (phi.T @ g)))
    rep.residual("decomposition_3d", "b8", cc.decomposition_residual_3d(m, pkg))
    b9 = S - ((pkg.scalar / 2 + k) * (phi.T @ g @ phi) - 2 * k * np.outer(eta, eta))
    rep.residual("ricci_form", "b9", b9)
    lie_xi = cc.lie_derivative_metric(m, conn, xi).components
    rep.residual("lie_xi_metric", "n2", lie_xi - 2 * a * (g - np.outer(eta, eta)))
    return rep


def ricci_operator_identities(m: FrameManifold, conn: cc.Connection, pkg: cc.CurvaturePackage,
                   s: AcmStructure, ab: AlphaBetaReport) -> CheckReport:
    """Identities for the Ricci operator and its covariant derivative.

    ``Q = (r/2 + a^2-b^2) I - (r/2 + 3(a^2-b^2)) eta (x) xi`` and, with
    ``c = r/2 + 3(a^2-b^2)``, ``(nabla_E Q) xi = -c (a (E - eta(E) xi) - b phi E)``,
    plus the scalar constraints ``xi r = -4 a c`` and ``a c = 0``.
    """
    a, b = ab.alpha, ab.beta
    phi, xi, eta, g = s.phi, s.xi, s.eta, m.metric
    k = a * a - b * b
    r = pkg.scalar
    c = r / 2 + 3 * k
    Q = pkg.ricci_operator
    rep = CheckReport()

    rep.residual("ricci_operator_form", "gl1",
                 Q.components - ((r / 2 + k) * identity() - c * np.outer(xi, eta)))
    gl2 = np.empty((DIM, DIM, DIM), dtype=object)
    g1 = np.empty((DIM, DIM), dtype=object)
    for i in range(DIM):
        ei = basis(i)
        nq = cc.covariant_derivative_operator(m, conn, Q, ei).components
        pe = phi @ ei
        gl2[i] = nq + c * (a * np.outer(xi, g @ ei) - 2 * a * eta[i] * np.outer(xi, eta)
                           + a * np.outer(ei, eta) - b * np.outer(xi, g @ pe) - b * np.outer(pe, eta))
        g1[i] = nq @ xi + c * (a * (ei - eta[i] * xi) - b * pe)
    rep.residual("nabla_ricci_operator", "gl2", gl2)
    rep.residual("nabla_ricci_operator_xi", "g1", g1)
    # r is constant in the frame model, so xi r = 0
    rep.residual("xi_scalar_curvature", "gl4", np.array([4 * a * c], dtype=object))
    rep.residual("dichotomy_constraint", "g7", np.array([a * c], dtype=object),
                 alpha=fmt(a), r_half_plus_3k=fmt(c))
    return rep


@dataclass(frozen=True)
class ClassificationReport:
    is_normal: bool
    is_quasi_sasakian: bool
    is_cosymplectic: bool
    is_alpha_kenmotsu: bool
    is_beta_sasakian: bool
    is_eta_einstein: bool
    is_einstein: bool
    constant_curvature: Fraction | None
    eta_wedge_deta: Fraction
    alpha: Fraction
    beta: Fraction
    eta_einstein_coefficients: tuple[Fraction, Fraction] | None = field(default=None)

    def flags(self) -> dict[str, bool]:
        return {
            "normal": self.is_normal,
            "quasi_sasakian": self.is_quasi_sasakian,
            "cosymplectic": self.is_cosymplectic,
            "alpha_kenmotsu": self.is_alpha_kenmotsu,
            "beta_sasakian": self.is_beta_sasakian,
            "eta_einstein": self.is_eta_einstein,
            "einstein": self.is_einstein,
        }

    def to_dict(self) -> dict:
        d = dict(self.flags())
        d["constant_curvature"] = None if self.constant_curvature is None else fmt(self.constant_curvature)
        d["eta_wedge_deta"] = fmt(self.eta_wedge_deta)
        d["alpha"], d["beta"] = fmt(self.alpha), fmt(self.beta)
        if self.eta_einstein_coefficients is not None:
            d["eta_einstein_coefficients"] = [fmt(x) for x in self.eta_einstein_coefficients]
        return d


def eta_einstein_coefficients(m: FrameManifold, pkg: cc.CurvaturePackage,
                              s: AcmStructure) -> tuple[Fraction, Fraction] | None:
    """Solve ``S = p g + q eta (x) eta`` exactly; None if no such p, q exist."""
    design = np.stack([m.metric.flatten(), np.outer(s.eta, s.eta).flatten()], axis=1)
    sol = solve_linear(design, pkg.ricci.components.flatten())
    return None if sol is None else (Fraction(sol[0]), Fraction(sol[1]))


def eta_wedge_deta(m: FrameManifold, s: AcmStructure) -> Fraction:
    """``(eta ^ d eta)(e1, e2, e3)``."""
    e, d = s.eta, d_eta(m, s).components
    return Fraction(e[0] * d[1, 2] + e[1] * d[2, 0] + e[2] * d[0, 1])


def classify(m: FrameManifold, conn: cc.Connection, pkg: cc.CurvaturePackage,
             s: AcmStructure, ab: AlphaBetaReport) -> ClassificationReport:
    a, b = ab.alpha, ab.beta
    coeffs = eta_einstein_coefficients(m, pkg, s)
    einstein = coeffs is not None and coeffs[1] == 0
    return ClassificationReport(
        is_normal=normality_check(m, s).passed,
        is_quasi_sasakian=a == 0,
        is_cosymplectic=a == 0 and b == 0,
        is_alpha_kenmotsu=b == 0 and a != 0,
        is_beta_sasakian=a == 0 and b != 0,
        is_eta_einstein=coeffs is not None,
        is_einstein=einstein,
        constant_curvature=cc.constant_curvature_coefficient(pkg, m),
        eta_wedge_deta=eta_wedge_deta(m, s),
        alpha=a,
        beta=b,
        eta_einstein_coefficients=coeffs,
    )
