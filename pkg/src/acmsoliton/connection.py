"""Levi-Civita connection, curvature and derivative operators on a frame.

Conventions::

    R(X,Y)Z   = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
    R(X,Y,Z,W) = g(R(X,Y)Z, W)
    S(Y,Z)    = trace of  X -> R(X,Y)Z

With these, a space of constant curvature k has R = (k/2) g (KN) g.
All fields are constant in the frame, so directional derivatives of
component functions vanish and only connection coefficients survive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BadValence, DegeneratePlane, NotSymmetric
from .frame import (
    DIM,
    FrameManifold,
    Tensor,
    identity,
    is_zero,
    metric_tensor,
    tensor_contract,
    vector,
)


@dataclass(frozen=True, eq=False)
class Connection:
    """``gamma[i, j, k]`` is the ``e_k`` component of ``nabla_{e_i} e_j``."""

    gamma: np.ndarray

    def covariant(self, x, y) -> np.ndarray:
        """``nabla_X Y`` for constant-coefficient fields X, Y."""
        return np.einsum("i,j,ijk->k", x, y, self.gamma)

    def derivative_matrix(self, z) -> np.ndarray:
        """Matrix of ``X -> nabla_X Z`` (column i is ``nabla_{e_i} Z``)."""
        return np.einsum("j,ijk->ki", z, self.gamma)


@dataclass(frozen=True, eq=False)
class CurvaturePackage:
    riemann_31: Tensor  # slots "dddu": [i,j,k,l] = e_l part of R(e_i,e_j)e_k
    riemann_04: Tensor
    ricci: Tensor
    ricci_operator: Tensor
    scalar: Fraction


def koszul_connection(m: FrameManifold) -> Connection:
    # 2 g(nabla_i e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j)
    c_low = np.einsum("ijm,mk->ijk", m.structure_constants, m.metric)
    lowered = (c_low - c_low.transpose(2, 0, 1) + c_low.transpose(1, 2, 0)) * Fraction(1, 2)
    gamma = np.einsum("ijk,kl->ijl", lowered, m.inverse_metric)
    gamma.flags.writeable = False
    return Connection(gamma)


def metric_compatibility_defect(m: FrameManifold, conn: Connection) -> np.ndarray:
    t = np.einsum("ijm,mk->ijk", conn.gamma, m.metric)
    return t + t.transpose(0, 2, 1)


def torsion(m: FrameManifold, conn: Connection) -> np.ndarray:
    return conn.gamma - conn.gamma.transpose(1, 0, 2) - m.structure_constants


def curvature_package(m: FrameManifold, conn: Connection) -> CurvaturePackage:
    G, c = conn.gamma, m.structure_constants
    r31 = (np.einsum("jkm,iml->ijkl", G, G)
           - np.einsum("ikm,jml->ijkl", G, G)
           - np.einsum("ijm,mkl->ijkl", c, G))
    riemann_31 = Tensor(r31, "dddu")
    riemann_04 = Tensor(np.einsum("ijkl,lw->ijkw", r31, m.metric), "dddd")
    ricci = Tensor(np.einsum("ijki->jk", r31), "dd")
    # Q^l_j = g^{lk} S_kj, stored as an endomorphism (slots "ud")
    q = Tensor(m.inverse_metric @ ricci.components, "ud")
    r = np.einsum("ij,ij->", m.inverse_metric, ricci.components)
    return CurvaturePackage(riemann_31, riemann_04, ricci, q, r)


def curvature_operator(pkg: CurvaturePackage, x, y, z) -> np.ndarray:
    """``R(X,Y)Z`` for constant-coefficient fields."""
    return np.einsum("i,j,k,ijkl->l", x, y, z, pkg.riemann_31.components)


def sectional_curvature(pkg: CurvaturePackage, m: FrameManifold, u, v) -> Fraction:
    u, v = vector(u), vector(v)
    gram = m.inner(u, u) * m.inner(v, v) - m.inner(u, v) ** 2
    if gram == 0:
        raise DegeneratePlane("vectors are linearly dependent")
    num = np.einsum("i,j,k,l,ijkl->", u, v, v, u, pkg.riemann_04.components)
    return num / gram


def kulkarni_nomizu(a: Tensor, b: Tensor) -> Tensor:
    """Kulkarni-Nomizu product of two symmetric (0,2) tensors.

    ``(a.b)(X,Y,Z,W) = a(X,W)b(Y,Z) + a(Y,Z)b(X,W) - a(X,Z)b(Y,W) - a(Y,W)b(X,Z)``
    """
    for t in (a, b):
        if t.slots != "dd":
            raise BadValence("Kulkarni-Nomizu product needs (0,2) tensors")
        if not t.is_symmetric():
            raise NotSymmetric("Kulkarni-Nomizu product needs symmetric tensors")
    A, B = a.components, b.components
    comps = (np.einsum("xw,yz->xyzw", A, B) + np.einsum("yz,xw->xyzw", A, B)
             - np.einsum("xz,yw->xyzw", A, B) - np.einsum("yw,xz->xyzw", A, B))
    return Tensor(comps, "dddd")


def constant_curvature_coefficient(pkg: CurvaturePackage, m: FrameManifold) -> Fraction | None:
    """The k with ``R(X,Y)Z = k(g(Y,Z)X - g(X,Z)Y)``, or None."""
    k = pkg.scalar / (DIM * (DIM - 1))
    g = metric_tensor(m)
    model = kulkarni_nomizu(g, g) * (k / 2)
    return k if pkg.riemann_04.equals(model) else None


def lie_derivative_metric(m: FrameManifold, conn: Connection, z) -> Tensor:
    """``(L_Z g)(e_i,e_j) = g(nabla_i Z, e_j) + g(nabla_j Z, e_i)``."""
    d = np.einsum("j,ijk,kl->il", vector(z), conn.gamma, m.metric)
    return Tensor(d + d.T, "dd")


def divergence(m: FrameManifold, conn: Connection, z) -> Fraction:
    return np.trace(conn.derivative_matrix(vector(z)))


def exterior_derivative_1form(m: FrameManifold, omega: Tensor) -> Tensor:
    """``d omega(e_i,e_j) = -1/2 omega([e_i,e_j])`` (half-normalized convention)."""
    if omega.slots != "d":
        raise BadValence("expected a 1-form")
    comps = np.einsum("ijk,k->ij", m.structure_constants, omega.components) * Fraction(-1, 2)
    return Tensor(comps, "dd")


def hessian_from_gradient(m: FrameManifold, conn: Connection, v) -> tuple[Tensor, bool]:
    """Hessian ``g(nabla_i V, e_j)`` of a would-be gradient V, and whether V is closed.

    V is closed when its dual 1-form has vanishing exterior derivative; only
    then is the result the Hessian of an actual potential.
    """
    v = vector(v)
    hess = Tensor(np.einsum("j,ijk,kl->il", v, conn.gamma, m.metric), "dd")
    closed = exterior_derivative_1form(m, Tensor(m.flat(v), "d")).is_zero()
    return hess, closed


def covariant_derivative_operator(m: FrameManifold, conn: Connection, t: Tensor, direction) -> Tensor:
    """``(nabla_X T)(Y) = nabla_X(T Y) - T(nabla_X Y)`` for an endomorphism T."""
    if t.slots != "ud":
        raise BadValence("expected an endomorphism (slots 'ud')")
    x = vector(direction)
    # nabla_X of a constant field is gamma_X acting on its components
    gx = np.einsum("i,ijk->kj", x, conn.gamma)
    T = t.components
    return Tensor(gx @ T - T @ gx, "ud")


def decomposition_residual_3d(m: FrameManifold, pkg: CurvaturePackage) -> Tensor:
    """R minus its three-dimensional expression through S, Q and r.

    ``R(X,Y)Z = S(Y,Z)X - S(X,Z)Y + g(Y,Z)QX - g(X,Z)QY - r/2 (g(Y,Z)X - g(X,Z)Y)``
    """
    S, g, Q = pkg.ricci.components, m.metric, pkg.ricci_operator.components
    I = identity()
    expr = (np.einsum("jk,li->ijkl", S, I) - np.einsum("ik,lj->ijkl", S, I)
            + np.einsum("jk,li->ijkl", g, Q) - np.einsum("ik,lj->ijkl", g, Q)
            - (np.einsum("jk,li->ijkl", g, I) - np.einsum("ik,lj->ijkl", g, I)) * (pkg.scalar / 2))
    return Tensor(pkg.riemann_31.components - expr, "dddu")


def bianchi_defect(pkg: CurvaturePackage) -> np.ndarray:
    R = pkg.riemann_04.components
    return R + R.transpose(1, 2, 0, 3) + R.transpose(2, 0, 1, 3)


def curvature_symmetry_defects(pkg: CurvaturePackage) -> dict[str, bool]:
    """Which of the algebraic curvature symmetries hold exactly."""
    R = pkg.riemann_04.components
    return {
        "antisym_12": is_zero(R + R.transpose(1, 0, 2, 3)),
        "antisym_34": is_zero(R + R.transpose(0, 1, 3, 2)),
        "pair_exchange": is_zero(R - R.transpose(2, 3, 0, 1)),
        "bianchi": is_zero(bianchi_defect(pkg)),
    }


def ricci_trace_check(m: FrameManifold, pkg: CurvaturePackage) -> bool:
    """S is symmetric and equals the (1,4) contraction of the (0,4) curvature."""
    contracted = tensor_contract(pkg.riemann_04, 0, 3, m)
    return pkg.ricci.is_symmetric() and contracted.equals(pkg.ricci)


__all__ = [
    "Connection",
    "CurvaturePackage",
    "decomposition_residual_3d",
    "bianchi_defect",
    "constant_curvature_coefficient",
    "covariant_derivative_operator",
    "curvature_operator",
    "curvature_package",
    "curvature_symmetry_defects",
    "divergence",
    "exterior_derivative_1form",
    "hessian_from_gradient",
    "koszul_connection",
    "kulkarni_nomizu",
    "lie_derivative_metric",
    "metric_compatibility_defect",
    "ricci_trace_check",
    "sectional_curvature",
    "torsion",
]
