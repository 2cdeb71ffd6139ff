"""Run named check suites over a manifest and collect a report document."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import acm
from . import connection as cc
from . import soliton as sol
from .errors import GeometryError, SchemaError
from .frame import DIM, FrameManifold, is_zero
from .manifest import Manifest
from .report import FAIL, INFO, PASS, SKIPPED, CheckEntry, CheckReport, fmt

SECTIONS = ("build", "axioms", "connection", "curvature", "structure",
            "classify", "identities", "soliton", "gradient", "theorems")

SUITES = {
    "validate": ("build", "axioms"),
    "connection": ("build", "connection"),
    "curvature": ("build", "connection", "curvature"),
    "acm": ("build", "axioms", "structure", "classify"),
    "classify": ("build", "classify"),
    "identities": ("build", "identities"),
    "soliton": ("build", "soliton"),
    "gradient": ("build", "gradient"),
    "theorems": ("build", "theorems"),
    "report": SECTIONS,
}


@dataclass(frozen=True, eq=False)
class Geometry:
    """Everything derived from a manifold and its acm structure."""

    manifold: FrameManifold
    connection: cc.Connection
    curvature: cc.CurvaturePackage
    structure: acm.AcmStructure
    alpha_beta: acm.AlphaBetaReport


def analyze(m: FrameManifold, s: acm.AcmStructure) -> Geometry:
    conn = cc.koszul_connection(m)
    return Geometry(m, conn, cc.curvature_package(m, conn), s, acm.alpha_beta(m, conn, s))


@dataclass
class ReportDocument:
    manifest: str
    suite: str
    entries: list[CheckEntry] = field(default_factory=list)

    @property
    def status(self) -> str:
        ok = all(e.status == PASS for e in self.entries if e.status not in (SKIPPED, INFO))
        return PASS if ok else FAIL

    def to_dict(self) -> dict:
        counts = {k: sum(e.status == k for e in self.entries) for k in (PASS, FAIL, SKIPPED, INFO)}
        return {
            "manifest": self.manifest,
            "suite": self.suite,
            "status": self.status,
            "counts": counts,
            "entries": [e.to_dict() for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"{self.manifest or 'manifest'}: suite {self.suite}"]
        for e in self.entries:
            summary = e.to_dict()["residual_summary"]
            tail = "" if summary is None else f" max|residual| = {summary}"
            lines.append(f"  {e.status.upper():7} {e.check_id:<48} [{e.label}]{tail}")
            if e.status in (FAIL, INFO, SKIPPED) and e.details:
                lines.append("          " + json.dumps(e.details, ensure_ascii=False))
        lines.append(f"overall: {self.status.upper()}")
        return "\n".join(lines) + "\n"


def _vec(v) -> list[str]:
    return [fmt(x) for x in v]


def _mat(a) -> list[list[str]]:
    return [[fmt(x) for x in row] for row in a]


def _prefixed(rep: CheckReport, prefix: str) -> list[CheckEntry]:
    out = []
    for e in rep:
        out.append(CheckEntry(f"{prefix}.{e.check_id}", e.label, e.status, e.residual, e.details))
    return out


def _connection_section(geo: Geometry) -> CheckReport:
    m, conn = geo.manifold, geo.connection
    rep = CheckReport()
    nabla = {f"nabla_e{i + 1} e{j + 1}": _vec(conn.gamma[i, j])
             for i in range(DIM) for j in range(DIM) if not is_zero(conn.gamma[i, j])}
    rep.info("coefficients", "f5", nabla=nabla)
    rep.residual("metric_compatible", "f5", cc.metric_compatibility_defect(m, conn))
    rep.residual("torsion_free", "f5", cc.torsion(m, conn))
    return rep


def _curvature_section(geo: Geometry) -> CheckReport:
    m, pkg = geo.manifold, geo.curvature
    rep = CheckReport()
    values = {}
    for i in range(DIM):
        for j in range(i + 1, DIM):
            for k in range(DIM):
                values[f"R(e{i + 1},e{j + 1})e{k + 1}"] = _vec(pkg.riemann_31[i, j, k])
    k = cc.constant_curvature_coefficient(pkg, m)
    rep.info("values", "b8", curvature=values, ricci=_mat(pkg.ricci.components),
             scalar=fmt(pkg.scalar), constant_curvature=None if k is None else fmt(k))
    for name, ok in cc.curvature_symmetry_defects(pkg).items():
        rep.verdict(f"symmetry.{name}", "b8", ok)
    rep.verdict("ricci_trace", "b8", cc.ricci_trace_check(m, pkg))
    rep.residual("decomposition_3d", "b8", cc.decomposition_residual_3d(m, pkg))
    return rep


def _structure_section(geo: Geometry) -> CheckReport:
    rep = acm.normality_check(geo.manifold, geo.structure)
    ab = geo.alpha_beta
    rep.residual("nabla_xi", "b2", ab.b2_residual, alpha=fmt(ab.alpha), beta=fmt(ab.beta))
    return rep


def _classify_section(geo: Geometry) -> CheckReport:
    rep = CheckReport()
    cls = acm.classify(geo.manifold, geo.connection, geo.curvature, geo.structure, geo.alpha_beta)
    rep.info("classification", "b9", **cls.to_dict())
    # the collinear-potential argument assumes eta ^ d eta != 0
    rep.info("eta_wedge_deta", "c7", value=fmt(cls.eta_wedge_deta),
             nonvanishing=cls.eta_wedge_deta != 0)
    return rep


def _identities_section(geo: Geometry) -> CheckReport:
    args = (geo.manifold, geo.connection, geo.curvature, geo.structure, geo.alpha_beta)
    return acm.structural_identities(*args).extend(acm.ricci_operator_identities(*args))


def _pick(items, name: str | None, kind: str):
    if name is None:
        return items
    chosen = [x for x in items if x.name == name]
    if not chosen:
        raise SchemaError(f"no {kind} named {name!r}")
    return chosen


def _soliton_section(geo: Geometry, manifest: Manifest, name: str | None) -> list[CheckEntry]:
    m, conn, pkg, s = geo.manifold, geo.connection, geo.curvature, geo.structure
    entries = []
    for inst in _pick(manifest.solitons, name, "soliton"):
        rep = sol.soliton_report(m, conn, pkg, inst).checks
        # traced soliton equation in Ricci form: L_Z g + 2S = 2 lam' g
        ricci_lam = -2 * inst.lam - cc.divergence(m, conn, inst.potential)
        rep.extend(sol.integrability_check(m, conn, pkg, inst.potential, ricci_lam))
        entries += _prefixed(rep, f"soliton.{inst.name}")
    lie_xi = cc.lie_derivative_metric(m, conn, s.xi)
    rep = CheckReport()
    rep.info("xi_killing", "h3", killing=lie_xi.is_zero(), lie_xi_metric=_mat(lie_xi.components),
             note="reported, not asserted: the Reeb field is Killing iff this tensor vanishes")
    entries += _prefixed(rep, "soliton")
    return entries


def _gradient_section(geo: Geometry, manifest: Manifest, name: str | None) -> list[CheckEntry]:
    entries = []
    for ginst in _pick(manifest.gradient_solitons, name, "gradient soliton"):
        grep = sol.gradient_ars_check(geo.manifold, geo.connection, geo.curvature, ginst, geo.alpha_beta)
        checks = grep.checks
        checks.info("dichotomy", "g7", **{k: v for k, v in grep.verdicts.items()})
        entries += _prefixed(checks, f"gradient.{ginst.name}")
    return entries


def _theorems_section(geo: Geometry, manifest: Manifest) -> list[CheckEntry]:
    m, conn, pkg, s, ab = (geo.manifold, geo.connection, geo.curvature,
                           geo.structure, geo.alpha_beta)
    entries = []
    for inst in manifest.solitons:
        v = sol.divergence_free_soliton_verdicts(m, conn, pkg, s, ab, inst)
        rep = CheckReport()
        rep.info("truth_table", "n3", **v.to_dict())
        if v.hypotheses:
            rep.verdict("scalar_minus_6_lambda", "n3", v.scalar_is_minus_6_lambda)
            rep.verdict("ricci_xi_minus_2_lambda", "n4", v.q_xi_is_minus_2_lambda_xi)
        entries += _prefixed(rep, f"theorems.divergence_free.{inst.name}")
    for chk in manifest.collinear_checks:
        v = sol.collinear_potential_verdicts(m, conn, pkg, s, ab, chk.c, chk.lam)
        rep = CheckReport()
        rep.info("collinear", "c9", **v.to_dict())
        entries += _prefixed(rep, f"theorems.collinear.{chk.name}")
    rep = CheckReport()
    k = ab.alpha ** 2 - ab.beta ** 2
    curvature = cc.constant_curvature_coefficient(pkg, m)
    rep.info("gradient_dichotomy", "g7", quasi_sasakian=ab.alpha == 0,
             constant_curvature_minus_k=curvature is not None and curvature == -k,
             minus_k=fmt(-k))
    rep.residual("dichotomy_constraint", "g7",
                 np.array([ab.alpha * (pkg.scalar / 2 + 3 * k)], dtype=object))
    entries += _prefixed(rep, "theorems")
    return entries


def run_suite(manifest: Manifest, suite: str = "report", name: str | None = None) -> ReportDocument:
    """Execute ``suite`` over ``manifest``.

    Construction errors become a failed ``build`` entry and stop the run;
    ``name`` restricts the soliton and gradient sections to one instance.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    doc = ReportDocument(manifest.name, suite)
    try:
        m = manifest.build_manifold()
        s = manifest.build_structure(m)
    except GeometryError as exc:
        doc.entries.append(CheckEntry("build", "input", FAIL, None,
                                      {"error": type(exc).__name__, "message": str(exc)}))
        return doc
    doc.entries.append(CheckEntry("build", "input", PASS, None, {}))
    geo = analyze(m, s)

    for section in SUITES[suite]:
        if section == "axioms":
            doc.entries += _prefixed(acm.validate_acm(m, s), "axioms")
        elif section == "connection":
            doc.entries += _prefixed(_connection_section(geo), "connection")
        elif section == "curvature":
            doc.entries += _prefixed(_curvature_section(geo), "curvature")
        elif section == "structure":
            doc.entries += _prefixed(_structure_section(geo), "structure")
        elif section == "classify":
            doc.entries += _prefixed(_classify_section(geo), "classify")
        elif section == "identities":
            doc.entries += _prefixed(_identities_section(geo), "identities")
        elif section == "soliton":
            doc.entries += _soliton_section(geo, manifest, name)
        elif section == "gradient":
            doc.entries += _gradient_section(geo, manifest, name)
        elif section == "theorems":
            doc.entries += _theorems_section(geo, manifest)
    return doc


__all__ = ["Geometry", "ReportDocument", "SUITES", "analyze", "run_suite"]
