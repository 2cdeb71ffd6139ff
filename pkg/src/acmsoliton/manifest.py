"""JSON manifests describing a frame manifold, its acm structure and soliton data.

Rationals are always strings (``"-3/2"``); JSON numbers are rejected so no
float can sneak in.  ``phi`` is given column-wise: entry j lists the frame
components of ``phi(e_j)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .acm import AcmStructure, make_structure
from .errors import ParseError, RationalFormatError, SchemaError
from .frame import DIM, FrameManifold, build_manifold, frac
from .soliton import GradientSolitonInstance, SolitonInstance

TOP_REQUIRED = ("brackets", "dimension", "acm")
TOP_OPTIONAL = ("name", "metric", "solitons", "gradient_solitons", "collinear_checks")
FIXTURES = ("hyp3", "flat3", "su2")


@dataclass(frozen=True)
class Bracket:
    i: int
    j: int
    coeffs: tuple[Fraction, ...]


@dataclass(frozen=True)
class CollinearCheck:
    name: str
    c: Fraction
    lam: Fraction


@dataclass
class Manifest:
    brackets: list[Bracket]
    xi: tuple[Fraction, ...]
    phi_columns: tuple[tuple[Fraction, ...], ...]
    eta: tuple[Fraction, ...] | None = None
    metric: tuple[tuple[Fraction, ...], ...] | None = None
    solitons: list[SolitonInstance] = field(default_factory=list)
    gradient_solitons: list[GradientSolitonInstance] = field(default_factory=list)
    collinear_checks: list[CollinearCheck] = field(default_factory=list)
    name: str = ""
    dimension: int = DIM

    def build_manifold(self) -> FrameManifold:
        return build_manifold([(b.i, b.j, b.coeffs) for b in self.brackets],
                              metric=self.metric, name=self.name)

    def build_structure(self, m: FrameManifold) -> AcmStructure:
        phi = [[self.phi_columns[j][i] for j in range(DIM)] for i in range(DIM)]
        return make_structure(m, phi, self.xi, self.eta)


def parse_rational(value, where: str) -> Fraction:
    if not isinstance(value, str):
        raise RationalFormatError(f"{where}: rationals must be strings, got {json.dumps(value)}")
    try:
        return frac(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise RationalFormatError(f"{where}: {exc}") from None


def _rationals(value, n: int, where: str) -> tuple[Fraction, ...]:
    if not isinstance(value, list) or len(value) != n:
        raise SchemaError(f"{where}: expected a list of {n} rational strings")
    return tuple(parse_rational(v, f"{where}[{k}]") for k, v in enumerate(value))


def _object(value, where: str, required: tuple, optional: tuple = ()) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(f"{where}: expected an object")
    missing = [k for k in required if k not in value]
    if missing:
        raise SchemaError(f"{where}: missing field(s) {', '.join(repr(k) for k in missing)}")
    extra = sorted(set(value) - set(required) - set(optional))
    if extra:
        raise SchemaError(f"{where}: unexpected field(s) {', '.join(repr(k) for k in extra)}")
    return value


def _list(doc: dict, key: str) -> list:
    value = doc.get(key, [])
    if not isinstance(value, list):
        raise SchemaError(f"{key}: expected a list")
    return value


def _name(value, where: str) -> str:
    if not isinstance(value, str) or not value:
        raise SchemaError(f"{where}: name must be a non-empty string")
    return value


def parse_manifest(document: str) -> Manifest:
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    doc = _object(doc, "manifest", TOP_REQUIRED, TOP_OPTIONAL)
    if doc["dimension"] != DIM or isinstance(doc["dimension"], bool):
        raise SchemaError(f"dimension: only {DIM} is supported")

    brackets = []
    for k, entry in enumerate(_list(doc, "brackets")):
        where = f"brackets[{k}]"
        entry = _object(entry, where, ("i", "j", "coeffs"))
        for key in ("i", "j"):
            if not isinstance(entry[key], int) or isinstance(entry[key], bool):
                raise SchemaError(f"{where}.{key}: expected an integer")
        brackets.append(Bracket(entry["i"], entry["j"], _rationals(entry["coeffs"], DIM, f"{where}.coeffs")))

    metric = None
    if doc.get("metric") is not None:
        rows = doc["metric"]
        if not isinstance(rows, list) or len(rows) != DIM:
            raise SchemaError("metric: expected a 3x3 list of rational strings")
        metric = tuple(_rationals(row, DIM, f"metric[{r}]") for r, row in enumerate(rows))

    acm = _object(doc["acm"], "acm", ("xi", "phi"), ("eta",))
    cols = acm["phi"]
    if not isinstance(cols, list) or len(cols) != DIM:
        raise SchemaError("acm.phi: expected 3 columns of 3 rational strings")
    phi = tuple(_rationals(col, DIM, f"acm.phi[{j}]") for j, col in enumerate(cols))
    xi = _rationals(acm["xi"], DIM, "acm.xi")
    eta = _rationals(acm["eta"], DIM, "acm.eta") if acm.get("eta") is not None else None

    solitons = []
    for k, entry in enumerate(_list(doc, "solitons")):
        where = f"solitons[{k}]"
        entry = _object(entry, where, ("name", "potential", "lambda"))
        solitons.append(SolitonInstance(_rationals(entry["potential"], DIM, f"{where}.potential"),
                                        parse_rational(entry["lambda"], f"{where}.lambda"),
                                        _name(entry["name"], where)))
    gradients = []
    for k, entry in enumerate(_list(doc, "gradient_solitons")):
        where = f"gradient_solitons[{k}]"
        entry = _object(entry, where, ("name", "potential_gradient", "lambda"))
        gradients.append(GradientSolitonInstance(
            _rationals(entry["potential_gradient"], DIM, f"{where}.potential_gradient"),
            parse_rational(entry["lambda"], f"{where}.lambda"),
            _name(entry["name"], where)))
    collinear = []
    for k, entry in enumerate(_list(doc, "collinear_checks")):
        where = f"collinear_checks[{k}]"
        entry = _object(entry, where, ("name", "c", "lambda"))
        collinear.append(CollinearCheck(_name(entry["name"], where),
                                        parse_rational(entry["c"], f"{where}.c"),
                                        parse_rational(entry["lambda"], f"{where}.lambda")))

    for kind, items in (("solitons", solitons), ("gradient_solitons", gradients),
                        ("collinear_checks", collinear)):
        names = [x.name for x in items]
        if len(names) != len(set(names)):
            raise SchemaError(f"{kind}: duplicate names")

    name = doc.get("name", "")
    if not isinstance(name, str):
        raise SchemaError("name: expected a string")
    return Manifest(brackets, xi, phi, eta, metric, solitons, gradients, collinear, name)


def fixture_text(name: str) -> str:
    """Text of a bundled manifest (``hyp3``, ``flat3`` or ``su2``)."""
    if name not in FIXTURES:
        raise KeyError(name)
    return resources.files("acmsoliton.fixtures").joinpath(f"{name}.json").read_text(encoding="utf-8")


def load_fixture(name: str) -> Manifest:
    return parse_manifest(fixture_text(name))


def read_manifest_text(path: str) -> str:
    """Read a manifest file; a missing ``.../hyp3.json`` style path falls back
    to the bundled fixture of that name."""
    p = Path(path)
    if p.exists():
        return p.read_text(encoding="utf-8")
    stem = p.stem if p.suffix == ".json" else p.name
    if stem in FIXTURES:
        return fixture_text(stem)
    raise FileNotFoundError(path)
