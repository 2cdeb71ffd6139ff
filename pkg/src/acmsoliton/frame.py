"""Exact rational tensor algebra on three-dimensional constant-structure frames.

Every scalar is a :class:`fractions.Fraction`; arrays are numpy ``object``
arrays of Fractions so that ``einsum`` and broadcasting stay exact.

Frame indices are 0-based in arrays (``e1`` is index 0).  Only
:func:`build_manifold` takes the 1-based labels used in manifests.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadIndex,
    BadSlot,
    BadValence,
    DuplicateBracket,
    JacobiViolation,
    MetricNotSPD,
)

DIM = 3

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def frac(x) -> Fraction:
    """Coerce an int, Fraction or rational string to a Fraction.

    Floats are refused: a binary float is almost never the rational the
    caller had in mind.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        s = x.strip()
        if not _RATIONAL_RE.match(s):
            raise ValueError(f"not a rational literal: {x!r}")
        num, _, den = s.partition("/")
        if den and int(den) == 0:
            raise ZeroDivisionError(f"zero denominator in {x!r}")
        return Fraction(int(num), int(den) if den else 1)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def rational_array(data, shape: tuple[int, ...] | None = None) -> np.ndarray:
    """Object array of Fractions built from nested sequences."""
    arr = np.array(data, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        out[idx] = frac(arr[idx])
    if shape is not None and out.shape != shape:
        raise ValueError(f"expected shape {shape}, got {out.shape}")
    return out


def zeros(*shape: int) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def identity(n: int = DIM) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def vector(*coeffs) -> np.ndarray:
    """A constant-coefficient vector field ``sum coeffs[i] e_i``."""
    if len(coeffs) == 1 and not isinstance(coeffs[0], (int, str, Fraction)):
        coeffs = tuple(coeffs[0])
    return rational_array(coeffs, (DIM,))


def basis(i: int) -> np.ndarray:
    """Frame vector ``e_{i+1}`` (0-based index)."""
    v = zeros(DIM)
    v[i] = Fraction(1)
    return v


def is_zero(arr) -> bool:
    return all(x == 0 for x in np.asarray(arr, dtype=object).flat)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=object)
    arr.flags.writeable = False
    return arr


# --- exact linear algebra -------------------------------------------------


def determinant(m: np.ndarray) -> Fraction:
    a = [list(map(frac, row)) for row in m]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def inverse(m: np.ndarray) -> np.ndarray:
    """Gauss-Jordan inverse; raises ZeroDivisionError on a singular matrix."""
    n = m.shape[0]
    aug = [list(map(frac, m[r])) + [Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return rational_array([row[n:] for row in aug])


def solve_linear(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """Exact solution of the (possibly overdetermined) system ``a x = b``.

    Returns None when the system is inconsistent.  Free variables, if any,
    are set to zero.
    """
    rows, cols = a.shape
    aug = [list(map(frac, a[r])) + [frac(b[r])] for r in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((k for k in range(r, rows) if aug[k][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for k in range(rows):
            if k != r and aug[k][c] != 0:
                f = aug[k][c]
                aug[k] = [x - f * y for x, y in zip(aug[k], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if any(all(x == 0 for x in row[:cols]) and row[cols] != 0 for row in aug):
        return None
    x = zeros(cols)
    for k, c in enumerate(pivots):
        x[c] = aug[k][cols]
    return x


# --- manifold ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FrameManifold:
    """A frame ``e1, e2, e3`` with constant brackets and a constant metric.

    ``structure_constants[i, j, k]`` is the ``e_k`` component of
    ``[e_i, e_j]``.  Construct through :func:`build_manifold`, which
    validates; direct construction trusts its arguments.
    """

    structure_constants: np.ndarray
    metric: np.ndarray
    inverse_metric: np.ndarray
    name: str = ""

    @property
    def dimension(self) -> int:
        return DIM

    def bracket(self, u, v) -> np.ndarray:
        return np.einsum("i,j,ijk->k", u, v, self.structure_constants)

    def inner(self, u, v) -> Fraction:
        return np.einsum("i,ij,j->", u, self.metric, v)

    def flat(self, v) -> np.ndarray:
        """The g-dual 1-form of ``v`` as a component array."""
        return self.metric @ np.asarray(v, dtype=object)

    def jacobi_defect(self) -> np.ndarray:
        """``[[e_i,e_j],e_k] + cyclic`` for every index triple, shape (3,3,3,3)."""
        c = self.structure_constants
        t = np.einsum("ijm,mkn->ijkn", c, c)
        return t + t.transpose(1, 2, 0, 3) + t.transpose(2, 0, 1, 3)

    def __repr__(self) -> str:
        return f"FrameManifold({self.name or 'unnamed'})"


def build_manifold(brackets: Iterable[tuple[int, int, Sequence]] = (),
                   metric=None, name: str = "") -> FrameManifold:
    """Validate bracket data and return a :class:`FrameManifold`.

    ``brackets`` lists ``(i, j, coeffs)`` with 1-based ``i, j`` meaning
    ``[e_i, e_j] = sum_k coeffs[k] e_k``.  The antisymmetric partner is
    filled in; listing both ``(i, j)`` and ``(j, i)`` is an error.
    """
    c = zeros(DIM, DIM, DIM)
    seen = set()
    for i, j, coeffs in brackets:
        if not all(isinstance(k, (int, np.integer)) and 1 <= k <= DIM for k in (i, j)):
            raise BadIndex(f"bracket indices must be in 1..{DIM}: ({i}, {j})")
        if i == j:
            raise BadIndex(f"[e{i}, e{i}] is zero by antisymmetry and may not be given")
        key = frozenset((i, j))
        if key in seen:
            raise DuplicateBracket(f"bracket of e{min(key)}, e{max(key)} given twice")
        seen.add(key)
        v = vector(coeffs)
        c[i - 1, j - 1, :] = v
        c[j - 1, i - 1, :] = -v

    g = identity() if metric is None else rational_array(metric, (DIM, DIM))
    if any(g[a, b] != g[b, a] for a in range(DIM) for b in range(DIM)):
        raise MetricNotSPD("metric is not symmetric")
    for k in range(1, DIM + 1):
        if determinant(g[:k, :k]) <= 0:
            raise MetricNotSPD(f"leading principal minor of order {k} is not positive")

    m = FrameManifold(_frozen(c), _frozen(g), _frozen(inverse(g)), name)
    defect = m.jacobi_defect()
    if not is_zero(defect):
        bad = next(idx for idx in np.ndindex(defect.shape) if defect[idx] != 0)
        raise JacobiViolation(
            "Jacobi identity fails for (e{}, e{}, e{})".format(*(b + 1 for b in bad[:3])))
    return m


# --- tensors ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Tensor:
    """Dense rational tensor on the frame.

    ``slots`` has one letter per axis: ``"d"`` for a covariant (lower)
    index, ``"u"`` for a contravariant (upper) one.  An endomorphism is
    stored with slots ``"ud"`` so that ``components`` is its matrix in the
    column convention (column j holds the image of ``e_j``).
    """

    components: np.ndarray
    slots: str

    def __post_init__(self):
        comps = np.array(self.components, dtype=object)
        if len(self.slots) > 4 or set(self.slots) - {"u", "d"}:
            raise BadValence(f"bad slot string {self.slots!r}")
        if comps.shape != (DIM,) * len(self.slots):
            raise BadValence(f"shape {comps.shape} does not match slots {self.slots!r}")
        comps.flags.writeable = False
        object.__setattr__(self, "components", comps)

    @property
    def valence(self) -> tuple[int, int]:
        """(covariant rank, contravariant rank)."""
        return self.slots.count("d"), self.slots.count("u")

    @property
    def rank(self) -> int:
        return len(self.slots)

    def is_zero(self) -> bool:
        return is_zero(self.components)

    def is_symmetric(self) -> bool:
        a = self.components
        return self.rank == 2 and all(a[i, j] == a[j, i] for i in range(DIM) for j in range(DIM))

    def __getitem__(self, idx):
        return self.components[idx]

    def _check(self, other: "Tensor"):
        if not isinstance(other, Tensor) or other.slots != self.slots:
            raise BadValence("tensor arithmetic needs matching slots")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check(other)
        return Tensor(self.components + other.components, self.slots)

    def __sub__(self, other: "Tensor") -> "Tensor":
        self._check(other)
        return Tensor(self.components - other.components, self.slots)

    def __mul__(self, scalar) -> "Tensor":
        return Tensor(self.components * frac(scalar), self.slots)

    __rmul__ = __mul__

    def __neg__(self) -> "Tensor":
        return Tensor(-self.components, self.slots)

    def equals(self, other: "Tensor") -> bool:
        return other.slots == self.slots and (self - other).is_zero()

    def __repr__(self) -> str:
        return f"Tensor(slots={self.slots!r}, components=\n{self.components})"


def covector(comps) -> Tensor:
    return Tensor(rational_array(comps, (DIM,)), "d")


def bilinear(comps) -> Tensor:
    return Tensor(rational_array(comps, (DIM, DIM)), "dd")


def endomorphism(matrix) -> Tensor:
    """(1,1) tensor from a matrix whose column j is the image of ``e_j``."""
    return Tensor(rational_array(matrix, (DIM, DIM)), "ud")


def metric_tensor(m: FrameManifold) -> Tensor:
    return Tensor(m.metric, "dd")


def tensor_contract(t: Tensor, slot_a: int, slot_b: int, manifold: FrameManifold) -> Tensor:
    """Contract two slots (0-based) of ``t``.

    A mixed pair is a plain trace; two lower slots are contracted with the
    inverse metric and two upper slots with the metric.
    """
    n = t.rank
    if not (0 <= slot_a < n and 0 <= slot_b < n) or slot_a == slot_b:
        raise BadSlot(f"cannot contract slots {slot_a}, {slot_b} of a rank-{n} tensor")
    kinds = t.slots[slot_a] + t.slots[slot_b]
    if kinds in ("ud", "du"):
        pairing = identity()
    elif kinds == "dd":
        pairing = manifold.inverse_metric
    else:
        pairing = manifold.metric
    rest = [k for k in range(n) if k not in (slot_a, slot_b)]
    moved = np.transpose(t.components, rest + [slot_a, slot_b])
    comps = np.einsum("...pq,pq->...", moved, pairing)
    slots = "".join(t.slots[k] for k in rest)
    if not slots:
        comps = np.array(comps, dtype=object).reshape(())
        return Tensor(comps, "")
    return Tensor(comps, slots)


def tensor_norm_squared(t: Tensor, manifold: FrameManifold) -> Fraction:
    """``g^{ik} g^{jl} t_ij t_kl`` for a (0,2) tensor."""
    if t.slots != "dd":
        raise BadValence(f"norm needs a (0,2) tensor, got slots {t.slots!r}")
    h = manifold.inverse_metric
    return np.einsum("ik,jl,ij,kl->", h, h, t.components, t.components)


def scalar_of(t: Tensor) -> Fraction:
    """Unwrap a rank-0 tensor."""
    if t.rank != 0:
        raise BadValence("not a scalar")
    return t.components[()]


def all_index_triples() -> Iterable[tuple[int, int, int]]:
    return itertools.product(range(DIM), repeat=3)
