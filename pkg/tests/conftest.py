import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from acmsoliton import analyze, build_manifold, load_fixture  # noqa: E402
from acmsoliton.frame import inverse, rational_array  # noqa: E402


def geometry(name):
    man = load_fixture(name)
    m = man.build_manifold()
    return analyze(m, man.build_structure(m))


@pytest.fixture(scope="session")
def hyp3():
    return geometry("hyp3")


@pytest.fixture(scope="session")
def flat3():
    return geometry("flat3")


@pytest.fixture(scope="session")
def su2():
    return geometry("su2")


@pytest.fixture(scope="session", params=["hyp3", "flat3", "su2"])
def any_fixture(request):
    return geometry(request.param)


# --- hypothesis strategies ------------------------------------------------

small = st.fractions(min_value=-3, max_value=3, max_denominator=4)
unit = st.fractions(min_value=-1, max_value=1, max_denominator=3)


@st.composite
def lie_algebras(draw):
    """Random 3-dim Lie algebra structure constants (always Jacobi-valid).

    Either a semidirect product R^2 x| R with an arbitrary derivation, or a
    unimodular algebra [x, y] = N (x cross y) with symmetric N, followed by a
    random change of basis.
    """
    c = np.empty((3, 3, 3), dtype=object)
    c.fill(Fraction(0))
    if draw(st.booleans()):
        mm = [[draw(small) for _ in range(2)] for _ in range(2)]
        for col in range(2):
            img = [mm[0][col], mm[1][col], Fraction(0)]
            c[2, col] = img
            c[col, 2] = [-x for x in img]
    else:
        d = [draw(small) for _ in range(6)]
        nmat = [[d[0], d[3], d[4]], [d[3], d[1], d[5]], [d[4], d[5], d[2]]]
        eps = {(0, 1): 2, (1, 2): 0, (2, 0): 1}
        for (i, j), k in eps.items():
            img = [nmat[r][k] for r in range(3)]
            c[i, j] = img
            c[j, i] = [-x for x in img]
    # diagonally dominant, hence invertible
    p = rational_array([[draw(unit) for _ in range(3)] for _ in range(3)])
    p = p + rational_array(np.eye(3, dtype=int) * 4)
    pinv = inverse(p)
    c2 = np.einsum("ai,bj,abm,km->ijk", p, p, c, pinv)
    return c2


@st.composite
def spd_metrics(draw):
    a = rational_array([[draw(small) for _ in range(3)] for _ in range(3)])
    return a @ a.T + rational_array(np.eye(3, dtype=int))


@st.composite
def random_manifolds(draw, with_metric=True):
    c = draw(lie_algebras())
    g = draw(spd_metrics()) if with_metric else None
    brackets = [(i + 1, j + 1, list(c[i, j])) for i in range(3) for j in range(i + 1, 3)]
    return build_manifold(brackets, metric=g, name="random")


@st.composite
def normal_structures(draw):
    """Left-invariant normal acm instances with xi = e3 and standard phi.

    [e3,e1] = p e1 + q e2, [e3,e2] = -q e1 + p e2, [e1,e2] = s e3, p s = 0.
    """
    p, q, s = draw(small), draw(small), draw(small)
    if draw(st.booleans()):
        p = Fraction(0)
    else:
        s = Fraction(0)
    brackets = [(3, 1, [p, q, 0]), (3, 2, [-q, p, 0]), (1, 2, [0, 0, s])]
    m = build_manifold(brackets, name="normal")
    from acmsoliton import make_structure
    st_ = make_structure(m, [[0, -1, 0], [1, 0, 0], [0, 0, 0]], [0, 0, 1])
    return m, st_


@st.composite
def rational_vectors(draw):
    return [draw(small) for _ in range(3)]


@st.composite
def symmetric_bilinear(draw):
    d = [draw(small) for _ in range(6)]
    return [[d[0], d[3], d[4]], [d[3], d[1], d[5]], [d[4], d[5], d[2]]]
