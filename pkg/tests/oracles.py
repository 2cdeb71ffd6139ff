"""Independent brute-force reference computations.

Plain nested loops over lists of Fractions; nothing here imports the
package's tensor code, so agreement with it is a genuine cross-check.
"""

from fractions import Fraction
from itertools import product

N = 3
R3 = range(N)


def bracket(c, u, v):
    return [sum(u[i] * v[j] * c[i][j][k] for i in R3 for j in R3) for k in R3]


def inner(g, u, v):
    return sum(u[i] * g[i][j] * v[j] for i in R3 for j in R3)


def mat_inverse(g):
    # adjugate / determinant, exact
    def minor(r, c):
        rows = [k for k in R3 if k != r]
        cols = [k for k in R3 if k != c]
        return g[rows[0]][cols[0]] * g[rows[1]][cols[1]] - g[rows[0]][cols[1]] * g[rows[1]][cols[0]]

    det = sum((-1) ** c * g[0][c] * minor(0, c) for c in R3)
    return [[Fraction((-1) ** (r + c) * minor(c, r)) / det for c in R3] for r in R3]


def koszul(c, g):
    """gamma[i][j][l] from 2 g(nabla_i e_j, e_k) = the three bracket terms."""
    e = [[Fraction(int(a == b)) for b in R3] for a in R3]
    ginv = mat_inverse(g)
    low = [[[Fraction(0)] * N for _ in R3] for _ in R3]
    for i, j, k in product(R3, repeat=3):
        low[i][j][k] = Fraction(1, 2) * (inner(g, bracket(c, e[i], e[j]), e[k])
                                          - inner(g, bracket(c, e[j], e[k]), e[i])
                                          + inner(g, bracket(c, e[k], e[i]), e[j]))
    return [[[sum(low[i][j][k] * ginv[k][l] for k in R3) for l in R3] for j in R3] for i in R3]


def nabla(gamma, x, y):
    return [sum(x[i] * y[j] * gamma[i][j][k] for i in R3 for j in R3) for k in R3]


def curvature(c, gamma, x, y, z):
    """R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z."""
    a = nabla(gamma, x, nabla(gamma, y, z))
    b = nabla(gamma, y, nabla(gamma, x, z))
    d = nabla(gamma, bracket(c, x, y), z)
    return [a[k] - b[k] - d[k] for k in R3]


def ricci(c, gamma, y, z):
    e = [[Fraction(int(a == b)) for b in R3] for a in R3]
    return sum(curvature(c, gamma, e[i], y, z)[i] for i in R3)


def kn_entry(a, b, x, y, z, w):
    return a[x][w] * b[y][z] + a[y][z] * b[x][w] - a[x][z] * b[y][w] - a[y][w] * b[x][z]


def contract_14(t4, ginv):
    """sum_{p,q} g^{pq} T(e_p, ., ., e_q) for a nested-list (0,4) tensor."""
    return [[sum(ginv[p][q] * t4[p][y][z][q] for p in R3 for q in R3) for z in R3] for y in R3]


def jacobi_ok(c):
    e = [[Fraction(int(a == b)) for b in R3] for a in R3]
    for i, j, k in product(R3, repeat=3):
        t1 = bracket(c, bracket(c, e[i], e[j]), e[k])
        t2 = bracket(c, bracket(c, e[j], e[k]), e[i])
        t3 = bracket(c, bracket(c, e[k], e[i]), e[j])
        if any(t1[n] + t2[n] + t3[n] != 0 for n in R3):
            return False
    return True


def as_lists(arr):
    return arr.tolist() if hasattr(arr, "tolist") else arr
