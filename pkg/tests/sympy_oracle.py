"""Independent sympy construction of the generator matrices, used as a test oracle."""

import sympy as sp


def roots(n):
    return [(i, j) for j in range(2, n + 1) for i in range(j - 1, 0, -1)]


def nu(n, k, l, r):
    rs = roots(n)
    ix = {b: t for t, b in enumerate(rs)}
    N = len(rs)
    M = sp.zeros(N, N)
    m = 1 / r - r
    s = ix[(k, k + 1)]
    for c, (i, j) in enumerate(rs):
        ht = j - i
        if (i, j) == (k, k + 1):
            M[c, c] = 1 / l
        elif j == k:
            M[ix[(i, k + 1)], c] = 1
        elif i == k + 1:
            M[ix[(k, j)], c] = 1
            M[s, c] += m * r ** (ht - 1)
            M[c, c] += -m
        elif j - 1 == k:
            M[ix[(i, k)], c] = 1
            M[s, c] += m / (l * r ** (ht - 2))
            M[c, c] += -m
        elif i == k:
            M[ix[(k + 1, j)], c] = 1
        else:
            M[c, c] = r
    return M


def e(n, k, l, r):
    A = nu(n, k, l, r)
    m = 1 / r - r
    return sp.simplify((l / m) * (A * A + m * A - sp.eye(A.shape[0])))


def k_dim(n, l, r):
    """dim of the common kernel of the c_ij, with c_ij built by sympy inversion."""
    N = n * (n - 1) // 2
    blocks = []
    for i, j in roots(n):
        C = e(n, i, l, r)
        for k in range(i + 1, j):
            g = nu(n, k, l, r)
            C = g * C * g.inv()
        blocks.append(C)
    return N - sp.Matrix.vstack(*blocks).rank()


def commutant_dim(n, l, r):
    N = n * (n - 1) // 2
    X = sp.Matrix(N, N, sp.symbols(f"x0:{N * N}"))
    eqs = []
    for k in range(1, n):
        A = nu(n, k, l, r)
        eqs += list(X * A - A * X)
    J = sp.Matrix([[sp.diff(q, v) for v in X] for q in eqs])
    return N * N - J.rank()
