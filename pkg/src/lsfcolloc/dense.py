"""
Small direct symmetric eigensolvers.

These are the independent oracles for the iterative solver: Householder
tridiagonalization followed by implicit-shift QL for full spectra, and
cyclic Jacobi rotations for tiny matrices where eigenvectors are needed.
"""

import math

import numpy as np

from .errors import CapacityError, ConvergenceError, ShapeError

DENSE_LIMIT = 4096


def _check_symmetric(a):
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    if not np.allclose(a, a.T, rtol=0, atol=1e-12 * scale):
        raise ShapeError("matrix is not symmetric")
    return a


def householder_tridiagonal(a):
    """Reduce symmetric ``a`` to tridiagonal form; returns ``(diag, offdiag)``."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1:, k]
        alpha = np.linalg.norm(x)
        if alpha == 0.0:
            continue
        if x[0] > 0:
            alpha = -alpha
        v = x.copy()
        v[0] -= alpha
        vnorm2 = v @ v
        if vnorm2 == 0.0:
            continue
        # A <- P A P with P = I - 2 v v^T / (v^T v) on the trailing block
        sub = a[k + 1:, k + 1:]
        p = sub @ v * (2.0 / vnorm2)
        kcoef = (v @ p) / vnorm2
        q = p - kcoef * v
        sub -= np.outer(v, q) + np.outer(q, v)
        a[k + 1, k] = a[k, k + 1] = alpha
        a[k + 2:, k] = 0.0
        a[k, k + 2:] = 0.0
    d = np.diag(a).copy()
    e = np.diag(a, 1).copy() if n > 1 else np.zeros(0)
    return d, e


def tridiagonal_ql(d, e, max_sweeps=60):
    """Eigenvalues of a symmetric tridiagonal matrix by implicit-shift QL."""
    d = [float(x) for x in d]
    n = len(d)
    e = [float(x) for x in e] + [0.0]
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) + dd == dd:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > max_sweeps:
                raise ConvergenceError("QL iteration did not converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return np.sort(np.array(d))


def dense_eigen(matrix, limit=DENSE_LIMIT):
    """All eigenvalues of a symmetric matrix, ascending."""
    a = _check_symmetric(matrix)
    if a.shape[0] > limit:
        raise CapacityError(f"dense eigensolve of dimension {a.shape[0]} exceeds {limit}")
    if a.shape[0] == 0:
        return np.zeros(0)
    d, e = householder_tridiagonal(a)
    return tridiagonal_ql(d, e)


def jacobi_eigen(matrix, tol=1e-15, max_sweeps=100):
    """Cyclic Jacobi rotations; returns ``(eigenvalues, eigenvectors)`` ascending.

    Meant for the handful-of-rows matrices of the coupled-harmonic oracle.
    """
    a = _check_symmetric(matrix)
    n = a.shape[0]
    V = np.eye(n)
    for _ in range(max_sweeps):
        off = math.sqrt(sum(a[p, q] ** 2 for p in range(n) for q in range(n) if p != q))
        if off <= tol * max(1.0, np.linalg.norm(a)):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * a[p, q])
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                J = np.eye(n)
                J[p, p] = J[q, q] = c
                J[p, q] = s
                J[q, p] = -s
                a = J.T @ a @ J
                V = V @ J
    else:
        raise ConvergenceError("Jacobi sweeps did not converge")
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]
