"""
Lowest eigenpairs of a symmetric operator given only its action on vectors.

Block Lanczos with full reorthogonalization and thick restart.  A start
block of several vectors (default 4) lets degenerate levels show up with
their full multiplicity, which single-vector Krylov spaces cannot do in
exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dense import dense_eigen
from .errors import ConvergenceError, DomainError, ShapeError

DEFAULT_SEED = 0x5EED


@dataclass(frozen=True)
class EigenRequest:
    how_many: int = 1
    residual_tolerance: float = 1e-10
    max_basis: int | None = None
    block_size: int = 4
    seed: int = DEFAULT_SEED
    max_iterations: int = 5000
    guard: int = 2
    want_vectors: bool = False

    def __post_init__(self):
        if self.how_many < 1:
            raise DomainError("how_many must be >= 1")
        if self.residual_tolerance <= 0:
            raise DomainError("residual tolerance must be positive")
        if self.block_size < 1:
            raise DomainError("block size must be >= 1")


@dataclass
class EigenResult:
    eigenvalues: np.ndarray
    residual_norms: np.ndarray
    iterations: int
    eigenvectors: np.ndarray | None = None


def _as_matvec(op):
    if hasattr(op, "apply") and hasattr(op, "size"):
        return op.apply, op.size
    if callable(op):
        raise ShapeError("a bare callable needs a size; wrap it in an object with .apply/.size")
    a = np.asarray(op, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {a.shape}")
    return (lambda v: a @ v), a.shape[0]


def _orthonormalize_block(W, Q, rng, drop_tol, room):
    """Gram-Schmidt the columns of ``W`` against ``Q`` and each other.

    Returns ``(Wq, R)`` with ``W - Q Q^T W = Wq R`` and at most ``room`` new
    columns.  Columns that vanish are replaced by random directions
    orthogonal to everything so far, with a zero row in ``R``.
    """
    n, width = W.shape
    cols = []
    R = np.zeros((min(width, room), width))
    for j in range(width):
        w = W[:, j].copy()
        for i, q in enumerate(cols):
            c = q @ w
            R[i, j] += c
            w -= c * q
        if len(cols) == room:
            continue
        nrm = np.linalg.norm(w)
        if nrm > drop_tol:
            R[len(cols), j] = nrm
            cols.append(w / nrm)
            continue
        basis = np.hstack([Q] + [c[:, None] for c in cols])
        for _ in range(3):
            w = rng.standard_normal(n)
            for _ in range(2):
                w -= basis @ (basis.T @ w)
            nrm = np.linalg.norm(w)
            if nrm > 1e-8:
                break
        else:
            raise ConvergenceError("could not extend the Krylov basis")
        cols.append(w / nrm)
    return np.stack(cols, axis=1), R[:len(cols)]


def lowest_eigenpairs(op, req: EigenRequest = EigenRequest()) -> EigenResult:
    """Smallest ``req.how_many`` eigenvalues of a symmetric operator.

    ``op`` is a :class:`~lsfcolloc.hamiltonian.HamiltonianOperator` (or any
    object with ``apply`` and ``size``) or a dense symmetric array.
    """
    matvec, n = _as_matvec(op)
    k = req.how_many
    if k > n:
        raise DomainError(f"asked for {k} eigenvalues of a {n}-dimensional operator")
    nwant = min(n, k + req.guard)
    b = min(req.block_size, n)
    m_max = req.max_basis or max(2 * (nwant + 2 * b), 30 * b)
    m_max = min(n, max(m_max, nwant + 2 * b))
    rng = np.random.default_rng(req.seed)

    Q = np.empty((n, m_max + b))
    H = np.zeros((m_max + b, m_max + b))
    Q0, _ = np.linalg.qr(rng.standard_normal((n, b)))
    Q[:, :b] = Q0
    cur, m = 0, b
    anorm = 0.0
    theta = res = None
    for it in range(1, req.max_iterations + 1):
        blk = Q[:, cur:m]
        W = np.asarray(matvec(blk), dtype=float).reshape(n, m - cur)
        basis = Q[:, :m]
        C = basis.T @ W
        W -= basis @ C
        C2 = basis.T @ W
        W -= basis @ C2
        C += C2
        H[:m, cur:m] = C
        H[cur:m, :m] = C.T
        anorm = max(anorm, float(np.max(np.abs(C))))

        theta, Y = np.linalg.eigh(H[:m, :m])
        if m == n:
            # Krylov space is the whole space: Ritz pairs are exact
            res = np.zeros(m)
            R = np.zeros((m - cur, m - cur))
            Wq = np.zeros((n, m - cur))
        else:
            Wq, R = _orthonormalize_block(W, basis, rng, drop_tol=1e-12 * max(anorm, 1.0),
                                          room=min(b, n - m))
            res = np.linalg.norm(R @ Y[cur:m, :], axis=0)
        nconv_check = min(nwant, m)
        tol = req.residual_tolerance * np.maximum(1.0, np.abs(theta[:nconv_check]))
        if m >= nwant and np.all(res[:nconv_check] <= tol):
            break
        bb = Wq.shape[1]
        if m + bb > m_max:
            keep = min(m - bb, max(nwant + bb, m_max // 2))
            X = basis @ Y[:, :keep]
            Q[:, :keep] = X
            H[:] = 0.0
            H[np.arange(keep), np.arange(keep)] = theta[:keep]
            Q[:, keep:keep + bb] = Wq[:, :bb]
            cur, m = keep, keep + bb
        else:
            Q[:, m:m + bb] = Wq[:, :bb]
            cur, m = m, m + bb
    else:
        raise ConvergenceError(
            f"Lanczos did not converge in {req.max_iterations} block steps",
            ritz_values=None if theta is None else theta[:k].copy(),
            residuals=None if res is None else res[:k].copy(),
            iterations=req.max_iterations,
        )

    X = Q[:, :m] @ Y[:, :k]
    AX = np.asarray(matvec(X), dtype=float).reshape(n, k)
    true_res = np.linalg.norm(AX - X * theta[:k], axis=0)
    return EigenResult(
        eigenvalues=theta[:k].copy(),
        residual_norms=true_res,
        iterations=it,
        eigenvectors=X if req.want_vectors else None,
    )


def dense_lowest(op, k: int) -> np.ndarray:
    """Oracle: the ``k`` smallest eigenvalues from a full dense solve."""
    from .hamiltonian import HamiltonianOperator, dense_assemble

    a = dense_assemble(op) if isinstance(op, HamiltonianOperator) else np.asarray(op)
    return dense_eigen(a)[:k]
