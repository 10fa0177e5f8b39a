"""One-call driver: optimize the grid parameters, build H, diagonalize."""

from __future__ import annotations

import time
from dataclasses import dataclass, replace

import numpy as np

from .eigensolver import EigenRequest, lowest_eigenpairs
from .hamiltonian import build
from .pms import OptimizationStrategy, Strategy, optimize_full
from .reference import distinct_levels
from .transforms import TransformParams


@dataclass
class Solution:
    n: int
    dims: int
    params: TransformParams
    eigenvalues: np.ndarray
    residual_norms: np.ndarray
    iterations: int
    seconds: float

    @property
    def grid_points(self):
        return (self.n - 1) ** self.dims


def solve(pot, n: int, k: int = 1, strategy="scale", levels: str = "all",
          params: TransformParams | None = None, request: EigenRequest | None = None) -> Solution:
    """Lowest ``k`` levels of ``pot`` on an ``(n-1)^D`` grid.

    ``levels="distinct"`` merges degenerate eigenvalues and keeps solving
    until ``k`` different energies are available.  ``params`` bypasses the
    trace minimization.
    """
    start = time.perf_counter()
    if params is None:
        kind = strategy if isinstance(strategy, Strategy) else Strategy(strategy)
        params = optimize_full(pot, n, OptimizationStrategy(kind))
    op = build(pot, params, n)
    request = request or EigenRequest(how_many=k)
    if levels == "all":
        res = lowest_eigenpairs(op, replace(request, how_many=k))
        values, resid = res.eigenvalues, res.residual_norms
    elif levels == "distinct":
        want = min(op.size, 2 * k + 2)
        while True:
            res = lowest_eigenpairs(op, replace(request, how_many=want))
            values = distinct_levels(res.eigenvalues)
            # the last value may be an incomplete multiplet, so need k + 1
            if len(values) > k or want == op.size:
                break
            want = min(op.size, 2 * want)
        idx = [int(np.argmin(np.abs(res.eigenvalues - v))) for v in values[:k]]
        values, resid = values[:k], res.residual_norms[idx]
    else:
        raise ValueError(f"levels must be 'all' or 'distinct', got {levels!r}")
    return Solution(n=n, dims=pot.dims, params=params, eigenvalues=np.asarray(values),
                    residual_norms=np.asarray(resid), iterations=res.iterations,
                    seconds=time.perf_counter() - start)
