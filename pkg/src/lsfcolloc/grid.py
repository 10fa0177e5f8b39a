"""
Little Sinc Functions on (-L, L) with Dirichlet boundary conditions.

An LSF ``s_k`` is built from the first ``N - 1`` particle-in-a-box
eigenfunctions and is peaked on the node ``x_k = k h``, vanishing on every
other node.  Everything here works from the finite sine expansion

    s_k(x) = (2/N) sum_{n=1}^{N-1} sin(n pi i_k / N) sin(n pi (x + L) / 2L),

with ``i_k = k + N/2``, which is identical to the closed Dirichlet-kernel
form but has no removable singularities.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DomainError, ShapeError


@dataclass(frozen=True)
class GridSpec:
    """One axis of the uniform collocation grid.

    Attributes
    ----------
    n_half_count : int
        Even integer ``N >= 4``; the grid carries ``M = N - 1`` nodes.
    half_width : float
        Half-length ``L`` of the box (-L, L).
    """

    n_half_count: int
    half_width: float

    def __post_init__(self):
        n = self.n_half_count
        if not isinstance(n, (int, np.integer)) or n < 4 or n % 2:
            raise DomainError(f"N must be an even integer >= 4, got {n!r}")
        if not np.isfinite(self.half_width) or self.half_width <= 0:
            raise DomainError(f"L must be positive, got {self.half_width!r}")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / self.n_half_count

    @property
    def node_count(self) -> int:
        return self.n_half_count - 1

    @property
    def labels(self) -> np.ndarray:
        """Symmetric node labels ``k = -N/2+1 ... N/2-1``."""
        half = self.n_half_count // 2
        return np.arange(1 - half, half)

    @cached_property
    def nodes(self) -> np.ndarray:
        return self.labels * self.spacing

    def with_half_width(self, half_width):
        return GridSpec(self.n_half_count, half_width)


@dataclass(frozen=True)
class DiffMatrices:
    """First and second derivative collocation matrices.

    ``d1[k, j] = s_k'(x_j)`` and ``d2[k, j] = s_k''(x_j)``; both are
    ``M x M`` with rows/columns in node order.  ``d2`` is symmetric and
    negative definite.  ``d1`` is not antisymmetric: the derivative of a
    box sine is a cosine, which the nodal values do not reproduce exactly
    (only ``d1[k, j] = -d1[-k, -j]`` holds, from parity).
    """

    d1: np.ndarray
    d2: np.ndarray


def _mode_numbers(n_half_count):
    return np.arange(1, n_half_count)


def _sine_table(n_half_count):
    # S[n-1, i-1] = sin(n pi i / N); symmetric in (n, i)
    n = _mode_numbers(n_half_count)
    return np.sin(np.pi * np.outer(n, n) / n_half_count)


def _check_label(grid, k):
    half = grid.n_half_count // 2
    if not (1 - half <= k <= half - 1) or int(k) != k:
        raise DomainError(f"node label {k!r} outside [{1 - half}, {half - 1}]")
    return int(k)


def _check_point(grid, x):
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) >= grid.half_width) or not np.all(np.isfinite(x)):
        raise DomainError("evaluation point outside the open interval (-L, L)")
    return x


def lsf_eval(grid: GridSpec, k: int, x):
    """Evaluate the LSF peaked on node ``k`` at ``x`` (scalar or array)."""
    k = _check_label(grid, k)
    x = _check_point(grid, x)
    N, L = grid.n_half_count, grid.half_width
    n = _mode_numbers(N)
    coeff = np.sin(n * np.pi * (k + N // 2) / N)
    phase = np.multiply.outer(x + L, n * np.pi / (2 * L))
    return (2.0 / N) * (np.sin(phase) @ coeff)


def lsf_closed_form(grid: GridSpec, k: int, x: float) -> float:
    """Dirichlet-kernel form of ``s_k``; undefined at removable singularities.

    Kept as an independent cross-check of :func:`lsf_eval`.
    """
    N, h = grid.n_half_count, grid.spacing
    chi_m = np.pi / (2 * N * h) * (x - k * h)
    chi_p = np.pi / (2 * N * h) * (x + k * h)
    return (np.sin((2 * N + 1) * chi_m) / np.sin(chi_m)
            - np.cos((2 * N + 1) * chi_p) / np.cos(chi_p)) / (2 * N)


def interpolate(grid: GridSpec, samples, x):
    """Sum of nodal samples times the LSF basis, evaluated at ``x``."""
    samples = np.asarray(samples, dtype=float)
    if samples.shape != (grid.node_count,):
        raise ShapeError(
            f"expected {grid.node_count} samples, got shape {samples.shape}")
    x = _check_point(grid, x)
    N, L = grid.n_half_count, grid.half_width
    # project samples onto box modes, then resum at x
    modes = (2.0 / N) * (_sine_table(N) @ samples)
    phase = np.multiply.outer(x + L, _mode_numbers(N) * np.pi / (2 * L))
    return np.sin(phase) @ modes


def build_diff_matrices(grid: GridSpec) -> DiffMatrices:
    N, L = grid.n_half_count, grid.half_width
    n = _mode_numbers(N)
    wave = n * np.pi / (2 * L)
    S = _sine_table(N)
    C = np.cos(np.pi * np.outer(n, n) / N)  # C[n-1, j-1] = cos(n pi j / N)
    d1 = (2.0 / N) * (S.T * wave) @ C
    d2 = -(2.0 / N) * (S.T * wave**2) @ S
    # d2 is symmetric in exact arithmetic; remove the rounding asymmetry.
    # d1 is left alone: nodal derivatives of this basis are not antisymmetric.
    d2 = 0.5 * (d2 + d2.T)
    return DiffMatrices(d1=d1, d2=d2)


def kinetic_diagonal_sum(n_half_count: int, half_width: float) -> float:
    """``sum_k -d2[k, k]``, i.e. minus the trace of the second-derivative matrix.

    The trace of the box Laplacian is basis independent, so this is just the
    sum of the box eigenvalues ``(n pi / 2L)^2`` for ``n < N``.
    """
    n = _mode_numbers(n_half_count)
    return float(np.sum((n * np.pi / (2.0 * half_width)) ** 2))
