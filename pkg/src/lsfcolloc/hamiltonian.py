"""
Discretized Hamiltonian on the D-dimensional LSF grid.

The matrix is a Kronecker sum of 1-D kinetic matrices plus a diagonal
potential; only the ``M x M`` kinetic blocks and the ``M**D`` potential
values are stored.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import potential as _pot
from .errors import CapacityError, ShapeError
from .grid import DiffMatrices, GridSpec, build_diff_matrices, kinetic_diagonal_sum
from .transforms import TransformParams, transformed_problem

MAX_POINTS = 10_000_000
DENSE_LIMIT = 4096


@dataclass(frozen=True)
class HamiltonianOperator:
    dims: int
    grid: GridSpec
    diff: DiffMatrices
    kinetic_prefactors: np.ndarray
    potential_diagonal: np.ndarray

    @property
    def size(self) -> int:
        return self.grid.node_count ** self.dims

    @property
    def shape(self):
        return (self.size, self.size)

    def kinetic_block(self, axis):
        """``-prefactor_axis * d2``, the 1-D kinetic matrix on one axis."""
        return -self.kinetic_prefactors[axis] * self.diff.d2

    def apply(self, v):
        return apply(self, v)

    def __matmul__(self, v):
        return apply(self, v)


def build(pot: _pot.PolynomialPotential, params: TransformParams, n: int,
          max_points: int = MAX_POINTS) -> HamiltonianOperator:
    grid = GridSpec(n, params.half_width)
    size = grid.node_count ** pot.dims
    if size > max_points:
        raise CapacityError(f"{grid.node_count}^{pot.dims} = {size} points exceeds {max_points}")
    tpot, prefactors = transformed_problem(pot, params)
    return HamiltonianOperator(
        dims=pot.dims,
        grid=grid,
        diff=build_diff_matrices(grid),
        kinetic_prefactors=np.asarray(prefactors, dtype=float),
        potential_diagonal=_pot.grid_values(tpot, grid.nodes),
    )


def apply(op: HamiltonianOperator, v):
    """``H v`` for a vector of length ``M**D`` or a block of shape ``(M**D, b)``."""
    v = np.asarray(v, dtype=float)
    if v.shape[0] != op.size or v.ndim > 2:
        raise ShapeError(f"expected leading dimension {op.size}, got shape {v.shape}")
    M, D = op.grid.node_count, op.dims
    cols = 1 if v.ndim == 1 else v.shape[1]
    out = op.potential_diagonal.reshape((-1,) + (1,) * (v.ndim - 1)) * v
    for axis in range(D):
        # view as (M^axis, M, M^(D-axis-1) * cols) and contract the middle index
        x = v.reshape(M**axis, M, M ** (D - axis - 1) * cols)
        out += (op.kinetic_block(axis) @ x).reshape(v.shape)
    return out


def dense_assemble(op: HamiltonianOperator, limit: int = DENSE_LIMIT) -> np.ndarray:
    """Explicit matrix: sum of ``I x .. x T_i x .. x I`` plus ``diag(V)``."""
    if op.size > limit:
        raise CapacityError(f"dense assembly of {op.size} points exceeds {limit}")
    M = op.grid.node_count
    H = np.diag(op.potential_diagonal).astype(float)
    for axis in range(op.dims):
        left = np.eye(M**axis)
        right = np.eye(M ** (op.dims - axis - 1))
        H += np.kron(np.kron(left, op.kinetic_block(axis)), right)
    return H


def trace(op: HamiltonianOperator) -> float:
    """Trace from the stored operator: Kronecker-sum diagonal plus potential sum."""
    kin, pot = trace_parts(op)
    return kin + pot


def trace_parts(op: HamiltonianOperator):
    M, D = op.grid.node_count, op.dims
    diag_sum = float(np.sum(-np.diag(op.diff.d2)))
    kinetic = M ** (D - 1) * float(np.sum(op.kinetic_prefactors)) * diag_sum
    return kinetic, float(np.sum(op.potential_diagonal))


def analytic_trace_parts(pot: _pot.PolynomialPotential, params: TransformParams, n: int):
    """(kinetic, potential) parts of the trace without building any matrix.

    The potential part uses 1-D power sums of the nodes, so the cost is
    independent of ``M**D``.
    """
    grid = GridSpec(n, params.half_width)
    tpot, prefactors = transformed_problem(pot, params)
    M, D = grid.node_count, pot.dims
    kinetic = M ** (D - 1) * float(np.sum(prefactors)) * kinetic_diagonal_sum(n, params.half_width)
    return kinetic, _pot.grid_sum(tpot, grid.nodes)


def analytic_trace(pot, params, n) -> float:
    kin, p = analytic_trace_parts(pot, params, n)
    return kin + p
