"""
Variational coordinate transformations: grid scale, per-axis dilations and
plane rotations.

With grid coordinates ``x`` the physical coordinates are ``u = R S^-1 x``
where ``S = diag(sigma)``.  The kinetic operator then becomes
``-sum_i sigma_i^2 / (2 m_i) d^2/dx_i^2`` (rotations leave it unchanged for
equal masses) and the potential becomes ``V(R S^-1 x)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import DomainError
from .potential import PolynomialPotential


def rotation_planes(dims):
    """Plane order used for Givens angles: (0,1), (0,2), ..., (D-2,D-1)."""
    return list(combinations(range(dims), 2))


@dataclass(frozen=True)
class TransformParams:
    """Half-width ``L``, axis dilations ``sigma`` and Givens angles.

    ``axis_scales[0]`` is 1 by convention (only the ratios matter once ``L``
    is free).  ``angles[p]`` rotates in plane ``rotation_planes(D)[p]``;
    fewer than ``D(D-1)/2`` angles means the trailing planes are unused.
    """

    half_width: float
    axis_scales: tuple = ()
    angles: tuple = field(default=())

    def __post_init__(self):
        if not (np.isfinite(self.half_width) and self.half_width > 0):
            raise DomainError(f"L must be positive, got {self.half_width}")
        scales = tuple(float(s) for s in self.axis_scales)
        if any(not (np.isfinite(s) and s > 0) for s in scales):
            raise DomainError(f"axis scales must be positive, got {scales}")
        angles = tuple(float(a) for a in self.angles)
        if not all(np.isfinite(angles)):
            raise DomainError("angles must be finite")
        object.__setattr__(self, "axis_scales", scales)
        object.__setattr__(self, "angles", angles)

    @classmethod
    def identity(cls, dims, half_width=1.0):
        return cls(half_width, (1.0,) * dims, ())

    def scales_for(self, dims):
        if not self.axis_scales:
            return np.ones(dims)
        if len(self.axis_scales) != dims:
            raise DomainError(f"expected {dims} axis scales, got {len(self.axis_scales)}")
        return np.asarray(self.axis_scales)


def givens(dims, i, j, theta):
    """Rotation by ``theta`` in the (i, j) plane: ``e_i -> cos e_i + sin e_j``."""
    G = np.eye(dims)
    c, s = np.cos(theta), np.sin(theta)
    G[i, i] = G[j, j] = c
    G[i, j] = -s
    G[j, i] = s
    return G


def rotation_matrix(angles, dims) -> np.ndarray:
    """Ordered product of Givens rotations, ``G_(0,1) G_(0,2) ... G_(D-2,D-1)``.

    For ``D = 3`` and angles ``(theta1, theta2)`` this is

        [[c1 c2, -s1, -c1 s2],
         [s1 c2,  c1, -s1 s2],
         [   s2,   0,     c2]]
    """
    planes = rotation_planes(dims)
    angles = list(angles)
    if len(angles) > len(planes):
        raise DomainError(
            f"{len(angles)} angles given but D={dims} has only {len(planes)} planes")
    R = np.eye(dims)
    for (i, j), theta in zip(planes, angles):
        R = R @ givens(dims, i, j, theta)
    return R


def kinetic_prefactors(pot: PolynomialPotential, params: TransformParams) -> np.ndarray:
    """Coefficient ``sigma_i^2 / (2 m_i)`` multiplying ``-d^2/dx_i^2``."""
    sig = params.scales_for(pot.dims)
    masses = np.asarray(pot.kinetic_masses)
    if params.angles and any(a != 0.0 for a in params.angles) and not np.allclose(masses, masses[0]):
        raise DomainError("rotations require equal masses on all axes")
    return sig**2 / (2.0 * masses)


def substitution_matrix(dims, params: TransformParams) -> np.ndarray:
    """``A = R S^-1`` so that the transformed potential is ``V(A x)``."""
    sig = params.scales_for(dims)
    return rotation_matrix(params.angles, dims) @ np.diag(1.0 / sig)


def transformed_problem(pot: PolynomialPotential, params: TransformParams):
    """Return ``(V(R S^-1 x), kinetic prefactors)``.

    The result is unitarily equivalent to the original problem on the whole
    line; on a finite grid it is not, which is what the optimizer exploits.
    """
    prefactors = kinetic_prefactors(pot, params)
    A = substitution_matrix(pot.dims, params)
    if np.array_equal(A, np.eye(pot.dims)):
        return pot, prefactors
    return pot.substitute(A), prefactors


def inverse_substitution(params: TransformParams, dims) -> np.ndarray:
    """Matrix undoing :func:`substitution_matrix` (``S R^T``)."""
    sig = params.scales_for(dims)
    return np.diag(sig) @ rotation_matrix(params.angles, dims).T
