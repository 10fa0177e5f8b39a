"""
Choice of the variational parameters by minimizing the Hamiltonian trace.

The trace is an explicit function of ``L``, the axis dilations and the
rotation angles, so it is cheap to evaluate; the minimizers below only need
function values.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, OptimizationError
from .hamiltonian import analytic_trace
from .potential import PolynomialPotential
from .transforms import TransformParams, rotation_planes

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
L_RANGE = (1e-4, 1e4)


class Strategy(enum.Enum):
    SCALE_ONLY = "scale"
    SCALE_ANISO = "aniso"
    SCALE_ANISO_ROT = "rot"


@dataclass(frozen=True)
class OptimizationStrategy:
    kind: Strategy = Strategy.SCALE_ONLY
    max_iterations: int = 20000
    tolerance: float = 1e-9
    n_angles: int | None = None
    seeds: int = 3

    def __post_init__(self):
        if self.tolerance <= 0:
            raise DomainError("tolerance must be positive")
        if not isinstance(self.kind, Strategy):
            object.__setattr__(self, "kind", Strategy(self.kind))


def golden_section(f, a, b, tol=1e-10, max_iter=500):
    """Minimize a unimodal ``f`` on ``[a, b]``; returns ``(x, f(x))``."""
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if abs(b - a) <= tol * (abs(a) + abs(b) + tol):
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN * (b - a)
            fd = f(d)
    return (c, fc) if fc < fd else (d, fd)


def nelder_mead(f, x0, step=0.1, xtol=1e-9, max_iter=20000):
    """Plain Nelder-Mead simplex search; returns ``(x, f(x), converged)``.

    Stops when the simplex diameter falls below ``xtol`` (the spread of the
    function values is not used: the trace surface can be very flat).
    """
    x0 = np.asarray(x0, dtype=float)
    dim = x0.size
    simplex = [x0]
    for i in range(dim):
        x = x0.copy()
        x[i] += step
        simplex.append(x)
    simplex = np.array(simplex)
    values = np.array([f(x) for x in simplex])
    for _ in range(max_iter):
        order = np.argsort(values, kind="stable")
        simplex, values = simplex[order], values[order]
        diameter = np.max(np.linalg.norm(simplex[1:] - simplex[0], axis=1))
        if diameter < xtol:
            return simplex[0], values[0], True
        centroid = simplex[:-1].mean(axis=0)
        worst = simplex[-1]
        xr = centroid + (centroid - worst)
        fr = f(xr)
        if fr < values[0]:
            xe = centroid + 2.0 * (centroid - worst)
            fe = f(xe)
            if fe < fr:
                simplex[-1], values[-1] = xe, fe
            else:
                simplex[-1], values[-1] = xr, fr
        elif fr < values[-2]:
            simplex[-1], values[-1] = xr, fr
        else:
            if fr < values[-1]:
                xc = centroid + 0.5 * (xr - centroid)
            else:
                xc = centroid + 0.5 * (worst - centroid)
            fc = f(xc)
            if fc < min(fr, values[-1]):
                simplex[-1], values[-1] = xc, fc
            else:
                simplex[1:] = simplex[0] + 0.5 * (simplex[1:] - simplex[0])
                values[1:] = [f(x) for x in simplex[1:]]
    i = int(np.argmin(values))
    return simplex[i], values[i], False


def scale_trace(pot: PolynomialPotential, n: int, base: TransformParams | None = None):
    """Trace as a function of ``L`` with the other parameters held fixed."""
    scales = base.axis_scales if base else ()
    angles = base.angles if base else ()

    def f(L):
        return analytic_trace(pot, TransformParams(L, scales, angles), n)

    return f


def optimize_scale(pot: PolynomialPotential, n: int, base: TransformParams | None = None,
                   tol: float = 1e-10) -> float:
    """``L`` minimizing the trace at fixed dilations/angles.

    A log-spaced scan over ``[1e-4, 1e4]`` brackets the minimum, which golden
    section then refines in ``log L``.
    """
    f = scale_trace(pot, n, base)
    logs = np.linspace(math.log(L_RANGE[0]), math.log(L_RANGE[1]), 321)
    with np.errstate(over="ignore", invalid="ignore"):
        vals = np.array([f(math.exp(t)) for t in logs])
    vals[~np.isfinite(vals)] = np.inf
    i = int(np.argmin(vals))
    if i == 0 or i == len(logs) - 1:
        raise OptimizationError(
            f"no interior trace minimum for L in {L_RANGE}",
            best=math.exp(logs[i]), value=vals[i])
    t, _ = golden_section(lambda t: f(math.exp(t)), logs[i - 1], logs[i + 1], tol=tol)
    return math.exp(t)


def _parameter_layout(dims, kind: Strategy, n_angles):
    n_scales = dims - 1 if kind in (Strategy.SCALE_ANISO, Strategy.SCALE_ANISO_ROT) else 0
    if kind is Strategy.SCALE_ANISO_ROT:
        if n_angles is None:
            n_angles = 2 if dims == 3 else len(rotation_planes(dims))
        if n_angles > len(rotation_planes(dims)):
            raise DomainError(f"D={dims} supports at most {len(rotation_planes(dims))} angles")
    else:
        n_angles = 0
    return n_scales, n_angles


def _unpack(p, dims, n_scales, n_angles):
    L = math.exp(p[0])
    scales = (1.0,) + tuple(np.exp(p[1:1 + n_scales])) if n_scales else ()
    angles = tuple(p[1 + n_scales:1 + n_scales + n_angles])
    return TransformParams(L, scales, angles)


def optimize_full(pot: PolynomialPotential, n: int,
                  strategy: OptimizationStrategy = OptimizationStrategy()) -> TransformParams:
    """Minimize the trace over the parameters allowed by ``strategy``.

    Variables are ``log L``, ``log sigma_2..D`` and the angles, so the simplex
    works on comparable scales.  Several starts are tried; the lowest trace
    wins, ties broken by smaller ``L``.
    """
    dims = pot.dims
    L0 = optimize_scale(pot, n)
    if strategy.kind is Strategy.SCALE_ONLY:
        return TransformParams(L0, (), ())
    n_scales, n_angles = _parameter_layout(dims, strategy.kind, strategy.n_angles)

    def f(p):
        try:
            return analytic_trace(pot, _unpack(p, dims, n_scales, n_angles), n)
        except (DomainError, OverflowError):
            return math.inf

    rng = np.random.default_rng(20100)
    base = np.concatenate([[math.log(L0)], np.zeros(n_scales), np.full(n_angles, 0.3)])
    starts = [base]
    for _ in range(max(strategy.seeds, 1) - 1):
        jitter = np.concatenate([rng.uniform(-0.1, 0.1, 1 + n_scales),
                                 rng.uniform(0.0, math.pi / 2, n_angles)])
        starts.append(base + jitter if not n_angles else
                      np.concatenate([base[:1 + n_scales] + jitter[:1 + n_scales],
                                      jitter[1 + n_scales:]]))
    results = []
    for x0 in starts:
        x, fx, ok = nelder_mead(f, x0, step=0.2, xtol=1e-3, max_iter=strategy.max_iterations)
        # polish from a fresh small simplex; guards against premature collapse
        x, fx, ok = nelder_mead(f, x, step=1e-2, xtol=strategy.tolerance,
                                max_iter=strategy.max_iterations)
        results.append((fx, math.exp(x[0]), x, ok))
    results.sort(key=lambda r: (r[0], r[1]))
    fx, _, x, ok = results[0]
    params = _unpack(x, dims, n_scales, n_angles)
    if not ok:
        raise OptimizationError("simplex search did not converge", best=params, value=fx)
    if n_angles:
        params = TransformParams(params.half_width, params.axis_scales,
                                 tuple(_canonical_angle(a) for a in params.angles))
    return params


def _canonical_angle(a):
    return float(math.remainder(a, 2.0 * math.pi))
