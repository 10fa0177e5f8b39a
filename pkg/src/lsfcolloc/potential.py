"""
Polynomial potentials in D coordinates.

A potential is a mapping ``exponents -> coefficient``.  Linear substitutions
``x -> A x`` are carried out exactly on the coefficients, so a rotated or
rescaled potential is again a :class:`PolynomialPotential`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import DomainError, ParseError, ShapeError

MAX_DEGREE = 6


@dataclass(frozen=True)
class Monomial:
    coefficient: float
    exponents: tuple

    @property
    def degree(self):
        return sum(self.exponents)


@dataclass(frozen=True)
class PolynomialPotential:
    """Sum of monomials plus the per-axis kinetic masses.

    Build with :meth:`from_terms` rather than the raw constructor; it
    merges duplicate exponent vectors and drops zero coefficients.
    """

    dims: int
    terms: tuple
    kinetic_masses: tuple = field(default=None)
    max_degree: int = MAX_DEGREE

    def __post_init__(self):
        if self.dims < 1:
            raise DomainError("dims must be >= 1")
        masses = self.kinetic_masses
        if masses is None:
            masses = (1.0,) * self.dims
        masses = tuple(float(m) for m in masses)
        if len(masses) != self.dims or any(m <= 0 for m in masses):
            raise DomainError("need one positive mass per axis")
        object.__setattr__(self, "kinetic_masses", masses)
        for t in self.terms:
            if len(t.exponents) != self.dims:
                raise ShapeError(
                    f"monomial {t.exponents} does not have {self.dims} exponents")
            if any(e < 0 for e in t.exponents):
                raise DomainError(f"negative exponent in {t.exponents}")
            if t.degree > self.max_degree:
                raise DomainError(
                    f"degree {t.degree} exceeds maximum {self.max_degree}")

    @classmethod
    def from_terms(cls, dims, terms, kinetic_masses=None, max_degree=MAX_DEGREE):
        """``terms`` is an iterable of ``(coeff, exponents)`` or a dict."""
        if isinstance(terms, dict):
            terms = [(c, e) for e, c in terms.items()]
        acc = defaultdict(float)
        for coeff, exps in terms:
            acc[tuple(int(e) for e in exps)] += float(coeff)
        monos = tuple(Monomial(c, e) for e, c in sorted(acc.items()) if c != 0.0)
        return cls(dims, monos, kinetic_masses, max_degree)

    def as_dict(self):
        return {t.exponents: t.coefficient for t in self.terms}

    @property
    def degree(self):
        return max((t.degree for t in self.terms), default=0)

    def __call__(self, points):
        return evaluate(self, points)

    def substitute(self, matrix) -> "PolynomialPotential":
        """Return ``W(y) = V(A y)`` for a ``D x D`` matrix ``A``."""
        A = np.asarray(matrix, dtype=float)
        if A.shape != (self.dims, self.dims):
            raise ShapeError(f"substitution matrix must be {self.dims}x{self.dims}")
        # (A y)_j as a linear polynomial
        linear = [{_unit(self.dims, m): A[j, m] for m in range(self.dims) if A[j, m] != 0.0}
                  for j in range(self.dims)]
        powers = [[{(0,) * self.dims: 1.0}] for _ in range(self.dims)]
        out = defaultdict(float)
        for t in self.terms:
            prod = {(0,) * self.dims: t.coefficient}
            for j, e in enumerate(t.exponents):
                while len(powers[j]) <= e:
                    powers[j].append(_poly_mul(powers[j][-1], linear[j]))
                if e:
                    prod = _poly_mul(prod, powers[j][e])
            for k, v in prod.items():
                out[k] += v
        return PolynomialPotential.from_terms(
            self.dims, out, self.kinetic_masses, self.max_degree)

    def permuted(self, perm) -> "PolynomialPotential":
        """Relabel axes so that new axis ``i`` is old axis ``perm[i]``."""
        terms = [(t.coefficient, tuple(t.exponents[p] for p in perm)) for t in self.terms]
        masses = tuple(self.kinetic_masses[p] for p in perm)
        return PolynomialPotential.from_terms(self.dims, terms, masses, self.max_degree)

    def to_text(self) -> str:
        lines = [f"{t.coefficient!r} " + " ".join(map(str, t.exponents)) for t in self.terms]
        return "\n".join(lines) + "\n"


def _unit(dims, m):
    e = [0] * dims
    e[m] = 1
    return tuple(e)


def _poly_mul(p, q):
    out = defaultdict(float)
    for ea, ca in p.items():
        for eb, cb in q.items():
            out[tuple(a + b for a, b in zip(ea, eb))] += ca * cb
    return dict(out)


def evaluate(pot: PolynomialPotential, points):
    """Evaluate at one point (length D) or at an ``(n, D)`` array of points."""
    pts = np.asarray(points, dtype=float)
    single = pts.ndim == 1
    pts = np.atleast_2d(pts)
    if pts.shape[-1] != pot.dims:
        raise ShapeError(f"points have {pts.shape[-1]} coordinates, potential has {pot.dims}")
    total = np.zeros(pts.shape[0])
    for t in pot.terms:
        val = np.full(pts.shape[0], t.coefficient)
        for m, e in enumerate(t.exponents):
            if e:
                val = val * pts[:, m] ** e
        total += val
    return float(total[0]) if single else total


def grid_values(pot: PolynomialPotential, nodes):
    """V on the tensor grid ``nodes x ... x nodes``, flattened in C order."""
    nodes = np.asarray(nodes, dtype=float)
    mesh = np.meshgrid(*([nodes] * pot.dims), indexing="ij")
    pts = np.stack([g.ravel() for g in mesh], axis=1)
    return evaluate(pot, pts)


def grid_sum(pot: PolynomialPotential, nodes) -> float:
    """Sum of V over the tensor grid, via 1-D power sums (no grid is formed)."""
    nodes = np.asarray(nodes, dtype=float)
    cache = {}

    def power_sum(e):
        if e not in cache:
            cache[e] = float(np.sum(nodes**e))
        return cache[e]

    total = 0.0
    for t in pot.terms:
        prod = t.coefficient
        for e in t.exponents:
            prod *= power_sum(e)
        total += prod
    return total


# --- built-in models --------------------------------------------------------

def make_coupled_harmonic(dims: int, coupling=None) -> PolynomialPotential:
    """``1/2 sum x_i^2 + 1/2 sum_ij v_ij x_i x_j``."""
    v = np.zeros((dims, dims)) if coupling is None else np.asarray(coupling, dtype=float)
    if v.shape != (dims, dims):
        raise ShapeError(f"coupling must be {dims}x{dims}")
    if not np.allclose(v, v.T, rtol=0, atol=1e-14):
        raise DomainError("coupling matrix must be symmetric")
    terms = []
    for i in range(dims):
        e = [0] * dims
        e[i] = 2
        terms.append((0.5 + 0.5 * v[i, i], e))
    for i, j in combinations(range(dims), 2):
        e = [0] * dims
        e[i] = e[j] = 1
        terms.append((v[i, j], e))  # 1/2 (v_ij + v_ji)
    return PolynomialPotential.from_terms(dims, terms)


def make_pullen_edmonds(kappa: float = 1.0) -> PolynomialPotential:
    return PolynomialPotential.from_terms(
        2, [(0.5, (2, 0)), (0.5, (0, 2)), (kappa, (2, 2))])


def make_pe_radial_effective(kappa: float = 1.0) -> PolynomialPotential:
    """Angular average of Pullen-Edmonds: ``r^2/2 + kappa r^4 / 8``."""
    q = kappa / 8.0
    return PolynomialPotential.from_terms(
        2, [(0.5, (2, 0)), (0.5, (0, 2)), (q, (4, 0)), (2 * q, (2, 2)), (q, (0, 4))])


def make_quartic_pair(lam: float = 1.0, c40=1.0, c04=1.0, c22=2.0) -> PolynomialPotential:
    return PolynomialPotential.from_terms(
        2, [(0.5, (2, 0)), (0.5, (0, 2)),
            (lam * c40, (4, 0)), (lam * c04, (0, 4)), (lam * c22, (2, 2))])


WITWIT_COEFFS = {"xx": 1 / 2, "yy": 1 / 3, "zz": 1 / 6, "xy": 1 / 2, "xz": 1 / 2, "yz": 1 / 4}


def make_witwit_quartic(lam: float = 1e6, a=None) -> PolynomialPotential:
    a = dict(WITWIT_COEFFS if a is None else a)
    return PolynomialPotential.from_terms(3, [
        (0.5, (2, 0, 0)), (0.5, (0, 2, 0)), (0.5, (0, 0, 2)),
        (lam * a["xx"], (4, 0, 0)), (lam * a["yy"], (0, 4, 0)), (lam * a["zz"], (0, 0, 4)),
        (2 * lam * a["xy"], (2, 2, 0)), (2 * lam * a["xz"], (2, 0, 2)),
        (2 * lam * a["yz"], (0, 2, 2)),
    ])


def make_sextic(dims: int = 3) -> PolynomialPotential:
    """``1/2 sum x^2 + 2 sum x^4 + 1/2 sum x^6 + sum_{i<j} x_i x_j``."""
    if dims not in (3, 4):
        raise DomainError("the sextic model is defined for 3 or 4 coordinates")
    terms = []
    for i in range(dims):
        for p, c in ((2, 0.5), (4, 2.0), (6, 0.5)):
            e = [0] * dims
            e[i] = p
            terms.append((c, e))
    for i, j in combinations(range(dims), 2):
        e = [0] * dims
        e[i] = e[j] = 1
        terms.append((1.0, e))
    return PolynomialPotential.from_terms(dims, terms)


def _table_one_coupling(dims=4):
    return (np.ones((dims, dims)) - np.eye(dims)) / 3.0


BUILTINS = {
    # name: (constructor taking the model parameter, default parameter)
    "harmonic1d": (lambda p: make_coupled_harmonic(1), None),
    "harmonic2d": (lambda p: make_coupled_harmonic(2), None),
    "harmonic3d": (lambda p: make_coupled_harmonic(3), None),
    "harmonic4d": (lambda p: make_coupled_harmonic(4, _table_one_coupling(4)), None),
    "pe": (make_pullen_edmonds, 1.0),
    "pe_radial": (make_pe_radial_effective, 1.0),
    "quartic_pair": (make_quartic_pair, 1.0),
    "witwit": (make_witwit_quartic, 1e6),
    "sextic3d": (lambda p: make_sextic(3), None),
    "sextic4d": (lambda p: make_sextic(4), None),
}


def builtin(name: str, param: float | None = None) -> PolynomialPotential:
    try:
        ctor, default = BUILTINS[name]
    except KeyError:
        raise DomainError(
            f"unknown model {name!r}; known: {', '.join(sorted(BUILTINS))}") from None
    return ctor(default if param is None else param)


def builtin_default_param(name: str):
    return BUILTINS[name][1]


# --- text format ------------------------------------------------------------

def parse_potential_text(text: str) -> PolynomialPotential:
    """One monomial per line: ``coeff e1 e2 ... eD``; ``#`` starts a comment."""
    terms = []
    dims = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) < 2:
            raise ParseError("expected a coefficient and at least one exponent", lineno)
        try:
            coeff = float(fields[0])
        except ValueError:
            raise ParseError(f"bad coefficient {fields[0]!r}", lineno) from None
        try:
            exps = tuple(int(f) for f in fields[1:])
        except ValueError:
            raise ParseError("exponents must be integers", lineno) from None
        if any(e < 0 for e in exps):
            raise ParseError("exponents must be non-negative", lineno)
        if dims is None:
            dims = len(exps)
        elif len(exps) != dims:
            raise ParseError(
                f"{len(exps)} exponents but earlier lines have {dims}", lineno)
        terms.append((coeff, exps))
    if not terms:
        raise ParseError("potential file contains no terms")
    try:
        return PolynomialPotential.from_terms(dims, terms)
    except (DomainError, ShapeError) as exc:
        raise ParseError(str(exc)) from None


def parse_potential_file(path) -> PolynomialPotential:
    with open(path, encoding="utf-8") as fh:
        return parse_potential_text(fh.read())

