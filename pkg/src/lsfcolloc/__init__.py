"""Variational Little-Sinc-Function collocation for coupled anharmonic oscillators."""

from .eigensolver import EigenRequest, EigenResult, lowest_eigenpairs
from .grid import DiffMatrices, GridSpec, build_diff_matrices, interpolate, lsf_eval
from .hamiltonian import HamiltonianOperator, analytic_trace, build, dense_assemble
from .pms import OptimizationStrategy, Strategy, optimize_full, optimize_scale
from .potential import PolynomialPotential, builtin, parse_potential_file
from .reference import exact_harmonic_levels, reference_values
from .solver import solve
from .transforms import TransformParams, rotation_matrix, transformed_problem

__version__ = "0.1.0"
