"""Exact genus expansion of the 2nu-valent one-matrix model recurrence."""

from .combinatorics import c_nu, d_coeff_symmetric, d_coeff_walks
from .config import EngineConfig
from .energy import kappa, solve_eg
from .errors import FitError, ResonanceError, StructuralError, VanishingLemmaError
from .hierarchy import solve_zg, two_legged_count
from .painleve import pi_alpha, tg, top_pole_sequence

__version__ = "0.1.0"

__all__ = [
    "EngineConfig", "FitError", "ResonanceError", "StructuralError", "VanishingLemmaError",
    "c_nu", "d_coeff_symmetric", "d_coeff_walks", "kappa", "pi_alpha", "solve_eg",
    "solve_zg", "tg", "top_pole_sequence", "two_legged_count",
]
