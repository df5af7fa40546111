"""defo5: exact verification of the order-5, conductor-2 deformation
computation over finite Artinian local rings of residue characteristic 5."""

__version__ = "1.0.0"

from .artin import build_ring
from .nottingham import Automorphism, base_sigma, hasse_conductor, order
from .series import TruncatedSeries

__all__ = ["Automorphism", "TruncatedSeries", "__version__", "base_sigma",
           "build_ring", "hasse_conductor", "order"]
