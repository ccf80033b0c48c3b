"""Exact spectral-stability classification of small-amplitude periodic
travelling waves of odd-order dispersive Hamiltonian PDEs.

The collision condition between Fourier modes differing by ``n`` is rewritten
as a polynomial ``q(s, n)`` in ``s = mu*(mu+n)``; real roots of ``q`` inside
``(-n**2/4, 0)`` are counted exactly with Sturm chains.
"""

from .exact import Rational, UniPoly, parse_rational, format_rational
from .model import DispersionSpec, TravellingFrame, omega, bifurcation_speed, collision_poly
from .reduce import ReductionTriangle, ReducedPolynomial, monomial_reduction, build_reduced, instantiate
from .sturm import SturmChain, RootEnclosure, build_chain, sign_variations, count_roots_open, isolate_and_refine
from .stability import ModeVerdict, StabilityReport, analyze_mode, analyze
from .oracle import oracle_count

__all__ = [
    "Rational", "UniPoly", "parse_rational", "format_rational",
    "DispersionSpec", "TravellingFrame", "omega", "bifurcation_speed", "collision_poly",
    "ReductionTriangle", "ReducedPolynomial", "monomial_reduction", "build_reduced", "instantiate",
    "SturmChain", "RootEnclosure", "build_chain", "sign_variations", "count_roots_open",
    "isolate_and_refine",
    "ModeVerdict", "StabilityReport", "analyze_mode", "analyze",
    "oracle_count",
]

__version__ = "0.1.0"
