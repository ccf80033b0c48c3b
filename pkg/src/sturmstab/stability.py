"""Per-mode and overall stability verdicts.

For each mode difference ``n`` the reduced polynomial ``q(s, n)`` is counted
on ``I = (-n**2/4, 0)``.  A root there means two colliding eigenvalues of
opposite signature with a real Floquet parameter: the necessary conditions for
a high-frequency instability hold.  No roots for every ``n <= n_max`` means the
wave is spectrally stable to these perturbations up to ``n_max``.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional

from .exact import FROM_LEFT, FROM_RIGHT, Number, UniPoly, format_rational
from .model import DispersionSpec, bifurcation_speed
from .reduce import ReducedPolynomial, build_reduced, instantiate
from .sturm import (
    RootEnclosure, SturmChain, _count, build_chain, count_variations, int_count_open, isolate_and_refine,
)

DEFAULT_TOL = Fraction(1, 10**9)
DEFAULT_N_MAX = 100
FORMAT_VERSION = 1


class ResonantDegeneracyError(ValueError):
    """``q(s, n)`` vanishes identically: every ``s`` is a collision."""


@dataclass(frozen=True)
class FloquetPair:
    """Enclosures of the two Floquet parameters ``mu-`` and ``mu+`` for one root ``s``."""

    minus: tuple[Fraction, Fraction]
    plus: tuple[Fraction, Fraction]

    def midpoints(self) -> tuple[Fraction, Fraction]:
        return (sum(self.minus) / 2, sum(self.plus) / 2)


@dataclass(frozen=True)
class ModeVerdict:
    n: int
    interval: tuple[Fraction, Fraction]
    root_count: int
    enclosures: tuple[RootEnclosure, ...]
    floquet_pairs: tuple[FloquetPair, ...]
    chain: SturmChain
    signs_at_a: tuple[int, ...]
    signs_at_b: tuple[int, ...]

    @property
    def unstable(self) -> bool:
        return self.root_count > 0

    @property
    def variations(self) -> tuple[int, int]:
        return count_variations(self.signs_at_a), count_variations(self.signs_at_b)

    def to_dict(self) -> dict:
        fr = format_rational
        return {
            "n": self.n,
            "rootCount": self.root_count,
            "roots": [[fr(e.lo), fr(e.hi)] for e in self.enclosures],
            "mu": [[[fr(x) for x in fp.minus], [fr(x) for x in fp.plus]] for fp in self.floquet_pairs],
            "signsAtA": list(self.signs_at_a),
            "signsAtB": list(self.signs_at_b),
        }


@dataclass(frozen=True)
class StabilityReport:
    spec: DispersionSpec
    v0: Fraction
    n_max: int
    verdicts: tuple[ModeVerdict, ...]
    unstable_n: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "unstable_n", tuple(v.n for v in self.verdicts if v.root_count))

    @property
    def stable(self) -> bool:
        return not self.unstable_n

    @property
    def overall(self) -> str:
        return "stable" if self.stable else "possibly-unstable"

    def to_dict(self) -> dict:
        return {
            "format": FORMAT_VERSION,
            "spec": {k: format_rational(v) for k, v in self.spec.as_dict().items()},
            "v0": format_rational(self.v0),
            "nMax": self.n_max,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "overall": self.overall,
            "unstableN": list(self.unstable_n),
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def sqrt_bounds(r: Fraction, tol: Fraction) -> tuple[Fraction, Fraction]:
    """Rational ``lo <= sqrt(r) <= hi`` with ``hi - lo <= tol``."""
    if r < 0:
        raise ValueError("square root of a negative number")
    P, Q = r.numerator, r.denominator
    S = 1
    while Fraction(1, Q * S) > tol:
        S *= 2
    root = isqrt(P * Q * S * S)
    lo = Fraction(root, Q * S)
    hi = lo if root * root == P * Q * S * S else Fraction(root + 1, Q * S)
    return lo, hi


def floquet_pair(enc: RootEnclosure, n: int, tol: Fraction = DEFAULT_TOL) -> FloquetPair:
    """``mu = (-n -/+ sqrt(n**2 + 4 s)) / 2`` over the enclosure of ``s``.

    ``mu+`` increases with ``s``; ``mu-`` is ``-n - mu+`` exactly, so the
    midpoints always sum to ``-n``.
    """
    lo, _ = sqrt_bounds(n * n + 4 * enc.lo, tol)
    _, hi = sqrt_bounds(n * n + 4 * enc.hi, tol)
    plus = ((-n + lo) / 2, (-n + hi) / 2)
    minus = (-n - plus[1], -n - plus[0])
    return FloquetPair(minus, plus)


def analyze_instance(p: UniPoly, n: int, tol: Fraction = DEFAULT_TOL) -> ModeVerdict:
    """Count/isolate roots of an already instantiated ``q(s, n)`` on ``(-n^2/4, 0)``."""
    if p.is_zero():
        raise ResonantDegeneracyError(f"identically resonant spec: q(s, {n}) vanishes for every s")
    a, b = Fraction(-n * n, 4), Fraction(0)
    chain = build_chain(p)
    count = _count(chain, a, b)
    encs = tuple(isolate_and_refine(p, a, b, tol)) if count else ()
    assert len(encs) == count
    return ModeVerdict(
        n=n,
        interval=(a, b),
        root_count=count,
        enclosures=encs,
        floquet_pairs=tuple(floquet_pair(e, n, tol) for e in encs),
        chain=chain,
        signs_at_a=tuple(chain.signs(a, FROM_RIGHT)),
        signs_at_b=tuple(chain.signs(b, FROM_LEFT)),
    )


def analyze_mode(spec: DispersionSpec, n: int, tol: Number = DEFAULT_TOL,
                 q: Optional[ReducedPolynomial] = None) -> ModeVerdict:
    if q is None:
        q = build_reduced(spec)
    return analyze_instance(instantiate(q, n), n, Fraction(tol))


def _mode_job(args):
    q, n, tol = args
    return analyze_instance(instantiate(q, n), n, tol)


def analyze(spec: DispersionSpec, n_max: int = DEFAULT_N_MAX, tol: Number = DEFAULT_TOL,
            workers: int = 1) -> StabilityReport:
    """Verdicts for ``n = 1 .. n_max``; ``workers > 1`` spreads modes over processes."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    tol = Fraction(tol)
    q = build_reduced(spec)
    jobs = [(q, n, tol) for n in range(1, n_max + 1)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            verdicts = list(pool.map(_mode_job, jobs, chunksize=8))
    else:
        verdicts = [_mode_job(j) for j in jobs]
    return StabilityReport(spec, bifurcation_speed(spec), n_max, tuple(verdicts))


def unstable_modes(spec: DispersionSpec, n_max: int, q: Optional[ReducedPolynomial] = None) -> list[int]:
    """Mode differences ``n <= n_max`` with a root of ``q`` in ``I``; counts only.

    Runs on integer coefficients, which is what makes parameter sweeps cheap.
    """
    if q is None:
        q = build_reduced(spec)
    out = []
    for n in range(1, n_max + 1):
        p = q.int_at_n(n)
        if not p:
            raise ResonantDegeneracyError(f"identically resonant spec: q(s, {n}) vanishes for every s")
        if int_count_open(p, (-n * n, 4), (0, 1)):
            out.append(n)
    return out


__all__ = [
    "ModeVerdict", "StabilityReport", "FloquetPair", "ResonantDegeneracyError",
    "analyze_mode", "analyze", "analyze_instance", "unstable_modes", "floquet_pair",
    "sqrt_bounds", "DEFAULT_TOL", "DEFAULT_N_MAX",
]
