"""Dispersive PDE model: dispersion relation, bifurcation speed and the
unreduced collision polynomial.

Convention: ``u_t + sum_m c_m * d^m u/dx^m + f(u)_x = 0`` with odd orders
``m = 3, 5, 7, ...``.  The dispersion relation is then
``omega(k) = -c3 k^3 + c5 k^5 - c7 k^7 + ...``.  The other common form
``u_t = sum C_m d^m u/dx^m + ...`` maps onto this one by ``C_m = -c_m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .exact import Number, UniPoly, format_rational, parse_rational

#: Names of the first few coefficients, by order.
PARAM_NAMES = {3: "alpha", 5: "beta", 7: "gamma"}


class SpecError(ValueError):
    """Invalid dispersion specification (or unparsable spec text)."""

    def __init__(self, message: str, column: int | None = None, text: str | None = None):
        self.column = column
        self.text = text
        if column is not None and text is not None:
            message = f"{message} at line 1, column {column}\n  {text}\n  {' ' * (column - 1)}^"
        super().__init__(message)


def param_name(order: int) -> str:
    return PARAM_NAMES.get(order, f"c{order}")


def order_of(name: str) -> int:
    """Inverse of :func:`param_name` (``alpha -> 3``, ``c9 -> 9``)."""
    for order, nm in PARAM_NAMES.items():
        if nm == name:
            return order
    if name.startswith("c") and name[1:].isdigit():
        order = int(name[1:])
        if order >= 3 and order % 2 == 1:
            return order
    raise SpecError(f"unknown parameter name {name!r}")


@dataclass(frozen=True)
class DispersionSpec:
    """Odd-order dispersive coefficients as ``((order, coeff), ...)``."""

    terms: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        terms = tuple((int(m), Fraction(c)) for m, c in self.terms)
        object.__setattr__(self, "terms", terms)
        orders = [m for m, _ in terms]
        if not terms:
            raise SpecError("dispersion spec needs at least one term")
        if any(m < 3 or m % 2 == 0 for m in orders):
            raise SpecError(f"orders must be odd and >= 3, got {orders}")
        if any(b <= a for a, b in zip(orders, orders[1:])):
            raise SpecError(f"orders must be strictly increasing, got {orders}")
        if all(c == 0 for _, c in terms):
            raise SpecError("all dispersive coefficients are zero")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Number]) -> "DispersionSpec":
        """Assign ``coeffs`` to orders 3, 5, 7, ... in sequence."""
        return cls(tuple((3 + 2 * i, Fraction(c)) for i, c in enumerate(coeffs)))

    @classmethod
    def parse(cls, text: str) -> "DispersionSpec":
        """Parse ``"alpha,beta,gamma[,...]"`` with rational entries."""
        coeffs = []
        col = 1
        for tok in text.split(","):
            if not tok.strip():
                raise SpecError("empty coefficient", col, text)
            try:
                coeffs.append(parse_rational(tok))
            except ValueError:
                lead = len(tok) - len(tok.lstrip())
                raise SpecError(f"bad rational {tok.strip()!r}", col + lead, text) from None
            col += len(tok) + 1
        return cls.from_coeffs(coeffs)

    @property
    def max_order(self) -> int:
        return max(m for m, c in self.terms if c)

    def coeff(self, order: int) -> Fraction:
        for m, c in self.terms:
            if m == order:
                return c
        return Fraction(0)

    def as_dict(self) -> dict[str, Fraction]:
        return {param_name(m): c for m, c in self.terms}

    def scaled(self, factor: Number) -> "DispersionSpec":
        return DispersionSpec(tuple((m, c * factor) for m, c in self.terms))

    def replace(self, **params: Number) -> "DispersionSpec":
        """Copy with named coefficients overridden; new orders are zero-filled."""
        values = {m: c for m, c in self.terms}
        for name, v in params.items():
            values[order_of(name)] = Fraction(v)
        top = max(values)
        return DispersionSpec(tuple((m, values.get(m, Fraction(0))) for m in range(3, top + 1, 2)))

    def format(self) -> str:
        return ",".join(format_rational(c) for _, c in self.terms)

    def __str__(self) -> str:
        return ", ".join(f"{param_name(m)}={format_rational(c)}" for m, c in self.terms)


def _alt(order: int) -> int:
    """``(-1)**(t+1)`` for ``order = 2t+1``."""
    return 1 if (order // 2) % 2 == 1 else -1


def omega(spec: DispersionSpec, k: Number) -> Fraction:
    """Dispersion relation ``omega(k) = sum (-1)**t c_{2t+1} k**(2t+1)``."""
    k = Fraction(k)
    return sum((-_alt(m) * c * k**m for m, c in spec.terms), Fraction(0))


def bifurcation_speed(spec: DispersionSpec) -> Fraction:
    """Speed at which the k=1 mode is steady; ``alpha - beta + gamma - ...``."""
    return sum((_alt(m) * c for m, c in spec.terms), Fraction(0))


@dataclass(frozen=True)
class TravellingFrame:
    """Dispersion relation seen from a frame moving at ``speed``."""

    spec: DispersionSpec
    speed: Fraction

    @classmethod
    def at_bifurcation(cls, spec: DispersionSpec) -> "TravellingFrame":
        # with the printed V0 = alpha - beta + gamma the collision polynomial is
        # -(Omega(mu+n) - Omega(mu)) for the frame speed omega(1) = -V0
        return cls(spec, omega(spec, 1))

    def Omega(self, k: Number) -> Fraction:
        return omega(self.spec, k) - Fraction(k) * self.speed

    def eigenvalue_imag(self, k: Number) -> Fraction:
        """Imaginary part of ``lambda(k) = -i Omega(k)``."""
        return -self.Omega(k)


def _binomial_difference(order: int, n: Number) -> UniPoly:
    """``(mu+n)**order - mu**order`` as a polynomial in ``mu``."""
    n = Fraction(n)
    return UniPoly(comb(order, j) * n ** (order - j) for j in range(order))


def collision_poly(spec: DispersionSpec, n: int) -> UniPoly:
    """Collision polynomial ``P(mu)`` for modes differing by ``n``.

    ``P(mu) = sum (-1)**(t+1) c_{2t+1} [(mu+n)**(2t+1) - mu**(2t+1)] - V0*n``;
    its roots are the Floquet parameters at which the two eigenvalues collide.
    """
    if n == 0:
        raise ValueError("n = 0 compares a mode with itself; the collision condition is degenerate")
    p = UniPoly.constant(-bifurcation_speed(spec) * n)
    for m, c in spec.terms:
        if c:
            p = p + _binomial_difference(m, n).scale(_alt(m) * c)
    return p


__all__ = [
    "DispersionSpec", "SpecError", "TravellingFrame", "PARAM_NAMES", "param_name", "order_of",
    "omega", "bifurcation_speed", "collision_poly",
]
