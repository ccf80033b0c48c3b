"""Order reduction of the collision polynomial in ``s = mu*(mu+n)``.

``(mu+n)**N - mu**N`` (``N`` odd) is a polynomial in ``s`` and ``n``; its
coefficients come out of a triangular difference scheme seeded with a row of
binomial coefficients.  Summing over the dispersive terms gives the reduced
polynomial ``q(s, n)`` whose real roots in ``(-n**2/4, 0)`` flag possible
high-frequency instability.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Optional

from .exact import Number, UniPoly, format_rational
from .model import DispersionSpec, _alt, bifurcation_speed, param_name


@dataclass(frozen=True)
class ReductionTriangle:
    """Difference table for ``(mu+n)**N - mu**N``.

    ``rows[i][c]`` holds ``a_{i,j}`` for column ``c``, where column ``c``
    corresponds to the power ``j = N - c`` of ``n`` (columns run ``n**N`` down to
    ``n**1``).  Cells outside a row are ``None``; the explicit zero seed of each
    row ``i >= 1`` is kept so the table prints like the hand construction.
    """

    N: int
    rows: tuple[tuple[Optional[int], ...], ...]

    def entry(self, i: int, j: int) -> int:
        v = self.rows[i][self.N - j]
        return 0 if v is None else v

    def leaders(self) -> list[int]:
        """First nonzero entry of each row: the coefficient of ``s**i n**(N-2i)``."""
        return [self.entry(i, self.N - 2 * i) for i in range(len(self.rows))]

    def format(self) -> str:
        width = max(len(str(v)) for row in self.rows for v in row if v is not None) + 3
        width = max(width, len(f"n^{self.N}") + 2)
        head = "".join(f"n^{self.N - c}".rjust(width) for c in range(self.N)) + "   "
        lines = [head, "-" * len(head)]
        for i, row in enumerate(self.rows):
            lead_col = 2 * i
            cells = []
            for c, v in enumerate(row):
                if v is None:
                    cells.append(" " * width)
                elif c == lead_col:
                    cells.append(f"({v})".rjust(width))
                else:
                    cells.append(str(v).rjust(width))
            lines.append("".join(cells) + f"   s^{i}")
        return "\n".join(lines)


@lru_cache(maxsize=None)
def reduction_triangle(N: int) -> ReductionTriangle:
    if N < 1 or N % 2 == 0:
        raise ValueError(f"reduction needs an odd positive order, got {N}")
    row0 = tuple(comb(N, N - c) for c in range(N))
    rows = [row0]
    for i in range(1, (N - 1) // 2 + 1):
        prev = rows[-1]
        row: list[Optional[int]] = [None] * N
        seed = 2 * i - 1  # column of n^(N-2i+1)
        row[seed] = 0
        for c in range(seed + 1, N):
            row[c] = prev[c - 1] - row[c - 1]
        rows.append(tuple(row))
    return ReductionTriangle(N, tuple(rows))


def monomial_reduction(N: int) -> list[int]:
    """``[a_0, ..., a_{(N-1)/2}]`` with ``(mu+n)**N - mu**N = sum a_i s**i n**(N-2i)``."""
    return reduction_triangle(N).leaders()


class ReducedPolynomial:
    """``q(s, n)`` stored as ``s_coeffs[i]``: a :class:`UniPoly` in ``n``.

    The overall sign is ``q = -P(mu)/n``, with ``P`` the collision polynomial, so
    that for the three-term spec ``q = -gamma(n^6+7n^4 s+14n^2 s^2+7s^3)
    + beta(n^4+5n^2 s+5s^2) - alpha(n^2+3s) + alpha - beta + gamma``.
    """

    __slots__ = ("spec", "s_coeffs", "_int_rows")

    def __init__(self, spec: DispersionSpec, s_coeffs: tuple[UniPoly, ...]):
        self.spec = spec
        self.s_coeffs = s_coeffs
        self._int_rows = None

    @property
    def degree_s(self) -> int:
        return len(self.s_coeffs) - 1

    def coeff(self, i: int) -> UniPoly:
        return self.s_coeffs[i] if i < len(self.s_coeffs) else UniPoly()

    def integer_rows(self) -> tuple[tuple[int, ...], ...]:
        """``s_coeffs`` times one common positive denominator, as integer lists."""
        if self._int_rows is None:
            den = 1
            for c in self.s_coeffs:
                for x in c.coeffs:
                    den = den * x.denominator // gcd(den, x.denominator)
            self._int_rows = tuple(tuple(int(x * den) for x in c.coeffs) for c in self.s_coeffs)
        return self._int_rows

    def int_at_n(self, n: int) -> list[int]:
        """Positive multiple of ``q(s, n)`` as an integer coefficient list in ``s``."""
        out = []
        for row in self.integer_rows():
            acc = 0
            for c in reversed(row):
                acc = acc * n + c
            out.append(acc)
        while out and out[-1] == 0:
            out.pop()
        return out

    def at_n(self, n: Number) -> UniPoly:
        """Substitute any rational ``n`` (negative values allowed)."""
        n = Fraction(n)
        return UniPoly(c(n) for c in self.s_coeffs)

    def __call__(self, s: Number, n: Number) -> Fraction:
        return self.at_n(n)(s)

    def __eq__(self, other) -> bool:
        return isinstance(other, ReducedPolynomial) and self.s_coeffs == other.s_coeffs

    def __repr__(self) -> str:
        return f"ReducedPolynomial({self.format()!r})"

    def format(self) -> str:
        """Expanded form, highest power of ``s`` first."""
        parts = []
        for i in range(len(self.s_coeffs) - 1, -1, -1):
            c = self.s_coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("s" if i == 1 else f"s^{i}")
            body = c.format("n")
            if i == 0:
                parts.append(f"({body})" if len(c.coeffs) > 1 and c.degree > 0 else body)
            else:
                parts.append(f"({body})*{mono}")
        return " + ".join(parts) if parts else "0"

    def format_grouped(self) -> str:
        """Grouped by dispersive term, e.g. ``-gamma*(n^6 + 7*n^4*s + ...) + ...``."""
        out = []
        for m, c in self.spec.terms:
            if not c:
                continue
            a = monomial_reduction(m)
            inner = []
            for i, ai in enumerate(a):
                pw = m - 1 - 2 * i
                fac = [] if ai == 1 else [str(ai)]
                if pw:
                    fac.append("n" if pw == 1 else f"n^{pw}")
                if i:
                    fac.append("s" if i == 1 else f"s^{i}")
                inner.append("*".join(fac) or "1")
            coef = -_alt(m) * c
            mag = "" if abs(coef) == 1 else format_rational(abs(coef)) + "*"
            out.append(f"{'-' if coef < 0 else '+'} {mag}({' + '.join(inner)})"
                       f"   [{param_name(m)}={format_rational(c)}]")
        v0 = bifurcation_speed(self.spec)
        out.append(("-" if v0 < 0 else "+") + f" {format_rational(abs(v0))}   [V0]")
        text = "\n".join(out)
        return text[2:] if text.startswith("+ ") else text


def build_reduced(spec: DispersionSpec) -> ReducedPolynomial:
    """Assemble ``q(s, n)`` from the reduction triangles of every term."""
    deg = (spec.max_order - 1) // 2
    acc: list[list[Fraction]] = [[Fraction(0)] * (spec.max_order) for _ in range(deg + 1)]
    for m, c in spec.terms:
        if not c:
            continue
        w = -_alt(m) * c
        for i, ai in enumerate(monomial_reduction(m)):
            acc[i][m - 1 - 2 * i] += w * ai
    acc[0][0] += bifurcation_speed(spec)
    return ReducedPolynomial(spec, tuple(UniPoly(row) for row in acc))


def instantiate(q: ReducedPolynomial, n: int) -> UniPoly:
    """``q(s, n)`` for a concrete mode difference ``n >= 1``, as a polynomial in ``s``."""
    if n < 1 or int(n) != n:
        raise ValueError(f"mode difference must be a positive integer, got {n}")
    return q.at_n(n)


__all__ = [
    "ReductionTriangle", "ReducedPolynomial", "reduction_triangle", "monomial_reduction",
    "build_reduced", "instantiate",
]
