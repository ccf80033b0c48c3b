"""Independent root-count oracle used to cross-check the Sturm machinery.

Nothing here touches Sturm chains or polynomial gcds.  Degrees up to three are
classified in closed form: the polynomial is split at its critical points
(roots of the derivative, computed exactly as quadratic surds) into monotone
pieces, and roots are read off from sign changes between piece ends.  Higher
degrees fall back to exact sign sampling on a dense rational grid.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .exact import Number, UniPoly, sign

DEFAULT_PANELS = 100_000


class Surd(NamedTuple):
    """``x + y*sqrt(d)`` with rational ``x, y`` and rational ``d >= 0``."""

    x: Fraction
    y: Fraction
    d: Fraction

    def sign(self) -> int:
        sx, sy = sign(self.x), sign(self.y) if self.d else 0
        if sy == 0:
            return sx
        if sx == 0 or sx == sy:
            return sy
        # opposite signs: compare x**2 with y**2 d
        return sx * sign(self.x * self.x - self.y * self.y * self.d)

    def __sub__(self, r: Fraction) -> "Surd":
        return Surd(self.x - r, self.y, self.d)

    def mul(self, other: "Surd") -> "Surd":
        return Surd(self.x * other.x + self.y * other.y * self.d,
                    self.x * other.y + self.y * other.x, self.d)

    def cmp(self, r: Number) -> int:
        return (self - Fraction(r)).sign()


def _eval_surd(p: UniPoly, z: Surd) -> Surd:
    acc = Surd(Fraction(0), Fraction(0), z.d)
    for c in reversed(p.coeffs):
        acc = acc.mul(z)
        acc = Surd(acc.x + c, acc.y, acc.d)
    return acc


def _deflate_at(p: UniPoly, r: Fraction) -> UniPoly:
    """Divide out every factor ``(x - r)`` by synthetic division."""
    while p.degree >= 1 and p(r) == 0:
        cs = p.coeffs
        out = [Fraction(0)] * (len(cs) - 1)
        acc = Fraction(0)
        for k in range(len(cs) - 1, 0, -1):
            acc = acc * r + cs[k]
            out[k - 1] = acc
        p = UniPoly(out)
    return p


def _critical_points(p: UniPoly) -> list[Surd]:
    """Real roots of ``p'`` for ``deg p <= 3``, ascending, as surds."""
    dp = p.derivative()
    if dp.degree <= 0:
        return []
    if dp.degree == 1:
        c0, c1 = dp.coeffs
        return [Surd(-c0 / c1, Fraction(0), Fraction(0))]
    c, b, a = dp.coeffs
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    x = -b / (2 * a)
    if disc == 0:
        return [Surd(x, Fraction(0), Fraction(0))]
    y = abs(1 / (2 * a))
    return [Surd(x, -y, disc), Surd(x, y, disc)]


def closed_form_count(p: UniPoly, a: Number, b: Number) -> int:
    """Distinct real roots of ``p`` (``deg <= 3``) strictly inside ``(a, b)``."""
    a, b = Fraction(a), Fraction(b)
    if p.degree > 3:
        raise ValueError("closed-form classification only covers degree <= 3")
    p = _deflate_at(_deflate_at(p, a), b)
    if p.degree <= 0:
        return 0
    inner = [z for z in _critical_points(p) if z.cmp(a) > 0 and z.cmp(b) < 0]
    ends = [sign(p(a))] + [_eval_surd(p, z).sign() for z in inner] + [sign(p(b))]
    count = sum(1 for v in ends[1:-1] if v == 0)
    count += sum(1 for u, v in zip(ends, ends[1:]) if u * v < 0)
    return count


def sample_count(p: UniPoly, a: Number, b: Number, panels: int = DEFAULT_PANELS) -> int:
    """Distinct roots in ``(a, b)`` seen by exact sign sampling on a uniform grid.

    Exact zeros at interior grid points count once each; a sign change between
    neighbouring nonzero samples counts as one root.  Roots closer together than
    a panel width can be missed, so this is only trustworthy for well-separated
    roots.
    """
    a, b = Fraction(a), Fraction(b)
    p = _deflate_at(_deflate_at(p, a), b)
    if p.degree <= 0:
        return 0
    ints = _integer_coeffs(p)
    deg = len(ints) - 1
    L = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    A, B = int(a * L), int(b * L)
    D = L * panels
    dpow = [D**e for e in range(deg + 1)]
    count = 0
    last = 0
    for k in range(panels + 1):
        x = A * panels + k * (B - A)
        # sign of sum c_i x**i D**(deg-i) equals the sign of p(x / D)
        acc = ints[deg]
        for i in range(deg - 1, -1, -1):
            acc = acc * x + ints[i] * dpow[deg - i]
        v = sign(acc)
        if v == 0:
            if 0 < k < panels:
                count += 1
            last = 0
            continue
        if last and v != last:
            count += 1
        last = v
    return count


def _integer_coeffs(p: UniPoly) -> list[int]:
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    return [int(c * den) for c in p.coeffs]


def oracle_count(p: UniPoly, a: Number, b: Number, panels: int = DEFAULT_PANELS) -> int:
    """Distinct real roots of ``p`` in the open interval ``(a, b)``."""
    if not a < b:
        raise ValueError(f"need a < b, got ({a}, {b})")
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    if p.degree <= 3:
        return closed_form_count(p, a, b)
    return sample_count(p, a, b, panels)


__all__ = ["oracle_count", "closed_form_count", "sample_count", "Surd", "DEFAULT_PANELS"]
