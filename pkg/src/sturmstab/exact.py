"""Exact rational scalars and dense univariate polynomials.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  :class:`UniPoly` stores coefficients in ascending powers and is
immutable; the zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
Number = Union[int, Fraction]

AT = "at"
FROM_LEFT = "from_left"
FROM_RIGHT = "from_right"
SIDES = (AT, FROM_LEFT, FROM_RIGHT)

_RATIONAL_RE = re.compile(r"^\s*[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.\d*)\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or a finite decimal such as ``"0.25"``."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational number: {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def format_rational(x: Number) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def sign(x: Number) -> int:
    return (x > 0) - (x < 0)


class UniPoly:
    """Dense polynomial with exact rational coefficients, ascending powers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __reduce__(self):
        return (UniPoly, (self.coeffs,))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def constant(cls, c: Number) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Number = 1) -> "UniPoly":
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Number], lead: Number = 1) -> "UniPoly":
        p = cls.constant(lead)
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({self.format()!r})"

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.constant(other)
        raise TypeError(f"cannot combine UniPoly with {type(other).__name__}")

    def __add__(self, other) -> "UniPoly":
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(o.coeffs):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power")
        out = UniPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: Number) -> "UniPoly":
        c = Fraction(c)
        return UniPoly(x * c for x in self.coeffs)

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, other: "UniPoly") -> "UniPoly":
        """``self(other(x))`` by Horner's scheme."""
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def divrem(self, divisor: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = divisor.degree
        lb = divisor.lead
        if len(rem) - 1 < db:
            return UniPoly(), self
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lb
            quot[k] = c
            if c:
                for j, d in enumerate(divisor.coeffs):
                    rem[k + j] -= c * d
        return UniPoly(quot), UniPoly(rem[:db])

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return self.divrem(other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divrem(other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lead)

    def primitive(self) -> "UniPoly":
        """Scale by a *positive* rational so the coefficients become coprime
        integers.  Signs (and therefore sign sequences) are preserved."""
        if self.is_zero():
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        return UniPoly(Fraction(v // g) for v in ints)

    def format(self, var: str = "s") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    __str__ = format


def _as_poly(x) -> UniPoly:
    return UniPoly._coerce(x)


def poly_arith(op: str, a: UniPoly, b: Union[UniPoly, Number, None] = None) -> UniPoly:
    """Dispatch ``add | sub | mul | negate | scale`` on canonical operands."""
    if op == "add":
        return a + _as_poly(b)
    if op == "sub":
        return a - _as_poly(b)
    if op == "mul":
        return a * _as_poly(b)
    if op == "negate":
        return -a
    if op == "scale":
        if isinstance(b, UniPoly):
            raise TypeError("scale takes a rational factor")
        return a.scale(b)
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_derivative(p: UniPoly) -> UniPoly:
    return p.derivative()


def poly_divrem(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly]:
    return a.divrem(b)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by Euclidean remainders."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, (a % b).primitive()
    return a.monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    """``p / gcd(p, p')`` made monic: same distinct roots, all simple."""
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return UniPoly.constant(1)
    g = poly_gcd(p, p.derivative())
    q, r = p.divrem(g)
    assert r.is_zero()
    return q.monic()


def eval_sign(p: UniPoly, x: Number, side: str = AT) -> int:
    """Sign of ``p`` at ``x`` or in the one-sided limit towards ``x``.

    One-sided signs use the first derivative that does not vanish at ``x``:
    from the right it is ``sign(p^(k)(x))``, from the left ``(-1)**k`` times it.
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    if p.is_zero():
        return 0
    v = sign(p(x))
    if v or side == AT:
        return v
    q = p
    k = 0
    while True:
        q = q.derivative()
        k += 1
        v = sign(q(x))
        if v:
            return -v if (side == FROM_LEFT and k % 2) else v


__all__ = [
    "Rational", "UniPoly", "parse_rational", "format_rational", "sign",
    "poly_arith", "poly_derivative", "poly_divrem", "poly_gcd", "squarefree_part",
    "eval_sign", "AT", "FROM_LEFT", "FROM_RIGHT", "SIDES",
]
