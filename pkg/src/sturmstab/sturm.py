"""Sturm chains: exact counting and isolation of distinct real roots.

Counting over an open interval ``(a, b)`` uses one-sided signs at the
endpoints (``a`` from the right, ``b`` from the left), so roots sitting exactly
on an endpoint are excluded without any perturbation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _gcd
from typing import Sequence

from .exact import (
    AT, FROM_LEFT, FROM_RIGHT, Number, UniPoly, eval_sign, poly_gcd, sign,
)


@dataclass(frozen=True)
class SturmChain:
    """``g0, g1 = g0', g_k = -rem(g_{k-2}, g_{k-1})`` up to positive factors.

    ``deflated`` records whether the input had repeated roots and was replaced
    by its squarefree part before the chain was built.
    """

    polys: tuple[UniPoly, ...]
    deflated: bool = False

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, k: int) -> UniPoly:
        return self.polys[k]

    def signs(self, x: Number, side: str = AT) -> list[int]:
        return [eval_sign(g, x, side) for g in self.polys]

    def variations(self, x: Number, side: str = AT) -> int:
        return count_variations(self.signs(x, side))


@dataclass(frozen=True)
class RootEnclosure:
    """Closed interval ``[lo, hi]`` holding exactly one distinct real root."""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


def count_variations(signs: Sequence[int]) -> int:
    """Adjacent sign alternations, zeros skipped."""
    out = 0
    last = 0
    for v in signs:
        if v:
            if last and v != last:
                out += 1
            last = v
    return out


def build_chain(p: UniPoly) -> SturmChain:
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    deflated = False
    if p.degree >= 2:
        g = poly_gcd(p, p.derivative())
        if g.degree > 0:
            p = p.divrem(g)[0].primitive()
            deflated = True
    polys = [p]
    if p.degree >= 1:
        polys.append(p.derivative())
        while polys[-1].degree > 0:
            r = polys[-2] % polys[-1]
            if r.is_zero():  # cannot happen for squarefree g0
                break
            polys.append((-r).primitive())
    return SturmChain(tuple(polys), deflated)


def sign_variations(chain: SturmChain, x: Number, side: str = AT) -> int:
    return chain.variations(x, side)


def _check_interval(a: Number, b: Number) -> None:
    if not a < b:
        raise ValueError(f"need a < b, got ({a}, {b})")


def _count(chain: SturmChain, a: Fraction, b: Fraction) -> int:
    return chain.variations(a, FROM_RIGHT) - chain.variations(b, FROM_LEFT)


def count_roots_open(p: UniPoly, a: Number, b: Number) -> int:
    """Number of distinct real roots of ``p`` strictly inside ``(a, b)``."""
    _check_interval(a, b)
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    return _count(build_chain(p), Fraction(a), Fraction(b))


def isolate_and_refine(p: UniPoly, a: Number, b: Number, tol: Number = Fraction(1, 10**9)) -> list[RootEnclosure]:
    """Disjoint enclosures, each of width ``<= tol``, one per distinct root in ``(a, b)``.

    Isolation is by recursive bisection driven by Sturm counts; each isolated
    root is then refined by bisection until the enclosure is narrow enough and
    neither end is itself a root of ``p``.
    """
    _check_interval(a, b)
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    chain = build_chain(p)
    g0 = chain[0]
    out: list[RootEnclosure] = []
    stack = [(Fraction(a), Fraction(b))]
    while stack:
        lo, hi = stack.pop()
        k = _count(chain, lo, hi)
        if k == 0:
            continue
        if k == 1:
            out.append(_refine(chain, lo, hi, tol))
            continue
        mid = (lo + hi) / 2
        if g0(mid) == 0:
            out.append(RootEnclosure(mid, mid))
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort(key=lambda e: e.lo)
    return out


def _refine(chain: SturmChain, lo: Fraction, hi: Fraction, tol: Fraction) -> RootEnclosure:
    g0 = chain[0]
    # once both ends are non-roots with opposite signs, plain sign bisection suffices
    slo, shi = sign(g0(lo)), sign(g0(hi))
    while hi - lo > tol or slo == 0 or shi == 0:
        mid = (lo + hi) / 2
        sm = sign(g0(mid))
        if sm == 0:
            return RootEnclosure(mid, mid)
        if slo and shi and slo != shi:
            if sm == slo:
                lo, slo = mid, sm
            else:
                hi, shi = mid, sm
        elif _count(chain, lo, mid) == 1:
            hi, shi = mid, sm
        else:
            lo, slo = mid, sm
    return RootEnclosure(lo, hi)


# Integer fast path ---------------------------------------------------------
# Sweeps only need counts.  Working on integer coefficient lists avoids
# Fraction overhead: remainders are pseudo-remainders scaled by a *positive*
# power of the divisor's leading coefficient, so every sign is preserved.
# Repeated roots need no deflation here: a chain that ends at gcd(p, p') still
# gives correct variation differences between one-sided endpoint limits.

def _iprem_neg(a: list[int], b: list[int]) -> list[int]:
    """``-prem(a, b)`` scaled to a primitive integer list (positive factor)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    mult = abs(lb)
    s = 1 if lb > 0 else -1
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        c = a[-1]
        # |lb| * a - s*c * x^k * b  kills the leading term
        a = [mult * x for x in a]
        for j, d in enumerate(b):
            a[k + j] -= s * c * d
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    if not a:
        return a
    g = 0
    for x in a:
        g = _gcd(g, x)
    return [-x // g for x in a]


def int_chain(p: list[int]) -> list[list[int]]:
    chain = [p]
    if len(p) > 1:
        chain.append([i * c for i, c in enumerate(p)][1:])
        while len(chain[-1]) > 1:
            r = _iprem_neg(chain[-2], chain[-1])
            if not r:
                break
            chain.append(r)
    return chain


def _isign_at(p: list[int], num: int, den: int) -> int:
    """Sign of ``p(num/den)`` for ``den > 0``."""
    deg = len(p) - 1
    acc = p[deg]
    dpow = 1
    for i in range(deg - 1, -1, -1):
        dpow *= den
        acc = acc * num + p[i] * dpow
    return (acc > 0) - (acc < 0)


def _isign_side(p: list[int], num: int, den: int, right: bool) -> int:
    k = 0
    while p:
        v = _isign_at(p, num, den)
        if v:
            return v if (right or k % 2 == 0) else -v
        p = [i * c for i, c in enumerate(p)][1:]
        k += 1
    return 0


def int_count_open(p: list[int], a: tuple[int, int], b: tuple[int, int]) -> int:
    """Distinct roots of the integer polynomial ``p`` in ``(a0/a1, b0/b1)``."""
    if not p:
        raise ValueError("root count of the zero polynomial")
    chain = int_chain(p)
    va = count_variations([_isign_side(g, a[0], a[1], True) for g in chain])
    vb = count_variations([_isign_side(g, b[0], b[1], False) for g in chain])
    return va - vb


__all__ = [
    "SturmChain", "RootEnclosure", "build_chain", "sign_variations", "count_variations",
    "count_roots_open", "isolate_and_refine", "int_chain", "int_count_open",
]
