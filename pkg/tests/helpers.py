"""Independent oracles shared by the test modules.

Nothing here imports the package's reduction or Sturm code.
"""

from collections import defaultdict
from fractions import Fraction
from math import comb
import random


def bmul(a, b):
    """Product of bivariate polynomials stored as ``{(i, j): c}`` for ``mu**i n**j``."""
    out = defaultdict(int)
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            out[i1 + i2, j1 + j2] += c1 * c2
    return {k: v for k, v in out.items() if v}


def bpow(a, k):
    out = {(0, 0): 1}
    for _ in range(k):
        out = bmul(out, a)
    return out


def badd(*terms):
    out = defaultdict(int)
    for t in terms:
        for k, v in t.items():
            out[k] += v
    return {k: v for k, v in out.items() if v}


def binomial_difference(N):
    """``(mu+n)**N - mu**N`` by the binomial theorem."""
    return {(N - j, j): comb(N, j) for j in range(1, N + 1)}


def reduced_expansion(N, coeffs):
    """``sum a_i (mu**2 + mu n)**i n**(N-2i)`` expanded in ``(mu, n)``."""
    s = {(2, 0): 1, (1, 1): 1}
    return badd(*[
        bmul({(0, N - 2 * i): a}, bpow(s, i)) for i, a in enumerate(coeffs)
    ])


def random_rational(rng: random.Random, bound=3, max_den=12) -> Fraction:
    q = rng.randint(1, max_den)
    return Fraction(rng.randint(-bound * q, bound * q), q)


def random_coeffs(rng: random.Random, k=3, bound=3, max_den=12):
    while True:
        cs = [random_rational(rng, bound, max_den) for _ in range(k)]
        if any(cs):
            return cs


def surd_sign(x, y, d):
    """Exact sign of ``x + y*sqrt(d)`` for rational ``x, y`` and ``d >= 0``."""
    sx = (x > 0) - (x < 0)
    sy = (y > 0) - (y < 0) if d else 0
    if sy == 0:
        return sx
    if sx == 0 or sx == sy:
        return sy
    t = x * x - y * y * d
    return sx * ((t > 0) - (t < 0))


def surd_in(lo, hi, x, y, d):
    """Whether ``lo <= x + y*sqrt(d) <= hi``."""
    return surd_sign(x - lo, y, d) >= 0 and surd_sign(x - hi, y, d) <= 0
