from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from helpers import surd_in
from sturmstab.exact import FROM_LEFT, FROM_RIGHT, AT, UniPoly, sign
from sturmstab.sturm import (
    build_chain, count_roots_open, count_variations, int_count_open, isolate_and_refine, sign_variations,
)

s = UniPoly.monomial(1)
P2 = UniPoly([F(3, 4), 2, F(5, 4)])          # n=2 instance of the worked example
P3 = UniPoly([12, F(33, 4), F(5, 4)])        # n=3
P4 = UniPoly([F(195, 4), 17, F(5, 4)])       # n=4
P1 = UniPoly([0, F(-7, 4), F(5, 4)])         # n=1

small = st.fractions(min_value=-6, max_value=6, max_denominator=6)


class TestChain:
    def test_worked_chain(self):
        ch = build_chain(P2)
        assert len(ch) == 3
        assert ch[0] == P2 and ch[1] == UniPoly([2, F(5, 2)])
        assert ch[2].degree == 0 and ch[2].lead > 0
        assert not ch.deflated

    def test_linear(self):
        assert list(build_chain(s)) == [s, UniPoly.constant(1)]

    def test_constant(self):
        assert list(build_chain(UniPoly.constant(-3))) == [UniPoly.constant(-3)]

    def test_zero(self):
        with pytest.raises(ValueError):
            build_chain(UniPoly())

    def test_repeated_roots_deflated(self):
        ch = build_chain(UniPoly.from_roots([2, 2, -3]))
        assert ch.deflated
        assert ch[0].degree == 2

    @given(st.lists(small, min_size=1, max_size=7).map(UniPoly).filter(lambda p: p.degree >= 1))
    def test_terms_match_negated_remainders_up_to_positive_factor(self, p):
        ch = build_chain(p)
        for k in range(2, len(ch)):
            r = -(ch[k - 2] % ch[k - 1])
            ratio = {a / b for a, b in zip(r.coeffs, ch[k].coeffs) if b}
            assert r.degree == ch[k].degree and len(ratio) == 1 and ratio.pop() > 0
        assert ch[-1].degree == 0


class TestVariations:
    def test_skip_zeros(self):
        assert count_variations([1, 0, -1, 0, 0, 1]) == 2
        assert count_variations([0, 0]) == 0

    def test_table_n1_at_zero(self):
        ch = build_chain(P1)
        assert ch.signs(0, FROM_LEFT) == [1, -1, 1]
        assert sign_variations(ch, 0, FROM_LEFT) == 2

    def test_table_n2_at_left_end(self):
        ch = build_chain(P2)
        assert ch.signs(-1, FROM_RIGHT) == [-1, -1, 1]
        assert sign_variations(ch, -1, FROM_RIGHT) == 1

    def test_constant_chain(self):
        assert sign_variations(build_chain(UniPoly.constant(5)), 7, AT) == 0


class TestCount:
    @pytest.mark.parametrize("p, a, b, expected", [
        (P2, -1, 0, 1), (P3, F(-9, 4), 0, 1), (P4, -4, 0, 0), (s * s + 1, -10, 10, 0), (P1, F(-1, 4), 0, 0),
    ])
    def test_examples(self, p, a, b, expected):
        assert count_roots_open(p, a, b) == expected

    def test_bad_interval(self):
        with pytest.raises(ValueError):
            count_roots_open(P2, 0, 0)
        with pytest.raises(ValueError):
            count_roots_open(UniPoly(), 0, 1)

    @given(st.lists(small, min_size=1, max_size=6, unique=True), small, small,
           st.fractions(min_value=-5, max_value=5).filter(bool))
    def test_planted_roots(self, roots, a, b, lead):
        if a >= b:
            a, b = b, a
        if a == b:
            return
        p = UniPoly.from_roots(roots, lead=lead)
        assert count_roots_open(p, a, b) == sum(1 for r in roots if a < r < b)

    @given(st.lists(st.integers(-4, 4), min_size=1, max_size=6), st.integers(-5, 5), st.integers(1, 5),
           st.integers(1, 5))
    def test_repeated_roots_counted_once(self, roots, a, w1, w2):
        p = UniPoly.from_roots(roots)
        b = a + w1 + w2
        assert count_roots_open(p, a, b) == len({r for r in roots if a < r < b})

    @given(st.lists(small, min_size=1, max_size=7).map(UniPoly).filter(lambda p: not p.is_zero()),
           small, small, small)
    def test_additivity(self, p, a, c, b):
        a, c, b = sorted((a, c, b))
        if not a < c < b:
            return
        assert count_roots_open(p, a, b) == (
            count_roots_open(p, a, c) + count_roots_open(p, c, b) + (p(c) == 0)
        )


class TestIntegerPath:
    @given(st.lists(st.integers(-50, 50), min_size=1, max_size=7).filter(any), small, small)
    @settings(max_examples=200)
    def test_agrees_with_rational_chain(self, coeffs, a, b):
        if a >= b:
            a, b = b, a
        if a == b:
            return
        got = int_count_open(coeffs, (a.numerator, a.denominator), (b.numerator, b.denominator))
        assert got == count_roots_open(UniPoly(coeffs), a, b)


class TestIsolate:
    def test_n2(self):
        (e,) = isolate_and_refine(P2, -1, 0, F(1, 10**9))
        assert F(-3, 5) in e and e.width <= F(1, 10**9)

    def test_n3(self):
        (e,) = isolate_and_refine(P3, F(-9, 4), 0, F(1, 10**9))
        assert surd_in(e.lo, e.hi, F(-33, 10), F(1, 10), 129)
        assert e.width <= F(1, 10**9)

    def test_none(self):
        assert isolate_and_refine(s * s + 1, -10, 10) == []

    def test_bad_tol(self):
        with pytest.raises(ValueError):
            isolate_and_refine(P2, -1, 0, 0)

    @given(st.lists(small, min_size=1, max_size=6, unique=True), st.fractions(min_value=-3, max_value=3).filter(bool))
    @settings(max_examples=60)
    def test_enclosures_hold_planted_roots(self, roots, lead):
        p = UniPoly.from_roots(roots, lead=lead)
        tol = F(1, 10**6)
        encs = isolate_and_refine(p, -7, 7, tol)
        assert len(encs) == len(roots)
        for e, r in zip(encs, sorted(roots)):
            assert r in e and e.width <= tol
        for e1, e2 in zip(encs, encs[1:]):
            assert e1.hi < e2.lo

    @given(st.integers(2, 30), st.integers(1, 4))
    @settings(max_examples=40)
    def test_irrational_roots(self, d, k):
        # s^2 - d/k^2 has roots +-sqrt(d)/k
        p = s * s - F(d, k * k)
        encs = isolate_and_refine(p, -6, 6, F(1, 10**9))
        for e, sg in zip(encs, (-1, 1)):
            assert surd_in(e.lo, e.hi, 0, F(sg, k), d)
