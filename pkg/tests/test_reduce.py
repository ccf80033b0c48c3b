from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from helpers import binomial_difference, reduced_expansion
from sturmstab.exact import UniPoly
from sturmstab.model import DispersionSpec, collision_poly
from sturmstab.reduce import build_reduced, instantiate, monomial_reduction, reduction_triangle

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=10)
specs = st.lists(rationals, min_size=1, max_size=4).filter(any).map(DispersionSpec.from_coeffs)
SPEC = DispersionSpec.from_coeffs([1, F(1, 4), 0])
n = UniPoly.monomial(1)


class TestTriangle:
    @pytest.mark.parametrize("N, leaders", [(1, [1]), (3, [1, 3]), (5, [1, 5, 5]), (7, [1, 7, 14, 7])])
    def test_leaders(self, N, leaders):
        assert monomial_reduction(N) == leaders

    @pytest.mark.parametrize("N", range(1, 22, 2))
    def test_identity_by_bivariate_expansion(self, N):
        assert reduced_expansion(N, monomial_reduction(N)) == binomial_difference(N)

    def test_first_row_is_binomial(self):
        tri = reduction_triangle(7)
        assert tri.rows[0] == (1, 7, 21, 35, 35, 21, 7)

    @pytest.mark.parametrize("N", [0, -3, 4])
    def test_bad_order(self, N):
        with pytest.raises(ValueError):
            monomial_reduction(N)

    def test_format_marks_leaders(self):
        text = reduction_triangle(7).format()
        for a in ("(1)", "(7)", "(14)"):
            assert a in text


class TestBuildReduced:
    def test_s3_coefficient(self):
        assert build_reduced(DispersionSpec.from_coeffs([1, 1, 1])).coeff(3) == UniPoly.constant(-7)

    def test_constant_term(self):
        assert build_reduced(SPEC).coeff(0) == n ** 4 * F(1, 4) - n ** 2 + F(3, 4)

    @given(specs)
    def test_q_zero_at_bifurcation(self, spec):
        assert build_reduced(spec)(0, 1) == 0

    @given(specs, rationals)
    def test_even_in_n(self, spec, m):
        q = build_reduced(spec)
        assert q.at_n(m) == q.at_n(-m)

    @given(specs, rationals, rationals.filter(bool))
    def test_assembly(self, spec, mu, m):
        q = build_reduced(spec)
        assert m * -q(mu * (mu + m), m) == collision_poly(spec, m)(mu)

    @given(specs)
    def test_degree_halved(self, spec):
        assert build_reduced(spec).degree_s == (spec.max_order - 1) // 2

    def test_degree_drops_without_gamma(self):
        assert build_reduced(SPEC).degree_s == 2
        assert build_reduced(DispersionSpec.from_coeffs([1, 0, 1])).degree_s == 3

    def test_formats(self):
        q = build_reduced(SPEC)
        assert q.format() == "(5/4)*s^2 + (5/4*n^2 - 3)*s + (1/4*n^4 - n^2 + 3/4)"
        assert "[V0]" in q.format_grouped()


class TestInstantiate:
    @pytest.mark.parametrize("m, coeffs", [
        (1, [0, F(-7, 4), F(5, 4)]),
        (2, [F(3, 4), 2, F(5, 4)]),
        (3, [12, F(33, 4), F(5, 4)]),
        (4, [F(195, 4), 17, F(5, 4)]),
    ])
    def test_worked_instances(self, m, coeffs):
        assert instantiate(build_reduced(SPEC), m) == UniPoly(coeffs)

    @pytest.mark.parametrize("m", [0, -1, F(1, 2)])
    def test_rejects(self, m):
        with pytest.raises(ValueError):
            instantiate(build_reduced(SPEC), m)

    @given(specs, st.integers(1, 40))
    def test_integer_rows_are_positive_multiple(self, spec, m):
        q = build_reduced(spec)
        p = instantiate(q, m)
        ints = q.int_at_n(m)
        ratio = {F(a) / b for a, b in zip(ints, p.coeffs) if b}
        assert len(ratio) <= 1 and all(r > 0 for r in ratio)
        assert [bool(a) for a in ints] == [bool(b) for b in p.coeffs] + [False] * (len(ints) - len(p.coeffs))


@pytest.mark.parametrize("N", range(3, 22, 2))
def test_matches_closed_recursion(N):
    from functools import lru_cache
    from math import comb

    @lru_cache(None)
    def a(i, j):
        if i == 0 and 2 <= j <= N:
            return comb(N, j)
        if 1 <= i <= (N - 1) // 2 and 1 <= j <= N - 2 * i:
            return a(i - 1, j + 1) - a(i, j + 1)
        return 0

    assert [a(i, N - 2 * i) for i in range((N + 1) // 2)] == monomial_reduction(N)
