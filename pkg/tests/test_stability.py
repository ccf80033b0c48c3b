import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from helpers import surd_in
from sturmstab.model import DispersionSpec, SpecError, collision_poly
from sturmstab.reduce import build_reduced
from sturmstab.stability import (
    ResonantDegeneracyError, analyze, analyze_instance, analyze_mode, floquet_pair, sqrt_bounds, unstable_modes,
)
from sturmstab.exact import UniPoly
from sturmstab.sturm import RootEnclosure

SPEC = DispersionSpec.from_coeffs([1, F(1, 4), 0])
TOL = F(1, 10**9)
rationals = st.fractions(min_value=-3, max_value=3, max_denominator=10)
specs = st.lists(rationals, min_size=3, max_size=3).filter(any).map(DispersionSpec.from_coeffs)


class TestAnalyzeMode:
    def test_n2(self):
        v = analyze_mode(SPEC, 2, TOL)
        assert v.root_count == 1 and v.unstable
        (e,) = v.enclosures
        assert F(-3, 5) in e
        (fp,) = v.floquet_pairs
        # mu = -1 -+ sqrt(2/5) = -1 -+ sqrt(10)/5
        assert surd_in(*fp.minus, F(-1), F(-1, 5), 10)
        assert surd_in(*fp.plus, F(-1), F(1, 5), 10)
        lo, hi = fp.midpoints()
        assert abs(float(lo) + 1.6325) < 1e-4 and abs(float(hi) + 0.3675) < 1e-4

    @pytest.mark.parametrize("n", [1, 4])
    def test_stable_modes(self, n):
        v = analyze_mode(SPEC, n, TOL)
        assert v.root_count == 0 and v.enclosures == () and not v.unstable

    def test_n_zero(self):
        with pytest.raises(ValueError):
            analyze_mode(SPEC, 0, TOL)

    def test_identically_resonant(self):
        with pytest.raises(ResonantDegeneracyError):
            analyze_instance(UniPoly(), 3)

    @given(specs, st.integers(1, 12))
    @settings(max_examples=80, deadline=None)
    def test_verdict_invariants(self, spec, n):
        v = analyze_mode(spec, n, F(1, 10**6))
        assert v.root_count == len(v.enclosures) == len(v.floquet_pairs)
        for e, fp in zip(v.enclosures, v.floquet_pairs):
            assert F(-n * n, 4) < e.lo <= e.hi < 0
            m_lo, m_hi = fp.midpoints()
            assert m_lo + m_hi == -n
            assert -n < fp.minus[0] and fp.plus[1] < 0
            # s = mu+ (mu+ + n) = -mu+ mu-
            assert abs(m_lo * m_hi + e.mid) <= F(n, 10**5)

    @given(specs, st.integers(1, 8))
    @settings(max_examples=30, deadline=None)
    def test_floquet_residual_shrinks(self, spec, n):
        p = collision_poly(spec, n)
        res = []
        for tol in (F(1, 10**3), F(1, 10**9)):
            for fp in analyze_mode(spec, n, tol).floquet_pairs:
                res.append(max(abs(p(m)) for m in fp.midpoints()))
        if res:
            half = len(res) // 2
            assert all(b <= a + F(1, 10**6) for a, b in zip(res[:half], res[half:]))
            assert all(b < F(1, 10**4) * (1 + abs(n) ** 7) for b in res[half:])


class TestSqrt:
    @pytest.mark.parametrize("r", [F(2), F(2, 5), F(9, 4), F(0), F(10**6 + 1)])
    def test_bounds(self, r):
        lo, hi = sqrt_bounds(r, TOL)
        assert lo * lo <= r <= hi * hi and hi - lo <= TOL

    def test_negative(self):
        with pytest.raises(ValueError):
            sqrt_bounds(F(-1), TOL)

    def test_pair_exact_root(self):
        fp = floquet_pair(RootEnclosure(F(-1), F(-1)), 4, TOL)
        # s = -1, n = 4: mu = -2 -+ sqrt(3)
        assert surd_in(*fp.plus, F(-2), F(1), 3)


class TestAnalyze:
    def test_worked_example(self):
        rep = analyze(SPEC, 4, TOL)
        assert [v.root_count for v in rep.verdicts] == [0, 1, 1, 0]
        assert rep.unstable_n == (2, 3) and rep.overall == "possibly-unstable"
        assert rep.v0 == F(3, 4)

    def test_stable_family(self):
        rep = analyze(DispersionSpec.from_coeffs([1, 0, 1]), 50, TOL)
        assert rep.stable and rep.overall == "stable"
        assert [v.n for v in rep.verdicts] == list(range(1, 51))

    def test_all_zero_spec(self):
        with pytest.raises(SpecError):
            analyze(DispersionSpec.from_coeffs([0, 0, 0]), 5)

    def test_bad_n_max(self):
        with pytest.raises(ValueError):
            analyze(SPEC, 0)

    def test_json(self):
        d = json.loads(analyze(SPEC, 4, TOL).to_json())
        assert d["format"] == 1 and d["overall"] == "possibly-unstable" and d["unstableN"] == [2, 3]
        assert d["spec"] == {"alpha": "1", "beta": "1/4", "gamma": "0"} and d["v0"] == "3/4"
        v2 = d["verdicts"][1]
        assert v2["rootCount"] == 1 and len(v2["roots"]) == 1 and len(v2["mu"]) == 1
        assert v2["signsAtA"] == [-1, -1, 1] and v2["signsAtB"] == [1, 1, 1]
        lo, hi = (F(x) for x in v2["roots"][0])
        assert lo <= F(-3, 5) <= hi

    def test_parallel_matches_serial(self):
        spec = DispersionSpec.from_coeffs([0, 1, F(1, 2)])
        assert analyze(spec, 12, workers=2).to_dict() == analyze(spec, 12).to_dict()

    @given(specs, st.fractions(min_value=F(1, 10), max_value=10, max_denominator=10))
    @settings(max_examples=40, deadline=None)
    def test_positive_scaling_invariance(self, spec, c):
        a, b = analyze(spec, 10, F(1, 10**4)), analyze(spec.scaled(c), 10, F(1, 10**4))
        assert [v.root_count for v in a.verdicts] == [v.root_count for v in b.verdicts]

    @given(specs)
    @settings(max_examples=60, deadline=None)
    def test_fast_path_agrees(self, spec):
        rep = analyze(spec, 15, F(1, 10**3))
        assert tuple(unstable_modes(spec, 15)) == rep.unstable_n

    def test_fast_path_degenerate(self):
        class Zero:
            def int_at_n(self, n):
                return []
        with pytest.raises(ResonantDegeneracyError):
            unstable_modes(SPEC, 3, q=Zero())


class TestAlphaZeroLine:
    """alpha=0, beta=1: q(s, 1) = s (1+s) (5 - 7 gamma (1+s)), so n=1 is unstable
    exactly for 5/7 < gamma < 20/21, apart from the band where n >= 2 is unstable."""

    def test_factorisation(self):
        g = F(3, 4)
        s = UniPoly.monomial(1)
        q1 = build_reduced(DispersionSpec.from_coeffs([0, 1, g])).at_n(1)
        assert q1 == s * (1 + s) * (5 - 7 * g * (1 + s))

    @pytest.mark.parametrize("g, unstable", [
        (F(5, 7), False), (F(5, 7) + F(1, 10**6), True), (F(20, 21) - F(1, 10**6), True), (F(20, 21), False),
        (F(6, 10), False),
    ])
    def test_n1_window(self, g, unstable):
        assert (1 in unstable_modes(DispersionSpec.from_coeffs([0, 1, g]), 50)) == unstable

    def test_gap_between_windows(self):
        assert unstable_modes(DispersionSpec.from_coeffs([0, 1, F(6, 10)]), 50) == []
        assert unstable_modes(DispersionSpec.from_coeffs([0, 1, F(4, 10)]), 50) == [2]
