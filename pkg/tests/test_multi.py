from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qetude.multi import (MPoly, NQ_VARS, RationalFunc, interpolate_in_N,
                          eval_rational_at_qn, rational_agrees_at_qn,
                          rational_equal, trial_divide_numerator)
from qetude.poly import QPoly

N = MPoly.var(NQ_VARS, "N")
q = MPoly.var(NQ_VARS, "q")
one = MPoly.one(NQ_VARS)

fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
exps = st.tuples(st.integers(0, 4), st.integers(0, 4))
npolys = st.builds(lambda t: MPoly(NQ_VARS, t),
                   st.dictionaries(exps, fractions, max_size=4))


class TestMPoly:
    @settings(max_examples=60, deadline=None)
    @given(npolys, npolys, npolys)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a

    @settings(max_examples=40, deadline=None)
    @given(npolys, npolys)
    def test_exact_division_inverts_multiplication(self, a, b):
        if b.is_zero():
            return
        assert (a * b).exact_div(b) == a

    def test_try_exact_div_detects_inexact(self):
        assert (N + one).try_exact_div(N - q) is None
        assert (N * N - q * q).try_exact_div(N - q) == N + q

    def test_eval_qpower(self):
        p = (N - q) * (N + one)
        got = p.eval_qpower("N", 3)
        expected = (QPoly.term(3) - QPoly.gen()) * (QPoly.term(3) + 1)
        assert got == expected

    def test_json_roundtrip(self):
        p = (N - q**2) * (N + 3)
        assert MPoly.from_json(p.to_json()) == p


class TestRationalEqual:
    def test_identical_after_cross_multiplication(self):
        a = RationalFunc(N - q, q - q**2)
        b = RationalFunc(N - q, q * (one - q))
        assert rational_equal(a, b)

    def test_one_vs_quotient_of_equal_polys(self):
        assert rational_equal(RationalFunc(one), RationalFunc(one - q, one - q))

    def test_distinct_functions_differ(self):
        a = RationalFunc(N - q, q * (one - q))
        b = RationalFunc(N - q**2, q * (one - q))
        assert not rational_equal(a, b)

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RationalFunc(one, MPoly.zero(NQ_VARS))


class TestInterpolation:
    def test_degree_one_coefficient_fit(self):
        pts = [(QPoly.term(2), -QPoly.one()), (QPoly.term(3), QPoly({0: -1, 1: -1}))]
        r = interpolate_in_N(pts, 1)
        assert rational_equal(r, RationalFunc(N - q, q * (one - q)))

    def test_constant_fit(self):
        r = interpolate_in_N([(QPoly.gen(), QPoly({0: 5}))], 0)
        assert rational_equal(r, RationalFunc(MPoly.const(NQ_VARS, 5)))

    def test_degree_two_fit_matches_display(self):
        pts = [
            (QPoly.term(4), QPoly({2: 1})),
            (QPoly.term(5), QPoly({2: 1, 3: 1, 4: 1})),
            (QPoly.term(6), QPoly({2: 1, 3: 1, 4: 2, 5: 1, 6: 1})),
        ]
        r = interpolate_in_N(pts, 2)
        expected = RationalFunc((N - q**2) * (N - q**3),
                                q**3 * (one + q) * (one - q) ** 2)
        assert rational_equal(r, expected)

    def test_nodes_reproduced_exactly(self):
        pts = [
            (QPoly.term(4), QPoly({2: 1})),
            (QPoly.term(5), QPoly({2: 1, 3: 1, 4: 1})),
            (QPoly.term(6), QPoly({2: 1, 3: 1, 4: 2, 5: 1, 6: 1})),
        ]
        r = interpolate_in_N(pts, 2)
        for n, (_, value) in zip([4, 5, 6], pts):
            assert rational_agrees_at_qn(r, n, value)
            assert eval_rational_at_qn(r, n) == value

    def test_duplicate_nodes_rejected(self):
        pts = [(QPoly.gen(), QPoly.one()), (QPoly.gen(), QPoly.one())]
        with pytest.raises(ValueError):
            interpolate_in_N(pts, 1)

    def test_too_few_points_rejected(self):
        with pytest.raises(ValueError):
            interpolate_in_N([(QPoly.gen(), QPoly.one())], 1)


class TestTrialDivision:
    def test_single_root(self):
        r = RationalFunc(N - q, q * (one - q))
        roots, rest = trial_divide_numerator(r, 4)
        assert roots == [1]
        assert rational_equal(rest, RationalFunc(one, q * (one - q)))

    def test_constant_has_no_roots(self):
        roots, rest = trial_divide_numerator(RationalFunc(one), 5)
        assert roots == []
        assert rational_equal(rest, RationalFunc(one))

    def test_two_roots(self):
        r = RationalFunc((N - q**2) * (N - q**3),
                         q**3 * (one + q) * (one - q) ** 2)
        roots, rest = trial_divide_numerator(r, 6)
        assert roots == [2, 3]
        assert rational_equal(rest, RationalFunc(one, q**3 * (one + q) * (one - q) ** 2))

    def test_remultiplication_roundtrip(self):
        r = RationalFunc(3 * (N - q) * (N - q) * (N - q**4), q**2 * (one - q))
        roots, rest = trial_divide_numerator(r, 6)
        assert roots == [1, 1, 4]
        back = rest
        for j in roots:
            back = back * (N - q**j)
        assert rational_equal(back, r)
