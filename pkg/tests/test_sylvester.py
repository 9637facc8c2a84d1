from fractions import Fraction as F

import pytest

from sylres.combinatorics import binom
from sylres.errors import (ArityMismatch, CardinalityTooSmall, DegreeWindow,
                           MultiplicityNotOne, TooFewElements)
from sylres.poly import Poly
from sylres.rootsets import RootMultiset, rprod
from sylres.sylvester import (apery_jouanolou_rhs, exchange_rhs_eval,
                              single_sum_eval, sres_det, syl_double,
                              syl_single, sylm, sylm_terms, sym_interp_eval)


def RM(*pairs):
    return RootMultiset(pairs)


def sets(*values):
    return RootMultiset.from_values([F(v) for v in values])


def sres_sign(d, m):
    return -1 if (d * (m - d)) % 2 else 1


class TestSresDet:
    def test_two_quadratics(self):
        f = Poly.from_roots([1, 2])
        g = Poly.from_roots([2, 3])
        assert sres_det(f, g, 1) == Poly([4, -2])

    def test_d_equals_n_below_m(self):
        f = Poly.from_roots([1, 4, 6])
        g = Poly.from_roots([2, 3])
        assert sres_det(f, g, 2) == g

    def test_d_equals_m_below_n(self):
        f = Poly.from_roots([1, 4])
        g = Poly.from_roots([2, 3, 5])
        assert sres_det(f, g, 2) == f

    def test_repeated_root_pair(self):
        f = Poly.from_roots([0, 1, 1])
        g = Poly.from_roots([2, 2, 2])
        assert sres_det(f, g, 2) == g - f

    def test_resultant_at_d0(self):
        a, b = sets(1, 2), sets(3, 5)
        f, g = Poly.from_roots(a.values()), Poly.from_roots(b.values())
        assert sres_det(f, g, 0) == Poly.constant(rprod(a, b))

    def test_degree_window_rejections(self):
        f = Poly.from_roots([1, 2])
        g = Poly.from_roots([3, 4])
        with pytest.raises(DegreeWindow):
            sres_det(f, g, 2)  # d = m = n rejected
        with pytest.raises(DegreeWindow):
            sres_det(f, g, -1)
        with pytest.raises(DegreeWindow):
            sres_det(Poly.constant(3), g, 0)

    def test_degree_bound(self):
        f = Poly.from_roots([1, 2, 3, 4])
        g = Poly.from_roots([5, 6, 7])
        for d in range(0, 4):
            s = sres_det(f, g, d)
            assert s.is_zero() or s.degree <= d

    def test_non_monic_inputs(self):
        # determinant definition scales with the leading coefficients
        f = Poly.from_roots([1, 2])
        g = Poly.from_roots([2, 3])
        assert sres_det(f.scale(3), g, 1) == sres_det(f, g, 1).scale(3)


class TestSylSingle:
    def test_full_split_is_monic(self):
        a = sets(1, 2, 3)
        assert syl_single(a, sets(7), 3) == Poly.from_roots(a.values())

    def test_d0_is_resultant_product(self):
        a, b = sets(1, 2), sets(2, 3)
        assert syl_single(a, b, 0) == Poly.constant(rprod(a, b))

    def test_hand_sum(self):
        assert syl_single(sets(1, 2), sets(2, 3), 1) == Poly([-4, 2])

    def test_multiset_a_rejected(self):
        with pytest.raises(MultiplicityNotOne):
            syl_single(RM((1, 2)), sets(3), 1)

    def test_multiset_b_allowed(self):
        # A1={1}: (x-1)(2-3)^2/(1-2); A1={2}: (x-2)(1-3)^2/(2-1)
        assert syl_single(sets(1, 2), RM((3, 2)), 1) == Poly([-7, 3])


class TestSylDouble:
    def test_p0_q0(self):
        a, b = sets(1, 2), sets(2, 3)
        assert syl_double(a, b, 0, 0) == Poly.constant(rprod(a, b))

    def test_matches_single(self):
        a, b = sets(1, 2), sets(2, 3)
        assert syl_double(a, b, 1, 0) == Poly([-4, 2])

    def test_rewriting_identity(self):
        a, b = sets(1, 2), sets(3)
        d = 1
        got = syl_double(a, b, 0, 1)
        sign = -1 if (1 * (2 - d)) % 2 else 1
        assert got == syl_single(a, b, d).scale(sign * binom(d, 0))

    def test_multiset_rejected(self):
        with pytest.raises(MultiplicityNotOne):
            syl_double(RM((1, 2)), sets(3), 1, 0)


class TestSylm:
    def test_repeated_roots_collapsed_regime(self):
        a = RM((0, 1), (1, 2))
        b = RM((2, 2))
        g = Poly.from_roots(b.values())
        assert sylm(a, b, 2).scale(sres_sign(2, 3)) == g

    def test_repeated_roots_general_regime(self):
        a = RM((0, 1), (1, 2))
        b = RM((2, 3))
        f = Poly.from_roots(a.values())
        g = Poly.from_roots(b.values())
        assert sylm(a, b, 2).scale(sres_sign(2, 3)) == g - f

    def test_collapses_to_single_sum_for_sets(self):
        a, b = sets(1, 2, 4), sets(3, 5)
        for d in range(0, 3):
            assert sylm(a, b, d) == syl_single(a, b, d)

    def test_collapsed_regime_has_empty_partitions(self):
        a = RM((0, 1), (1, 2))
        b = RM((2, 2))
        for term in sylm_terms(a, b, 2):
            assert term.partition.blocks == ((), (), ())

    def test_general_regime_has_nonempty_partitions(self):
        a = RM((0, 1), (1, 2))
        b = RM((2, 3))
        assert any(any(term.partition.blocks)
                   for term in sylm_terms(a, b, 2))

    def test_forced_collapsed_below_range(self):
        # outside its range the two-index formula picks up a spurious
        # root at the repeated value of B and misses the subresultant
        a = RM((0, 1), (1, 2))
        b = RM((2, 3))
        f = Poly.from_roots(a.values())
        g = Poly.from_roots(b.values())
        forced = sylm(a, b, 2, force_collapsed=True)
        assert forced.exact_div(Poly.from_roots([F(2)]))  # divisible
        assert forced.scale(sres_sign(2, 3)) != g - f

    def test_shared_roots(self):
        a = RM((1, 2), (3, 1))
        b = RM((1, 1), (3, 2))
        f = Poly.from_roots(a.values())
        g = Poly.from_roots(b.values())
        for d in range(0, 3):
            assert (sres_det(f, g, d)
                    == sylm(a, b, d).scale(sres_sign(d, 3)))

    def test_degree_window(self):
        with pytest.raises(DegreeWindow):
            sylm(sets(1, 2), sets(3, 4), 2)


class TestSingleSumEval:
    def test_consistent_with_univariate(self):
        a, b = sets(1, 2, 3), sets(5, 6)
        p = syl_single(a, b, 2)
        for x0 in (F(0), F(7, 2), F(-4)):
            assert single_sum_eval(a, b, 2, (x0,)) == p(x0)

    def test_vanishing_case(self):
        # |B| < d <= |A| with |X| <= |A| + |B| - 2d forces zero
        a, b = sets(1, 2, 3, 4, 6), sets(5)
        d = 2
        for xs in ((F(0), F(9)), (F(11), F(-2))):
            assert single_sum_eval(a, b, d, xs) == 0

    def test_exchange_both_sides(self):
        a, b = sets(1, 2, 3), sets(5)
        d = 1
        sign = -1 if (d * (3 - d)) % 2 else 1
        for xs in ((F(4), F(7)), (F(0), F(-1))):
            assert (single_sum_eval(a, b, d, xs)
                    == exchange_rhs_eval(a, b, d, xs))
            assert sign == 1  # d(m-d) = 2 even here


class TestExchangeRhs:
    def test_d0(self):
        a, b = sets(1, 2), sets(4, 5)
        assert exchange_rhs_eval(a, b, 0, ()) == rprod(a, b)

    def test_single_b(self):
        a, b = sets(1, 2, 3), sets(7)
        # single split B1 = {7}: (-1)^(1*(3-1)) R(xs, {7})
        assert exchange_rhs_eval(a, b, 1, (F(9),)) == 2

    def test_too_few(self):
        with pytest.raises(TooFewElements):
            exchange_rhs_eval(sets(1, 2), sets(3), 2, ())


class TestAperyJouanolou:
    def test_matches_single_sum(self):
        a, b = sets(1, 2), sets(4)
        d = 1
        e = sets(5, 6, 7)  # |E| = m + n - d = 2
        for xs in ((F(0),), (F(3),), (F(-2),)):
            assert (apery_jouanolou_rhs(a, b, d, e, xs)
                    == single_sum_eval(a, b, d, xs))

    def test_original_statement_vs_sres(self):
        # |E| = m + n - d, X = {x}: RHS recovers (-1)^(d(m-d)) Sres_d
        a, b = sets(1, 2, 3), sets(5, 6)
        d = 1
        e = sets(-1, -2, -3, -4)
        f = Poly.from_roots(a.values())
        g = Poly.from_roots(b.values())
        s = sres_det(f, g, d)
        for x0 in (F(0), F(4), F(9)):
            assert (apery_jouanolou_rhs(a, b, d, e, (x0,))
                    == sres_sign(d, 3) * s(x0))

    def test_cardinality_bound(self):
        with pytest.raises(CardinalityTooSmall):
            apery_jouanolou_rhs(sets(1, 2), sets(3), 1, sets(4), (F(0),))


class TestSymInterp:
    def test_partition_of_unity(self):
        e = sets(1, 2, 3, 4)
        d = 2

        def one(xs):
            return F(1)
        assert sym_interp_eval(e, d, one, (F(7), F(9))) == 1

    def test_reproduces_e1(self):
        e = sets(1, 2, 3)
        d = 1

        def e1(xs):
            return sum(xs, F(0))
        xs = (F(5), F(-2))
        assert sym_interp_eval(e, d, e1, xs) == e1(xs)

    def test_d0_constant(self):
        e = sets(1, 2)

        def c(xs):
            return F(4, 3)
        assert sym_interp_eval(e, 0, c, (F(8), F(9))) == F(4, 3)

    def test_arity(self):
        with pytest.raises(ArityMismatch):
            sym_interp_eval(sets(1, 2, 3), 1, lambda xs: F(1), (F(0),))
