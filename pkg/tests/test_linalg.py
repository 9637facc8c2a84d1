from fractions import Fraction as F
from itertools import combinations

import pytest

from sylres.errors import (IndexOutOfRange, MultiplePolyColumns, NotSquare,
                           NotSquareAfterRemoval, TooManyColumns)
from sylres.linalg import (MatrixP, MatrixQ, det_p, det_q, remove_rows,
                           vandermonde_confluent,
                           vandermonde_confluent_with_x)
from sylres.poly import Poly
from sylres.rootsets import RootMultiset


def RM(*pairs):
    return RootMultiset(pairs)


class TestDetQ:
    def test_identity(self):
        assert det_q(MatrixQ([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == 1

    def test_2x2(self):
        assert det_q(MatrixQ([[1, 2], [3, 4]])) == -2

    def test_empty(self):
        assert det_q(MatrixQ([])) == 1

    def test_vandermonde_pairwise_products(self):
        pts = [F(1), F(2), F(3)]
        v = vandermonde_confluent(3, RootMultiset.from_values(pts))
        assert det_q(v) == (1 - 2) * (1 - 3) * (2 - 3)

    def test_not_square(self):
        with pytest.raises(NotSquare):
            det_q(MatrixQ([[1, 2]]))

    def test_row_swap_flips_sign(self):
        m = MatrixQ([[1, 2, 0], [0, 1, 5], [3, 0, 1]])
        swapped = MatrixQ([m.entries[1], m.entries[0], m.entries[2]])
        assert det_q(m) == -det_q(swapped)

    def test_repeated_row_is_zero(self):
        assert det_q(MatrixQ([[1, 2], [1, 2]])) == 0

    def test_needs_pivoting(self):
        assert det_q(MatrixQ([[0, 1], [1, 0]])) == -1


class TestDetP:
    def test_one_poly_column(self):
        f = Poly([2, -3, 1])
        g = Poly([6, -5, 1])
        m = MatrixP([[Poly.one(), f], [Poly.one(), g]])
        assert det_p(m) == g - f

    def test_diagonal_constants(self):
        m = MatrixP([[Poly.constant(2), Poly.zero()],
                     [Poly.zero(), Poly.constant(F(3, 2))]])
        assert det_p(m) == Poly.constant(3)

    def test_1x1(self):
        f = Poly([1, 1, 1])
        assert det_p(MatrixP([[f]])) == f

    def test_agrees_with_det_q_on_constants(self):
        rows = [[1, 2, 3], [0, 1, 4], [5, 6, 0]]
        m_q = MatrixQ(rows)
        m_p = MatrixP([[Poly.constant(c) for c in row] for row in rows])
        assert det_p(m_p) == Poly.constant(det_q(m_q))

    def test_two_poly_columns_rejected(self):
        x = Poly.x()
        with pytest.raises(MultiplePolyColumns):
            det_p(MatrixP([[x, x], [x, x]]))


class TestConfluentVandermonde:
    def test_regular(self):
        a, b = F(2), F(5)
        v = vandermonde_confluent(2, RM((a, 1), (b, 1)))
        assert v == MatrixQ([[a, b], [1, 1]])

    def test_double_point_block(self):
        a = F(3)
        v = vandermonde_confluent(3, RM((a, 2)))
        assert v == MatrixQ([[a * a, 2 * a], [a, 1], [1, 0]])

    def test_powers_of_zero(self):
        v = vandermonde_confluent(3, RM((0, 1)))
        assert [row[0] for row in v.entries] == [0, 0, 1]

    def test_too_many_columns(self):
        with pytest.raises(TooManyColumns):
            vandermonde_confluent(1, RM((1, 1), (2, 1)))

    def test_invertible_for_distinct_values(self):
        x = RM((F(-1), 2), (F(1, 2), 1), (3, 3))
        assert det_q(vandermonde_confluent(x.size, x)) != 0


class TestConfluentVandermondeWithX:
    def test_empty_points(self):
        v = vandermonde_confluent_with_x(2, RootMultiset.empty())
        assert v == MatrixP([[Poly.x()], [Poly.one()]])

    def test_two_simple_points(self):
        a = F(4)
        v = vandermonde_confluent_with_x(3, RM((a, 1)))
        expect = MatrixP([
            [Poly.constant(16), Poly.monomial(2)],
            [Poly.constant(4), Poly.x()],
            [Poly.one(), Poly.one()],
        ])
        assert v == expect

    def test_block_plus_monomial_column(self):
        a = F(2)
        v = vandermonde_confluent_with_x(3, RM((a, 2)))
        assert [row[:2] for row in v.entries] == [
            (Poly.constant(4), Poly.constant(4)),
            (Poly.constant(2), Poly.one()),
            (Poly.one(), Poly.zero())]
        assert [row[2] for row in v.entries] == [
            Poly.monomial(2), Poly.x(), Poly.one()]

    def test_too_many_columns(self):
        with pytest.raises(TooManyColumns):
            vandermonde_confluent_with_x(2, RM((1, 1), (2, 1)))


class TestRemoveRows:
    def test_noop(self):
        m = MatrixQ([[1, 2], [3, 4]])
        assert remove_rows(m, ()) == m

    def test_drop_top_of_vandermonde(self):
        a, b = F(2), F(5)
        v = vandermonde_confluent(3, RM((a, 1), (b, 1)))
        assert remove_rows(v, (1,)) == MatrixQ([[a, b], [1, 1]])

    def test_order_preserved(self):
        m = MatrixQ([[1, 0], [2, 0], [3, 0], [4, 0]])
        assert remove_rows(m, (1, 3)) == MatrixQ([[2, 0], [4, 0]])

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            remove_rows(MatrixQ([[1]]), (2,))

    def test_not_square_after(self):
        with pytest.raises(NotSquareAfterRemoval):
            remove_rows(MatrixQ([[1, 2], [3, 4]]), (1,))


def test_alternating_on_all_row_pairs():
    base = MatrixQ([[1, 2, 3, 4], [0, 1, 0, 2], [5, 0, 1, 0], [2, 2, 0, 1]])
    d = det_q(base)
    rows = list(base.entries)
    for i, j in combinations(range(4), 2):
        swapped = rows.copy()
        swapped[i], swapped[j] = swapped[j], swapped[i]
        assert det_q(MatrixQ(swapped)) == -d
