"""Exact determinants and (confluent) Vandermonde builders.

Rational matrices are eliminated fraction-free (Bareiss) with row pivoting.
Polynomial matrices are restricted to a single nonconstant column and
expanded by cofactors along it, each minor being a rational determinant.
Row and column indices are 1-based to match the index-set conventions used
by the Schur and Sylvester modules.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import (IndexOutOfRange, MultiplePolyColumns, NotSquare,
                     NotSquareAfterRemoval, TooManyColumns)
from .poly import Poly
from .rationals import Q0, Q1, qof
from .rootsets import RootMultiset


class MatrixQ:
    __slots__ = ("entries",)

    def __init__(self, rows: Sequence[Sequence]):
        data = tuple(tuple(qof(c) for c in row) for row in rows)
        widths = {len(row) for row in data}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", data)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixQ is immutable")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __eq__(self, other):
        return isinstance(other, MatrixQ) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"MatrixQ({self.entries!r})"


class MatrixP:
    __slots__ = ("entries",)

    def __init__(self, rows: Sequence[Sequence[Poly]]):
        data = tuple(tuple(row) for row in rows)
        widths = {len(row) for row in data}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        for row in data:
            for c in row:
                if not isinstance(c, Poly):
                    raise ValueError("MatrixP entries must be Poly")
        object.__setattr__(self, "entries", data)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixP is immutable")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __eq__(self, other):
        return isinstance(other, MatrixP) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"MatrixP({self.entries!r})"


def det_q(m: MatrixQ) -> Fraction:
    """Exact determinant by fraction-free elimination with row pivoting."""
    if m.rows != m.cols:
        raise NotSquare(f"{m.rows}x{m.cols} matrix is not square")
    n = m.rows
    if n == 0:
        return Q1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = Q1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Q0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) / prev
            row_i[k] = Q0
        prev = pivot
    return a[-1][-1] * sign


def det_p(m: MatrixP) -> Poly:
    """Determinant of a matrix with at most one nonconstant column."""
    if m.rows != m.cols:
        raise NotSquare(f"{m.rows}x{m.cols} matrix is not square")
    n = m.rows
    if n == 0:
        return Poly.one()
    poly_cols = [j for j in range(n)
                 if any(not row[j].is_constant() for row in m.entries)]
    if len(poly_cols) > 1:
        raise MultiplePolyColumns(
            f"nonconstant entries in columns {[j + 1 for j in poly_cols]}")
    if not poly_cols:
        const = MatrixQ([[c.constant_value() for c in row]
                         for row in m.entries])
        return Poly.constant(det_q(const))
    col = poly_cols[0]
    total = Poly.zero()
    for i in range(n):
        entry = m.entries[i][col]
        if entry.is_zero():
            continue
        minor = MatrixQ([[c.constant_value()
                          for j, c in enumerate(row) if j != col]
                         for r, row in enumerate(m.entries) if r != i])
        cofactor = det_q(minor)
        if (i + col) % 2:
            cofactor = -cofactor
        total = total + entry.scale(cofactor)
    return total


def _confluent_columns(k: int, value: Fraction, mult: int):
    """Columns of the k-row block for one point: successive derivatives."""
    cols = []
    for c in range(1, mult + 1):
        col = []
        for t in range(1, k + 1):
            e = k - t
            if e - (c - 1) >= 0:
                col.append(math.perm(e, c - 1) * value ** (e - c + 1))
            else:
                col.append(Q0)
        cols.append(col)
    return cols


def vandermonde_confluent(k: int, x: RootMultiset) -> MatrixQ:
    """k x |X| confluent Vandermonde; row 1 carries exponent k-1."""
    r = x.size
    if k < r:
        raise TooManyColumns(f"k={k} rows but {r} columns requested")
    cols: list[list[Fraction]] = []
    for value, mult in x.entries:
        cols.extend(_confluent_columns(k, value, mult))
    return MatrixQ([[cols[j][t] for j in range(r)] for t in range(k)])


def vandermonde_confluent_with_x(k: int, x: RootMultiset) -> MatrixP:
    """Confluent columns for X plus one symbolic column [x^(k-1),..,x,1]."""
    r = x.size
    if k < r + 1:
        raise TooManyColumns(f"k={k} rows but {r + 1} columns requested")
    cols: list[list[Poly]] = []
    for value, mult in x.entries:
        cols.extend([[Poly.constant(c) for c in col]
                     for col in _confluent_columns(k, value, mult)])
    cols.append([Poly.monomial(k - t) for t in range(1, k + 1)])
    return MatrixP([[cols[j][t] for j in range(r + 1)] for t in range(k)])


def remove_rows(m, removed: Sequence[int]):
    """Square submatrix after dropping the 1-based rows in `removed`."""
    drop = set(removed)
    for i in drop:
        if not 1 <= i <= m.rows:
            raise IndexOutOfRange(f"row {i} outside 1..{m.rows}")
    kept = [row for i, row in enumerate(m.entries, start=1) if i not in drop]
    if len(kept) != m.cols:
        raise NotSquareAfterRemoval(
            f"{len(kept)} rows remain for {m.cols} columns")
    return type(m)(kept)
