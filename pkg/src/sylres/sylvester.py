"""Subresultants and Sylvester-type sums in the roots.

Two independent routes to the same object live here: the coefficient-side
determinant (`sres_det`) and the root-side sums (`syl_single`, `syl_double`,
and the multiset generalization `sylm`). They are tied together by the sign
(-1)^(d(m-d)). The multivariate evaluators at the bottom back the grid-based
identity checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, Sequence, Tuple

from .combinatorics import IndexPartition, sigma_sign
from .errors import (ArityMismatch, CardinalityTooSmall, DegreeWindow,
                     MultiplicityNotOne, TooFewElements)
from .linalg import MatrixP, det_p
from .poly import Poly
from .rationals import Q1, qof
from .rootsets import RootMultiset, SubsetSelection, rprod, rprod_vals
from .schur import SchurSpec, schur_poly_x, schur_value


def check_degree_window(m: int, n: int, d: int) -> None:
    """The standing range: 0 <= d <= min(m,n), strict upper bound at m = n."""
    if m < 1 or n < 1:
        raise DegreeWindow(f"degrees must be >= 1, got m={m}, n={n}")
    if d < 0:
        raise DegreeWindow(f"d={d} is negative")
    if m == n:
        if d >= m:
            raise DegreeWindow(f"d={d} not below m=n={m}")
    elif d > min(m, n):
        raise DegreeWindow(f"d={d} exceeds min(m,n)={min(m, n)}")


def _require_set(x: RootMultiset, name: str) -> None:
    if not x.is_set():
        raise MultiplicityNotOne(f"{name} has a repeated value")


# -- determinant oracle ---------------------------------------------------------


def sres_det(f: Poly, g: Poly, d: int) -> Poly:
    """Order-d subresultant of f and g by its determinant definition.

    The matrix is (m+n-2d) square: n-d rows of shifted f coefficients, then
    m-d rows of shifted g coefficients, with the last column holding the
    polynomials x^(n-d-i) f and x^(m-d-i) g. Out-of-range coefficient
    subscripts are zero. Inputs need not be monic.
    """
    m, n = f.degree, g.degree
    if m is None or n is None:
        raise DegreeWindow("zero polynomial has no subresultants")
    check_degree_window(m, n, d)
    size = m + n - 2 * d
    rows: list[list[Poly]] = []
    for i in range(1, n - d + 1):
        row = [Poly.constant(f.coeff(m - (j - i))) for j in range(1, size)]
        row.append(f.shift(n - d - i))
        rows.append(row)
    for i in range(1, m - d + 1):
        row = [Poly.constant(g.coeff(n - (j - i))) for j in range(1, size)]
        row.append(g.shift(m - d - i))
        rows.append(row)
    return det_p(MatrixP(rows))


# -- classical sums for sets ------------------------------------------------------


def syl_single(a: RootMultiset, b: RootMultiset, d: int) -> Poly:
    """Sylvester single sum over splits A1 | A2 of A with |A1| = d.

    A must be a set; B may be any multiset (it only enters through
    R(A2, B)).
    """
    _require_set(a, "A")
    m = a.size
    if not 0 <= d <= m:
        raise DegreeWindow(f"d={d} outside 0..{m}")
    values = a.distinct_values()
    total = Poly.zero()
    for a1_vals in combinations(values, d):
        a1 = RootMultiset.from_values(a1_vals)
        a2 = a.difference(a1)
        num = rprod(a2, b)
        if num == 0:
            continue
        total = total + Poly.from_roots(a1_vals).scale(num / rprod(a1, a2))
    return total


def syl_double(a: RootMultiset, b: RootMultiset, p: int, q: int) -> Poly:
    """Sylvester double sum over subset pairs (A', B') of sizes (p, q)."""
    _require_set(a, "A")
    _require_set(b, "B")
    m, n = a.size, b.size
    if not (0 <= p <= m and 0 <= q <= n):
        raise DegreeWindow(f"(p,q)=({p},{q}) outside ({m},{n})")
    avals, bvals = a.distinct_values(), b.distinct_values()
    total = Poly.zero()
    for ap_vals in combinations(avals, p):
        ap = RootMultiset.from_values(ap_vals)
        a_rest = a.difference(ap)
        for bp_vals in combinations(bvals, q):
            bp = RootMultiset.from_values(bp_vals)
            b_rest = b.difference(bp)
            num = rprod(ap, bp) * rprod(a_rest, b_rest)
            if num == 0:
                continue
            den = rprod(ap, a_rest) * rprod(bp, b_rest)
            total = total + (Poly.from_roots(ap_vals)
                             * Poly.from_roots(bp_vals)).scale(num / den)
    return total


# -- multiset Sylvester sum ----------------------------------------------------


@dataclass(frozen=True)
class SylmTerm:
    """One audited term of the multiset sum."""

    partition: IndexPartition
    a_prime: SubsetSelection
    b_prime: SubsetSelection
    sign: int
    value: Poly


def _base_factor(a: RootMultiset, b: RootMultiset,
                 a_prime: SubsetSelection, b_prime: SubsetSelection):
    """The difference-product ratio and x-part common to both regimes.

    Returns (scalar ratio, polynomial R(x,A')R(x,B')), or None when a
    numerator product vanishes.
    """
    abar, a_excess = a.split()
    bbar, _ = b.split()
    ap = a_prime.as_multiset()
    bp = b_prime.as_multiset()
    abar_rest = a_prime.complement().as_multiset()
    bbar_rest = b_prime.complement().as_multiset()
    num = rprod(a_excess, bbar_rest) * rprod(abar_rest, b.difference(bp))
    if num == 0:
        return None
    den = rprod(ap, abar_rest) * rprod(bp, bbar_rest)
    xpart = Poly.from_roots(ap.values()) * Poly.from_roots(bp.values())
    return num / den, xpart


def _terms_collapsed(a: RootMultiset, b: RootMultiset,
                     d: int) -> Iterator[SylmTerm]:
    """Two-index sum for d >= m'+n' (all partition blocks empty)."""
    abar, _ = a.split()
    bbar, _ = b.split()
    m, mbar = a.size, a.distinct_count
    mp = m - mbar
    nbar = b.distinct_count
    sign = -1 if (mp * (m - d)) % 2 else 1
    s_a, s_b = d - mp, mp
    empty = IndexPartition(0, ((), (), ()))
    if not (0 <= s_a <= mbar and 0 <= s_b <= nbar):
        return
    for a_idx in combinations(range(mbar), s_a):
        a_prime = SubsetSelection(abar, a_idx)
        for b_idx in combinations(range(nbar), s_b):
            b_prime = SubsetSelection(bbar, b_idx)
            base = _base_factor(a, b, a_prime, b_prime)
            if base is None:
                continue
            ratio, xpart = base
            yield SylmTerm(empty, a_prime, b_prime, sign,
                           xpart.scale(sign * ratio))


def _terms_general(a: RootMultiset, b: RootMultiset,
                   d: int) -> Iterator[SylmTerm]:
    """Triple-partition sum with confluent Schur factors, for d < m'+n'."""
    abar, _ = a.split()
    bbar, _ = b.split()
    m, n = a.size, b.size
    mbar, nbar = a.distinct_count, b.distinct_count
    mp, np_ = m - mbar, n - nbar
    r = mp + np_ - d
    lo = m + n - 2 * d  # lowest index admitted into R1
    window = tuple(i for i in range(max(lo, 1), r + 1))
    r1_cap = max(0, d - (mbar + nbar) + 1)
    x_sym = Poly.x()
    for r1 in range(0, min(len(window), r1_cap) + 1):
        for r2 in range(max(0, mp - d), min(m - d, r - r1) + 1):
            r3 = r - r1 - r2
            if not max(0, np_ - d) <= r3 <= n - d:
                continue
            s_a = r2 + d - mp
            s_b = r3 + min(mp, d - np_)
            if not (0 <= s_a <= mbar and 0 <= s_b <= nbar):
                continue
            for r1_block in combinations(window, r1):
                rest = tuple(i for i in range(1, r + 1) if i not in r1_block)
                for r2_block in combinations(rest, r2):
                    r3_block = tuple(i for i in rest if i not in r2_block)
                    part = IndexPartition(r, (r1_block, r2_block, r3_block))
                    sign = sigma_sign(m, n, mbar, nbar, d, part)
                    r1_shift = tuple(i - (m + n - 2 * d - 1)
                                     for i in r1_block)
                    for a_idx in combinations(range(mbar), s_a):
                        a_prime = SubsetSelection(abar, a_idx)
                        for b_idx in combinations(range(nbar), s_b):
                            b_prime = SubsetSelection(bbar, b_idx)
                            base = _base_factor(a, b, a_prime, b_prime)
                            if base is None:
                                continue
                            ratio, xpart = base
                            ap = a_prime.as_multiset()
                            bp = b_prime.as_multiset()
                            s1 = schur_poly_x(SchurSpec(
                                d + 1, r1_shift, ap.union(bp), with_x=True))
                            s2 = schur_value(SchurSpec(
                                m + n - d, r2_block,
                                a_prime.complement().as_multiset().union(b)))
                            s3 = schur_value(SchurSpec(
                                m + n - d, r3_block,
                                a.union(b_prime.complement().as_multiset())))
                            value = (xpart * s1).scale(sign * ratio * s2 * s3)
                            yield SylmTerm(part, a_prime, b_prime, sign, value)


def sylm_terms(a: RootMultiset, b: RootMultiset, d: int,
               force_collapsed: bool = False) -> Iterator[SylmTerm]:
    """Stream of audited terms; order is deterministic.

    `force_collapsed` applies the two-index formula outside its range
    (debug only; no correctness claim there).
    """
    m, n = a.size, b.size
    check_degree_window(m, n, d)
    mp = a.excess_count
    np_ = b.excess_count
    if force_collapsed or mp + np_ <= d:
        return _terms_collapsed(a, b, d)
    return _terms_general(a, b, d)


def sylm(a: RootMultiset, b: RootMultiset, d: int,
         force_collapsed: bool = False) -> Poly:
    """Multiset Sylvester single sum; equals (-1)^(d(m-d)) Sres_d."""
    total = Poly.zero()
    for term in sylm_terms(a, b, d, force_collapsed=force_collapsed):
        total = total + term.value
    return total


# -- multivariate evaluators --------------------------------------------------


def single_sum_eval(a: RootMultiset, b: RootMultiset, d: int,
                    xs: Sequence) -> Fraction:
    """The single sum with the symbolic x replaced by a tuple of values."""
    _require_set(a, "A")
    m = a.size
    if not 0 <= d <= m:
        raise DegreeWindow(f"d={d} outside 0..{m}")
    xs = tuple(qof(v) for v in xs)
    values = a.distinct_values()
    total = Fraction(0)
    for a1_vals in combinations(values, d):
        a1 = RootMultiset.from_values(a1_vals)
        a2 = a.difference(a1)
        num = rprod(a2, b)
        if num == 0:
            continue
        total += num * rprod_vals(xs, a1) / rprod(a1, a2)
    return total


def exchange_rhs_eval(a: RootMultiset, b: RootMultiset, d: int,
                      xs: Sequence) -> Fraction:
    """Right-hand side of the exchange identity, summing over B instead."""
    _require_set(b, "B")
    n = b.size
    if n < d:
        raise TooFewElements(f"|B|={n} below d={d}")
    xs = tuple(qof(v) for v in xs)
    m = a.size
    values = b.distinct_values()
    total = Fraction(0)
    for b1_vals in combinations(values, d):
        b1 = RootMultiset.from_values(b1_vals)
        b2 = b.difference(b1)
        num = rprod(a, b2)
        if num == 0:
            continue
        total += num * rprod_vals(xs, b1) / rprod(b1, b2)
    if (d * (m - d)) % 2:
        total = -total
    return total


def apery_jouanolou_rhs(a: RootMultiset, b: RootMultiset, d: int,
                        e: RootMultiset, xs: Sequence) -> Fraction:
    """Three-block sum over an auxiliary set E of sufficient size."""
    _require_set(e, "E")
    xs = tuple(qof(v) for v in xs)
    m, n = a.size, b.size
    bound = max(len(xs) + d, m + n - d, m)
    if e.size < bound:
        raise CardinalityTooSmall(f"|E|={e.size} below required {bound}")
    evals = e.distinct_values()
    total = Fraction(0)
    for e1_vals in combinations(evals, d):
        e1 = RootMultiset.from_values(e1_vals)
        rest = tuple(v for v in evals if v not in set(e1_vals))
        for e2_vals in combinations(rest, m - d):
            e2 = RootMultiset.from_values(e2_vals)
            e3_vals = tuple(v for v in rest if v not in set(e2_vals))
            e3 = RootMultiset.from_values(e3_vals)
            num = rprod(a, e3) * rprod(e2, b)
            if num == 0:
                continue
            num *= rprod_vals(xs, e1)
            if num == 0:
                continue
            den = rprod(e1, e2) * rprod(e1, e3) * rprod(e2, e3)
            total += num / den
    return total


def sym_interp_eval(e: RootMultiset, d: int,
                    h: Callable[[Tuple[Fraction, ...]], Fraction],
                    xs: Sequence) -> Fraction:
    """Symmetric Lagrange interpolation of h through the nodes E \\ E'."""
    _require_set(e, "E")
    size = e.size
    if not 0 <= d < size:
        raise DegreeWindow(f"d={d} outside 0..{size - 1}")
    xs = tuple(qof(v) for v in xs)
    if len(xs) != size - d:
        raise ArityMismatch(f"need {size - d} values, got {len(xs)}")
    evals = e.distinct_values()
    total = Fraction(0)
    for ep_vals in combinations(evals, d):
        ep = RootMultiset.from_values(ep_vals)
        rest = e.difference(ep)
        total += (qof(h(rest.values())) * rprod_vals(xs, ep)
                  / rprod(rest, ep))
    return total
