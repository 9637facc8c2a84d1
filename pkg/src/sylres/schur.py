"""Classical and confluent Schur polynomials as exact determinant ratios.

S_k^(R)(X) = det(V_k(X) with rows R removed) / det(V(X)), where V is the
(confluent) Vandermonde matrix of the point multiset X. Equal point values
are merged into one confluent block by the multiset representation, which is
what keeps the denominator nonzero. With a symbolic extra point the ratio is
computed as an exact polynomial division, which never leaves a remainder.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from .errors import EmptyPoints, InconsistentRemovalCount
from .linalg import (MatrixQ, det_p, det_q, remove_rows,
                     vandermonde_confluent, vandermonde_confluent_with_x)
from .poly import Poly
from .rationals import Q1
from .rootsets import RootMultiset


@dataclass(frozen=True)
class SchurSpec:
    k: int
    removed: Tuple[int, ...]  # sorted row indices in 1..k
    points: RootMultiset
    with_x: bool = False

    def __post_init__(self):
        object.__setattr__(self, "removed", tuple(sorted(self.removed)))
        expected = self.k - (self.points.size + (1 if self.with_x else 0))
        if len(self.removed) != expected or len(set(self.removed)) != len(self.removed):
            raise InconsistentRemovalCount(
                f"need {expected} removed rows for k={self.k}, "
                f"got {self.removed}")
        if self.removed and not (1 <= self.removed[0]
                                 and self.removed[-1] <= self.k):
            raise InconsistentRemovalCount(
                f"removed rows {self.removed} outside 1..{self.k}")


@lru_cache(maxsize=None)
def schur_value(spec: SchurSpec) -> Fraction:
    """Confluent Schur value det(V_k^(R)(X)) / det(V(X))."""
    if spec.with_x:
        raise ValueError("use schur_poly_x for the symbolic variant")
    r = spec.points.size
    if r == 0:
        if spec.k == 0:
            return Q1  # empty-determinant convention
        raise EmptyPoints("no points: denominator Vandermonde is undefined")
    num = det_q(remove_rows(vandermonde_confluent(spec.k, spec.points),
                            spec.removed))
    den = det_q(vandermonde_confluent(r, spec.points))
    return num / den


@lru_cache(maxsize=None)
def schur_poly_x(spec: SchurSpec) -> Poly:
    """S_k^(R)(X with one symbolic point), as an exact polynomial."""
    if not spec.with_x:
        raise ValueError("spec.with_x must be set")
    r = spec.points.size
    num = det_p(remove_rows(vandermonde_confluent_with_x(spec.k, spec.points),
                            spec.removed))
    den = det_p(vandermonde_confluent_with_x(r + 1, spec.points))
    return num.exact_div(den)


def schur_classical_ratio(k: int, removed: Sequence[int],
                          points: Sequence[Fraction]) -> Fraction:
    """Bialternant ratio for a plain set of points, built independently.

    Kept deliberately separate from the confluent path so the two can be
    cross-checked against each other.
    """
    xs = list(points)
    r = len(xs)
    if len(set(xs)) != r:
        raise ValueError("points must be pairwise distinct")
    drop = set(removed)
    kept_exponents = [k - i for i in range(1, k + 1) if i not in drop]
    num = MatrixQ([[x ** e for x in xs] for e in kept_exponents])
    den = MatrixQ([[x ** (r - i) for x in xs] for i in range(1, r + 1)])
    return det_q(num) / det_q(den)


def schur_consistency_check(k: int, removed: Sequence[int],
                            points: RootMultiset) -> bool:
    """Confluent path equals the classical ratio when all points are simple."""
    if not points.is_set():
        raise ValueError("consistency check needs an all-multiplicity-1 multiset")
    confluent = schur_value(SchurSpec(k, tuple(removed), points))
    classical = schur_classical_ratio(k, removed, points.values())
    return confluent == classical
