"""Interval orders of interval sets and their counting invariants.

The pairs of an interval set form an interval order ((u_i, v_i) < (u_j, v_j)
iff v_i < u_j). Dropless labelings of that poset, acyclic orientations of
its incomparability graph, and the product over vertices of (phi + 1) all
agree, where phi counts earlier-ending overlapping intervals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import RationalPolynomial
from .shapes import InvariantError
from .snakes import IntervalSet

_BRUTE_CAP = 10


@dataclass(frozen=True)
class IntervalOrder:
    """Partial order on interval pairs: strictly earlier intervals are smaller."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple(sorted(map(tuple, self.pairs))))

    @classmethod
    def from_interval_set(cls, iset: IntervalSet) -> IntervalOrder:
        return cls(iset.pairs)

    @property
    def r(self) -> int:
        return len(self.pairs)

    def less(self, a: tuple[int, int], b: tuple[int, int]) -> bool:
        return a[1] < b[0]

    def incomparable(self, a: tuple[int, int], b: tuple[int, int]) -> bool:
        return not self.less(a, b) and not self.less(b, a)

    def edges(self) -> list[tuple[int, int]]:
        """Incomparability edges as index pairs into self.pairs."""
        ps = self.pairs
        return [
            (i, j)
            for i in range(len(ps))
            for j in range(i + 1, len(ps))
            if self.incomparable(ps[i], ps[j])
        ]


def phi(order: IntervalOrder, i: int) -> int:
    """#{j : v_j > v_i} - #{j : u_j > v_i} for the i-th pair (0-based)."""
    vi = order.pairs[i][1]
    return sum(1 for _, v in order.pairs if v > vi) - sum(
        1 for u, _ in order.pairs if u > vi
    )


def dropless_count(order: IntervalOrder, method: str = "formula") -> int:
    """Bijections f to 1..r with no f^{-1}(i+1) strictly below f^{-1}(i)."""
    if method == "formula":
        out = 1
        for i in range(order.r):
            out *= phi(order, i) + 1
        return out
    if method == "brute":
        if order.r > _BRUTE_CAP:
            raise ValueError(f"brute force capped at {_BRUTE_CAP} elements")
        count = 0
        for perm in itertools.permutations(order.pairs):
            # perm[m] is the element labelled m+1
            if all(not order.less(perm[m + 1], perm[m]) for m in range(len(perm) - 1)):
                count += 1
        return count
    raise ValueError(f"unknown method: {method!r}")


def chromatic_polynomial(order: IntervalOrder) -> RationalPolynomial:
    """Chromatic polynomial of the incomparability graph.

    Scanning vertices by decreasing right endpoint, the already-seen
    neighbours of each vertex form a clique (the graph is chordal), giving
    the product of (q - phi(i)). The clique property is asserted.
    """
    by_v = sorted(range(order.r), key=lambda i: -order.pairs[i][1])
    poly = RationalPolynomial.one()
    q = RationalPolynomial.t()
    seen: list[int] = []
    for i in by_v:
        nbrs = [j for j in seen if order.incomparable(order.pairs[i], order.pairs[j])]
        for a, b in itertools.combinations(nbrs, 2):
            if not order.incomparable(order.pairs[a], order.pairs[b]):
                raise InvariantError("earlier neighbours do not form a clique")
        if len(nbrs) != phi(order, i):
            raise InvariantError(
                f"clique size {len(nbrs)} differs from phi = {phi(order, i)}"
            )
        poly = poly * (q - RationalPolynomial.monomial(0, len(nbrs)))
        seen.append(i)
    return poly


def acyclic_orientation_count(order: IntervalOrder) -> int:
    """(-1)^r chi(-1) for the incomparability graph; equals dropless_count."""
    chi = chromatic_polynomial(order)
    value = chi(Fraction(-1)) * (-1) ** order.r
    if value.denominator != 1:
        raise InvariantError("chromatic polynomial evaluated to a non-integer")
    return int(value)
