"""Snakes, the snake sequence, interval sets, crossings, and the z statistic.

Snake m joins the square on lower-envelope step m to the square on upper
envelope step m by a staircase of Up/Left moves. Crossing the entry edge
counts as step zero of the zigzag (Up through a horizontal edge, Left
through a vertical one), so the first in-shape move prefers the opposite
direction and the preference alternates from there; a direction whose row
or column budget is spent yields to the other. This makes the links of
distinct snakes pairwise disjoint and jointly cover every adjacency of the
shape, which the decomposition bijection requires. Shared boundary edges
give empty snakes. Even snakes are Left on (1,0) code columns and Right on
(0,1) columns; everything else is Odd.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator
from dataclasses import dataclass

from . import codes
from .shapes import InvariantError, Partition, SkewShape, Square, normalize


class SnakeKind(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    ODD = "odd"
    EMPTY = "empty"


@dataclass(frozen=True)
class Snake:
    index: int
    squares: tuple[Square, ...]
    kind: SnakeKind
    entry_horizontal: bool
    exit_horizontal: bool

    @property
    def length(self) -> int:
        """One fewer than the number of squares; -1 for an empty snake."""
        return len(self.squares) - 1

    def links(self) -> tuple[tuple[Square, Square], ...]:
        return tuple(zip(self.squares, self.squares[1:]))


@dataclass(frozen=True)
class SnakeSequence:
    symbols: tuple[str, ...]

    def __str__(self) -> str:
        return " ".join(self.symbols)


@dataclass(frozen=True)
class IntervalSet:
    """r pairs (u_i, v_i) matching left code columns to later right columns."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple(sorted((int(u), int(v)) for u, v in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        seen: set[int] = set()
        for u, v in pairs:
            if u >= v:
                raise ValueError(f"interval pair must increase: ({u}, {v})")
            if u in seen or v in seen:
                raise ValueError("interval endpoints must be distinct")
            seen.update((u, v))

    @property
    def r(self) -> int:
        return len(self.pairs)

    def gaps(self) -> tuple[int, ...]:
        return tuple(v - u for u, v in self.pairs)

    @property
    def type(self) -> Partition:
        """Multiset of gaps as a partition."""
        return tuple(sorted(self.gaps(), reverse=True))

    def to_json(self) -> list[list[int]]:
        return [[u, v] for u, v in self.pairs]


def snakes_of(shape: SkewShape) -> list[Snake]:
    """One snake per reduced-code column, with cross-checked classification."""
    shape = normalize(shape)
    lower, upper = codes.envelope_steps(shape)
    snakes: list[Snake] = []
    for m, (lo, up) in enumerate(zip(lower, upper), start=1):
        if lo.edge == up.edge:
            snakes.append(Snake(m, (), SnakeKind.EMPTY, lo.horizontal, up.horizontal))
            continue
        a = lo.square
        b = up.square
        ups = a[0] - b[0]
        lefts = a[1] - b[1]
        if ups < 0 or lefts < 0:
            raise InvariantError(f"snake {m} endpoints are not ordered: {a} -> {b}")
        # The entry edge is step zero of the zigzag: crossing a horizontal
        # edge is an Up move, a vertical edge a Left move, so the first
        # in-shape move prefers the opposite direction and the preference
        # alternates from there. A direction whose budget is spent yields.
        squares = [a]
        cur = a
        first_up = not lo.horizontal
        u_left, l_left = ups, lefts
        for t in range(ups + lefts):
            go_up = first_up if t % 2 == 0 else not first_up
            if go_up and u_left == 0:
                go_up = False
            elif not go_up and l_left == 0:
                go_up = True
            if go_up:
                cur = (cur[0] - 1, cur[1])
                u_left -= 1
            else:
                cur = (cur[0], cur[1] - 1)
                l_left -= 1
            squares.append(cur)
        if any(sq not in shape for sq in squares):
            raise InvariantError(f"snake {m} leaves the shape: {squares}")
        col = (int(lo.horizontal), int(up.horizontal))
        if col == (1, 0):
            kind = SnakeKind.LEFT
        elif col == (0, 1):
            kind = SnakeKind.RIGHT
        else:
            kind = SnakeKind.ODD
        length = len(squares) - 1
        if (kind is SnakeKind.ODD) != (length % 2 == 1):
            raise InvariantError(f"snake {m} has the wrong length parity")
        snakes.append(Snake(m, tuple(squares), kind, lo.horizontal, up.horizontal))
    _assert_code_lengths(snakes)
    _assert_disjoint_links(snakes)
    return snakes


def _assert_code_lengths(snakes: list[Snake]) -> None:
    # Even snake lengths must match the counting rule on code columns:
    # a left snake of length 2m at column i has m + 1 = #(0,1) minus #(1,0)
    # columns after i; mirrored before i for right snakes.
    kinds = [s.kind for s in snakes]
    for s in snakes:
        if s.kind is SnakeKind.LEFT:
            m1 = sum(1 for j in range(s.index, len(snakes)) if kinds[j] is SnakeKind.RIGHT)
            m1 -= sum(1 for j in range(s.index, len(snakes)) if kinds[j] is SnakeKind.LEFT)
        elif s.kind is SnakeKind.RIGHT:
            m1 = sum(1 for j in range(s.index - 1) if kinds[j] is SnakeKind.LEFT)
            m1 -= sum(1 for j in range(s.index - 1) if kinds[j] is SnakeKind.RIGHT)
        else:
            continue
        if s.length != 2 * (m1 - 1):
            raise InvariantError(
                f"snake {s.index}: geometric length {s.length} != code length {2 * (m1 - 1)}"
            )


def _assert_disjoint_links(snakes: list[Snake]) -> None:
    seen: set[frozenset[Square]] = set()
    for s in snakes:
        for link in s.links():
            key = frozenset(link)
            if key in seen:
                raise InvariantError(f"duplicate link across snakes: {sorted(key)}")
            seen.add(key)


def snake_sequence(shape: SkewShape) -> SnakeSequence:
    symbols = []
    for s in snakes_of(shape):
        if s.kind is SnakeKind.LEFT:
            symbols.append(f"L{s.length // 2}")
        elif s.kind is SnakeKind.RIGHT:
            symbols.append(f"R{s.length // 2}")
        else:
            symbols.append("O")
    return SnakeSequence(tuple(symbols))


def canonical_pairing(shape: SkewShape) -> IntervalSet:
    """The unique noncrossing interval set (parenthesis matching of the
    snake sequence); left and right partners carry equal subscripts."""
    shape = normalize(shape)
    code = codes.code_of(shape)
    pairs = codes.noncrossing_pairing(code)
    symbols = snake_sequence(shape).symbols
    for u, v in pairs:
        if symbols[u - 1][1:] != symbols[v - 1][1:]:
            raise InvariantError(
                f"pairing subscripts differ: {symbols[u - 1]} vs {symbols[v - 1]}"
            )
    return IntervalSet(pairs)


def _lr_positions(code: codes.Code) -> tuple[list[int], list[int]]:
    ls = [m for m in range(1, code.k + 1) if code.column(m) == (1, 0)]
    rs = [m for m in range(1, code.k + 1) if code.column(m) == (0, 1)]
    return ls, rs


def interval_sets(shape: SkewShape) -> Iterator[IntervalSet]:
    """All matchings of left columns to later right columns, each exactly
    once. Deterministic order: the rightmost left column picks first, with
    candidate right columns in increasing position."""
    code = codes.code_of(normalize(shape))
    ls, rs = _lr_positions(code)

    def rec(idx: int, used: frozenset[int], acc: list[tuple[int, int]]) -> Iterator[IntervalSet]:
        if idx < 0:
            yield IntervalSet(tuple(acc))
            return
        u = ls[idx]
        for v in rs:
            if v > u and v not in used:
                acc.append((u, v))
                yield from rec(idx - 1, used | {v}, acc)
                acc.pop()

    yield from rec(len(ls) - 1, frozenset(), [])


def is_count(shape: SkewShape) -> int:
    """Number of interval sets: product of (1 + length/2) over left snakes,
    asserted equal to the same product over right snakes."""
    left = 1
    right = 1
    for s in snakes_of(shape):
        if s.kind is SnakeKind.LEFT:
            left *= 1 + s.length // 2
        elif s.kind is SnakeKind.RIGHT:
            right *= 1 + s.length // 2
    if left != right:
        raise InvariantError(f"interval-set counts disagree: {left} vs {right}")
    return left


def crossings(iset: IntervalSet) -> int:
    """Number of pairs with u_i < u_j < v_i < v_j (strict interleavings)."""
    ps = iset.pairs
    return sum(
        1
        for a in range(len(ps))
        for b in range(len(ps))
        if ps[a][0] < ps[b][0] < ps[a][1] < ps[b][1]
    )


def z_breakdown(shape: SkewShape) -> tuple[tuple[int, int, int], ...]:
    """Per-pair (u, v, zeros of c strictly between) over the canonical pairing."""
    shape = normalize(shape)
    code = codes.code_of(shape)
    out = []
    for u, v in canonical_pairing(shape).pairs:
        z = sum(1 for m in range(u + 1, v) if code.c[m - 1] == 0)
        out.append((u, v, z))
    return tuple(out)


def z_statistic(shape: SkewShape) -> int:
    """Total height of the greedy tableau, computed over the canonical
    pairing and the original top code word; both routes are asserted equal."""
    z = sum(item[2] for item in z_breakdown(shape))
    greedy = sum(r.height for r in codes.greedy_tableau(shape))
    if z != greedy:
        raise InvariantError(f"z statistic {z} differs from greedy height {greedy}")
    return z


def validate_interval_set(shape: SkewShape, iset: IntervalSet) -> None:
    """Raise ValueError unless iset is an interval set of this shape."""
    code = codes.code_of(normalize(shape))
    ls, rs = _lr_positions(code)
    if len(iset.pairs) != len(ls):
        raise ValueError(f"interval set has {len(iset.pairs)} pairs, expected {len(ls)}")
    for u, v in iset.pairs:
        if u not in ls:
            raise ValueError(f"{u} is not a left column of the shape code")
        if v not in rs:
            raise ValueError(f"{v} is not a right column of the shape code")
