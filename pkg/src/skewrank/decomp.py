"""Border strip decompositions and tableaux of a skew shape.

Decompositions are in bijection with per-snake choices of pairwise
nonconsecutive links: the strips are the connected components of the cell
graph whose edges are the chosen links. Minimal decompositions take a
maximum-size link choice on every snake; tableaux order the removals.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from math import factorial

from . import codes, snakes as snakes_mod
from .shapes import InvariantError, Partition, ShapeError, SkewShape, Square, normalize
from .snakes import IntervalSet, Snake, SnakeKind


@dataclass(frozen=True)
class BorderStrip:
    """A ribbon: consecutive squares move right or up from init to fin."""

    squares: tuple[Square, ...]

    def __post_init__(self) -> None:
        sq = tuple(map(tuple, self.squares))
        object.__setattr__(self, "squares", sq)
        if not sq:
            raise ShapeError("a border strip is nonempty")
        for (i, j), (i2, j2) in zip(sq, sq[1:]):
            if (i2, j2) not in ((i - 1, j), (i, j + 1)):
                raise ShapeError(f"not a border strip path: {sq}")

    @property
    def size(self) -> int:
        return len(self.squares)

    @property
    def height(self) -> int:
        """Rows spanned minus one."""
        rows = [i for i, _ in self.squares]
        return max(rows) - min(rows)

    @property
    def init(self) -> Square:
        return self.squares[0]

    @property
    def fin(self) -> Square:
        return self.squares[-1]

    def to_json(self) -> list[list[int]]:
        return [[i, j] for i, j in self.squares]


def border_strip_from_cells(cells: Iterable[Square]) -> BorderStrip:
    """Order a cell set along its ribbon path; raises if it is not one.

    Consecutive squares of a ribbon sit on consecutive diagonals j - i, so
    sorting by diagonal recovers the path when one exists.
    """
    ordered = sorted(set(map(tuple, cells)), key=lambda sq: sq[1] - sq[0])
    return BorderStrip(tuple(ordered))


@dataclass(frozen=True)
class Decomposition:
    """A partition of the cells into border strips."""

    strips: tuple[BorderStrip, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.strips, key=lambda b: (-b.init[0], b.init[1])))
        object.__setattr__(self, "strips", ordered)

    @property
    def n_strips(self) -> int:
        return len(self.strips)

    @property
    def type(self) -> Partition:
        return tuple(sorted((b.size for b in self.strips), reverse=True))

    def links_used(self) -> frozenset[frozenset[Square]]:
        out = set()
        for b in self.strips:
            for pair in zip(b.squares, b.squares[1:]):
                out.add(frozenset(pair))
        return frozenset(out)

    def cells(self) -> frozenset[Square]:
        return frozenset(sq for b in self.strips for sq in b.squares)

    def to_json(self) -> list[list[list[int]]]:
        return [b.to_json() for b in self.strips]


@dataclass(frozen=True)
class Tableau:
    """An ordered strip removal sequence; pairs are code columns, outermost
    strip first. The type composition lists sizes in growth order."""

    pairs: tuple[tuple[int, int], ...]
    removals: tuple[codes.StripRemoval, ...]
    strips: tuple[BorderStrip, ...]

    @property
    def total_height(self) -> int:
        return sum(r.height for r in self.removals)

    @property
    def type(self) -> tuple[int, ...]:
        return tuple(r.size for r in reversed(self.removals))

    def decomposition(self) -> Decomposition:
        return Decomposition(self.strips)


def _link_choices(n_links: int, maximal: bool) -> list[tuple[int, ...]]:
    """Nonconsecutive subsets of link positions 1..n_links, lexicographic."""
    if n_links < 0:
        raise ValueError("negative link count")
    if n_links > 24:
        raise ValueError(f"snake too large to enumerate link choices: {n_links}")
    subsets: list[tuple[int, ...]] = []
    for mask in range(1 << n_links):
        if mask & (mask << 1):
            continue
        subsets.append(tuple(p + 1 for p in range(n_links) if mask >> p & 1))
    if maximal:
        top = max(len(s) for s in subsets)
        subsets = [s for s in subsets if len(s) == top]
    subsets.sort()
    return subsets


def decomposition_from_links(
    shape: SkewShape, choice: Mapping[int, Iterable[int]]
) -> Decomposition:
    """The unique decomposition using exactly the chosen links.

    choice maps a snake index to link positions along that snake's path
    (1-based; link p joins path squares p and p+1). Within one snake no two
    chosen positions may be consecutive.
    """
    shape = normalize(shape)
    snakes = snakes_mod.snakes_of(shape)
    return _decomposition_from_links(shape, snakes, choice)


def _decomposition_from_links(shape, snakes, choice) -> Decomposition:
    by_index = {s.index: s for s in snakes}
    edges: list[tuple[Square, Square]] = []
    for idx, positions in choice.items():
        if idx not in by_index:
            raise ValueError(f"no snake with index {idx}")
        snake = by_index[idx]
        pos = sorted(set(int(p) for p in positions))
        if pos and (pos[0] < 1 or pos[-1] > max(snake.length, 0)):
            raise ValueError(f"link position out of range for snake {idx}: {pos}")
        if any(b - a == 1 for a, b in zip(pos, pos[1:])):
            raise ValueError(f"consecutive links chosen on snake {idx}: {pos}")
        path = snake.squares
        edges.extend((path[p - 1], path[p]) for p in pos)

    parent: dict[Square, Square] = {sq: sq for sq in shape.cells()}

    def find(x: Square) -> Square:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict[Square, list[Square]] = {}
    for sq in parent:
        groups.setdefault(find(sq), []).append(sq)
    strips = tuple(border_strip_from_cells(g) for g in groups.values())
    deco = Decomposition(strips)
    if deco.n_strips != shape.size - len(edges):
        raise InvariantError("strip count does not match cells minus links")
    return deco


def all_decompositions(shape: SkewShape) -> Iterator[Decomposition]:
    """Every border strip decomposition, one per admissible link choice.

    The stream length is the product of Fibonacci numbers F_{a+1} over the
    snake square counts a.
    """
    yield from _decomposition_stream(shape, maximal=False)


def minimal_decompositions(shape: SkewShape) -> Iterator[Decomposition]:
    """Exactly the decompositions into rank(shape) strips."""
    yield from _decomposition_stream(shape, maximal=True)


def _decomposition_stream(shape: SkewShape, maximal: bool) -> Iterator[Decomposition]:
    shape = normalize(shape)
    snakes = snakes_mod.snakes_of(shape)
    per_snake = [
        (s.index, _link_choices(max(s.length, 0), maximal)) for s in snakes
    ]
    for combo in itertools.product(*(choices for _, choices in per_snake)):
        choice = {idx: positions for (idx, _), positions in zip(per_snake, combo)}
        yield _decomposition_from_links(shape, snakes, choice)


def _fibonacci(n: int) -> int:
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class CountReport:
    total: int
    mbsd: int
    mbst: int
    by_type: dict[Partition, int]


def is_sigma(shape: SkewShape) -> dict[Partition, int]:
    """Number of interval sets of each type."""
    out: dict[Partition, int] = {}
    for iset in snakes_mod.interval_sets(shape):
        out[iset.type] = out.get(iset.type, 0) + 1
    return out


def counting_report(shape: SkewShape) -> CountReport:
    """Closed-form decomposition counts.

    total decompositions = prod F_{a_i + 1} over snake square counts;
    minimal decompositions = is^2; minimal tableaux = r! * is; by type,
    is_sigma * is.
    """
    shape = normalize(shape)
    snakes = snakes_mod.snakes_of(shape)
    total = 1
    even_product = 1
    for s in snakes:
        total *= _fibonacci(len(s.squares) + 1)
        if s.kind in (SnakeKind.LEFT, SnakeKind.RIGHT):
            even_product *= 1 + s.length // 2
    count = snakes_mod.is_count(shape)
    if even_product != count * count:
        raise InvariantError(
            f"even-snake product {even_product} differs from is^2 = {count * count}"
        )
    r = codes.code_of(shape).rank
    sigma = {t: n * count for t, n in is_sigma(shape).items()}
    return CountReport(total=total, mbsd=count * count,
                       mbst=factorial(r) * count, by_type=sigma)


def tableaux_of_interval_set(
    shape: SkewShape, iset: IntervalSet
) -> Iterator[Tableau]:
    """The r! tableaux of an interval set, one per ordering of its pairs.

    Every ordering must be realizable as successive strip removals; a
    failing swap would contradict the minimal-tableau correspondence and
    raises InvariantError.
    """
    shape = normalize(shape)
    snakes_mod.validate_interval_set(shape, iset)
    base = codes.code_of(shape)
    for order in itertools.permutations(iset.pairs):
        code = base
        removals = []
        strips = []
        for u, v in order:
            before = codes.frame_cells(code)
            try:
                code, removal = codes.remove_strip(code, u, v - u)
            except ValueError as exc:
                raise InvariantError(
                    f"interval-set ordering {order} is not removable: {exc}"
                ) from exc
            removals.append(removal)
            strips.append(border_strip_from_cells(before - codes.frame_cells(code)))
        yield Tableau(tuple(order), tuple(removals), tuple(strips))


def _frame_word_of_cells(cells: frozenset[Square], nrows: int, width: int,
                         mu: tuple[int, ...]) -> tuple[int, ...] | None:
    """Top code word of a cell subset inside a fixed frame, or None when the
    subset is not of the form nu/mu for a partition nu containing mu."""
    lam = list(mu)
    for i in range(1, nrows + 1):
        cols = sorted(j for r, j in cells if r == i)
        if cols:
            if cols[0] != mu[i - 1] + 1 or cols != list(range(cols[0], cols[-1] + 1)):
                return None
            lam[i - 1] = cols[-1]
    for upper, lower in zip(lam, lam[1:]):
        if upper < lower:
            return None
    bits = []
    x = 0
    for i in range(nrows, 0, -1):
        bits.extend([1] * (lam[i - 1] - x))
        x = lam[i - 1]
        bits.append(0)
    bits.extend([1] * (width - len(bits)))
    return tuple(bits)


def interval_set_of(shape: SkewShape, deco: Decomposition) -> IntervalSet:
    """The interval set whose tableaux produce this minimal decomposition.

    Strips are removed in some code-valid order and the (start, end) column
    pairs collected. The result is asserted independent of the removal
    order: all orders are explored when the rank is small, otherwise two
    opposite preference orders are compared.
    """
    shape = normalize(shape)
    code = codes.code_of(shape)
    if deco.cells() != shape.cells():
        raise ValueError("decomposition does not cover this shape")
    if deco.n_strips != code.rank:
        raise ValueError(
            f"decomposition has {deco.n_strips} strips; interval sets index the "
            f"minimal ones ({code.rank})"
        )
    r = deco.n_strips
    results = _pairs_via_orders(code, deco, all_orders=(r <= 4))
    if len(results) != 1:
        raise InvariantError(
            f"removal order changed the interval set: {sorted(results)}"
        )
    return IntervalSet(next(iter(results)))


def _pairs_via_orders(code: codes.Code, deco: Decomposition,
                      all_orders: bool) -> set[tuple[tuple[int, int], ...]]:
    nrows = code.c.count(0)
    width = code.k
    _, mu = codes.frame_profiles(code)
    strips = [frozenset(b.squares) for b in deco.strips]

    def step(word: tuple[int, ...], cells: frozenset[Square],
             remaining: tuple[int, ...]):
        options = []
        for t in remaining:
            new_cells = cells - strips[t]
            new_word = _frame_word_of_cells(new_cells, nrows, width, mu)
            if new_word is None:
                continue
            swaps = [m for m in range(width) if word[m] != new_word[m]]
            if len(swaps) != 2:
                continue
            u, v = swaps[0] + 1, swaps[1] + 1
            if word[u - 1] != 1 or word[v - 1] != 0:
                continue
            options.append((t, (u, v), new_word, new_cells))
        return options

    found: set[tuple[tuple[int, int], ...]] = set()

    def explore(word, cells, remaining, acc, pick_all: bool, prefer_last: bool):
        if not remaining:
            found.add(tuple(sorted(acc)))
            return
        options = step(word, cells, remaining)
        if not options:
            raise InvariantError("no strip of the decomposition is removable")
        if not pick_all:
            options = [options[-1] if prefer_last else options[0]]
        for t, pair, new_word, new_cells in options:
            rest = tuple(x for x in remaining if x != t)
            explore(new_word, new_cells, rest, acc + [pair], pick_all, prefer_last)

    start_word = code.c
    start_cells = codes.frame_cells(code)
    todo = tuple(range(len(strips)))
    if all_orders:
        explore(start_word, start_cells, todo, [], True, False)
    else:
        explore(start_word, start_cells, todo, [], False, False)
        explore(start_word, start_cells, todo, [], False, True)
    return found


@dataclass(frozen=True)
class LatinSquare:
    """Minimal decompositions arranged by right-snake and left-snake link
    choices, with interval-set indices forming a Latin square."""

    legend: tuple[IntervalSet, ...]
    row_choices: tuple[dict, ...]
    col_choices: tuple[dict, ...]
    entries: tuple[tuple[Decomposition, ...], ...]
    indices: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "legend": [iset.to_json() for iset in self.legend],
            "indices": [list(row) for row in self.indices],
            "entries": [[d.to_json() for d in row] for row in self.entries],
        }


def latin_square(shape: SkewShape) -> LatinSquare:
    """Rows range over right-snake maximal link choices, columns over left
    ones (odd-snake links forced). Entry (F, G) holds the decomposition
    using those links; its index in the interval-set order fills a matrix
    asserted to be a Latin square whose rows all realize the full is_sigma
    type profile.
    """
    shape = normalize(shape)
    snakes = snakes_mod.snakes_of(shape)
    legend = tuple(snakes_mod.interval_sets(shape))
    index_of = {iset: n for n, iset in enumerate(legend, start=1)}

    forced: dict[int, tuple[int, ...]] = {}
    rights: list[tuple[int, list[tuple[int, ...]]]] = []
    lefts: list[tuple[int, list[tuple[int, ...]]]] = []
    for s in snakes:
        choices = _link_choices(max(s.length, 0), maximal=True)
        if s.kind is SnakeKind.RIGHT:
            rights.append((s.index, choices))
        elif s.kind is SnakeKind.LEFT:
            lefts.append((s.index, choices))
        else:
            forced[s.index] = choices[0]

    # The snake with the largest column index varies slowest.
    def combos(groups):
        groups = list(reversed(groups))
        out = []
        for combo in itertools.product(*(cs for _, cs in groups)):
            out.append({idx: pos for (idx, _), pos in zip(groups, combo)})
        return out

    row_choices = combos(rights)
    col_choices = combos(lefts)
    entries = []
    indices = []
    for rc in row_choices:
        row_entries = []
        row_indices = []
        for cc in col_choices:
            choice = dict(forced)
            choice.update(rc)
            choice.update(cc)
            deco = _decomposition_from_links(shape, snakes, choice)
            iset = interval_set_of(shape, deco)
            row_entries.append(deco)
            row_indices.append(index_of[iset])
        entries.append(tuple(row_entries))
        indices.append(tuple(row_indices))

    size = len(legend)
    full = set(range(1, size + 1))
    for row in indices:
        if set(row) != full:
            raise InvariantError(f"row is not a permutation: {row}")
    for col in zip(*indices) if indices else []:
        if set(col) != full:
            raise InvariantError(f"column is not a permutation: {col}")
    profile = is_sigma(shape)
    for row_entries in entries:
        got: dict[Partition, int] = {}
        for deco in row_entries:
            got[deco.type] = got.get(deco.type, 0) + 1
        if got != profile:
            raise InvariantError(f"row type profile {got} differs from {profile}")
    return LatinSquare(
        legend=legend,
        row_choices=tuple(row_choices),
        col_choices=tuple(col_choices),
        entries=tuple(tuple(r) for r in entries),
        indices=tuple(tuple(r) for r in indices),
    )

