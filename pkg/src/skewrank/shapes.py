"""Partitions, squares, and skew shapes.

Everything downstream derives from SkewShape: an immutable pair of nested
integer partitions, identified up to translation. Rows use the English
(matrix) convention: row 1 is the top row, columns count from the left,
and the cell set of lambda/mu is {(i, j) : mu_i < j <= lambda_i}.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

Partition = tuple[int, ...]
Square = tuple[int, int]


class ShapeError(ValueError):
    """Malformed shape literal, non-partition data, or mu not inside lambda."""


class InvariantError(RuntimeError):
    """A cross-checked identity failed. Indicates a bug, never bad input."""


def as_partition(parts: Iterable[int]) -> Partition:
    """Coerce to a weakly decreasing tuple of positive ints, dropping trailing zeros."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ShapeError(f"partition parts must be positive: {p!r}")
    if any(a < b for a, b in zip(p, p[1:])):
        raise ShapeError(f"partition parts must be weakly decreasing: {p!r}")
    return p


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram lambda/mu. Immutable; safe to share across workers."""

    lam: Partition
    mu: Partition = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", as_partition(self.lam))
        object.__setattr__(self, "mu", as_partition(self.mu))
        if len(self.mu) > len(self.lam):
            raise ShapeError(f"mu has more parts than lambda: {self.lam}/{self.mu}")
        for i, m in enumerate(self.mu):
            if m > self.lam[i]:
                raise ShapeError(f"mu exceeds lambda in row {i + 1}: {self.lam}/{self.mu}")

    @property
    def n_rows(self) -> int:
        return len(self.lam)

    @property
    def mu_padded(self) -> Partition:
        return self.mu + (0,) * (len(self.lam) - len(self.mu))

    @property
    def size(self) -> int:
        return sum(self.lam) - sum(self.mu)

    @property
    def is_empty(self) -> bool:
        return self.size == 0

    def row_run(self, i: int) -> tuple[int, int]:
        """Half-open column run (mu_i, lam_i] of 1-based row i."""
        return self.mu_padded[i - 1], self.lam[i - 1]

    def cells(self) -> frozenset[Square]:
        mu = self.mu_padded
        return frozenset(
            (i + 1, j)
            for i in range(len(self.lam))
            for j in range(mu[i] + 1, self.lam[i] + 1)
        )

    def __contains__(self, sq: Square) -> bool:
        i, j = sq
        if not 1 <= i <= len(self.lam):
            return False
        lo, hi = self.row_run(i)
        return lo < j <= hi

    def literal(self) -> str:
        """Shape literal accepted by parse_shape. Empty shapes have no literal."""
        if not self.lam:
            raise ShapeError("the empty shape has no literal")
        out = _parts_literal(self.lam)
        if self.mu:
            out += "/" + _parts_literal(self.mu)
        return out

    def __str__(self) -> str:
        return self.literal() if self.lam else "(empty)"


EMPTY = SkewShape((), ())


def _parts_literal(parts: Partition) -> str:
    if all(1 <= x <= 9 for x in parts):
        return "".join(str(x) for x in parts)
    return ",".join(str(x) for x in parts)


def _parse_parts(token: str) -> Partition:
    if not token:
        raise ShapeError("empty part list in shape literal")
    if "," in token:
        items = token.split(",")
        if any(not it.isdigit() for it in items):
            raise ShapeError(f"bad comma-separated part list: {token!r}")
        parts = tuple(int(it) for it in items)
    elif all(ch in "123456789" for ch in token):
        parts = tuple(int(ch) for ch in token)
    elif token.isdigit():
        # A lone multi-digit number containing a 0, like "10", is one part.
        parts = (int(token),)
    else:
        raise ShapeError(f"bad part list: {token!r}")
    return as_partition(parts)


def parse_shape(text: str) -> SkewShape:
    """Parse a shape literal such as '8874/411', '3', or '10,9,2/3,1'.

    Each side of the optional '/' is either a string of digits 1-9 (one part
    per digit) or a comma-separated list of positive integers. Whitespace is
    forbidden.
    """
    if not isinstance(text, str) or not text or any(ch.isspace() for ch in text):
        raise ShapeError(f"bad shape literal: {text!r}")
    head, sep, tail = text.partition("/")
    lam = _parse_parts(head)
    mu = _parse_parts(tail) if sep else ()
    return SkewShape(lam, mu)


def shape_from_cells(cells: Iterable[Square]) -> SkewShape:
    """Normalized shape of a translated cell set.

    The cells are translated so the least occupied row and column are 1 and
    (lambda, mu) re-derived. Interior empty rows are kept: an empty row
    between occupied ones gets lambda_i = mu_i equal to the lambda of the
    row below it.
    """
    cs = {(int(i), int(j)) for i, j in cells}
    if not cs:
        return EMPTY
    rmin = min(i for i, _ in cs)
    cmin = min(j for _, j in cs)
    cs = {(i - rmin + 1, j - cmin + 1) for i, j in cs}
    nrows = max(i for i, _ in cs)
    runs: list[tuple[int, int] | None] = [None] * nrows
    for i in range(1, nrows + 1):
        cols = sorted(j for r, j in cs if r == i)
        if not cols:
            continue
        if cols != list(range(cols[0], cols[-1] + 1)):
            raise ShapeError(f"row {i} is not a contiguous run: {cols}")
        runs[i - 1] = (cols[0], cols[-1])
    lam = [0] * nrows
    mu = [0] * nrows
    for i in range(nrows - 1, -1, -1):
        run = runs[i]
        if run is None:
            lam[i] = mu[i] = lam[i + 1]
        else:
            mu[i] = run[0] - 1
            lam[i] = run[1]
    return SkewShape(tuple(lam), tuple(mu))


def normalize(shape: SkewShape) -> SkewShape:
    """Canonical representative up to translation; idempotent."""
    return shape_from_cells(shape.cells())


def _diagonal_run(cells: frozenset[Square], i: int, j: int) -> int:
    n = 0
    while (i + n, j + n) in cells:
        n += 1
    return n


def diagonal_rank(shape: SkewShape) -> int:
    """Durfee/Frobenius rank: outside-diagonal squares minus inside-diagonal squares.

    An outside top corner has neither its upper nor its left neighbour in the
    shape; an inside top corner has both but not the upper-left one. Each
    corner contributes the length of the diagonal grown down-right from it.
    """
    cells = shape.cells()
    d = 0
    for i, j in cells:
        up = (i - 1, j) in cells
        left = (i, j - 1) in cells
        if not up and not left:
            d += _diagonal_run(cells, i, j)
        elif up and left and (i - 1, j - 1) not in cells:
            d -= _diagonal_run(cells, i, j)
    return d


def rotate180(shape: SkewShape) -> SkewShape:
    """Rotate the diagram 180 degrees and renormalize; an involution."""
    if shape.is_empty:
        return EMPTY
    h = shape.n_rows + 1
    k = shape.lam[0] + 1
    return shape_from_cells((h - i, k - j) for i, j in shape.cells())


def connected_components(shape: SkewShape) -> list[SkewShape]:
    """Components under edge adjacency, normalized, bottom-left first."""
    cells = set(shape.cells())
    comps: list[set[Square]] = []
    while cells:
        seed = cells.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            i, j = frontier.pop()
            for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                if nb in cells:
                    cells.remove(nb)
                    comp.add(nb)
                    frontier.append(nb)
        comps.append(comp)
    comps.sort(key=lambda c: -max(i for i, _ in c))
    return [shape_from_cells(c) for c in comps]


def enumerate_shapes(max_rows: int, max_cols: int, max_cells: int) -> Iterator[SkewShape]:
    """All normalized nonempty skew shapes with lambda inside a max_rows x
    max_cols box and at most max_cells cells, each exactly once, in
    lexicographic (lambda, mu) order.
    """
    shapes = sorted(_generate_shapes(max_rows, max_cols, max_cells),
                    key=lambda s: (s.lam, s.mu))
    yield from shapes


def _generate_shapes(max_rows: int, max_cols: int, max_cells: int) -> Iterator[SkewShape]:
    if max_rows <= 0 or max_cols <= 0 or max_cells <= 0:
        return
    # Depth-first over per-row column runs, top row first. None = empty
    # interior row. Emission happens whenever the current bottom row is
    # occupied and column 1 is used somewhere, which is exactly the set of
    # normalize() fixed points.
    rows: list[tuple[int, int] | None] = []

    def build() -> SkewShape:
        nrows = len(rows)
        lam = [0] * nrows
        mu = [0] * nrows
        for i in range(nrows - 1, -1, -1):
            run = rows[i]
            if run is None:
                lam[i] = mu[i] = lam[i + 1]
            else:
                mu[i] = run[0] - 1
                lam[i] = run[1]
        return SkewShape(tuple(lam), tuple(mu))

    def rec(cells: int, last: tuple[int, int] | None, gap: int,
            col1: bool) -> Iterator[SkewShape]:
        if rows and rows[-1] is not None and col1:
            yield build()
        if len(rows) == max_rows:
            return
        if last is None:
            u_hi = max_cols
        elif gap == 0:
            u_hi = last[0]
        else:
            u_hi = last[0] - 1
        for u in range(1, u_hi + 1):
            if gap == 0 and last is not None:
                v_hi = last[1]
            elif gap > 0:
                v_hi = last[0] - 1  # disconnection: run ends left of the start above
            else:
                v_hi = max_cols
            v_hi = min(v_hi, max_cols, u + (max_cells - cells) - 1)
            for v in range(u, v_hi + 1):
                rows.append((u, v))
                yield from rec(cells + v - u + 1, (u, v), 0, col1 or u == 1)
                rows.pop()
        if rows:
            rows.append(None)
            yield from rec(cells, last, gap + 1, col1)
            rows.pop()

    yield from rec(0, None, 0, False)


def partitions_of(n: int, length: int | None = None,
                  max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in decreasing part order; optionally with an exact
    number of parts and a cap on the largest part."""
    if n < 0:
        return
    if max_part is None:
        max_part = n

    def rec(rem: int, cap: int, acc: list[int]) -> Iterator[Partition]:
        if rem == 0:
            if length is None or len(acc) == length:
                yield tuple(acc)
            return
        if length is not None:
            if len(acc) >= length:
                return
            if rem < length - len(acc):  # each remaining slot needs a cell
                return
        hi = min(cap, rem)
        for part in range(hi, 0, -1):
            acc.append(part)
            yield from rec(rem - part, part, acc)
            acc.pop()

    if n == 0:
        if length in (None, 0):
            yield ()
        return
    yield from rec(n, max_part, [])
