"""Comet codes: the two aligned binary boundary words of a skew shape.

The boundary of lambda/mu consists of two lattice paths from the bottom-left
point p to the top-right point q: the lower envelope (following lambda) and
the upper envelope (following mu). Writing 1 for an east step and 0 for a
north step and aligning the two walks by step index gives the reduced code.
Removing a border strip of size p is a swap c_i: 1 -> 0, c_{i+p}: 0 -> 1 in
the top word, valid as long as every prefix keeps at least as many (1,0)
columns as (0,1) columns.
"""

from __future__ import annotations

from dataclasses import dataclass

from .shapes import (
    EMPTY,
    InvariantError,
    ShapeError,
    SkewShape,
    Square,
    normalize,
    shape_from_cells,
)


@dataclass(frozen=True)
class Code:
    """Reduced two-row code; c reads the lower envelope, d the upper."""

    c: tuple[int, ...]
    d: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(int(b) for b in self.c)
        d = tuple(int(b) for b in self.d)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)
        if len(c) != len(d):
            raise ShapeError(f"code rows differ in length: {len(c)} vs {len(d)}")
        if any(b not in (0, 1) for b in c + d):
            raise ShapeError("code entries must be bits")
        if sum(c) != sum(d):
            raise ShapeError("code rows must have equally many 1s")
        margin = 0
        for idx, (cb, db) in enumerate(zip(c, d)):
            if (cb, db) == (1, 0):
                margin += 1
            elif (cb, db) == (0, 1):
                margin -= 1
            if margin < 0:
                raise ShapeError(f"code prefix condition fails at column {idx + 1}")

    @property
    def k(self) -> int:
        return len(self.c)

    @property
    def rank(self) -> int:
        return sum(1 for cb, db in zip(self.c, self.d) if (cb, db) == (0, 1))

    def column(self, m: int) -> tuple[int, int]:
        """1-based column m as the pair (c_m, d_m)."""
        return self.c[m - 1], self.d[m - 1]

    def to_json(self) -> dict:
        return {"c": "".join(map(str, self.c)), "d": "".join(map(str, self.d))}


@dataclass(frozen=True)
class StripRemoval:
    """One border strip removal step, recorded code-side and geometrically."""

    start: int
    end: int
    size: int
    height: int
    init: Square
    fin: Square


@dataclass(frozen=True)
class EnvelopeStep:
    horizontal: bool
    x: int  # lattice x where the step starts
    y: int  # lattice y where the step starts; rows grow downward
    square: Square  # incident square; outside the shape only on pinched boundary

    @property
    def edge(self) -> tuple[bool, int, int]:
        return (self.horizontal, self.x, self.y)


def envelope_steps(shape: SkewShape) -> tuple[list[EnvelopeStep], list[EnvelopeStep]]:
    """The two boundary walks from p to q, one entry per reduced-code column.

    Step m of the lower and upper walk both occupy code column m; a shared
    geometric edge therefore always shares its index, which is asserted.
    """
    shape = normalize(shape)
    lam = shape.lam
    mu = shape.mu_padded
    nrows = len(lam)
    lower: list[EnvelopeStep] = []
    x = 0
    for i in range(nrows, 0, -1):
        while x < lam[i - 1]:
            lower.append(EnvelopeStep(True, x, i, (i, x + 1)))
            x += 1
        lower.append(EnvelopeStep(False, x, i, (i, x)))
    upper: list[EnvelopeStep] = []
    x = 0
    for i in range(nrows, 0, -1):
        while x < mu[i - 1]:
            upper.append(EnvelopeStep(True, x, i, (i + 1, x + 1)))
            x += 1
        upper.append(EnvelopeStep(False, x, i, (i, x + 1)))
    top = lam[0] if lam else 0
    while x < top:
        upper.append(EnvelopeStep(True, x, 0, (1, x + 1)))
        x += 1
    if len(lower) != len(upper):
        raise InvariantError("envelope walks disagree in length")
    return lower, upper


def code_of(shape: SkewShape) -> Code:
    """Reduced code of a shape: 1 per east step, 0 per north step."""
    lower, upper = envelope_steps(shape)
    code = Code(tuple(int(s.horizontal) for s in lower),
                tuple(int(s.horizontal) for s in upper))
    if code.k:
        if code.column(1) == (0, 0) or code.column(code.k) == (1, 1):
            raise InvariantError("code of a normalized shape must be reduced")
    return code


def frame_profiles(code: Code) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(lambda, mu) read off the code inside its own fixed frame.

    The frame has one row per 0 in each word; column indices are not
    renormalized, so intermediate codes produced by strip removal stay
    comparable with the original.
    """
    def profile(bits: tuple[int, ...]) -> tuple[int, ...]:
        nrows = bits.count(0)
        out = [0] * nrows
        seen = 0
        ones = 0
        for b in bits:
            if b:
                ones += 1
            else:
                out[nrows - 1 - seen] = ones
                seen += 1
        return tuple(out)

    lam = profile(code.c)
    mu = profile(code.d)
    if len(lam) != len(mu):
        raise InvariantError("code rows disagree on the number of frame rows")
    if any(m > l for l, m in zip(lam, mu)):
        raise InvariantError("frame profiles are not nested")
    return lam, mu


def frame_cells(code: Code) -> frozenset[Square]:
    """Cell set of the code in its fixed frame (no translation)."""
    lam, mu = frame_profiles(code)
    return frozenset(
        (i + 1, j) for i in range(len(lam)) for j in range(mu[i] + 1, lam[i] + 1)
    )


def shape_of(code: Code) -> SkewShape:
    """Inverse of code_of up to normalization."""
    if not code.k:
        return EMPTY
    return shape_from_cells(frame_cells(code))


def rank_from_code(code: Code) -> int:
    """Number of (0,1) columns, which equals the number of (1,0) columns."""
    return code.rank


def lower_step_square(c: tuple[int, ...], m: int) -> Square:
    """Square incident to step m of the lower walk of the word c, in frame
    coordinates."""
    nrows = c.count(0)
    zeros_before = c[: m - 1].count(0)
    ones_before = (m - 1) - zeros_before
    row = nrows - zeros_before
    if c[m - 1] == 1:
        return (row, ones_before + 1)
    return (row, ones_before)


def swap_margin_ok(c: tuple[int, ...], d: tuple[int, ...], i: int, j: int) -> bool:
    """Whether swapping c_i: 1 -> 0 and c_j: 0 -> 1 keeps every prefix valid.

    The swap lowers the (1,0)-minus-(0,1) running margin by one exactly on
    columns i..j-1, so it is valid iff the margin is positive there.
    """
    margin = 0
    for m in range(j - 1):
        cb, db = c[m], d[m]
        if (cb, db) == (1, 0):
            margin += 1
        elif (cb, db) == (0, 1):
            margin -= 1
        if m >= i - 1 and margin < 1:
            return False
    return True


def remove_strip(code: Code, i: int, p: int) -> tuple[Code, StripRemoval]:
    """Remove the border strip of size p starting at column i.

    Requires c_i = 1 and c_{i+p} = 0; raises ValueError when the indices are
    invalid or the prefix condition would break (the strip is not removable).
    The recorded height is the number of 0s strictly between the two columns
    at removal time.
    """
    j = i + p
    if p < 1 or i < 1 or j > code.k:
        raise ValueError(f"invalid strip columns ({i}, {j}) for a code of length {code.k}")
    if code.c[i - 1] != 1:
        raise ValueError(f"column {i} does not start a strip (c_{i} != 1)")
    if code.c[j - 1] != 0:
        raise ValueError(f"column {j} does not end a strip (c_{j} != 0)")
    if not swap_margin_ok(code.c, code.d, i, j):
        raise ValueError(
            f"strip ({i}, {j}) is not removable: prefix condition fails inside the swap"
        )
    height = sum(1 for m in range(i, j - 1) if code.c[m] == 0)
    removal = StripRemoval(
        start=i,
        end=j,
        size=p,
        height=height,
        init=lower_step_square(code.c, i),
        fin=lower_step_square(code.c, j),
    )
    c = list(code.c)
    c[i - 1] = 0
    c[j - 1] = 1
    return Code(tuple(c), code.d), removal


def strip_cells(code: Code, i: int, p: int) -> tuple[Square, ...]:
    """Frame cells of the strip removed by the (i, i+p) swap, init to fin."""
    after, _ = remove_strip(code, i, p)
    gone = frame_cells(code) - frame_cells(after)
    return tuple(sorted(gone, key=lambda sq: sq[1] - sq[0]))


def noncrossing_pairing(code: Code) -> tuple[tuple[int, int], ...]:
    """The unique noncrossing matching of (1,0) columns to (0,1) columns,
    by parenthesis matching; sorted by left endpoint."""
    stack: list[int] = []
    pairs: list[tuple[int, int]] = []
    for m in range(1, code.k + 1):
        col = code.column(m)
        if col == (1, 0):
            stack.append(m)
        elif col == (0, 1):
            if not stack:
                raise InvariantError("unmatched right column in a valid code")
            pairs.append((stack.pop(), m))
    if stack:
        raise InvariantError("unmatched left column in a valid code")
    return tuple(sorted(pairs))


def greedy_tableau(shape: SkewShape) -> list[StripRemoval]:
    """Successively remove the largest possible border strip.

    Code-side this pairs the smallest live (1,0) column with the largest
    (0,1) column admitting a valid swap. The resulting (start, end) pairs
    are asserted to be the canonical noncrossing pairing, and the number of
    removals equals the rank.
    """
    code = code_of(normalize(shape))
    original = code
    removals: list[StripRemoval] = []
    while True:
        lefts = [m for m in range(1, code.k + 1) if code.column(m) == (1, 0)]
        if not lefts:
            break
        i = lefts[0]
        rights = [m for m in range(code.k, i, -1) if code.column(m) == (0, 1)]
        for j in rights:
            if swap_margin_ok(code.c, code.d, i, j):
                code, removal = remove_strip(code, i, j - i)
                removals.append(removal)
                break
        else:
            raise InvariantError(f"greedy step found no partner for column {i}")
    if code.c != code.d:
        raise InvariantError("greedy removal did not exhaust the shape")
    pairs = {(r.start, r.end) for r in removals}
    if pairs != set(noncrossing_pairing(original)):
        raise InvariantError("greedy pairs differ from the noncrossing pairing")
    if len(removals) != original.rank:
        raise InvariantError("greedy removal count differs from the rank")
    return removals
