"""Skew characters and the lowest-degree part of the skew Schur function.

The Murnaghan-Nakayama rule evaluates chi as a signed sum over border strip
tableaux; it is computed by code-level strip removal with memoization. The
lowest-degree part (in the power sums, deg p_i = 1) comes out three ways:
directly from the expansion, as a signed sum over interval sets with
ptilde_k = p_k / k, and as a Pfaffian over the L/R code columns. All agree,
which the test suite leans on heavily.
"""

from __future__ import annotations

import itertools
import os
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import codes, snakes as snakes_mod, specialization
from .polynomials import RationalPolynomial, poly_from_pairs
from .shapes import (
    InvariantError,
    Partition,
    SkewShape,
    normalize,
    partitions_of,
)
from .snakes import IntervalSet

DEFAULT_BUDGET_CELLS = 14
_BUDGET_ENV = "SKEWRANK_BUDGET_CELLS"


def expansion_budget() -> int:
    """Cell budget for full power-sum expansions; env-overridable."""
    raw = os.environ.get(_BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET_CELLS
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"bad {_BUDGET_ENV}: {raw!r}") from exc


@dataclass(frozen=True)
class PowerSumPolynomial:
    """Exact linear combination of power-sum monomials p_nu."""

    terms: tuple[tuple[Partition, Fraction], ...]

    def __post_init__(self) -> None:
        merged: dict[Partition, Fraction] = {}
        for nu, coeff in self.terms:
            nu = tuple(sorted((int(x) for x in nu), reverse=True))
            if any(x <= 0 for x in nu):
                raise ValueError(f"power-sum index must be a partition: {nu}")
            c = merged.get(nu, Fraction(0)) + Fraction(coeff)
            merged[nu] = c
        cleaned = tuple(
            (nu, merged[nu]) for nu in sorted(merged, reverse=True) if merged[nu] != 0
        )
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls) -> PowerSumPolynomial:
        return cls(())

    @classmethod
    def one(cls) -> PowerSumPolynomial:
        return cls((((), Fraction(1)),))

    @classmethod
    def monomial(cls, nu: Iterable[int], coeff) -> PowerSumPolynomial:
        return cls(((tuple(nu), Fraction(coeff)),))

    def as_dict(self) -> dict[Partition, Fraction]:
        return dict(self.terms)

    def coefficient(self, nu: Iterable[int]) -> Fraction:
        key = tuple(sorted((int(x) for x in nu), reverse=True))
        return self.as_dict().get(key, Fraction(0))

    def __add__(self, other: PowerSumPolynomial) -> PowerSumPolynomial:
        return PowerSumPolynomial(self.terms + other.terms)

    def __neg__(self) -> PowerSumPolynomial:
        return PowerSumPolynomial(tuple((nu, -c) for nu, c in self.terms))

    def __sub__(self, other: PowerSumPolynomial) -> PowerSumPolynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PowerSumPolynomial):
            out = []
            for nu, a in self.terms:
                for rho, b in other.terms:
                    out.append((nu + rho, a * b))
            return PowerSumPolynomial(tuple(out))
        return PowerSumPolynomial(tuple((nu, c * Fraction(other)) for nu, c in self.terms))

    __rmul__ = __mul__

    def filter_length(self, length: int) -> PowerSumPolynomial:
        return PowerSumPolynomial(
            tuple((nu, c) for nu, c in self.terms if len(nu) == length)
        )

    def min_length(self) -> int | None:
        """Least number of parts among monomials present, or None if zero."""
        return min((len(nu) for nu, _ in self.terms), default=None)

    def principal_image(self) -> RationalPolynomial:
        """Image under p_i -> t, i.e. p_nu -> t^(parts of nu)."""
        return poly_from_pairs((len(nu), c) for nu, c in self.terms)

    def to_json(self) -> list[dict]:
        return [
            {"partition": list(nu), "numerator": c.numerator, "denominator": c.denominator}
            for nu, c in self.terms
        ]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for nu, c in self.terms:
            mono = " ".join(
                f"p{part}" + (f"^{mult}" if mult > 1 else "")
                for part, mult in _multiplicities(nu)
            )
            coeff = str(c)
            chunks.append(f"{coeff} {mono}".strip() if mono else coeff)
        return "  +  ".join(chunks)


def _multiplicities(nu: Partition) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for part in nu:
        if out and out[-1][0] == part:
            out[-1] = (part, out[-1][1] + 1)
        else:
            out.append((part, 1))
    return out


def _z_nu(nu: Partition) -> int:
    z = 1
    for part, mult in _multiplicities(nu):
        z *= part**mult * factorial(mult)
    return z


def _mn_recurse(c: tuple[int, ...], d: tuple[int, ...], parts: tuple[int, ...],
                memo: dict) -> int:
    if c == d:
        return 1 if not parts else 0
    if not parts:
        return 0
    key = (c, parts)
    cached = memo.get(key)
    if cached is not None:
        return cached
    # Strips are added bottom-up along the composition, so the last part is
    # the outermost strip and gets peeled first.
    p = parts[-1]
    rest = parts[:-1]
    k = len(c)
    total = 0
    for i in range(1, k - p + 1):
        j = i + p
        if c[i - 1] == 1 and c[j - 1] == 0 and codes.swap_margin_ok(c, d, i, j):
            height = sum(1 for m in range(i, j - 1) if c[m] == 0)
            nxt = list(c)
            nxt[i - 1] = 0
            nxt[j - 1] = 1
            term = _mn_recurse(tuple(nxt), d, rest, memo)
            total += term if height % 2 == 0 else -term
    memo[key] = total
    return total


def mn_character(shape: SkewShape, alpha: Iterable[int]) -> int:
    """Murnaghan-Nakayama value: the signed count of border strip tableaux
    of the given type. alpha may be any composition of the cell count."""
    shape = normalize(shape)
    alpha = tuple(int(a) for a in alpha)
    if any(a <= 0 for a in alpha):
        raise ValueError(f"composition parts must be positive: {alpha}")
    if sum(alpha) != shape.size:
        raise ValueError(
            f"composition of {sum(alpha)} does not match {shape.size} cells"
        )
    if shape.is_empty:
        return 1
    code = codes.code_of(shape)
    return _mn_recurse(code.c, code.d, alpha, {})


def power_sum_expansion(shape: SkewShape, budget: int | None = None) -> PowerSumPolynomial:
    """Expansion sum over nu of chi(nu) p_nu / z_nu, with exact rationals."""
    shape = normalize(shape)
    n = shape.size
    cap = expansion_budget() if budget is None else budget
    if n > cap:
        raise ValueError(f"shape has {n} cells, over the expansion budget {cap}")
    if shape.is_empty:
        return PowerSumPolynomial.one()
    code = codes.code_of(shape)
    memo: dict = {}
    terms = []
    for nu in partitions_of(n):
        chi = _mn_recurse(code.c, code.d, nu, memo)
        if chi:
            terms.append((nu, Fraction(chi, _z_nu(nu))))
    return PowerSumPolynomial(tuple(terms))


@dataclass(frozen=True)
class SignedMatchingMatrix:
    """Upper-triangular entries of an antisymmetric 2r x 2r array."""

    size: int
    entries: tuple[tuple[tuple[int, int], object], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(sorted(self.entries, key=lambda e: e[0])))
        for (i, j), _ in self.entries:
            if not 1 <= i < j <= self.size:
                raise ValueError(f"entry ({i}, {j}) outside the upper triangle")

    def entry(self, i: int, j: int):
        for key, value in self.entries:
            if key == (i, j):
                return value
        return None

    def as_dict(self) -> dict[tuple[int, int], object]:
        return dict(self.entries)


def _perfect_matchings(items: tuple[int, ...]):
    if not items:
        yield ()
        return
    first = items[0]
    rest = items[1:]
    for n, partner in enumerate(rest):
        remaining = rest[:n] + rest[n + 1:]
        for sub in _perfect_matchings(remaining):
            yield ((first, partner),) + sub


def _matching_crossings(matching) -> int:
    return sum(
        1
        for (a, b) in matching
        for (x, y) in matching
        if a < x < b < y
    )


def pfaffian(matrix: SignedMatchingMatrix, zero=Fraction(0), one=Fraction(1)):
    """Sum over perfect matchings of {1..2r} with the crossing-number sign.

    Works for any entry type with +, unary - and *; size 0 gives one.
    """
    if matrix.size % 2:
        raise ValueError(f"Pfaffian needs even size, got {matrix.size}")
    lookup = matrix.as_dict()
    total = zero
    for matching in _perfect_matchings(tuple(range(1, matrix.size + 1))):
        prod = one
        dead = False
        for i, j in matching:
            value = lookup.get((i, j))
            if value is None:
                dead = True
                break
            prod = prod * value
        if dead:
            continue
        if _matching_crossings(matching) % 2:
            prod = -prod
        total = total + prod
    return total


def _lr_columns(shape: SkewShape) -> tuple[list[int], list[int], list[int]]:
    code = codes.code_of(shape)
    ls = [m for m in range(1, code.k + 1) if code.column(m) == (1, 0)]
    rs = [m for m in range(1, code.k + 1) if code.column(m) == (0, 1)]
    return ls, rs, sorted(ls + rs)


def shat_pfaffian_matrix(shape: SkewShape) -> SignedMatchingMatrix:
    """Matrix over the ordered L/R columns w with entry ptilde_(w_j - w_i)
    wherever w_i is a left column and w_j a right column."""
    shape = normalize(shape)
    ls, _, w = _lr_columns(shape)
    entries = []
    lset = set(ls)
    for a in range(len(w)):
        for b in range(a + 1, len(w)):
            if w[a] in lset and w[b] not in lset:
                gap = w[b] - w[a]
                entries.append(((a + 1, b + 1),
                                PowerSumPolynomial.monomial((gap,), Fraction(1, gap))))
    return SignedMatchingMatrix(size=len(w), entries=tuple(entries))


def y_pfaffian_matrix(shape: SkewShape) -> SignedMatchingMatrix:
    """Rational variant: entry 1 / (w_j - w_i) on admissible positions."""
    shape = normalize(shape)
    ls, _, w = _lr_columns(shape)
    entries = []
    lset = set(ls)
    for a in range(len(w)):
        for b in range(a + 1, len(w)):
            if w[a] in lset and w[b] not in lset:
                entries.append(((a + 1, b + 1), Fraction(1, w[b] - w[a])))
    return SignedMatchingMatrix(size=len(w), entries=tuple(entries))


def s_hat(shape: SkewShape, method: str = "intervals") -> PowerSumPolynomial:
    """Lowest-degree part of the skew Schur function in the power sums.

    method 'direct' filters the full expansion to monomials of exactly rank
    parts (subject to the cell budget); 'intervals' sums
    (-1)^(z + crossings) prod p_gap / gap over interval sets; 'pfaffian'
    evaluates the signed matching sum. All three agree.
    """
    shape = normalize(shape)
    if method == "direct":
        r = codes.code_of(shape).rank
        return power_sum_expansion(shape).filter_length(r)
    if method == "intervals":
        z = snakes_mod.z_statistic(shape)
        terms = []
        for iset in snakes_mod.interval_sets(shape):
            gaps = iset.gaps()
            denom = 1
            for g in gaps:
                denom *= g
            sign = -1 if (z + snakes_mod.crossings(iset)) % 2 else 1
            terms.append((tuple(sorted(gaps, reverse=True)), Fraction(sign, denom)))
        return PowerSumPolynomial(tuple(terms))
    if method == "pfaffian":
        z = snakes_mod.z_statistic(shape)
        pf = pfaffian(
            shat_pfaffian_matrix(shape),
            zero=PowerSumPolynomial.zero(),
            one=PowerSumPolynomial.one(),
        )
        return pf if z % 2 == 0 else -pf
    raise ValueError(f"unknown method: {method!r}")


def y_value(shape: SkewShape, method: str = "intervals") -> Fraction:
    """Coefficient of t^rank in the principal specialization.

    'intervals' sums (-1)^(z + crossings) / prod(gaps); 'pfaffian' uses the
    rational matching matrix; 'leading' reads the coefficient off the
    Jacobi-Trudi specialization polynomial.
    """
    shape = normalize(shape)
    if method == "intervals":
        z = snakes_mod.z_statistic(shape)
        total = Fraction(0)
        for iset in snakes_mod.interval_sets(shape):
            denom = 1
            for g in iset.gaps():
                denom *= g
            sign = -1 if (z + snakes_mod.crossings(iset)) % 2 else 1
            total += Fraction(sign, denom)
        return total
    if method == "pfaffian":
        z = snakes_mod.z_statistic(shape)
        pf = pfaffian(y_pfaffian_matrix(shape))
        return -pf if z % 2 else pf
    if method == "leading":
        poly = specialization.principal_specialization(shape)
        rank = codes.code_of(shape).rank
        return poly.coefficient(rank)
    raise ValueError(f"unknown method: {method!r}")


@dataclass(frozen=True)
class DivisibilityResult:
    nu: Partition
    chi: int
    factor: int
    divides: bool
    quotient: int
    signed_interval_sum: int


def divisibility_check(shape: SkewShape, nu: Iterable[int]) -> DivisibilityResult:
    """Check that the product of part-multiplicity factorials divides chi(nu)
    for nu of exactly rank parts, and that the quotient equals the signed
    interval-set sum over sets of type nu."""
    shape = normalize(shape)
    nu = tuple(sorted((int(x) for x in nu), reverse=True))
    rank = codes.code_of(shape).rank
    if len(nu) != rank:
        raise ValueError(f"nu must have exactly rank = {rank} parts, got {len(nu)}")
    if sum(nu) != shape.size:
        raise ValueError(f"nu must sum to {shape.size}")
    chi = mn_character(shape, nu)
    factor = 1
    for _, mult in _multiplicities(nu):
        factor *= factorial(mult)
    z = snakes_mod.z_statistic(shape)
    signed = 0
    for iset in snakes_mod.interval_sets(shape):
        if iset.type == nu:
            signed += -1 if (z + snakes_mod.crossings(iset)) % 2 else 1
    divides = chi % factor == 0
    quotient = chi // factor if divides else 0
    if chi != factor * signed:
        raise InvariantError(
            f"chi({nu}) = {chi} differs from {factor} * signed sum {signed}"
        )
    return DivisibilityResult(
        nu=nu, chi=chi, factor=factor, divides=divides,
        quotient=quotient, signed_interval_sum=signed,
    )


@dataclass(frozen=True)
class ParityAudit:
    heights: tuple[int, ...]
    parity: int | None
    expected_parity: int
    consistent: bool


def height_parity_audit(shape: SkewShape, iset: IntervalSet) -> ParityAudit:
    """Heights of all r! tableaux of an interval set.

    Consistency means every ordering shares one height parity and it equals
    z + crossings mod 2. An inconsistent audit is reported, not repaired.
    """
    from . import decomp

    shape = normalize(shape)
    if iset.r > 8:
        raise ValueError("parity audit is limited to rank <= 8")
    heights = tuple(
        t.total_height for t in decomp.tableaux_of_interval_set(shape, iset)
    )
    parities = {h % 2 for h in heights}
    expected = (snakes_mod.z_statistic(shape) + snakes_mod.crossings(iset)) % 2
    if len(parities) == 1:
        parity = parities.pop()
        return ParityAudit(heights, parity, expected, parity == expected)
    return ParityAudit(heights, None, expected, False)
