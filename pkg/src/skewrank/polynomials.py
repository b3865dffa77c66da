"""Exact univariate polynomials over the rationals."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense polynomial in t with exact rational coefficients, index = power."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls) -> RationalPolynomial:
        return cls(())

    @classmethod
    def one(cls) -> RationalPolynomial:
        return cls((Fraction(1),))

    @classmethod
    def t(cls) -> RationalPolynomial:
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, power: int, coeff) -> RationalPolynomial:
        return cls((Fraction(0),) * power + (Fraction(coeff),))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def low_order(self) -> int:
        """Multiplicity of the root t = 0; -1 for the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return -1

    def __add__(self, other: RationalPolynomial) -> RationalPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RationalPolynomial(
            tuple(x + y for x, y in zip(a, b)) + a[len(b):]
        )

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: RationalPolynomial) -> RationalPolynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RationalPolynomial):
            if not self.coeffs or not other.coeffs:
                return RationalPolynomial.zero()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RationalPolynomial(tuple(out))
        return RationalPolynomial(tuple(c * Fraction(other) for c in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, value) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def to_json(self) -> list[list[int]]:
        """Ascending [power, numerator, denominator] triples, zeros omitted."""
        return [
            [i, c.numerator, c.denominator]
            for i, c in enumerate(self.coeffs)
            if c != 0
        ]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*t" if c != 1 else "t")
            else:
                terms.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(terms).replace("+ -", "- ")


def poly_from_pairs(pairs: Iterable[tuple[int, Fraction]]) -> RationalPolynomial:
    """Build a polynomial from (power, coefficient) pairs."""
    items = list(pairs)
    if not items:
        return RationalPolynomial.zero()
    top = max(p for p, _ in items)
    cs = [Fraction(0)] * (top + 1)
    for p, c in items:
        cs[p] += Fraction(c)
    return RationalPolynomial(tuple(cs))
