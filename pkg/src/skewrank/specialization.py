"""Jacobi-Trudi data and the principal specialization polynomial in t.

Substituting t ones into the skew Schur function turns the Jacobi-Trudi
determinant into a determinant of binomial polynomials: subscript k >= 0
becomes t(t+1)...(t+k-1)/k!, k = 0 becomes 1, k < 0 becomes 0. The
determinant is computed exactly by fraction-free (Bareiss) elimination
after scaling each row to integer coefficients. zrank is the multiplicity
of the root t = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm

from . import codes
from .polynomials import RationalPolynomial
from .shapes import InvariantError, Partition, SkewShape, diagonal_rank, normalize


@dataclass(frozen=True)
class JTMatrix:
    """Subscript matrix: entry (i, j) stands for h_(lam_i - mu_j - i + j)."""

    n: int
    subscripts: tuple[tuple[int, ...], ...]

    def row_has_zero(self, i: int) -> bool:
        return 0 in self.subscripts[i]

    def row_has_negative(self, i: int) -> bool:
        return any(k < 0 for k in self.subscripts[i])


def _subscripts(lam: Partition, mu: Partition, n: int) -> tuple[tuple[int, ...], ...]:
    lam = lam + (0,) * (n - len(lam))
    mu = mu + (0,) * (n - len(mu))
    return tuple(
        tuple(lam[i] - mu[j] - (i + 1) + (j + 1) for j in range(n))
        for i in range(n)
    )


def jt_matrix(shape: SkewShape) -> JTMatrix:
    shape = normalize(shape)
    n = shape.n_rows
    return JTMatrix(n=n, subscripts=_subscripts(shape.lam, shape.mu, n))


def jrank(shape: SkewShape) -> int:
    """Number of Jacobi-Trudi rows without an entry equal to 1 (no zero
    subscript); asserted independent of padding the matrix by one row."""
    shape = normalize(shape)
    n = shape.n_rows
    count = sum(
        1 for row in _subscripts(shape.lam, shape.mu, n) if 0 not in row
    )
    padded = sum(
        1 for row in _subscripts(shape.lam, shape.mu, n + 1) if 0 not in row
    )
    if count != padded:
        raise InvariantError(f"jrank changed under padding: {count} vs {padded}")
    return count


# Integer-coefficient polynomials as ascending lists, [] = 0.

def _pmul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def _psub(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    while out and out[-1] == 0:
        out.pop()
    return out


def _pdivexact(a: list[int], b: list[int]) -> list[int]:
    """Exact division in Z[t]; raises if the division leaves a remainder."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    rem = a[:]
    out = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for top in range(len(rem) - 1, len(b) - 2, -1):
        coeff = rem[top]
        if coeff == 0:
            continue
        q, r = divmod(coeff, lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        shift = top - (len(b) - 1)
        out[shift] = q
        for i, y in enumerate(b):
            rem[shift + i] -= q * y
    if any(rem):
        raise ArithmeticError("polynomial division left a remainder")
    while out and out[-1] == 0:
        out.pop()
    return out


def _det_int_poly(mat: list[list[list[int]]]) -> list[int]:
    """Bareiss one-step fraction-free determinant over Z[t]."""
    n = len(mat)
    if n == 0:
        return [1]
    a = [row[:] for row in mat]
    sign = 1
    prev: list[int] = [1]
    for col in range(n - 1):
        if not a[col][col]:
            for r in range(col + 1, n):
                if a[r][col]:
                    a[col], a[r] = a[r], a[col]
                    sign = -sign
                    break
            else:
                return []
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                num = _psub(_pmul(a[col][col], a[i][j]), _pmul(a[i][col], a[col][j]))
                a[i][j] = _pdivexact(num, prev)
            a[i][col] = []
        prev = a[col][col]
    res = a[n - 1][n - 1]
    return res if sign == 1 else [-c for c in res]


def _rising_factorial(k: int) -> list[int]:
    """t (t+1) ... (t+k-1) as an integer polynomial."""
    poly = [1]
    for m in range(k):
        poly = _pmul(poly, [m, 1])
    return poly


def principal_specialization(shape: SkewShape) -> RationalPolynomial:
    """The skew Schur function at t ones, as an exact polynomial in t.

    Exact Bareiss elimination over integer polynomials after clearing the
    k! denominators row by row; the result has degree equal to the number
    of cells.
    """
    shape = normalize(shape)
    subs = jt_matrix(shape).subscripts
    n = len(subs)
    if n == 0:
        return RationalPolynomial.one()
    total_scale = 1
    rows: list[list[list[int]]] = []
    for row in subs:
        scale = lcm(*(factorial(k) for k in row if k >= 0)) if any(
            k >= 0 for k in row
        ) else 1
        total_scale *= scale
        rows.append([
            [] if k < 0 else [c * (scale // factorial(k)) for c in _rising_factorial(k)]
            for k in row
        ])
    det = _det_int_poly(rows)
    poly = RationalPolynomial(tuple(Fraction(c, total_scale) for c in det))
    if poly.degree != shape.size:
        raise InvariantError(
            f"specialization degree {poly.degree} differs from cell count {shape.size}"
        )
    return poly


def zrank(shape: SkewShape) -> int:
    """Multiplicity of the root t = 0 of the principal specialization."""
    shape = normalize(shape)
    if shape.is_empty:
        return 0
    z = principal_specialization(shape).low_order()
    if z < diagonal_rank(shape):
        raise InvariantError(f"zrank {z} below rank for {shape}")
    return z


def thm1b_condition(shape: SkewShape) -> bool:
    """Whether every Jacobi-Trudi row containing a 0 entry (negative
    subscript) also contains a 1 (zero subscript)."""
    m = jt_matrix(normalize(shape))
    return all(
        m.row_has_zero(i) for i in range(m.n) if m.row_has_negative(i)
    )


def cauchy_y(shape: SkewShape) -> Fraction:
    """Coefficient of t^rank via the Cauchy determinant.

    Valid when thm1b_condition holds: delete each row containing a zero
    subscript together with its matched column (tracking the cofactor
    sign), replace remaining subscripts k by 1/k, and evaluate the product
    formula for det(1/(a_i + b_j)). Nonzero by construction.
    """
    shape = normalize(shape)
    if not thm1b_condition(shape):
        raise ValueError("Jacobi-Trudi rows with 0 entries lack 1s; Cauchy route invalid")
    subs = [list(row) for row in jt_matrix(shape).subscripts]
    n = len(subs)
    lam = shape.lam + (0,) * n
    mu = shape.mu_padded + (0,) * n
    rows = list(range(n))
    cols = list(range(n))
    sign = 1
    while True:
        hit = None
        for ri, i in enumerate(rows):
            for cj, j in enumerate(cols):
                if subs[i][j] == 0:
                    hit = (ri, cj)
                    break
            if hit:
                break
        if hit is None:
            break
        ri, cj = hit
        sign *= (-1) ** (ri + cj)
        rows.pop(ri)
        cols.pop(cj)
    a = [lam[i] - (i + 1) for i in rows]
    b = [(j + 1) - mu[j] for j in cols]
    if any(x + y <= 0 for x in a for y in b):
        raise InvariantError("nonpositive subscript survived the Cauchy reduction")
    num = 1
    for x in range(len(a)):
        for y in range(x + 1, len(a)):
            num *= (a[x] - a[y]) * (b[x] - b[y])
    den = 1
    for x in a:
        for y in b:
            den *= x + y
    return Fraction(sign * num, den)


def ssyt_count(shape: SkewShape, t: int) -> int:
    """Semistandard fillings with entries at most t: weakly increasing along
    rows, strictly increasing down columns. Column-by-column DP; equals the
    principal specialization evaluated at t."""
    shape = normalize(shape)
    if t < 0:
        raise ValueError("t must be nonnegative")
    if shape.is_empty:
        return 1
    lam = shape.lam
    mu = shape.mu_padded
    width = lam[0]
    col_rows: list[list[int]] = []
    for j in range(1, width + 1):
        col_rows.append([i + 1 for i in range(len(lam)) if mu[i] < j <= lam[i]])

    states: dict[tuple[int, ...], int] = {(): 1}
    prev_rows: list[int] = []
    for j in range(width):
        rows = col_rows[j]
        nxt: dict[tuple[int, ...], int] = {}
        for prev_vals, ways in states.items():
            prev_by_row = dict(zip(prev_rows, prev_vals))

            def fill(idx: int, lower: int, acc: list[int]):
                if idx == len(rows):
                    key = tuple(acc)
                    nxt[key] = nxt.get(key, 0) + ways
                    return
                row = rows[idx]
                lo = max(lower + 1, prev_by_row.get(row, 1))
                for val in range(lo, t + 1):
                    acc.append(val)
                    fill(idx + 1, val, acc)
                    acc.pop()

            fill(0, 0, [])
        states = nxt
        prev_rows = rows
        if not states:
            return 0
    return sum(states.values())


def hook_content_specialization(lam: Partition) -> RationalPolynomial:
    """Straight-shape specialization via the hook content product:
    prod over cells of (t - i + j) / hook(i, j)."""
    lam = tuple(lam)
    conj = [0] * (lam[0] if lam else 0)
    for part in lam:
        for j in range(part):
            conj[j] += 1
    poly = RationalPolynomial.one()
    denom = 1
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            poly = poly * RationalPolynomial((Fraction(j - i), Fraction(1)))
            denom *= part + conj[j - 1] - i - j + 1
    return poly * Fraction(1, denom)


def rank_profile(shape: SkewShape) -> dict[str, int]:
    """The four rank characterizations; asserted equal before returning."""
    shape = normalize(shape)
    values = {
        "diagonal": diagonal_rank(shape),
        "strips": len(codes.greedy_tableau(shape)),
        "jacobi_trudi": jrank(shape),
        "code": codes.code_of(shape).rank,
    }
    if len(set(values.values())) != 1:
        raise InvariantError(f"rank characterizations disagree: {values}")
    return values
