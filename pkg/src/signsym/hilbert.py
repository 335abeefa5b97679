"""Bigraded dimension counting for the diagonally invariant ring.

The bigraded Hilbert series of the invariant ring is the flag-major
pair-generating function of the group divided by the product of
(1 - s^(2i)) (1 - t^(2i)) for i = 1..n.  This module computes the series
by truncated formal expansion, brute-forces the dimensions it predicts,
and verifies degreewise that the averaged descent monomials together
with monomial symmetric functions in the squared variables span each
bidegree slice with exactly the right cardinality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping

from . import scan
from .descent_basis import (
    diagonal_signed_descent_monomial,
    ordered_monomials,
    partitions_fixed_length,
)
from .poly import Polynomial, monomial_sym_squares, rho
from .signed_perm import (
    ENUMERATION_GUARD,
    RankGuardError,
    SignedPermutation,
    enumerate_group,
    group_order,
    statistics,
)

#: Rank cap for the plain-permutation equidistribution check.
MAJ_INV_GUARD = 7


@dataclass(frozen=True)
class BiSeries:
    """Truncated bivariate series with non-negative integer coefficients.

    Only strictly positive coefficients are stored; keys never exceed the
    truncation bound in total degree.
    """

    coefficients: Mapping[tuple[int, int], int]
    truncation: int

    def __post_init__(self) -> None:
        for (a, b), c in self.coefficients.items():
            if c <= 0:
                raise ValueError(f"stored coefficient at ({a},{b}) must be positive")
            if a < 0 or b < 0 or a + b > self.truncation:
                raise ValueError(f"key ({a},{b}) outside truncation {self.truncation}")

    def coefficient(self, a: int, b: int) -> int:
        return self.coefficients.get((a, b), 0)

    def total_mass(self) -> int:
        return sum(self.coefficients.values())


def _check_rank(n: int, guard: int) -> None:
    if n < 1:
        raise ValueError("rank must be at least 1")
    if n > guard:
        raise RankGuardError(
            f"rank {n} exceeds the guard {guard}: the group has {group_order(n)} elements"
        )


def fmaj_numerator(n: int, guard: int = ENUMERATION_GUARD) -> BiSeries:
    """Generating function counting elements by (fmaj of inverse, fmaj).

    The total mass is the group order and the coefficient table is
    symmetric under swapping the two degrees, since inversion is an
    involution.
    """
    _check_rank(n, guard)
    counts = scan.fmaj_pair_counts(n)
    return BiSeries(counts, truncation=2 * n * n)


def fmaj_distribution(n: int, guard: int = ENUMERATION_GUARD) -> dict[int, int]:
    """Distribution of fmaj alone, the column marginal of the numerator."""
    numerator = fmaj_numerator(n, guard)
    out: dict[int, int] = {}
    for (_, b), c in numerator.coefficients.items():
        out[b] = out.get(b, 0) + c
    return out


@lru_cache(maxsize=None)
def _series_table(n: int, max_total: int) -> tuple[tuple[int, ...], ...]:
    # Dense table of series coefficients for a + b <= max_total (indices
    # run to max_total in each axis; entries beyond the diagonal are
    # still exact).  Division by (1 - s^(2i)) is an in-place prefix sum
    # with stride 2i, and likewise for t.
    size = max_total + 1
    table = [[0] * size for _ in range(size)]
    for (a, b), c in fmaj_numerator(n).coefficients.items():
        if a < size and b < size:
            table[a][b] = c
    for i in range(1, n + 1):
        stride = 2 * i
        for a in range(stride, size):
            source = table[a - stride]
            row = table[a]
            for b in range(size):
                row[b] += source[b]
        for a in range(size):
            row = table[a]
            for b in range(stride, size):
                row[b] += row[b - stride]
    return tuple(tuple(row) for row in table)


def series_coefficient(n: int, a: int, b: int) -> int:
    """Coefficient of s^a t^b in the bigraded Hilbert series."""
    if a < 0 or b < 0:
        raise ValueError("degrees must be non-negative")
    return _series_table(n, a + b)[a][b]


def _canonical_form(f: Polynomial) -> frozenset:
    return frozenset((m, c) for m, c in f.items())


def invariant_dimension(n: int, a: int, b: int, guard: int = ENUMERATION_GUARD) -> int:
    """Dimension of the bidegree-(a, b) slice of the invariant ring.

    Brute force: average every ordered monomial of the bidegree and
    count the distinct nonzero results.  Distinct ordered monomials have
    disjoint orbits, so these averages are linearly independent.
    """
    _check_rank(n, guard)
    if a < 0 or b < 0:
        raise ValueError("degrees must be non-negative")
    averages = set()
    for m in ordered_monomials(n, a, b):
        image = rho(Polynomial.from_monomial(m), guard)
        if not image.is_zero():
            averages.add(_canonical_form(image))
    return len(averages)


def _integer_rank(matrix: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    Bareiss pivoting: every division is exact, so the arithmetic stays
    in arbitrary-precision integers throughout.
    """
    m = [row[:] for row in matrix]
    rows = len(m)
    if rows == 0:
        return 0
    cols = len(m[0])
    rank = 0
    prev = 1
    for col in range(cols):
        pivot_row = next((r for r in range(rank, rows) if m[r][col]), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank]
        for r in range(rank + 1, rows):
            row = m[r]
            factor = row[col]
            for c in range(col, cols):
                row[c] = (row[c] * pivot[col] - factor * pivot[c]) // prev
        prev = pivot[col]
        rank += 1
        if rank == rows:
            break
    return rank


def _integer_rows(vectors: list[list[Fraction]]) -> list[list[int]]:
    rows = []
    for vec in vectors:
        lcm = 1
        for value in vec:
            lcm = lcm * value.denominator // math.gcd(lcm, value.denominator)
        rows.append([int(value * lcm) for value in vec])
    return rows


def basis_candidates(
    n: int, a: int, b: int, guard: int = ENUMERATION_GUARD
) -> Iterator[tuple[SignedPermutation, tuple[int, ...], tuple[int, ...], Polynomial]]:
    """Degree-(a, b) products m_nu(x^2) m_mu(y^2) rho(c_sigma).

    Runs over every sigma whose flag bidegree fits inside (a, b) with
    even slack, and every partition pair filling the slack.
    """
    _check_rank(n, guard)
    for sigma in enumerate_group(n, guard):
        fb = statistics(sigma).fmaj
        fa = statistics(sigma.inverse()).fmaj
        if fa > a or fb > b or (a - fa) % 2 or (b - fb) % 2:
            continue
        base = rho(Polynomial.from_monomial(diagonal_signed_descent_monomial(sigma)), guard)
        for nu in partitions_fixed_length((a - fa) // 2, n):
            mx = monomial_sym_squares(nu, "x", n)
            for mu in partitions_fixed_length((b - fb) // 2, n):
                yield sigma, nu, mu, mx * monomial_sym_squares(mu, "y", n) * base


@dataclass(frozen=True)
class CellReport:
    """Result of the degreewise freeness check at one bidegree cell."""

    n: int
    a: int
    b: int
    rank: int
    dim: int
    series: int
    generators: int

    @property
    def passed(self) -> bool:
        return self.rank == self.dim == self.series and self.generators == self.dim

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "b": self.b,
            "rank": self.rank,
            "dim": self.dim,
            "series": self.series,
            "generators": self.generators,
            "pass": self.passed,
        }


def verify_basis_rank(n: int, a: int, b: int, guard: int = ENUMERATION_GUARD) -> CellReport:
    """Check rank = dimension = series coefficient at one bidegree cell.

    Builds every candidate product of monomial symmetric functions in
    the squared variables with an averaged descent monomial, computes
    its exact rank by fraction-free elimination, and compares against
    the brute-force dimension and the series coefficient.  Equality of
    all three together with the candidate count is degreewise freeness.
    """
    candidates = [poly for _, _, _, poly in basis_candidates(n, a, b, guard)]
    support = sorted(
        {m for poly in candidates for m in poly.monomials()},
        key=lambda m: (m.p, m.q),
    )
    index = {m: i for i, m in enumerate(support)}
    vectors = []
    for poly in candidates:
        vec = [Fraction(0)] * len(support)
        for m, c in poly.items():
            vec[index[m]] = c
        vectors.append(vec)
    rank = _integer_rank(_integer_rows(vectors))
    return CellReport(
        n=n,
        a=a,
        b=b,
        rank=rank,
        dim=invariant_dimension(n, a, b, guard),
        series=series_coefficient(n, a, b),
        generators=len(candidates),
    )


def maj_inv_equidistribution(n: int, guard: int = MAJ_INV_GUARD) -> bool:
    """Whether major index and inversion number are equidistributed on
    plain permutations of 1..n."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    if n > guard:
        raise RankGuardError(
            f"rank {n} exceeds the guard {guard}: {math.factorial(n)} permutations"
        )
    return scan.maj_counts(n) == scan.inv_counts(n)
