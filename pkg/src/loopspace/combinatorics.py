"""Brute-force combinatorial route to the loop-space Betti numbers.

The closed form in :mod:`loopspace.formulas` collapses a double sum over
word-filtration stages and multiindex pairs.  This module keeps that sum
un-collapsed: generalized binomials, explicit multiindex enumeration, Betti
numbers of the fat diagonal inside each smash power, and the degree-by-degree
total.  Agreement of the two routes is the package's central self-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from .errors import HypothesisViolation, PathConnectednessViolation
from .gfcore import IntPolynomial, RationalGF, TruncSeries
from .spaces import PairInclusion, SpaceProfile


@dataclass(frozen=True)
class MultiIndex:
    """A possibly empty finite sequence of positive integers.

    ``dim`` counts the entries, ``length`` sums them; dim <= length always.
    """

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        if any(not isinstance(e, int) or e < 1 for e in self.entries):
            raise ValueError(f"multiindex entries must be positive integers: {self.entries}")

    @classmethod
    def of(cls, *entries: int) -> MultiIndex:
        return cls(tuple(entries))

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def length(self) -> int:
        return sum(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


EMPTY = MultiIndex()


def binom(n: int, k: int) -> int:
    """Generalized binomial coefficient for arbitrary integer n.

    Zero for k < 0; otherwise n(n-1)...(n-k+1)/k!, which is exact for every
    integer n (negative upper arguments included) and 1 at k = 0.
    """
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= n - i
    return num // factorial(k)


def binomial_gf_check(k: int, m: int, bound: int) -> bool:
    """Check sum_{n>=m} binom(n,k) t^n == t^k/(1-t)^(k+1) through t^bound.

    Valid for 0 <= m <= k because binom(n,k) vanishes for 0 <= n < k.  The
    left side is summed term by term from binom; the right side comes from
    the rational-function expander, so the two routes are independent.
    """
    if not 0 <= m <= k:
        raise ValueError(f"need 0 <= m <= k, got m={m}, k={k}")
    direct = TruncSeries(
        [binom(n, k) if n >= m else 0 for n in range(bound + 1)]
    )
    closed = RationalGF(
        IntPolynomial.monomial(k), IntPolynomial((1, -1)) ** (k + 1)
    ).expand(bound)
    return direct == closed


def multiindex_betti(space: SpaceProfile, alpha: MultiIndex, bound: int) -> int:
    """Product of the space's reduced Betti numbers over the entries of alpha.

    The empty multiindex gives 1.  Entries beyond the expansion bound are
    rejected rather than silently truncated.
    """
    if any(e > bound for e in alpha):
        raise ValueError(f"multiindex entry exceeds expansion bound {bound}: {alpha.entries}")
    coeffs = space.betti(bound)
    result = 1
    for e in alpha:
        result *= coeffs[e]
    return result


def diagonal_multiplicity(lam: MultiIndex, mu: MultiIndex, s: int) -> int:
    """Multiplicity of the (lam, mu) cell in the stage-s fat-diagonal sum.

    binom(dim lam + dim mu, dim mu) * binom(s - dim lam - dim mu - 1, dim mu - 1);
    the second factor kills mu = empty through its Iverson bracket.
    """
    if s < 1:
        raise ValueError(f"stage must be >= 1, got {s}")
    d1, d2 = lam.dim, mu.dim
    return binom(d1 + d2, d2) * binom(s - d1 - d2 - 1, d2 - 1)


def _compositions(total: int, parts: int, support: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All tuples of length ``parts`` with entries drawn from ``support`` summing to ``total``.

    Support holds positive degrees only, so each unfilled part reserves at
    least 1 of the remaining total.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    ceiling = total - (parts - 1)
    for e in support:
        if e > ceiling:
            break
        for rest in _compositions(total - e, parts - 1, support):
            yield (e, *rest)


def _composition_weight(coeffs: TruncSeries, total: int, parts: int, support: Sequence[int]) -> int:
    """Sum of Betti products over all supported compositions of ``total``."""
    acc = 0
    for combo in _compositions(total, parts, support):
        term = 1
        for e in combo:
            term *= coeffs[e]
        acc += term
    return acc


def _support(coeffs: TruncSeries) -> list[int]:
    return [d for d in range(1, coeffs.bound + 1) if coeffs[d] != 0]


def fat_diagonal_betti(pair: PairInclusion, s: int, q: int) -> int:
    """Reduced Betti number in degree q of the stage-s fat diagonal.

    The fat diagonal sits inside the s-fold smash power of the ambient space;
    its homology decomposes into cells indexed by multiindex pairs (lam over
    the ambient space, mu over the subspace) constrained by

        |lam| + |mu| = q - s + dim lam + dim mu + 1,
        2 <= dim lam + dim mu + 1 <= s.

    That decomposition needs the subspace's reduced diagonal declared null.
    Entries >= 1 force |lam|+|mu| >= dim lam + dim mu, so the sum is finite
    and vanishes whenever s > q + 1 (and always at s = 1).
    """
    if not pair.sub.diagonal_null:
        raise HypothesisViolation(
            f"{pair.sub.name}: fat-diagonal Betti numbers need the subspace "
            "declared diagonal-null"
        )
    if s < 1:
        raise ValueError(f"stage must be >= 1, got {s}")
    if q < 0:
        raise ValueError(f"degree must be >= 0, got {q}")
    if q == 0:
        return 0
    betti_y = pair.ambient.betti(q)
    betti_a = pair.sub.betti(q)
    support_y = _support(betti_y)
    support_a = _support(betti_a)

    total = 0
    for d_lam in range(0, s):
        for d_mu in range(0, s - d_lam):
            if d_lam + d_mu < 1:
                continue
            length = q - s + d_lam + d_mu + 1
            if length < d_lam + d_mu:
                continue
            mult = binom(d_lam + d_mu, d_mu) * binom(s - d_lam - d_mu - 1, d_mu - 1)
            if mult == 0:
                continue
            for lam_len in range(d_lam, length - d_mu + 1):
                w_lam = _composition_weight(betti_y, lam_len, d_lam, support_y)
                if w_lam == 0:
                    continue
                w_mu = _composition_weight(betti_a, length - lam_len, d_mu, support_a)
                total += mult * w_lam * w_mu
    return total


def smash_power_betti(space: SpaceProfile, s: int, q: int) -> int:
    """Reduced Betti number in degree q of the s-fold smash power.

    The series of the power is the s-th power of the space's series; the
    space must be path-connected so the power has no terms below degree s.
    """
    if not space.is_path_connected:
        raise PathConnectednessViolation(
            f"{space.name}: smash powers are taken of path-connected spaces only"
        )
    if s < 1:
        raise ValueError(f"stage must be >= 1, got {s}")
    if q < 0:
        raise ValueError(f"degree must be >= 0, got {q}")
    return (space.series**s).expand(q)[q]


def smash_quotient_betti(pair: PairInclusion, s: int, q: int) -> int:
    """Betti number of the smash power with its fat diagonal collapsed.

    The cofiber sequence of the fat-diagonal inclusion splits under the
    diagonal-null hypothesis, so the quotient's Betti number is the smash
    power's plus the diagonal's one degree down.
    """
    below = fat_diagonal_betti(pair, s, q - 1) if q >= 1 else 0
    return smash_power_betti(pair.ambient, s, q) + below


def loop_series_oracle(pair: PairInclusion, bound: int) -> TruncSeries:
    """Loop-space Betti numbers by direct summation over filtration stages.

    Degree q collects smash_quotient_betti over stages 1..q; higher stages
    contribute nothing (smash powers start in degree s, the fat diagonal
    vanishes for s > q).  Degree 0 is 0.  This never consults the closed
    form, so it serves as an independent cross-check of it.
    """
    if not pair.ambient.is_path_connected:
        raise PathConnectednessViolation(
            f"{pair.ambient.name}: the stage decomposition needs a path-connected "
            "ambient space"
        )
    if not pair.sub.diagonal_null:
        raise HypothesisViolation(
            f"{pair.sub.name}: the stage decomposition needs the subspace "
            "declared diagonal-null"
        )
    if bound < 0:
        raise ValueError(f"degree bound must be >= 0, got {bound}")
    coeffs = [0]
    for q in range(1, bound + 1):
        coeffs.append(sum(smash_quotient_betti(pair, s, q) for s in range(1, q + 1)))
    return TruncSeries(coeffs, bound)
