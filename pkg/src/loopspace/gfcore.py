"""Exact polynomial and rational generating function arithmetic.

Everything here is big-integer exact: polynomials carry arbitrary-precision
signed coefficients, rational functions are numerator/denominator pairs of
such polynomials, and series expansion is an integer linear recurrence driven
by the denominator.  No floats anywhere.
"""

from __future__ import annotations

from math import gcd as _int_gcd
from typing import Iterable, Iterator, Sequence

from .errors import (
    NonIntegerSeriesError,
    NonUnitConstantError,
    ZeroDenominatorError,
)


class IntPolynomial:
    """Immutable integer polynomial in one indeterminate t.

    Coefficients are stored ascending by degree with no trailing zeros; the
    zero polynomial stores the empty tuple.  ``p[i]`` reads the coefficient
    of t^i and is 0 beyond the degree.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        """Return coeff * t^degree."""
        if degree < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def constant(self) -> int:
        """The coefficient of t^0, i.e. the value at t = 0."""
        return self[0]

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("polynomial coefficients are indexed by degree >= 0")
        return self._coeffs[i] if i < len(self._coeffs) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self._coeffs)

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> IntPolynomial:
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = IntPolynomial((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def content(self) -> int:
        """Nonnegative gcd of all coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._coeffs:
            g = _int_gcd(g, c)
        return g

    def primitive_part(self) -> IntPolynomial:
        """self divided by its content; the zero polynomial maps to itself."""
        c = self.content()
        if c <= 1:
            return self
        return IntPolynomial(k // c for k in self._coeffs)

    def divexact(self, divisor: IntPolynomial) -> IntPolynomial:
        """Exact division; raises ArithmeticError when divisor does not divide self."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return IntPolynomial()
        rem = list(self._coeffs)
        dcs = divisor._coeffs
        dd = divisor.degree
        lead = dcs[-1]
        qlen = len(rem) - dd
        if qlen <= 0:
            raise ArithmeticError("division is not exact")
        quot = [0] * qlen
        for i in range(qlen - 1, -1, -1):
            head = rem[i + dd]
            q, r = divmod(head, lead)
            if r:
                raise ArithmeticError("division is not exact")
            quot[i] = q
            if q:
                for j, dc in enumerate(dcs):
                    rem[i + j] -= q * dc
        if any(rem):
            raise ArithmeticError("division is not exact")
        return IntPolynomial(quot)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({self._coeffs})"


def _as_poly(value: object) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial((value,))
    return NotImplemented


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Pseudo-remainder of a by b: rem(lc(b)^(deg a - deg b + 1) * a, b)."""
    da, db = a.degree, b.degree
    lead = b.coeffs[-1]
    rem = list(a.coeffs)
    for i in range(da - db, -1, -1):
        head = rem[i + db]
        # Scale the whole remainder so the head divides exactly.
        for j in range(len(rem)):
            rem[j] *= lead
        for j, bc in enumerate(b.coeffs):
            rem[j + i] -= head * bc
        rem[i + db] = 0
    return IntPolynomial(rem)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor in Z[t], content included.

    The result carries a positive leading coefficient (gcd of the contents
    for the constant case); ``poly_gcd(0, 0)`` is the zero polynomial.
    """
    if a.is_zero and b.is_zero:
        return IntPolynomial()
    if a.is_zero:
        a, b = b, a
    if b.is_zero:
        return a if a.coeffs[-1] > 0 else -a
    c = _int_gcd(a.content(), b.content())
    a = a.primitive_part()
    b = b.primitive_part()
    while not b.is_zero:
        r = _pseudo_rem(a, b).primitive_part()
        a, b = b, r
    if a.coeffs[-1] < 0:
        a = -a
    return a * c


class TruncSeries:
    """Power series truncated at an inclusive degree bound.

    Exactly ``bound + 1`` integer coefficients are stored; trailing zeros are
    kept so that two truncations compare positionally.
    """

    __slots__ = ("_coeffs", "_bound")

    def __init__(self, coeffs: Iterable[int], bound: int | None = None):
        cs = [int(c) for c in coeffs]
        if bound is None:
            if not cs:
                raise ValueError("empty coefficient list needs an explicit bound")
            bound = len(cs) - 1
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        if len(cs) > bound + 1:
            raise ValueError(f"{len(cs)} coefficients exceed bound {bound}")
        cs.extend([0] * (bound + 1 - len(cs)))
        self._coeffs: tuple[int, ...] = tuple(cs)
        self._bound = bound

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def bound(self) -> int:
        return self._bound

    def __getitem__(self, i: int) -> int:
        return self._coeffs[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return self._bound + 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._bound == other._bound and self._coeffs == other._coeffs

    def _check_bound(self, other: TruncSeries) -> None:
        if self._bound != other._bound:
            raise ValueError(f"bound mismatch: {self._bound} != {other._bound}")

    def __add__(self, other: TruncSeries) -> TruncSeries:
        self._check_bound(other)
        return TruncSeries([a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        self._check_bound(other)
        return TruncSeries([a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        self._check_bound(other)
        out = [0] * (self._bound + 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j in range(self._bound + 1 - i):
                out[i + j] += a * other._coeffs[j]
        return TruncSeries(out)

    def __repr__(self) -> str:
        return f"TruncSeries({list(self._coeffs)})"


class RationalGF:
    """Ratio of integer polynomials, expandable as a power series at t = 0.

    The denominator must be nonzero with nonzero constant term.  Values are
    immutable; arithmetic always returns the normalized representative
    (numerator and denominator coprime over Z, denominator positive at 0),
    and ``==`` tests mathematical equality by cross-multiplying, so distinct
    representatives of one function compare equal.
    """

    __slots__ = ("_num", "_den")

    def __init__(
        self,
        num: IntPolynomial | int,
        den: IntPolynomial | int = IntPolynomial((1,)),
    ):
        num = _as_poly(num)
        den = _as_poly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("numerator and denominator must be IntPolynomial or int")
        if den.is_zero:
            raise ZeroDenominatorError("denominator is the zero polynomial")
        if den.constant == 0:
            raise NonUnitConstantError(
                "denominator has zero constant term; no power-series expansion"
            )
        self._num = num
        self._den = den

    @classmethod
    def from_coeffs(
        cls, num: Sequence[int], den: Sequence[int] = (1,)
    ) -> RationalGF:
        """Build from ascending coefficient lists."""
        return cls(IntPolynomial(num), IntPolynomial(den))

    @property
    def num(self) -> IntPolynomial:
        return self._num

    @property
    def den(self) -> IntPolynomial:
        return self._den

    def normalized(self) -> RationalGF:
        """The unique reduced representative with den(0) > 0.

        Dividing out the integer-polynomial gcd makes numerator and
        denominator coprime (content included); the sign is then fixed so the
        denominator is positive at t = 0.  Equality of normalized forms is
        componentwise.
        """
        num, den = self._num, self._den
        if num.is_zero:
            return RationalGF(IntPolynomial(), IntPolynomial((1,)))
        g = poly_gcd(num, den)
        if g.degree > 0 or g.constant != 1:
            num = num.divexact(g)
            den = den.divexact(g)
        if den.constant < 0:
            num, den = -num, -den
        return RationalGF(num, den)

    @staticmethod
    def _reduced(num: IntPolynomial, den: IntPolynomial) -> RationalGF:
        """Normalize a raw pair, cancelling before the den(0) != 0 check.

        Division can produce an intermediate denominator that vanishes at 0
        yet cancels against the numerator (t^2/(t - t^2) -> t/(1 - t)), so
        the gcd comes out first and only the reduced denominator is vetted.
        """
        if den.is_zero:
            raise ZeroDenominatorError("denominator is the zero polynomial")
        if num.is_zero:
            return RationalGF(IntPolynomial(), IntPolynomial((1,)))
        g = poly_gcd(num, den)
        if g.degree > 0 or g.constant != 1:
            num = num.divexact(g)
            den = den.divexact(g)
        if den.constant < 0:
            num, den = -num, -den
        return RationalGF(num, den)

    def __eq__(self, other: object) -> bool:
        other = _as_ratgf(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num * other._den == other._num * self._den

    def __neg__(self) -> RationalGF:
        return self._reduced(-self._num, self._den)

    def __add__(self, other: RationalGF | IntPolynomial | int) -> RationalGF:
        other = _as_ratgf(other)
        if other is NotImplemented:
            return NotImplemented
        num = self._num * other._den + other._num * self._den
        return self._reduced(num, self._den * other._den)

    __radd__ = __add__

    def __sub__(self, other: RationalGF | IntPolynomial | int) -> RationalGF:
        other = _as_ratgf(other)
        if other is NotImplemented:
            return NotImplemented
        num = self._num * other._den - other._num * self._den
        return self._reduced(num, self._den * other._den)

    def __rsub__(self, other: RationalGF | IntPolynomial | int) -> RationalGF:
        other = _as_ratgf(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: RationalGF | IntPolynomial | int) -> RationalGF:
        other = _as_ratgf(other)
        if other is NotImplemented:
            return NotImplemented
        return self._reduced(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalGF | IntPolynomial | int) -> RationalGF:
        other = _as_ratgf(other)
        if other is NotImplemented:
            return NotImplemented
        return self._reduced(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other: RationalGF | IntPolynomial | int) -> RationalGF:
        other = _as_ratgf(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> RationalGF:
        if exponent < 0:
            raise ValueError("negative powers are not supported; divide explicitly")
        return self._reduced(self._num**exponent, self._den**exponent)

    def expand(self, bound: int) -> TruncSeries:
        """Power-series coefficients a_0..a_bound, exactly.

        Solves den * a = num degree by degree; each step divides by den(0)
        and raises :class:`NonIntegerSeriesError` if that division has a
        remainder (the true coefficient is then a non-integer rational).
        The result does not depend on the choice of representative.
        """
        if bound < 0:
            raise ValueError("expansion bound must be nonnegative")
        d0 = self._den.constant
        dcs = self._den.coeffs
        out: list[int] = []
        for q in range(bound + 1):
            acc = self._num[q]
            for k in range(1, min(q, len(dcs) - 1) + 1):
                acc -= dcs[k] * out[q - k]
            coeff, rem = divmod(acc, d0)
            if rem:
                raise NonIntegerSeriesError(
                    f"coefficient of t^{q} is not an integer"
                )
            out.append(coeff)
        return TruncSeries(out)

    def coefficient(self, degree: int) -> int:
        """Single series coefficient (expands up to ``degree``)."""
        return self.expand(degree)[degree]

    def __str__(self) -> str:
        if self._den == IntPolynomial((1,)):
            return str(self._num)
        return f"({self._num})/({self._den})"

    def __repr__(self) -> str:
        return f"RationalGF({self._num!r}, {self._den!r})"


def _as_ratgf(value: object) -> RationalGF:
    if isinstance(value, RationalGF):
        return value
    if isinstance(value, (IntPolynomial, int)):
        return RationalGF(value)
    return NotImplemented


#: The zero and one functions and the bare indeterminate, for building formulas.
ZERO = RationalGF(IntPolynomial())
ONE = RationalGF(IntPolynomial((1,)))
T = RationalGF(IntPolynomial((0, 1)))
