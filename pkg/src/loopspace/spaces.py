"""Space profiles: named spaces known only through their reduced Betti series.

A profile carries no cells or chain complexes, just the generating function
of its mod-2 reduced Betti numbers plus declared hypothesis flags.  The flags
(diagonal-null, monomorphism-in-homology) assert facts about maps of spaces
that series data cannot decide; the library checks only their checkable
consequences and otherwise trusts the caller.

Flag propagation under wedge/smash/suspension follows the standard facts
(a suspension is a co-H-space; a smash with a diagonal-null factor is
diagonal-null); these are library conventions, documented here once.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass

from .errors import HypothesisViolation
from .gfcore import IntPolynomial, RationalGF, T

_ZERO_SERIES = RationalGF(IntPolynomial())


@dataclass(frozen=True)
class SpaceProfile:
    """A pointed space described by its reduced Poincare series.

    ``diagonal_null`` declares that the reduced diagonal map induces zero in
    mod-2 reduced homology.  That hypothesis forces path-connectedness, so a
    nonzero constant series coefficient contradicts it and is rejected here.
    """

    name: str
    series: RationalGF
    diagonal_null: bool = False
    notes: str = ""

    def __post_init__(self):
        if self.diagonal_null and self.series.num.constant != 0:
            raise HypothesisViolation(
                f"{self.name}: diagonal-null spaces are path-connected, "
                "but the series has a nonzero constant coefficient"
            )

    @property
    def is_path_connected(self) -> bool:
        """True when the reduced Betti number in degree 0 vanishes."""
        return self.series.num.constant == 0

    def betti(self, bound: int):
        """Reduced Betti numbers b_0..b_bound as a truncated series."""
        return self.series.expand(bound)


@dataclass(frozen=True)
class PairInclusion:
    """A based inclusion of a subspace into an ambient space.

    ``mono_in_homology`` declares that the inclusion is a monomorphism on
    mod-2 reduced homology; like the profile flags it is a user assertion.
    """

    sub: SpaceProfile
    ambient: SpaceProfile
    mono_in_homology: bool = False


def sphere(n: int) -> SpaceProfile:
    """The n-sphere, n >= 1: one reduced class in degree n, null diagonal."""
    if n < 1:
        raise ValueError(f"sphere dimension must be >= 1, got {n}")
    return SpaceProfile(f"S^{n}", RationalGF(IntPolynomial.monomial(n)), diagonal_null=True)


def projective(n: int | float) -> SpaceProfile:
    """Real projective n-space, n >= 1 or math.inf.

    Mod 2 there is one reduced class in each degree 1..n; the infinite case
    has series t/(1-t).  Only the line (n = 1, a circle) is diagonal-null;
    from n = 2 up the cup products obstruct it.
    """
    if n == math.inf:
        series = RationalGF(IntPolynomial((0, 1)), IntPolynomial((1, -1)))
        return SpaceProfile("RP^inf", series, diagonal_null=False)
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"projective dimension must be a positive integer or inf, got {n}")
    series = RationalGF(IntPolynomial([0] + [1] * n))
    return SpaceProfile(f"RP^{n}", series, diagonal_null=(n == 1))


def point() -> SpaceProfile:
    """The one-point space: zero reduced homology."""
    return SpaceProfile("pt", _ZERO_SERIES, diagonal_null=True)


def cone(space: SpaceProfile) -> SpaceProfile:
    """The cone on a space: contractible, so the zero series."""
    return SpaceProfile(f"cone({space.name})", _ZERO_SERIES, diagonal_null=True)


def wedge(a: SpaceProfile, b: SpaceProfile) -> SpaceProfile:
    """One-point union; reduced series add, diagonal-null only if both are."""
    return SpaceProfile(
        f"{a.name} v {b.name}",
        a.series + b.series,
        diagonal_null=a.diagonal_null and b.diagonal_null,
    )


def smash(a: SpaceProfile, b: SpaceProfile) -> SpaceProfile:
    """Smash product; reduced series multiply (Kunneth over a field).

    One diagonal-null factor makes the whole smash diagonal-null.
    """
    return SpaceProfile(
        f"{a.name} ^ {b.name}",
        a.series * b.series,
        diagonal_null=a.diagonal_null or b.diagonal_null,
    )


def combine(a: SpaceProfile, b: SpaceProfile, op: str) -> SpaceProfile:
    """Dispatch on op in {"wedge", "smash"}."""
    if op == "wedge":
        return wedge(a, b)
    if op == "smash":
        return smash(a, b)
    raise ValueError(f"unknown combination {op!r}; expected 'wedge' or 'smash'")


def suspend(a: SpaceProfile) -> SpaceProfile:
    """Suspension: series shifts up one degree; suspensions are co-H, hence diagonal-null."""
    return SpaceProfile(f"susp({a.name})", T * a.series, diagonal_null=True)


def union_series(pair: PairInclusion) -> RationalGF:
    """Reduced Poincare series of (A ^ RP^inf) glued to (Y ^ RP^1) along A ^ RP^1.

    The Mayer-Vietoris sequence of the union splits into short exact
    sequences when the inclusion is a monomorphism in homology, giving
    t*P(Y) + t^2/(1-t)*P(A).  Without the declared monomorphism the split
    fails and the computation is refused.
    """
    if not pair.mono_in_homology:
        raise HypothesisViolation(
            f"{pair.sub.name} -> {pair.ambient.name}: the union series needs the "
            "inclusion declared a monomorphism in homology (mono_in_homology)"
        )
    t_sq_over_1mt = RationalGF(IntPolynomial((0, 0, 1)), IntPolynomial((1, -1)))
    return T * pair.ambient.series + t_sq_over_1mt * pair.sub.series


def parse_catalog(data: object) -> dict[str, SpaceProfile]:
    """Build profiles from decoded catalog JSON (a list of objects).

    Each entry needs "name", integer coefficient arrays "numerator" and
    "denominator" (ascending degree, denominator nonzero at index 0), and a
    boolean "diagonal_null"; "notes" is optional.
    """
    if not isinstance(data, list):
        raise ValueError("catalog must be a JSON array of space objects")
    out: dict[str, SpaceProfile] = {}
    for i, entry in enumerate(data):
        if not isinstance(entry, dict):
            raise ValueError(f"catalog entry {i} is not an object")
        try:
            name = entry["name"]
            num = entry["numerator"]
            den = entry["denominator"]
            diag = entry["diagonal_null"]
        except KeyError as missing:
            raise ValueError(f"catalog entry {i} lacks key {missing}") from None
        if not isinstance(name, str) or not name:
            raise ValueError(f"catalog entry {i}: name must be a nonempty string")
        for label, arr in (("numerator", num), ("denominator", den)):
            if not isinstance(arr, list) or not all(isinstance(c, int) for c in arr):
                raise ValueError(f"catalog entry {name!r}: {label} must be a list of integers")
        if not den or den[0] == 0:
            raise ValueError(
                f"catalog entry {name!r}: denominator needs a nonzero entry at index 0"
            )
        if not isinstance(diag, bool):
            raise ValueError(f"catalog entry {name!r}: diagonal_null must be a boolean")
        if name in out:
            raise ValueError(f"catalog defines {name!r} twice")
        out[name] = SpaceProfile(
            name,
            RationalGF.from_coeffs(num, den),
            diagonal_null=diag,
            notes=str(entry.get("notes", "")),
        )
    return out


def load_catalog(path: str | os.PathLike) -> dict[str, SpaceProfile]:
    """Read a catalog JSON file; see parse_catalog for the schema."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return parse_catalog(data)
