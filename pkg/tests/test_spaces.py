"""Space profiles, constructors, the glued-union series, and the catalog."""

import json
import math
import random

import pytest

from loopspace.errors import HypothesisViolation
from loopspace.gfcore import RationalGF, T, TruncSeries
from loopspace.spaces import (
    PairInclusion,
    SpaceProfile,
    combine,
    cone,
    load_catalog,
    parse_catalog,
    point,
    projective,
    smash,
    sphere,
    suspend,
    union_series,
    wedge,
)


def test_sphere_series_and_flags():
    s = sphere(1)
    assert s.series == RationalGF.from_coeffs([0, 1])
    assert s.diagonal_null
    assert s.is_path_connected
    assert sphere(2).series == RationalGF.from_coeffs([0, 0, 1])
    assert sphere(3).betti(5).coeffs == (0, 0, 0, 1, 0, 0)


def test_sphere_rejects_nonpositive_dimension():
    with pytest.raises(ValueError):
        sphere(0)
    with pytest.raises(ValueError):
        sphere(-2)


def test_projective_line_is_the_circle():
    p1 = projective(1)
    s1 = sphere(1)
    assert p1.series == s1.series
    assert p1.diagonal_null == s1.diagonal_null
    assert p1.series.normalized().num.coeffs == s1.series.normalized().num.coeffs
    assert p1.series.normalized().den.coeffs == s1.series.normalized().den.coeffs


def test_projective_finite_and_infinite():
    assert projective(3).series == RationalGF.from_coeffs([0, 1, 1, 1])
    assert not projective(3).diagonal_null
    assert not projective(2).diagonal_null
    inf = projective(math.inf)
    assert inf.series == RationalGF.from_coeffs([0, 1], [1, -1])
    assert not inf.diagonal_null
    assert inf.betti(5).coeffs == (0, 1, 1, 1, 1, 1)


def test_projective_rejects_bad_dimensions():
    with pytest.raises(ValueError):
        projective(0)
    with pytest.raises(ValueError):
        projective(-1)
    with pytest.raises(ValueError):
        projective(2.5)


def test_point_and_cone_are_trivial():
    assert point().series.num.is_zero
    assert point().diagonal_null
    c = cone(sphere(1))
    assert c.series.num.is_zero
    assert c.diagonal_null
    assert c.name == "cone(S^1)"


def test_wedge_adds_series():
    w = wedge(sphere(1), sphere(1))
    assert w.series == RationalGF.from_coeffs([0, 2])
    assert w.diagonal_null  # both factors null
    assert not wedge(sphere(1), projective(3)).diagonal_null


def test_smash_multiplies_series():
    sm = smash(sphere(1), sphere(2))
    assert sm.series == RationalGF.from_coeffs([0, 0, 0, 1])
    assert smash(sphere(1), projective(math.inf)).series == RationalGF.from_coeffs(
        [0, 0, 1], [1, -1]
    )
    # one null factor suffices
    assert smash(sphere(1), projective(3)).diagonal_null
    assert not smash(projective(2), projective(3)).diagonal_null


def test_combine_dispatch():
    assert combine(sphere(1), sphere(1), "wedge").series == RationalGF.from_coeffs([0, 2])
    assert combine(sphere(1), sphere(2), "smash").series == RationalGF.from_coeffs(
        [0, 0, 0, 1]
    )
    with pytest.raises(ValueError):
        combine(sphere(1), sphere(1), "join")


def test_suspend_shifts_degree():
    assert suspend(sphere(1)).series == RationalGF.from_coeffs([0, 0, 1])
    assert suspend(projective(math.inf)).series == RationalGF.from_coeffs(
        [0, 0, 1], [1, -1]
    )
    assert suspend(point()).series.num.is_zero
    # suspensions are declared diagonal-null even when the input is not
    assert suspend(projective(3)).diagonal_null


def test_diagonal_null_requires_path_connected():
    with pytest.raises(HypothesisViolation):
        SpaceProfile("bad", RationalGF.from_coeffs([1, 1]), diagonal_null=True)


def test_profile_is_path_connected():
    assert sphere(4).is_path_connected
    disconnected = SpaceProfile("two points", RationalGF.from_coeffs([1]))
    assert not disconnected.is_path_connected


def test_union_series_requires_mono_flag():
    pair = PairInclusion(sub=sphere(1), ambient=sphere(2))
    with pytest.raises(HypothesisViolation):
        union_series(pair)


def test_union_series_point_sub_is_suspension():
    pair = PairInclusion(sub=point(), ambient=sphere(1), mono_in_homology=True)
    assert union_series(pair) == RationalGF.from_coeffs([0, 0, 1])
    assert union_series(pair) == suspend(sphere(1)).series


def test_union_series_identity_inclusion():
    pair = PairInclusion(sub=sphere(1), ambient=sphere(1), mono_in_homology=True)
    got = union_series(pair)
    assert got == RationalGF.from_coeffs([0, 0, 1], [1, -1])
    assert got == smash(sphere(1), projective(math.inf)).series


def test_union_series_wedge_ambient():
    pair = PairInclusion(
        sub=sphere(2), ambient=wedge(sphere(2), sphere(3)), mono_in_homology=True
    )
    expected = RationalGF.from_coeffs([0, 0, 0, 1, 1]) + RationalGF.from_coeffs(
        [0, 0, 0, 0, 1], [1, -1]
    )
    assert union_series(pair) == expected


def test_union_series_of_point_sub_matches_suspension_randomized():
    rng = random.Random(41)
    for _ in range(10):
        coeffs = [0] + [rng.randint(0, 3) for _ in range(rng.randint(1, 5))]
        y = SpaceProfile("Y", RationalGF.from_coeffs(coeffs))
        pair = PairInclusion(sub=point(), ambient=y, mono_in_homology=True)
        assert union_series(pair) == T * y.series


def test_constructor_series_nonnegative_to_degree_30():
    profiles = [
        sphere(1),
        sphere(2),
        sphere(4),
        projective(1),
        projective(2),
        projective(4),
        projective(math.inf),
        point(),
        cone(projective(2)),
        wedge(sphere(1), projective(math.inf)),
        smash(sphere(2), projective(math.inf)),
        smash(projective(math.inf), projective(math.inf)),
        suspend(projective(3)),
        suspend(wedge(sphere(1), sphere(1))),
    ]
    for profile in profiles:
        assert all(c >= 0 for c in profile.betti(30)), profile.name


def test_betti_returns_trunc_series():
    assert sphere(2).betti(4) == TruncSeries([0, 0, 1, 0, 0])


# ------------------------------------------------------------------ catalog


def _entry(name="M", num=(0, 1), den=(1,), diag=False, **extra):
    d = {
        "name": name,
        "numerator": list(num),
        "denominator": list(den),
        "diagonal_null": diag,
    }
    d.update(extra)
    return d


def test_parse_catalog_happy_path():
    cat = parse_catalog([_entry(), _entry(name="W", num=(0, 2), diag=True, notes="wedge")])
    assert set(cat) == {"M", "W"}
    assert cat["M"].series == RationalGF.from_coeffs([0, 1])
    assert cat["W"].diagonal_null
    assert cat["W"].notes == "wedge"


def test_parse_catalog_rejects_bad_shapes():
    with pytest.raises(ValueError):
        parse_catalog({"name": "M"})
    with pytest.raises(ValueError):
        parse_catalog(["not an object"])
    with pytest.raises(ValueError):
        parse_catalog([{"name": "M", "numerator": [0, 1]}])  # missing keys
    with pytest.raises(ValueError):
        parse_catalog([_entry(name="")])
    with pytest.raises(ValueError):
        parse_catalog([_entry(num=(0, 1.5))])
    with pytest.raises(ValueError):
        parse_catalog([_entry(den=())])
    with pytest.raises(ValueError):
        parse_catalog([_entry(den=(0, 1))])
    with pytest.raises(ValueError):
        parse_catalog([_entry(diag="yes")])
    with pytest.raises(ValueError):
        parse_catalog([_entry(), _entry()])  # duplicate name


def test_parse_catalog_enforces_profile_invariants():
    # diagonal_null with nonzero constant coefficient is contradictory
    with pytest.raises(HypothesisViolation):
        parse_catalog([_entry(num=(1, 1), diag=True)])


def test_load_catalog_roundtrip(tmp_path):
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps([_entry(name="torusish", num=(0, 2, 1))]))
    cat = load_catalog(path)
    assert cat["torusish"].series == RationalGF.from_coeffs([0, 2, 1])
    assert not cat["torusish"].diagonal_null
