# -*- coding: utf-8 -*-
import math

import pytest

from errors import InvalidInputError
from lattice import (
    AnnulusSpec, BoxSpec, NormKind, annulus, as_point, box_diameter, distance,
    minimal_odd_above, norm_array,
)


# ============================================================================
# NOKTALAR VE NORMLAR
# ============================================================================
def test_as_point_accepts_int_and_sequences():
    assert as_point(5) == (5,)
    assert as_point([1, -2, 3], d=3) == (1, -2, 3)


@pytest.mark.parametrize("bad", [(1.5,), (True,), (), "ab", (2 ** 41,)])
def test_as_point_rejects_bad_input(bad):
    with pytest.raises(InvalidInputError):
        as_point(bad)


def test_as_point_dimension_mismatch():
    with pytest.raises(InvalidInputError):
        as_point((1, 2), d=3)


def test_distance_norms():
    assert distance((0, 0), (3, 4)) == pytest.approx(5.0)
    assert distance((0, 0), (3, 4), "sup") == 4.0
    assert distance((0, 0), (3, 4), NormKind.TAXICAB) == 7.0


def test_norm_array_matches_scalar_distance():
    rows = [(1, 2), (-3, 0), (2, -2)]
    for norm in NormKind:
        expected = [distance((0, 0), r, norm) for r in rows]
        assert norm_array(rows, norm).tolist() == pytest.approx(expected)


def test_unknown_norm():
    with pytest.raises(InvalidInputError):
        NormKind.parse("manhattan-ish")


# ============================================================================
# KUTULAR
# ============================================================================
def test_centered_box_bounds():
    box = BoxSpec.centered((0, 0), 5)
    assert box.lower == (-2, -2)
    assert box.upper == (2, 2)
    assert box.site_count == 25


def test_centered_box_requires_odd_side():
    with pytest.raises(InvalidInputError):
        BoxSpec.centered((0,), 4)


@pytest.mark.parametrize("side", [0, -3, 2.0, True])
def test_box_side_validation(side):
    with pytest.raises(InvalidInputError):
        BoxSpec.cornered((0,), side)


def test_index_roundtrip_is_lexicographic():
    box = BoxSpec.cornered((1, -1), 3)
    points = list(box.sites())
    assert points[:3] == [(1, -1), (1, 0), (1, 1)]
    assert [box.index_of(p) for p in points] == list(range(9))
    assert [box.point_of(i) for i in range(9)] == points
    assert box.coords_array().tolist() == [list(p) for p in points]


def test_indices_of_marks_outside_rows():
    box = BoxSpec.cornered((0, 0), 3)
    assert box.indices_of([(0, 0), (2, 2), (3, 0), (-1, 1)]).tolist() == [0, 8, -1, -1]


def test_index_of_outside_box():
    with pytest.raises(InvalidInputError):
        BoxSpec.cornered((0,), 4).index_of((4,))


def test_contains_box():
    outer = BoxSpec.cornered((0, 0), 10)
    assert outer.contains_box(BoxSpec.cornered((2, 2), 5))
    assert not outer.contains_box(BoxSpec.cornered((6, 2), 5))


def test_box_diameter_closed_form():
    box = BoxSpec.cornered((0, 0, 0), 4)
    assert box_diameter(box) == pytest.approx(3 * math.sqrt(3))
    assert box_diameter(box, "sup") == 3.0
    assert box_diameter(box, "taxicab") == 9.0


# ============================================================================
# HALKALAR
# ============================================================================
@pytest.mark.parametrize("x, expected", [(0.5, 1), (1, 3), (2, 3), (2.9, 3), (3, 5), (6.5, 7)])
def test_minimal_odd_above(x, expected):
    assert minimal_odd_above(x) == expected


def test_small_annulus_is_empty():
    ring = annulus((0,), 2)
    assert isinstance(ring, AnnulusSpec)
    assert ring.is_empty
    assert ring.site_count == 0
    assert list(ring.sites()) == []


def test_annulus_sites():
    ring = annulus((0, 0), 6)
    # L+ = 7, L- = 5
    assert ring.outer.side == 7 and ring.inner.side == 5
    assert ring.site_count == 49 - 25
    sites = set(ring.sites())
    assert len(sites) == ring.site_count
    assert all(max(abs(a), abs(b)) == 3 for a, b in sites)
    assert {tuple(r) for r in ring.sites_array().tolist()} == sites


@pytest.mark.parametrize("L", [0, -1, float("inf"), float("nan")])
def test_annulus_rejects_bad_scale(L):
    with pytest.raises(InvalidInputError):
        annulus((0,), L)
