from fractions import Fraction

import pytest

from aztec_tilings.errors import InvalidHolesError, InvalidOrderError, InvalidPointError
from aztec_tilings.grids import dual_graph
from aztec_tilings.engines import count_brute
from aztec_tilings.regions import (
    KLEIN_ABUT,
    KLEIN_NONABUT,
    PINWHEEL,
    QUARTER_KINDS,
    Region,
    build_aztec_diamond,
    build_aztec_rectangle,
    build_holey_ar,
    build_holey_ar_bar,
    build_quartered,
    bottom_row_points,
    congruent,
    rotate_cells_90,
    set_A,
    set_B,
    zigzag_side,
)


def test_diamond_order_1_is_the_2x2_block():
    assert build_aztec_diamond(1).cells == {(-1, 0), (0, 0), (-1, -1), (0, -1)}


def test_diamond_order_4_row_zero_span():
    ad4 = build_aztec_diamond(4)
    assert len(ad4) == 40
    assert sorted(i for i, j in ad4.cells if j == 0) == list(range(-4, 4))


def test_diamond_order_8_cell_count():
    assert len(build_aztec_diamond(8)) == 144


@pytest.mark.parametrize("n", range(1, 13))
def test_diamond_size_and_rotational_symmetry(n):
    cells = build_aztec_diamond(n).cells
    assert len(cells) == 2 * n * (n + 1)
    assert rotate_cells_90(cells) == cells


def test_diamond_rejects_bad_order():
    with pytest.raises(InvalidOrderError):
        build_aztec_diamond(0)


def test_zigzag_side_examples():
    assert zigzag_side(0.5, 0.5) == 1
    assert zigzag_side(-0.5, 0.5) == -1
    assert zigzag_side(2.5, -1.5) == 1
    assert zigzag_side(Fraction(5, 2), Fraction(-3, 2)) == 1


def test_zigzag_side_rejects_non_centers():
    with pytest.raises(InvalidPointError):
        zigzag_side(1, 0.5)
    with pytest.raises(InvalidPointError):
        zigzag_side(0.25, 0.5)


def test_pinwheel_quarter_order_3():
    r3 = build_quartered(3, PINWHEEL)
    assert r3.cells == {(-1, 2), (0, 2), (-2, 1), (-1, 1), (0, 1), (0, 0)}
    assert count_brute(dual_graph(r3)) == 1


def test_abutting_quarter_order_3_is_a_2x3_block():
    ka3 = build_quartered(3, KLEIN_ABUT)
    assert ka3.cells == {(-3, 0), (-2, 0), (-1, 0), (-3, -1), (-2, -1), (-1, -1)}
    assert count_brute(dual_graph(ka3)) == 3


def test_nonabutting_quarter_order_1_is_empty():
    assert len(build_quartered(1, KLEIN_NONABUT)) == 0


def test_quartered_rejects_bad_input():
    with pytest.raises(InvalidOrderError):
        build_quartered(0, PINWHEEL)
    with pytest.raises(ValueError):
        build_quartered(3, "nope")


@pytest.mark.parametrize("n", range(1, 13))
def test_pinwheel_quarters_partition_the_diamond(n):
    ad = build_aztec_diamond(n).cells
    quarter = build_quartered(n, PINWHEEL).cells
    parts = [quarter]
    for _ in range(3):
        parts.append(rotate_cells_90(parts[-1]))
    union = set()
    for part in parts:
        assert not (union & part)
        union |= part
    assert union == ad


@pytest.mark.parametrize("n", range(1, 13))
def test_klein_quarters_partition_the_diamond(n):
    ad = build_aztec_diamond(n).cells
    north = build_quartered(n, KLEIN_NONABUT).cells
    west = build_quartered(n, KLEIN_ABUT).cells
    south = frozenset((-i - 1, -j - 1) for i, j in north)
    east = frozenset((-i - 1, -j - 1) for i, j in west)
    assert len(north) + len(west) + len(south) + len(east) == len(ad)
    assert north | west | south | east == ad


@pytest.mark.parametrize("n", range(1, 21))
def test_quarter_cardinalities(n):
    # The pinwheel quarter always has n(n+1)/2 cells.  The two Klein
    # quarters split n(n+1) cells between them, so when n(n+1)/2 is odd
    # the abutting one carries one extra cell and the other one fewer.
    half = n * (n + 1) // 2
    skew = half % 2
    assert len(build_quartered(n, PINWHEEL)) == half
    assert len(build_quartered(n, KLEIN_ABUT)) == half + skew
    assert len(build_quartered(n, KLEIN_NONABUT)) == half - skew


def test_congruent_rotated_pinwheel_quarter():
    r4 = build_quartered(4, PINWHEEL)
    rotated = Region(cells=rotate_cells_90(r4.cells), name="rot")
    assert congruent(r4, rotated)


def test_congruent_translated_block():
    ka3 = build_quartered(3, KLEIN_ABUT)
    block = Region(cells=frozenset((i + 11, j - 7) for i in range(3) for j in range(2)))
    assert congruent(ka3, block)


def test_not_congruent_pinwheel_vs_nonabutting():
    assert not congruent(build_quartered(4, PINWHEEL), build_quartered(4, KLEIN_NONABUT))


@pytest.mark.parametrize("n", range(2, 11))
def test_klein_kinds_not_congruent(n):
    assert not congruent(build_quartered(n, KLEIN_ABUT), build_quartered(n, KLEIN_NONABUT))


def test_all_pinwheel_quarters_congruent():
    r5 = build_quartered(5, PINWHEEL)
    cells = r5.cells
    for _ in range(3):
        cells = rotate_cells_90(cells)
        assert congruent(r5, Region(cells=cells))


def test_rectangle_vertex_counts():
    assert len(build_aztec_rectangle(3, 5)) == 38
    assert len(build_aztec_rectangle(2, 4)) == 22
    four_cycle = build_aztec_rectangle(1, 1)
    assert len(four_cycle) == 4
    assert count_brute(four_cycle) == 2


@pytest.mark.parametrize("m,n", [(1, 1), (2, 4), (3, 5), (4, 2)])
def test_rectangle_bottom_row(m, n):
    g = build_aztec_rectangle(m, n)
    assert len(g) == 2 * m * n + m + n
    pts = set(g.vertices)
    assert all(p in pts for p in bottom_row_points(n))
    assert len(bottom_row_points(n)) == n


def test_holey_rectangle_keep():
    assert len(build_holey_ar(3, 5, (1, 3, 5))) == 36
    assert len(build_holey_ar(2, 4, (2, 3))) == 20
    untouched = build_holey_ar(1, 1, (1,))
    assert untouched == build_aztec_rectangle(1, 1)


def test_holey_rectangle_remove():
    assert len(build_holey_ar_bar(3, 5, (3, 4, 6))) == 30
    assert len(build_holey_ar_bar(2, 3, (1, 4))) == 12


def test_holey_rejects_bad_positions():
    with pytest.raises(InvalidHolesError):
        build_holey_ar_bar(1, 1, (1, 2))
    with pytest.raises(InvalidHolesError):
        build_holey_ar(2, 4, (3,))
    with pytest.raises(InvalidHolesError):
        build_holey_ar(2, 4, (0, 3))
    with pytest.raises(InvalidHolesError):
        build_holey_ar(2, 4, (3, 5))
    with pytest.raises(InvalidHolesError):
        build_holey_ar(2, 4, (3, 2))


def test_index_sets():
    assert set_A(1) == (1, 4)
    assert set_A(2) == (1, 3, 6, 8)
    assert set_B(2) == (2, 4, 5, 7)
    for n in range(1, 9):
        assert len(set_A(n)) == len(set_B(n)) == 2 * n


def test_region_json_round_trip():
    r = build_quartered(4, KLEIN_NONABUT)
    data = r.to_json_dict()
    assert data["cells"] == sorted(data["cells"])
    assert Region.from_json_dict(data) == r


@pytest.mark.parametrize("kind", QUARTER_KINDS)
def test_quarter_cells_inside_diamond(kind):
    for n in (1, 4, 9):
        assert build_quartered(n, kind).cells <= build_aztec_diamond(n).cells
