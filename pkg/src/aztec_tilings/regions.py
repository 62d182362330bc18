"""Lattice regions and structured graphs: diamonds, quarters, holey rectangles.

Coordinate conventions, fixed once and validated by tiling counts:

* Cell (i, j) is the unit square [i, i+1] x [j, j+1]; its center is at
  (i + 1/2, j + 1/2), never on an integer line.
* The staircase cut Z descends rightward with 2-unit steps, corner points
  (2k, 1-2k) and (2k, -1-2k); it passes next to the origin.  A point is on
  the +1 side iff it lies above Z.
* Quarter selection: the pinwheel quarter is the north one (Z together
  with Z rotated 90 degrees); the Klein division superimposes Z and its
  mirror image in the y-axis, giving the north (non-abutting) and west
  (abutting) quarters as representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InvalidHolesError, InvalidOrderError, InvalidPointError
from .grids import EmbeddedGraph, LATTICE_SYMMETRIES

Cell = tuple[int, int]

PINWHEEL = "pinwheel"
KLEIN_ABUT = "klein_abut"
KLEIN_NONABUT = "klein_nonabut"
QUARTER_KINDS = (PINWHEEL, KLEIN_ABUT, KLEIN_NONABUT)


@dataclass(frozen=True)
class Region:
    """A finite set of unit cells; empty regions count as having one tiling."""

    cells: frozenset[Cell]
    name: str = ""

    def __len__(self) -> int:
        return len(self.cells)

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)

    def to_json_dict(self) -> dict:
        return {"name": self.name, "cells": [list(c) for c in self.sorted_cells()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Region":
        cells = frozenset((int(i), int(j)) for i, j in data["cells"])
        return cls(cells=cells, name=str(data.get("name", "")))


def _span(i: int) -> int:
    # max(|i|, |i+1|): how far cell index i reaches from the origin
    return i + 1 if i >= 0 else -i


def _side_doubled(p: int, q: int) -> int:
    # Cut predicate on doubled coordinates (p, q) = (2x, 2y), both odd.
    # Above the staircase means y > -1 - 2*floor(x/2).
    return 1 if q > -2 - 4 * (p // 4) else -1


def zigzag_side(x, y) -> int:
    """Side of the staircase cut for a cell-center point: +1 above, -1 below."""
    fx, fy = Fraction(x), Fraction(y)
    if fx.denominator != 2 or fy.denominator != 2:
        raise InvalidPointError(f"({x}, {y}) is not a cell center")
    return _side_doubled(fx.numerator, fy.numerator)


def _side1(i: int, j: int) -> int:
    return _side_doubled(2 * i + 1, 2 * j + 1)


def _side2(i: int, j: int) -> int:
    # test point rotated by -90 degrees: (x, y) -> (y, -x)
    return _side_doubled(2 * j + 1, -(2 * i + 1))


def _side3(i: int, j: int) -> int:
    # test point mirrored in the y-axis: (x, y) -> (-x, y)
    return _side_doubled(-(2 * i + 1), 2 * j + 1)


def build_aztec_diamond(n: int) -> Region:
    """Diamond of order n: cells whose corners (x, y) all satisfy |x|+|y| <= n+1."""
    _require_order(n)
    cells = set()
    for i in range(-n, n):
        rest = n + 1 - _span(i)
        for j in range(-rest, rest):
            cells.add((i, j))
    return Region(cells=frozenset(cells), name=f"ad({n})")


def build_quartered(n: int, kind: str) -> Region:
    """One quarter of the order-n diamond under the chosen two-cut division."""
    _require_order(n)
    if kind not in QUARTER_KINDS:
        raise ValueError(f"unknown quarter kind {kind!r}")
    picked = set()
    for c in build_aztec_diamond(n).cells:
        i, j = c
        if kind == PINWHEEL:
            keep = _side1(i, j) > 0 and _side2(i, j) > 0
        elif kind == KLEIN_NONABUT:
            keep = _side1(i, j) > 0 and _side3(i, j) > 0
        else:
            keep = _side1(i, j) < 0 and _side3(i, j) > 0
        if keep:
            picked.add(c)
    return Region(cells=frozenset(picked), name=f"{kind}({n})")


def rotate_cells_90(cells: Iterable[Cell]) -> frozenset[Cell]:
    """Rotate a cell set 90 degrees counterclockwise about the origin."""
    return frozenset((-j - 1, i) for i, j in cells)


def _canonical_cells(cells: frozenset[Cell]) -> tuple:
    if not cells:
        return ()
    best = None
    for sym in LATTICE_SYMMETRIES:
        moved = []
        for i, j in cells:
            p, q = sym(2 * i + 1, 2 * j + 1)
            moved.append(((p - 1) // 2, (q - 1) // 2))
        oi = min(i for i, _ in moved)
        oj = min(j for _, j in moved)
        key = tuple(sorted((i - oi, j - oj) for i, j in moved))
        if best is None or key < best:
            best = key
    return best


def congruent(r1: Region, r2: Region) -> bool:
    """True iff some lattice symmetry plus translation maps r1's cells onto r2's."""
    return _canonical_cells(r1.cells) == _canonical_cells(r2.cells)


def set_A(n: int) -> tuple[int, ...]:
    """Odd positions 1..2n-1 followed by even positions 2n+2..4n."""
    _require_order(n)
    return tuple(range(1, 2 * n, 2)) + tuple(range(2 * n + 2, 4 * n + 1, 2))


def set_B(n: int) -> tuple[int, ...]:
    """Even positions 2..2n followed by odd positions 2n+1..4n-1."""
    _require_order(n)
    return tuple(range(2, 2 * n + 1, 2)) + tuple(range(2 * n + 1, 4 * n, 2))


def _ar_points(m: int, n: int) -> set[tuple[int, int]]:
    # White squares of a (2m+1) x (2n+1) board with black corners, sent to
    # rotated grid coordinates so diagonal adjacency becomes orthogonal:
    # board (column c, row r) -> (a, b) = ((c+r-1)/2, (r-c+2n+1)/2).
    pts = set()
    for r in range(1, 2 * m + 2):
        first = 1 if r % 2 == 0 else 2
        for c in range(first, 2 * n + 2, 2):
            pts.add(((c + r - 1) // 2, (r - c + 2 * n + 1) // 2))
    return pts


def bottom_row_points(n: int) -> list[tuple[int, int]]:
    """Rotated coordinates of the bottom board row, positions 1..n left to right."""
    return [(k, n + 1 - k) for k in range(1, n + 1)]


def second_row_points(n: int) -> list[tuple[int, int]]:
    """Rotated coordinates of the next row up, positions 1..n+1 left to right."""
    return [(k, n + 2 - k) for k in range(1, n + 2)]


def build_aztec_rectangle(m: int, n: int) -> EmbeddedGraph:
    """The m x n rectangle graph on white squares with diagonal adjacency."""
    _require_order(m)
    _require_order(n)
    return EmbeddedGraph.from_points(_ar_points(m, n))


def _check_index_set(values: tuple[int, ...], size: int, width: int) -> None:
    if list(values) != sorted(set(values)):
        raise InvalidHolesError(f"positions {values} are not strictly ascending")
    if len(values) != size:
        raise InvalidHolesError(f"expected {size} positions, got {len(values)}")
    if values and not (1 <= values[0] and values[-1] <= width):
        raise InvalidHolesError(f"positions {values} outside 1..{width}")


def build_holey_ar(m: int, n: int, keep: Iterable[int]) -> EmbeddedGraph:
    """Rectangle graph with the bottom row removed except at m kept positions."""
    _require_order(m)
    _require_order(n)
    kept = tuple(keep)
    _check_index_set(kept, m, n)
    pts = _ar_points(m, n)
    row = bottom_row_points(n)
    for pos in range(1, n + 1):
        if pos not in kept:
            pts.discard(row[pos - 1])
    return EmbeddedGraph.from_points(pts)


def build_holey_ar_bar(m: int, n: int, remove: Iterable[int]) -> EmbeddedGraph:
    """Rectangle graph minus its whole bottom row, then m more holes above it."""
    _require_order(m)
    _require_order(n)
    removed = tuple(remove)
    _check_index_set(removed, m, n + 1)
    pts = _ar_points(m, n)
    for p in bottom_row_points(n):
        pts.discard(p)
    row = second_row_points(n)
    for pos in removed:
        pts.discard(row[pos - 1])
    return EmbeddedGraph.from_points(pts)


def _require_order(n: int) -> None:
    if n < 1:
        raise InvalidOrderError(f"order must be >= 1, got {n}")
