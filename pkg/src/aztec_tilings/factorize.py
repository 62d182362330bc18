"""Splitting a diagonally symmetric grid graph into two independent halves.

For a graph that maps onto itself under reflection across a diagonal
lattice line, deleting edges at the on-axis vertices in alternation
(below-side edges at the 1st, 3rd, ... vertex, above-side edges at the
rest) splits it into an upper part and a lower part whose matching
counts multiply:  M(G) = 2^w * M(G+) * M(G-), with 2w on-axis vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engines import count
from .errors import FactorizationError
from .grids import EmbeddedGraph, Point, connected_components

SLOPE_UP = 1
SLOPE_DOWN = -1


@dataclass(frozen=True)
class DiagonalAxis:
    """A diagonal lattice symmetry line y = x + offset or y = -x + offset."""

    slope: int
    offset: int
    on_axis: tuple[Point, ...]

    @property
    def w(self) -> int:
        return len(self.on_axis) // 2

    def to_json_dict(self) -> dict:
        return {
            "slope": self.slope,
            "offset": self.offset,
            "on_axis": [list(p) for p in self.on_axis],
        }


@dataclass(frozen=True)
class FactorizationResult:
    g_plus: EmbeddedGraph
    g_minus: EmbeddedGraph
    w: int


@dataclass(frozen=True)
class FactorizationReport:
    """All five quantities of the product identity, plus the verdict."""

    axis: DiagonalAxis
    w: int
    m_g: int
    m_plus: int
    m_minus: int

    @property
    def ok(self) -> bool:
        return self.m_g == (1 << self.w) * self.m_plus * self.m_minus

    def to_json_dict(self, g: EmbeddedGraph) -> dict:
        return {
            "graph": g.to_json_dict(),
            "axis": self.axis.to_json_dict(),
            "w": self.w,
            "m_g": str(self.m_g),
            "m_plus": str(self.m_plus),
            "m_minus": str(self.m_minus),
            "ok": self.ok,
        }


def _reflect(slope: int, offset: int, p: Point) -> Point:
    x, y = p
    if slope == SLOPE_UP:
        return (y - offset, x + offset)
    return (offset - y, offset - x)


def _diag_value(slope: int, p: Point) -> int:
    # on the axis iff this equals the offset
    return p[1] - p[0] if slope == SLOPE_UP else p[0] + p[1]


def _axis_if_valid(g: EmbeddedGraph, slope: int) -> DiagonalAxis | None:
    pts = set(g.vertices)
    vals = [_diag_value(slope, p) for p in g.vertices]
    total = min(vals) + max(vals)
    if total % 2:
        return None
    offset = total // 2
    if any(_reflect(slope, offset, p) not in pts for p in pts):
        return None
    pairs = {tuple(sorted(pq)) for pq in g.point_pairs()}
    for p, q in pairs:
        image = tuple(sorted((_reflect(slope, offset, p), _reflect(slope, offset, q))))
        if image not in pairs:
            return None
    on_axis = sorted(p for p in pts if _diag_value(slope, p) == offset)
    for a, b in zip(on_axis, on_axis[1:]):
        if b[0] != a[0] + 1:
            return None
    return DiagonalAxis(slope=slope, offset=offset, on_axis=tuple(on_axis))


def find_diagonal_axis(g: EmbeddedGraph) -> DiagonalAxis | None:
    """Smallest valid diagonal symmetry axis, slope +1 preferred, or None."""
    if not g.vertices:
        return None
    for slope in (SLOPE_UP, SLOPE_DOWN):
        axis = _axis_if_valid(g, slope)
        if axis is not None:
            return axis
    return None


def apply_factorization(g: EmbeddedGraph, axis: DiagonalAxis) -> FactorizationResult:
    """Cut g along the axis and return the upper and lower halves."""
    check = _axis_if_valid(g, axis.slope)
    if check is None or check != axis:
        raise FactorizationError("axis is not a valid symmetry axis for this graph")

    def above(p: Point) -> bool:
        return _diag_value(axis.slope, p) > axis.offset

    pts = set(g.vertices)
    pairs = {tuple(sorted(pq)) for pq in g.point_pairs()}
    for idx, v in enumerate(axis.on_axis):
        keep_above = idx % 2 == 0
        for q in _unit_neighbors(v):
            if q in pts and above(q) != keep_above:
                pairs.discard(tuple(sorted((v, q))))
    residual = EmbeddedGraph.from_points(g.vertices, pairs)

    plus_pts: set[Point] = set()
    minus_pts: set[Point] = set()
    axis_rank = {v: idx for idx, v in enumerate(axis.on_axis)}
    for comp in connected_components(residual):
        sides = {above(p) for p in comp if p not in axis_rank}
        if sides == {True}:
            plus_pts |= comp
        elif sides == {False}:
            minus_pts |= comp
        elif not sides:
            # a stranded on-axis vertex follows the side it kept
            v = next(iter(comp))
            (plus_pts if axis_rank[v] % 2 == 0 else minus_pts).add(v)
        else:
            raise FactorizationError("cut left a component touching both sides")

    def restrict(keep: set[Point]) -> EmbeddedGraph:
        kept = [(p, q) for p, q in pairs if p in keep and q in keep]
        return EmbeddedGraph.from_points(keep, kept)

    return FactorizationResult(
        g_plus=restrict(plus_pts),
        g_minus=restrict(minus_pts),
        w=len(axis.on_axis) // 2,
    )


def verify_factorization(g: EmbeddedGraph, engine: str = "auto") -> FactorizationReport:
    """Count the whole and both halves independently and check the identity."""
    axis = find_diagonal_axis(g)
    if axis is None:
        raise FactorizationError("graph has no diagonal symmetry axis")
    result = apply_factorization(g, axis)
    return FactorizationReport(
        axis=axis,
        w=result.w,
        m_g=count(g, engine),
        m_plus=count(result.g_plus, engine),
        m_minus=count(result.g_minus, engine),
    )


def _unit_neighbors(p: Point):
    x, y = p
    return ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1))
