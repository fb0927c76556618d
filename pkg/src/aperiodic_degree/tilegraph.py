"""Graphs of tiling patches: tile corners are vertices, tile sides are edges.

Sides are deduplicated exactly and kept whole. A corner of one tile that
lies strictly inside a side of another tile (a T-vertex, which only occurs in
A2) is recorded as an interior incidence of that side. Two degree notions
are offered:

``planar``
    the degree in the planar graph obtained by splitting every side at the
    vertices lying on it, i.e. the number of distinct directions in which
    sides leave the vertex. This is the default.
``containment``
    the number of distinct whole sides that contain the vertex.

Both agree with the ordinary degree on edge-to-edge patches.
"""

from __future__ import annotations

import bisect
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .ring import AlgebraicPoint, Coeffs, CoordSystem, embed
from .substitution import Patch, Tile

Side = tuple[AlgebraicPoint, AlgebraicPoint]


class DegreeModel(str, Enum):
    PLANAR = "planar"
    CONTAINMENT = "containment"


class Measure(str, Enum):
    """What is averaged over the window.

    ``DEGREE`` uses the graph degree. ``CORNERS`` counts, for each point, how
    many tiles of the patch have a corner there; this is the quantity the
    quad-list degree counter computes from a corner dump.
    """

    DEGREE = "degree"
    CORNERS = "corners"


def _direction_count(sys: CoordSystem) -> int:
    """Number of distinct side directions in a full turn."""
    return 4 if sys.is_pair else sys.rotation_order


def direction_index(sys: CoordSystem, a: AlgebraicPoint, b: AlgebraicPoint) -> int:
    """Index of the direction from a to b in units of the family's base angle."""
    ax, ay = embed(a)
    bx, by = embed(b)
    n = _direction_count(sys)
    return round(math.atan2(by - ay, bx - ax) / (2 * math.pi / n)) % n


def _line_key(sys: CoordSystem, p: AlgebraicPoint, k: int) -> Coeffs:
    """Exact offset of p from the line through the origin with direction k.

    Cyclotomic families: with u = zeta^k, the ring element w - conj(w) where
    w = conj(u) p is 2i times the signed distance, so equal keys mean
    collinear. A2 directions are axis-parallel, so the key is a coordinate.
    """
    if sys.is_pair:
        return p.coords[1] if k % 2 == 0 else p.coords[0]
    w = sys.mul(sys.conj(sys.power(k)), p.coords[0])
    return sys.sub(w, sys.conj(w))


@dataclass
class TilingGraph:
    system: CoordSystem
    vertices: tuple[AlgebraicPoint, ...]
    sides: tuple[Side, ...]
    incidence: dict[AlgebraicPoint, list[int]]
    interior: dict[int, list[AlgebraicPoint]]
    corner_count: dict[AlgebraicPoint, int]
    model: DegreeModel = DegreeModel.PLANAR
    _degree: dict[AlgebraicPoint, int] = field(default_factory=dict, repr=False)

    def degree(self, v: AlgebraicPoint) -> int:
        if not self._degree:
            self._degree = self._compute_degrees()
        return self._degree[v]

    def degrees(self) -> dict[AlgebraicPoint, int]:
        if not self._degree:
            self._degree = self._compute_degrees()
        return self._degree

    def _compute_degrees(self) -> dict[AlgebraicPoint, int]:
        if self.model is DegreeModel.CONTAINMENT:
            return {v: len(self.incidence[v]) for v in self.vertices}
        half = _direction_count(self.system) // 2
        out = {}
        for v in self.vertices:
            dirs = set()
            for si in self.incidence[v]:
                a, b = self.sides[si]
                if v == a:
                    dirs.add(direction_index(self.system, a, b))
                elif v == b:
                    dirs.add(direction_index(self.system, b, a))
                else:
                    d = direction_index(self.system, a, b)
                    dirs.add(d)
                    dirs.add((d + half) % (2 * half))
            out[v] = len(dirs)
        return out

    def interior_incidences(self) -> int:
        return sum(len(v) for v in self.interior.values())

    def with_model(self, model: DegreeModel | str) -> "TilingGraph":
        return TilingGraph(
            self.system, self.vertices, self.sides, self.incidence, self.interior,
            self.corner_count, DegreeModel(model),
        )


def build_graph(p: Patch | Iterable[Tile], model: DegreeModel | str = DegreeModel.PLANAR) -> TilingGraph:
    tiles = p.tiles if isinstance(p, Patch) else tuple(p)
    if not tiles:
        raise ValueError("cannot build a graph from an empty patch")
    sys = tiles[0].system
    corner_count: Counter[AlgebraicPoint] = Counter()
    side_set: set[Side] = set()
    for t in tiles:
        corner_count.update(t.vertices)
        for a, b in t.sides():
            if a == b:
                raise ValueError("zero-length side")
            side_set.add((a, b) if a < b else (b, a))
    vertices = tuple(sorted(corner_count))
    sides = tuple(sorted(side_set))
    incidence: dict[AlgebraicPoint, list[int]] = {v: [] for v in vertices}
    for i, (a, b) in enumerate(sides):
        incidence[a].append(i)
        incidence[b].append(i)

    # group sides by supporting line, then look for vertices strictly inside
    n_dir = _direction_count(sys)
    half = n_dir // 2
    lines: dict[tuple[int, Coeffs], list[int]] = defaultdict(list)
    for i, (a, b) in enumerate(sides):
        k = direction_index(sys, a, b) % half
        lines[(k, _line_key(sys, a, k))].append(i)
    by_class: dict[int, set[Coeffs]] = defaultdict(set)
    for k, key in lines:
        by_class[k].add(key)
    interior: dict[int, list[AlgebraicPoint]] = {}
    for k, keys in by_class.items():
        on_line: dict[Coeffs, list[AlgebraicPoint]] = defaultdict(list)
        for v in vertices:
            key = _line_key(sys, v, k)
            if key in keys:
                on_line[key].append(v)
        ang = k * 2 * math.pi / n_dir
        ux, uy = math.cos(ang), math.sin(ang)
        for key, pts in on_line.items():
            if len(pts) < 3:
                continue
            proj = sorted(((embed(v)[0] * ux + embed(v)[1] * uy), v) for v in pts)
            ts = [t for t, _ in proj]
            for si in lines[(k, key)]:
                a, b = sides[si]
                ta = embed(a)[0] * ux + embed(a)[1] * uy
                tb = embed(b)[0] * ux + embed(b)[1] * uy
                lo, hi = min(ta, tb), max(ta, tb)
                i0 = bisect.bisect_right(ts, lo + 1e-9)
                i1 = bisect.bisect_left(ts, hi - 1e-9)
                inside = [v for _, v in proj[i0:i1] if v != a and v != b]
                if inside:
                    interior[si] = inside
                    for v in inside:
                        incidence[v].append(si)
    return TilingGraph(sys, vertices, sides, incidence, interior, dict(corner_count), DegreeModel(model))


# ---------------------------------------------------------------------------
# windows and summaries
# ---------------------------------------------------------------------------


class WindowMode(str, Enum):
    FULL = "full"
    MIDDLE_THIRD = "middle-third"
    COMPAT = "compat"


def _exact_xy(v: AlgebraicPoint) -> tuple[Coeffs, Coeffs]:
    """Exact stand-ins for the x and y coordinates (2x and 2iy for complex)."""
    s = v.system
    if s.is_pair:
        return v.coords[0], v.coords[1]
    z = v.coords[0]
    c = s.conj(z)
    return s.add(z, c), s.sub(z, c)


@dataclass(frozen=True)
class Window:
    mode: WindowMode
    rect: tuple[float, float, float, float]  # xmin, xmax, ymin, ymax
    boundary_x: frozenset = frozenset()
    boundary_y: frozenset = frozenset()

    def contains(self, v: AlgebraicPoint) -> bool:
        if self.mode is WindowMode.FULL:
            return True
        if self.mode is WindowMode.COMPAT:
            ex, ey = _exact_xy(v)
            return ex not in self.boundary_x and ey not in self.boundary_y
        x, y = embed(v)
        x0, x1, y0, y1 = self.rect
        return x0 <= x <= x1 and y0 <= y <= y1


def middle_third(xmin: float, xmax: float, ymin: float, ymax: float) -> tuple[float, float, float, float]:
    dx = (xmax - xmin) / 3.0
    dy = (ymax - ymin) / 3.0
    return (xmin + dx, xmax - dx, ymin + dy, ymax - dy)


def window_for_points(points: Iterable[AlgebraicPoint], mode: WindowMode | str) -> Window:
    mode = WindowMode(mode)
    pts = list(points)
    if not pts:
        raise ValueError("empty point set")
    emb = [embed(v) for v in pts]
    xs = [e[0] for e in emb]
    ys = [e[1] for e in emb]
    rect = (min(xs), max(xs), min(ys), max(ys))
    if mode is WindowMode.FULL:
        return Window(mode, rect)
    if mode is WindowMode.MIDDLE_THIRD:
        return Window(mode, middle_third(*rect))
    # The open bounding box. Points whose exact coordinate equals an extreme
    # are excluded; float ties cannot leak in.
    ix0 = xs.index(rect[0])
    ix1 = xs.index(rect[1])
    iy0 = ys.index(rect[2])
    iy1 = ys.index(rect[3])
    bx = frozenset({_exact_xy(pts[ix0])[0], _exact_xy(pts[ix1])[0]})
    by = frozenset({_exact_xy(pts[iy0])[1], _exact_xy(pts[iy1])[1]})
    return Window(mode, rect, bx, by)


def central_window(p: Patch | TilingGraph, mode: WindowMode | str) -> Window:
    if isinstance(p, TilingGraph):
        pts: Iterable[AlgebraicPoint] = p.vertices
    else:
        pts = {v for t in p.tiles for v in t.vertices}
    return window_for_points(pts, mode)


@dataclass(frozen=True)
class DegreeSummary:
    V: int
    T: int
    histogram: dict[int, int]
    window: WindowMode
    measure: Measure = Measure.DEGREE

    @property
    def empty(self) -> bool:
        return self.V == 0

    @property
    def average(self) -> Fraction | None:
        """T/V as an exact fraction, or None for an empty window."""
        return None if self.V == 0 else Fraction(self.T, self.V)

    @property
    def average_float(self) -> float | None:
        return None if self.V == 0 else self.T / self.V


class EmptyWindowError(ValueError):
    pass


def summarize(g: TilingGraph, w: Window | None = None, measure: Measure | str = Measure.DEGREE) -> DegreeSummary:
    """Count windowed vertices; each keeps its full degree."""
    measure = Measure(measure)
    w = w or Window(WindowMode.FULL, (0.0, 0.0, 0.0, 0.0))
    values = g.degrees() if measure is Measure.DEGREE else g.corner_count
    hist: Counter[int] = Counter()
    for v in g.vertices:
        if w.contains(v):
            hist[values[v]] += 1
    V = sum(hist.values())
    T = sum(d * c for d, c in hist.items())
    return DegreeSummary(V, T, dict(sorted(hist.items())), w.mode, measure)


def degree_histogram(g: TilingGraph, w: Window | None = None) -> dict[int, int]:
    return summarize(g, w).histogram


def compat_average(p: Patch) -> float | None:
    """Corner-count average inside the open bounding box of the patch."""
    g = build_graph(p)
    return summarize(g, central_window(g, WindowMode.COMPAT), Measure.CORNERS).average_float
