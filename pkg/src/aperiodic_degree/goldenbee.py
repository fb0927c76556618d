"""Derivation of the A2 prototile geometry ("golden bee" decomposition).

The A2 tiles are right-angled L-shaped hexagons whose side lengths are powers
of lam = 1/Psi. The search below enumerates candidate hexagons and the
discrete isometries that place a lam-scaled copy and a lam^2-scaled copy
inside the unit-scale hexagon, and keeps the placements that tile it exactly.
Containment and disjointness are decided on the grid of distinct vertex
coordinates, so the only floating point use is ordering and cell sampling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .ring import SYSTEMS, Coeffs, Family, ONE, ZERO

_SYS = SYSTEMS[Family.A2]
_LAM: Coeffs = (0, 1, 0, 0)
_PSI: Coeffs = (0, 1, 0, 1)

Pair = tuple[Coeffs, Coeffs]


def lam_power(k: int) -> Coeffs:
    """lam^k for any integer k (negative powers use Psi = lam^-1)."""
    base = _LAM if k >= 0 else _PSI
    out = ONE
    for _ in range(abs(k)):
        out = _SYS.mul(out, base)
    return out


# The eight axis-preserving linear isometries, as (a, b, c, d) for
# (x, y) -> (a x + b y, c x + d y). Rotations first, then reflections.
D4: tuple[tuple[int, int, int, int], ...] = (
    (1, 0, 0, 1),
    (0, 1, -1, 0),  # quarter turn clockwise
    (-1, 0, 0, -1),
    (0, -1, 1, 0),
    (-1, 0, 0, 1),  # mirror x -> -x
    (1, 0, 0, -1),
    (0, 1, 1, 0),
    (0, -1, -1, 0),
)


def _apply(g: tuple[int, int, int, int], p: Pair) -> Pair:
    a, b, c, d = g
    x, y = p
    mul = lambda k, v: (k * v[0], k * v[1], k * v[2], k * v[3])  # noqa: E731
    return (_SYS.add(mul(a, x), mul(b, y)), _SYS.add(mul(c, x), mul(d, y)))


def _scale(p: Pair, k: Coeffs) -> Pair:
    return (_SYS.mul(p[0], k), _SYS.mul(p[1], k))


def _val(c: Coeffs) -> float:
    return _SYS.embed_scalar(c).real


def l_hexagon(height: Coeffs, notch_w: Coeffs, notch_h: Coeffs) -> list[Pair]:
    """Counterclockwise L-hexagon with unit base, notch in the top right."""
    sub = _SYS.sub
    return [
        (ZERO, ZERO),
        (ONE, ZERO),
        (ONE, sub(height, notch_h)),
        (sub(ONE, notch_w), sub(height, notch_h)),
        (sub(ONE, notch_w), height),
        (ZERO, height),
    ]


def _inside(poly: list[tuple[float, float]], x: float, y: float) -> bool:
    inside = False
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        if (y1 > y) != (y2 > y):
            xc = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if xc > x:
                inside = not inside
    return inside


def _cells(polys: list[list[Pair]]) -> list[tuple[float, float]]:
    xs = sorted({_val(p[0]) for poly in polys for p in poly})
    ys = sorted({_val(p[1]) for poly in polys for p in poly})
    return [
        ((x0 + x1) / 2, (y0 + y1) / 2)
        for x0, x1 in zip(xs, xs[1:])
        for y0, y1 in zip(ys, ys[1:])
    ]


def _float_poly(poly: list[Pair]) -> list[tuple[float, float]]:
    return [(_val(x), _val(y)) for x, y in poly]


@dataclass(frozen=True)
class Placement:
    """Isometry (one of D4) plus translation applied to a scaled hexagon."""

    linear: tuple[int, int, int, int]
    offset: Pair
    scale_power: int

    def apply(self, loop: list[Pair]) -> list[Pair]:
        k = lam_power(self.scale_power)
        out = []
        for p in loop:
            x, y = _apply(self.linear, _scale(p, k))
            out.append((_SYS.add(x, self.offset[0]), _SYS.add(y, self.offset[1])))
        return out


@dataclass(frozen=True)
class GoldenBee:
    large: tuple[Pair, ...]
    small: tuple[Pair, ...]
    large_child: Placement
    small_child: Placement

    def staircase(self) -> list[Pair]:
        """Vertices on the shared boundary of the two placed children."""
        a = self.large_child.apply(list(self.large))
        b = self.small_child.apply(list(self.large))
        return shared_boundary_vertices(a, b)


def _on_boundary(poly: list[Pair], p: Pair) -> bool:
    px, py = _val(p[0]), _val(p[1])
    fp = _float_poly(poly)
    for i in range(len(fp)):
        (x1, y1), (x2, y2) = fp[i], fp[(i + 1) % len(fp)]
        if abs((x2 - x1) * (py - y1) - (y2 - y1) * (px - x1)) < 1e-12:
            if min(x1, x2) - 1e-12 <= px <= max(x1, x2) + 1e-12 and min(y1, y2) - 1e-12 <= py <= max(y1, y2) + 1e-12:
                return True
    return False


def shared_boundary_vertices(a: list[Pair], b: list[Pair]) -> list[Pair]:
    pts = {p for p in a if _on_boundary(b, p)} | {p for p in b if _on_boundary(a, p)}
    return sorted(pts)


def _tiles_exactly(outer: list[Pair], parts: list[list[Pair]]) -> bool:
    fo = _float_poly(outer)
    fp = [_float_poly(p) for p in parts]
    for x, y in _cells([outer, *parts]):
        count = sum(_inside(p, x, y) for p in fp)
        if count > 1 or count != int(_inside(fo, x, y)):
            return False
    return True


def _contained(outer: list[Pair], inner: list[Pair]) -> bool:
    fo, fi = _float_poly(outer), _float_poly(inner)
    return all(_inside(fo, x, y) for x, y in _cells([outer, inner]) if _inside(fi, x, y))


def find_golden_bee_solutions(max_height_power: int = 3) -> list[GoldenBee]:
    """All exact decompositions H = (lam H placed) + (lam^2 H placed)."""
    sols: list[GoldenBee] = []
    for m in sorted(range(-max_height_power, max_height_power + 1), key=lambda k: (abs(k), -k)):
        height = lam_power(m)
        for wpow, hpow in itertools.product((4, 2), (4, 2)):
            hexa = l_hexagon(height, lam_power(wpow), _SYS.mul(height, lam_power(hpow)))
            for ga in D4:
                a0 = [_apply(ga, _scale(p, _LAM)) for p in hexa]
                for i, j in itertools.product(range(6), range(6)):
                    off = (_SYS.sub(hexa[i][0], a0[j][0]), _SYS.sub(hexa[i][1], a0[j][1]))
                    pa = Placement(ga, off, 1)
                    a = pa.apply(hexa)
                    if not _contained(hexa, a):
                        continue
                    for gb in D4:
                        b0 = [_apply(gb, _scale(p, lam_power(2))) for p in hexa]
                        for k, l in itertools.product(range(6), range(6)):
                            off_b = (_SYS.sub(hexa[k][0], b0[l][0]), _SYS.sub(hexa[k][1], b0[l][1]))
                            pb = Placement(gb, off_b, 2)
                            b = pb.apply(hexa)
                            if _tiles_exactly(hexa, [a, b]):
                                small = tuple(_scale(p, _LAM) for p in hexa)
                                bee = GoldenBee(tuple(hexa), small, pa, pb)
                                if bee not in sols:
                                    sols.append(bee)
    if not sols:
        raise RuntimeError("no golden-bee decomposition found; check the A2 reduction rule")
    return sols


def solve_golden_bee() -> GoldenBee:
    """The canonical decomposition: the first solution in search order."""
    return find_golden_bee_solutions()[0]
