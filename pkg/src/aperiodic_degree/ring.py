"""Exact coordinate rings for the four tiling families.

Every ring used here has rank 4 over the integers with basis 1, g, g^2, g^3
for a generator ``g``. A scalar is stored as a tuple of four Python ints and
is kept reduced with the rule ``g^4 = r0 + r1 g + r2 g^2 + r3 g^3``.

* Penrose kite/dart and rhombus tilings use Z[zeta] with zeta = exp(i pi/5).
* Ammann-Beenker uses Z[zeta] with zeta = exp(i pi/4).
* Ammann A2 uses the real ring Z[lam] with lam^4 = 1 - lam^2, lam ~ 0.786.

Points of the cyclotomic families are single ring elements read as complex
numbers. A2 points are pairs (x, y) of real ring elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

Coeffs = tuple[int, int, int, int]

ZERO: Coeffs = (0, 0, 0, 0)
ONE: Coeffs = (1, 0, 0, 0)


class Family(str, Enum):
    PKD = "PKD"
    PR = "PR"
    AB = "AB"
    A2 = "A2"

    @classmethod
    def parse(cls, text: str) -> "Family":
        try:
            return cls(text.upper())
        except ValueError:
            raise ValueError(f"unknown family {text!r}") from None


@dataclass(frozen=True, eq=False)
class CoordSystem:
    """Description of one family's coordinate ring.

    ``rotation_order`` is the number of base-angle steps in a full turn
    (10, 8 or 4). ``is_pair`` marks the A2 system, whose points are pairs.
    """

    family: Family
    reduction: Coeffs
    generator: complex
    inflation_unit: Coeffs
    inflation_inverse: Coeffs
    rotation_order: int
    is_pair: bool
    ring_degree: int = 4
    basis: tuple[complex, ...] = field(init=False)
    _conj_images: tuple[Coeffs, ...] = field(init=False)

    def __post_init__(self) -> None:
        basis = tuple(self.generator**k for k in range(4))
        object.__setattr__(self, "basis", basis)
        if self.is_pair:
            conj = (ONE, (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
        else:
            # zeta^k -> zeta^(n-k) is complex conjugation on the embedding
            n = self.rotation_order
            conj = tuple(self.power(n - k) if k else ONE for k in range(4))
        object.__setattr__(self, "_conj_images", conj)

    @property
    def reduction_rule(self) -> str:
        terms = []
        for k, c in enumerate(self.reduction):
            if c:
                mono = "1" if k == 0 else ("g" if k == 1 else f"g^{k}")
                terms.append(f"{c:+d}*{mono}")
        return "g^4 = " + " ".join(terms)

    # -- raw coefficient arithmetic -------------------------------------
    def reduce(self, coeffs: Sequence[int]) -> Coeffs:
        """Rewrite powers of the generator >= 4 using the minimal polynomial."""
        c = list(coeffs)
        if len(c) < 4:
            c.extend([0] * (4 - len(c)))
        r = self.reduction
        for k in range(len(c) - 1, 3, -1):
            top = c[k]
            if top:
                c[k - 4] += top * r[0]
                c[k - 3] += top * r[1]
                c[k - 2] += top * r[2]
                c[k - 1] += top * r[3]
        return (c[0], c[1], c[2], c[3])

    def power(self, k: int) -> Coeffs:
        if k < 0:
            raise ValueError("negative powers are not supported")
        c = [0] * (k + 1)
        c[k] = 1
        return self.reduce(c)

    def mul(self, a: Coeffs, b: Coeffs) -> Coeffs:
        a0, a1, a2, a3 = a
        b0, b1, b2, b3 = b
        r0, r1, r2, r3 = self.reduction
        c0 = a0 * b0
        c1 = a0 * b1 + a1 * b0
        c2 = a0 * b2 + a1 * b1 + a2 * b0
        c3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
        c4 = a1 * b3 + a2 * b2 + a3 * b1
        c5 = a2 * b3 + a3 * b2
        c6 = a3 * b3
        # fold c6, c5, c4 from the top
        c2 += c6 * r0
        c3 += c6 * r1
        c4 += c6 * r2
        c5 += c6 * r3
        c1 += c5 * r0
        c2 += c5 * r1
        c3 += c5 * r2
        c4 += c5 * r3
        c0 += c4 * r0
        c1 += c4 * r1
        c2 += c4 * r2
        c3 += c4 * r3
        return (c0, c1, c2, c3)

    @staticmethod
    def add(a: Coeffs, b: Coeffs) -> Coeffs:
        return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])

    @staticmethod
    def sub(a: Coeffs, b: Coeffs) -> Coeffs:
        return (a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])

    @staticmethod
    def neg(a: Coeffs) -> Coeffs:
        return (-a[0], -a[1], -a[2], -a[3])

    def conj(self, a: Coeffs) -> Coeffs:
        """Complex conjugation (identity on the real A2 ring)."""
        if self.is_pair:
            return a
        out = [a[0], 0, 0, 0]
        for k in range(1, 4):
            ck = a[k]
            if ck:
                img = self._conj_images[k]
                for j in range(4):
                    out[j] += ck * img[j]
        return (out[0], out[1], out[2], out[3])

    def embed_scalar(self, a: Coeffs) -> complex:
        b = self.basis
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]

    # -- points -----------------------------------------------------------
    def point(self, *coords: Sequence[int]) -> "AlgebraicPoint":
        return AlgebraicPoint(self, tuple(self.reduce(c) for c in coords))


_ZETA10 = complex(math.cos(math.pi / 5), math.sin(math.pi / 5))
_ZETA8 = complex(math.cos(math.pi / 4), math.sin(math.pi / 4))
LAMBDA = math.sqrt((math.sqrt(5.0) - 1.0) / 2.0)

# zeta^4 = zeta^3 - zeta^2 + zeta - 1 for the primitive 10th root of unity
_Z10 = (-1, 1, -1, 1)

SYSTEMS: dict[Family, CoordSystem] = {
    Family.PKD: CoordSystem(Family.PKD, _Z10, _ZETA10, (1, 0, 1, -1), (0, 0, 1, -1), 10, False),
    Family.PR: CoordSystem(Family.PR, _Z10, _ZETA10, (1, 0, 1, -1), (0, 0, 1, -1), 10, False),
    Family.AB: CoordSystem(Family.AB, (-1, 0, 0, 0), _ZETA8, (1, 1, 0, -1), (-1, 1, 0, -1), 8, False),
    Family.A2: CoordSystem(Family.A2, (1, 0, -1, 0), complex(LAMBDA, 0.0), (0, 1, 0, 1), (0, 1, 0, 0), 4, True),
}


def system(family: Family | str) -> CoordSystem:
    if not isinstance(family, Family):
        family = Family.parse(family)
    return SYSTEMS[family]


@dataclass(frozen=True)
class RingScalar:
    """An element of one of the coordinate rings, always reduced."""

    system: CoordSystem = field(compare=False, repr=False)
    coeffs: Coeffs

    @classmethod
    def of(cls, sys: CoordSystem, coeffs: Iterable[int]) -> "RingScalar":
        return cls(sys, sys.reduce(list(coeffs)))

    def _coerce(self, other: "RingScalar | int") -> Coeffs:
        if isinstance(other, int):
            return (other, 0, 0, 0)
        return other.coeffs

    def __add__(self, other: "RingScalar | int") -> "RingScalar":
        return RingScalar(self.system, self.system.add(self.coeffs, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other: "RingScalar | int") -> "RingScalar":
        return RingScalar(self.system, self.system.sub(self.coeffs, self._coerce(other)))

    def __rsub__(self, other: int) -> "RingScalar":
        return RingScalar(self.system, self.system.sub(self._coerce(other), self.coeffs))

    def __neg__(self) -> "RingScalar":
        return RingScalar(self.system, self.system.neg(self.coeffs))

    def __mul__(self, other: "RingScalar | int") -> "RingScalar":
        return RingScalar(self.system, self.system.mul(self.coeffs, self._coerce(other)))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RingScalar":
        out = RingScalar(self.system, ONE)
        for _ in range(k):
            out = out * self
        return out

    def conj(self) -> "RingScalar":
        return RingScalar(self.system, self.system.conj(self.coeffs))

    def embed(self) -> complex:
        return self.system.embed_scalar(self.coeffs)

    def is_zero(self) -> bool:
        return self.coeffs == ZERO


def reduce(coeffs: Sequence[int], sys: CoordSystem) -> RingScalar:
    return RingScalar(sys, sys.reduce(coeffs))


@dataclass(frozen=True, order=True)
class AlgebraicPoint:
    """Exact planar point.

    ``coords`` holds one coefficient tuple for the cyclotomic families and
    two (x then y) for A2. Equality, hashing and ordering use the reduced
    coefficients only, which gives a canonical lexicographic order.
    """

    system: CoordSystem = field(compare=False, repr=False, hash=False)
    coords: tuple[Coeffs, ...]

    def __add__(self, other: "AlgebraicPoint") -> "AlgebraicPoint":
        s = self.system
        return AlgebraicPoint(s, tuple(s.add(a, b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgebraicPoint") -> "AlgebraicPoint":
        s = self.system
        return AlgebraicPoint(s, tuple(s.sub(a, b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "AlgebraicPoint":
        s = self.system
        return AlgebraicPoint(s, tuple(s.neg(a) for a in self.coords))

    def scale(self, k: Coeffs | RingScalar) -> "AlgebraicPoint":
        if isinstance(k, RingScalar):
            k = k.coeffs
        s = self.system
        return AlgebraicPoint(s, tuple(s.mul(a, k) for a in self.coords))

    def embed(self) -> tuple[float, float]:
        return embed(self)


def origin(sys: CoordSystem) -> AlgebraicPoint:
    return AlgebraicPoint(sys, (ZERO, ZERO) if sys.is_pair else (ZERO,))


def embed(p: AlgebraicPoint) -> tuple[float, float]:
    """Double-precision image of ``p`` using the precomputed basis values."""
    s = p.system
    if s.is_pair:
        return (s.embed_scalar(p.coords[0]).real, s.embed_scalar(p.coords[1]).real)
    z = s.embed_scalar(p.coords[0])
    return (z.real, z.imag)


def rotate(p: AlgebraicPoint, steps: int) -> AlgebraicPoint:
    """Rotate about the origin by ``steps`` base angles.

    For the cyclotomic families a positive step is counterclockwise
    (36 degrees for PKD/PR, 45 degrees for AB). For A2 a positive step is one
    clockwise quarter turn, (x, y) -> (y, -x).
    """
    s = p.system
    if s.is_pair:
        x, y = p.coords
        for _ in range(steps % 4):
            x, y = y, s.neg(x)
        return AlgebraicPoint(s, (x, y))
    n = 10 if s.family in (Family.PKD, Family.PR) else 8
    unit = s.power(steps % n)
    return AlgebraicPoint(s, (s.mul(p.coords[0], unit),))


def reflect(p: AlgebraicPoint) -> AlgebraicPoint:
    """Mirror across the x axis."""
    s = p.system
    if s.is_pair:
        return AlgebraicPoint(s, (p.coords[0], s.neg(p.coords[1])))
    return AlgebraicPoint(s, (s.conj(p.coords[0]),))


def inflate(p: AlgebraicPoint, times: int = 1) -> AlgebraicPoint:
    """Multiply by the family's inflation unit (Phi, 1+sqrt2 or Psi)."""
    for _ in range(times):
        p = p.scale(p.system.inflation_unit)
    return p


def deflate(p: AlgebraicPoint, times: int = 1) -> AlgebraicPoint:
    """Multiply by the inverse inflation unit (exact, it is a ring unit)."""
    for _ in range(times):
        p = p.scale(p.system.inflation_inverse)
    return p


def inflation_factor(sys: CoordSystem) -> float:
    return sys.embed_scalar(sys.inflation_unit).real
