"""Closed-form vertex and degree counts for the A2 tiling graphs.

A2-k denotes the k-th stage of the hexagon substitution started from the
small hexagon (A2-1 is the small hexagon, A2-2 the large one). Stage k+2 is
stage k+1 and stage k pasted along an "intersection line". The quantities
here are:

* ``middle_points(k)`` - D_k, the number of vertices strictly inside the
  intersection line apart from its two ends,
* ``v_count(k)``, ``t_count(k)`` - vertices and total degree of A2-k,
* the limiting average degree T(k)/V(k) as k grows.

All golden-ratio arithmetic is exact in Q(sqrt5).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

TABLE_V = {1: 6, 2: 6, 3: 9, 4: 12, 5: 18, 6: 26, 7: 40, 8: 61}
TABLE_T = {1: 12, 2: 12, 3: 20, 4: 28, 5: 44, 6: 66, 7: 104, 8: 162}
D_TABLE = (2, 3, 4, 6, 7, 10, 12, 17, 20, 28, 33)


@dataclass(frozen=True)
class QSqrt5:
    """a + b*sqrt(5) with rational a, b."""

    a: Fraction
    b: Fraction = Fraction(0)

    @classmethod
    def of(cls, a: int | Fraction, b: int | Fraction = 0) -> "QSqrt5":
        return cls(Fraction(a), Fraction(b))

    def __add__(self, o: "QSqrt5 | int | Fraction") -> "QSqrt5":
        o = _q(o)
        return QSqrt5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "QSqrt5":
        return QSqrt5(-self.a, -self.b)

    def __sub__(self, o: "QSqrt5 | int | Fraction") -> "QSqrt5":
        return self + (-_q(o))

    def __rsub__(self, o: "QSqrt5 | int | Fraction") -> "QSqrt5":
        return _q(o) - self

    def __mul__(self, o: "QSqrt5 | int | Fraction") -> "QSqrt5":
        o = _q(o)
        return QSqrt5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conj(self) -> "QSqrt5":
        return QSqrt5(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def __truediv__(self, o: "QSqrt5 | int | Fraction") -> "QSqrt5":
        o = _q(o)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt5)")
        p = self * o.conj()
        return QSqrt5(p.a / n, p.b / n)

    def __rtruediv__(self, o: "QSqrt5 | int | Fraction") -> "QSqrt5":
        return _q(o) / self

    def __pow__(self, n: int) -> "QSqrt5":
        if n < 0:
            return QSqrt5.of(1) / (self**-n)
        out, base = QSqrt5.of(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def to_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return int(self.a)

    def __float__(self) -> float:
        # a + b*sqrt5 rounded once; good to a few ulps for moderate inputs
        return float(self.a) + float(self.b) * math.sqrt(5.0)

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt5"


def _q(x: "QSqrt5 | int | Fraction") -> QSqrt5:
    return x if isinstance(x, QSqrt5) else QSqrt5(Fraction(x))


SQRT5 = QSqrt5.of(0, 1)
PHI = QSqrt5.of(Fraction(1, 2), Fraction(1, 2))
PHI_BAR = QSqrt5.of(Fraction(1, 2), Fraction(-1, 2))


@lru_cache(maxsize=None)
def fib(n: int) -> int:
    """F(n) with F(0)=0, F(1)=1 (iterative)."""
    if n < 0:
        raise ValueError("fib is defined here for n >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fib_closed(n: int) -> QSqrt5:
    """Binet's formula evaluated exactly."""
    return (PHI**n - PHI_BAR**n) / SQRT5


# ---------------------------------------------------------------------------
# intersection-line labels
# ---------------------------------------------------------------------------

_REWRITE = {4: (3,), 3: (2,), 2: (1,), 1: (2, 4)}


@dataclass(frozen=True)
class LabelList:
    k: int
    labels: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.labels)

    def successor(self) -> "LabelList":
        out: list[int] = []
        for lab in self.labels:
            out.extend(_REWRITE[lab])
        return LabelList(self.k + 1, tuple(out))


def label_list(k: int) -> LabelList:
    if k < 7:
        raise ValueError("label lists start at k = 7")
    lst = LabelList(7, (1, 2, 3))
    while lst.k < k:
        lst = lst.successor()
    return lst


def middle_points(k: int) -> int:
    """D_k: 2, 3 for k = 1, 2, then -1 + F(k//2 + 3) + F((k-1)//2 + 2)."""
    if k < 1:
        raise ValueError("D_k needs k >= 1")
    if k == 1:
        return 2
    if k == 2:
        return 3
    return -1 + fib(k // 2 + 3) + fib((k - 1) // 2 + 2)


def middle_points_from_sums(k: int) -> int:
    """D_1 plus the even-step increments F(j+1) and odd-step increments F(i)."""
    if k < 1:
        raise ValueError("D_k needs k >= 1")
    if k == 2:
        return 3
    return 2 + sum(fib(j + 1) for j in range(1, k // 2 + 1)) + sum(fib(i) for i in range(1, (k - 1) // 2 + 1))


# ---------------------------------------------------------------------------
# V(k), T(k)
# ---------------------------------------------------------------------------

V_C1 = QSqrt5.of(Fraction(31, 2), Fraction(69, 10))  # 31/2 + 69/(2 sqrt5)
V_C2 = V_C1.conj()
T_C1 = QSqrt5.of(44, Fraction(98, 5))  # 44 + 98/sqrt5
T_C2 = T_C1.conj()


def _check_k(k: int, method: str = "closed") -> None:
    if k < 1:
        raise ValueError("k must be >= 1")
    if method not in ("closed", "recursion"):
        raise ValueError(f"unknown method {method!r}")


def v_closed(k: int) -> QSqrt5:
    if k < 7:
        raise ValueError("the closed form holds for k >= 7")
    F = fib
    if k % 2 == 0:
        h = k // 2
        part = 1 + Fraction(F(h), 2) + F(h + 1) + 2 * F(h - 1) - Fraction(F(h - 3), 2)
    else:
        part = 1 + 2 * F((k + 1) // 2) + F((k - 1) // 2)
    return V_C1 * PHI ** (k - 7) + V_C2 * PHI_BAR ** (k - 7) + part


def t_closed(k: int) -> QSqrt5:
    """Total-degree closed form with the even branch containing F(k/2)."""
    if k < 7:
        raise ValueError("the closed form holds for k >= 7")
    F = fib
    if k % 2 == 0:
        h = k // 2
        part = F(h) + 2 * F(h + 1) + 4 * F(h - 1) - F(h - 3)
    else:
        part = 4 * F((k + 1) // 2) + 2 * F((k - 1) // 2)
    return T_C1 * PHI ** (k - 7) + T_C2 * PHI_BAR ** (k - 7) + part


@lru_cache(maxsize=None)
def v_recursive(k: int) -> int:
    _check_k(k)
    if k in TABLE_V:
        return TABLE_V[k]
    return v_recursive(k - 1) + v_recursive(k - 2) - 2 - middle_points(k - 6)


@lru_cache(maxsize=None)
def t_recursive(k: int) -> int:
    _check_k(k)
    if k in TABLE_T:
        return TABLE_T[k]
    return t_recursive(k - 1) + t_recursive(k - 2) - 2 - 2 * middle_points(k - 6)


def v_count(k: int, method: str = "closed") -> int:
    """V(k): table values for k <= 8, otherwise closed form or recursion."""
    _check_k(k, method)
    if k in TABLE_V:
        return TABLE_V[k]
    if method == "closed":
        return v_closed(k).to_int()
    return v_recursive(k)


def t_count(k: int, method: str = "closed") -> int:
    _check_k(k, method)
    if k in TABLE_T:
        return TABLE_T[k]
    if method == "closed":
        return t_closed(k).to_int()
    return t_recursive(k)


@dataclass(frozen=True)
class A2Counts:
    k: int
    V: int
    T: int

    @property
    def avg(self) -> Fraction:
        return Fraction(self.T, self.V)


def counts(k: int) -> A2Counts:
    return A2Counts(k, v_count(k), t_count(k))


def avg_degree(k: int) -> Fraction:
    return Fraction(t_count(k), v_count(k))


LIMIT_EXACT: QSqrt5 = T_C1 / V_C1


def limit_avg_degree() -> float:
    """Ratio of the dominant coefficients, (44 + 98/sqrt5)/(31/2 + 69/(2 sqrt5))."""
    # Evaluate a/b with a = p + q sqrt5 using high precision to avoid the
    # cancellation-free but still rounded float sum.
    from decimal import Decimal, getcontext

    getcontext().prec = 40
    a, b = LIMIT_EXACT.a, LIMIT_EXACT.b
    val = Decimal(a.numerator) / Decimal(a.denominator) + Decimal(b.numerator) / Decimal(b.denominator) * Decimal(5).sqrt()
    return float(val)


# ---------------------------------------------------------------------------
# brute-force cross-check
# ---------------------------------------------------------------------------

MAX_BRUTE_FORCE_K = 16


@dataclass
class VerificationReport:
    rows: list[tuple[int, int, int, int, int]] = field(default_factory=list)  # k, V, T, Vgraph, Tgraph
    first_mismatch: int | None = None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None and bool(self.rows)


def verify_against_graphs(max_k: int, model: str = "planar") -> VerificationReport:
    """Build A2-1 .. A2-max_k as patches and compare graph counts.

    ``model`` selects the degree notion of the graphs (see ``tilegraph``).
    """
    from .substitution import generate_series
    from .tilegraph import build_graph, summarize

    if max_k > MAX_BRUTE_FORCE_K:
        raise ValueError(f"max_k is limited to {MAX_BRUTE_FORCE_K}")
    patches = generate_series("A2", "SmallHex", max_k - 1)
    report = VerificationReport()
    for k in range(1, max_k + 1):
        s = summarize(build_graph(patches[k - 1], model))
        v, t = v_count(k), t_count(k)
        report.rows.append((k, v, t, s.V, s.T))
        if (v, t) != (s.V, s.T) and report.first_mismatch is None:
            report.first_mismatch = k
    return report
