"""Extrapolating the limiting average degree from a generation series.

For successive generations the average degree d_n approaches its limit while
the step d_n - d_(n-1) shrinks. Fitting d_n = a (d_n - d_(n-1)) + b by least
squares and reading off the intercept b estimates the value at zero step.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence


class SingularFitError(ValueError):
    """Raised when the x values have no spread."""


@dataclass(frozen=True)
class DegreeSeries:
    entries: tuple[tuple[int, float], ...]

    def __post_init__(self) -> None:
        gens = [g for g, _ in self.entries]
        if any(b <= a for a, b in zip(gens, gens[1:])):
            raise ValueError("generations must be strictly increasing")

    @classmethod
    def from_values(cls, values: Sequence[float], first_generation: int = 1) -> "DegreeSeries":
        return cls(tuple((first_generation + i, float(v)) for i, v in enumerate(values)))

    def as_dict(self) -> dict[int, float]:
        return dict(self.entries)


@dataclass(frozen=True)
class LinearFit:
    slope: float
    intercept: float
    residual_sum_squares: float
    point_count: int

    def predict(self, x: float) -> float:
        return self.slope * x + self.intercept


def difference_pairs(
    s: DegreeSeries,
    start_generation: int | None = None,
    included_generations: Iterable[int] | None = None,
) -> list[tuple[float, float]]:
    """Pairs (d_n - d_(n-1), d_n), ordered by n.

    With ``included_generations`` only those n are used; otherwise every n
    from ``start_generation`` (default: the second entry) onwards.
    """
    d = s.as_dict()
    if included_generations is not None:
        gens = sorted(included_generations)
    else:
        first = start_generation if start_generation is not None else s.entries[1][0] if len(s.entries) > 1 else None
        if first is None:
            raise ValueError("need at least two generations")
        gens = [g for g, _ in s.entries if g >= first]
    pairs = []
    for n in gens:
        if n not in d or n - 1 not in d:
            raise ValueError(f"generation {n} needs both d_{n} and d_{n - 1}")
        pairs.append((d[n] - d[n - 1], d[n]))
    if len(pairs) < 2:
        raise ValueError("fewer than 2 usable generations")
    return pairs


def fit_ols(pairs: Sequence[tuple[float, float]]) -> LinearFit:
    """Closed-form ordinary least squares for y = a x + b."""
    n = len(pairs)
    if n < 2:
        raise ValueError("need at least two points")
    mx = math.fsum(x for x, _ in pairs) / n
    my = math.fsum(y for _, y in pairs) / n
    sxx = math.fsum((x - mx) ** 2 for x, _ in pairs)
    if sxx == 0.0:
        raise SingularFitError("all x values are equal; slope is undetermined")
    sxy = math.fsum((x - mx) * (y - my) for x, y in pairs)
    a = sxy / sxx
    b = my - a * mx
    rss = math.fsum((y - (a * x + b)) ** 2 for x, y in pairs)
    return LinearFit(a, b, rss, n)


def limit_estimate(f: LinearFit) -> float:
    """Value of the fitted line at zero step."""
    return f.intercept


def residuals(f: LinearFit, pairs: Sequence[tuple[float, float]]) -> list[float]:
    return [y - f.predict(x) for x, y in pairs]


def read_series(path: str | Path) -> DegreeSeries:
    """Generation and degree columns with one header line.

    Columns may be separated by commas or whitespace. When the header names
    an ``avg`` column (as in the ``stats``/``series`` CSV output) that column
    is used; otherwise the second column.
    """
    return parse_series(Path(path).read_text())


def parse_series(text: str) -> DegreeSeries:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise ValueError("series file needs a header and at least one row")
    comma = "," in lines[0] or "," in lines[1]
    split = (lambda ln: next(csv.reader(io.StringIO(ln)))) if comma else str.split
    header = [h.strip().lower() for h in split(lines[0])]
    col = header.index("avg") if "avg" in header else 1
    rows: list[tuple[int, float]] = []
    for ln in lines[1:]:
        parts = [x.strip() for x in split(ln)]
        if len(parts) <= col:
            raise ValueError(f"malformed row: {ln!r}")
        rows.append((int(parts[0]), float(parts[col])))
    return DegreeSeries(tuple(rows))


# Published pair tables (x = step, y = degree) and fitted lines, used by the
# reproduction tests and the ``extrapolate --published`` command.
PUBLISHED_PAIRS: dict[str, list[tuple[float, float]]] = {
    "dart": [(0.45278, 2.57778), (0.255, 3.00885), (0.19431, 3.20316), (0.17796, 3.38112), (0.13709, 3.51821), (0.11078, 3.62899)],
    "kite": [(0.19665, 3.29615), (0.15179, 3.44794), (0.12496, 3.5729), (0.09729, 3.67019)],
    "fat": [(0.23688, 3.36364), (0.20565, 3.56929), (0.12785, 3.69714), (0.10022, 3.79736), (0.06949, 3.86685)],
    "thin": [(0.26076, 3.30994), (0.20088, 3.51082), (0.1448, 3.65562), (0.11258, 3.7682), (0.07742, 3.84562)],
    "ab-square": [(0.40199, 3.54673), (0.22917, 3.7759), (0.11535, 3.89125)],
    "ab-rhomb": [(0.46369, 3.46369), (0.26754, 3.73123), (0.13794, 3.86917)],
}
PUBLISHED_LINES: dict[str, tuple[float, float]] = {
    "dart": (-3.03555, 3.89151),
    "kite": (-3.81617, 4.04126),
    "fat": (-2.74563, 4.06526),
    "thin": (-2.93142, 4.08498),
    "ab-square": (-1.21205, 4.03956),
    "ab-rhomb": (-1.25440, 4.05146),
}
PUBLISHED_LIMITS: dict[str, float] = {
    "dart": 3.892,
    "kite": 4.042,
    "fat": 4.066,
    "thin": 4.085,
    "ab-square": 4.040,
    "ab-rhomb": 4.052,
}
# Central average degrees by generation (starting at generation 1).
PUBLISHED_SERIES: dict[str, list[float]] = {
    "dart": [2.33333, 2.125, 2.57778, 2.75385, 3.00885, 3.20316, 3.38112, 3.51821, 3.62899],
    "kite": [2.66667, 2.85714, 2.67857, 2.91391, 3.0995, 3.29615, 3.44794, 3.5729, 3.67019],
    "fat": [2.14286, 2.90909, 3.12676, 3.36364, 3.56929, 3.69714, 3.79736, 3.86685],
    "thin": [2.5, 2.94118, 3.04918, 3.30994, 3.51082, 3.65562, 3.7682, 3.84562],
    "ab-square": [2.5, 3.14474, 3.54673, 3.7759, 3.89125],
    "ab-rhomb": [2.4, 3.0, 3.46369, 3.73123, 3.86917],
}
# Generations whose pairs enter each published fit.
PUBLISHED_GENERATIONS: dict[str, list[int]] = {
    "dart": [3, 5, 6, 7, 8, 9],
    "kite": [6, 7, 8, 9],
    "fat": [4, 5, 6, 7, 8],
    "thin": [4, 5, 6, 7, 8],
    "ab-square": [3, 4, 5],
    "ab-rhomb": [3, 4, 5],
}
