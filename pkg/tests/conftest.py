from functools import lru_cache

import pytest

from aperiodic_degree.substitution import generate_series

QUAD_SEEDS = [("PKD", "Kite"), ("PKD", "Dart"), ("PR", "Fat"), ("PR", "Thin"), ("AB", "Square"), ("AB", "Rhomb45")]
ALL_SEEDS = QUAD_SEEDS + [("A2", "SmallHex"), ("A2", "LargeHex")]


@lru_cache(maxsize=None)
def series(family: str, seed: str, n: int):
    """Patches for generations 0..n, shared between test modules."""
    return tuple(generate_series(family, seed, n))


@pytest.fixture(scope="session")
def patch_series():
    return series


@lru_cache(maxsize=None)
def handshake_report(family: str, seed: str, n: int) -> tuple[bool, int, int]:
    """(ok, degree sum, 2*|sides|) for generation n, with no T-vertices allowed."""
    from aperiodic_degree.substitution import generate
    from aperiodic_degree.tilegraph import build_graph

    # large patches are built on their own so the shared cache stays small
    p = series(family, seed, n)[n] if n <= 5 else generate(family, seed, n)
    g = build_graph(p)
    total = sum(g.degrees().values())
    ok = g.interior_incidences() == 0 and total == 2 * len(g.sides) and min(g.degrees().values()) >= 2
    return ok, total, 2 * len(g.sides)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
