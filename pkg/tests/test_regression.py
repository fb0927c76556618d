import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from aperiodic_degree.regression import (
    PUBLISHED_GENERATIONS,
    PUBLISHED_LIMITS,
    PUBLISHED_LINES,
    PUBLISHED_PAIRS,
    PUBLISHED_SERIES,
    DegreeSeries,
    SingularFitError,
    difference_pairs,
    fit_ols,
    limit_estimate,
    parse_series,
    residuals,
)

finite = st.floats(min_value=-100, max_value=100, allow_nan=False, allow_infinity=False)
point_sets = st.lists(st.tuples(finite, finite), min_size=2, max_size=30)


def test_two_point_fit():
    f = fit_ols([(0.0, 1.0), (1.0, 0.0)])
    assert (f.slope, f.intercept) == (-1.0, 1.0)
    assert f.residual_sum_squares == 0.0 and f.point_count == 2


def test_singular_fit():
    with pytest.raises(SingularFitError):
        fit_ols([(0.0, 1.0), (0.0, 2.0)])
    with pytest.raises(ValueError):
        fit_ols([(0.0, 1.0)])


def test_constant_series_gives_zero_steps():
    s = DegreeSeries.from_values([3.0] * 5)
    pairs = difference_pairs(s)
    assert all(x == 0 for x, _ in pairs)
    with pytest.raises(SingularFitError):
        fit_ols(pairs)


@pytest.mark.parametrize("name", sorted(PUBLISHED_PAIRS))
def test_published_pairs_follow_from_the_series(name):
    s = DegreeSeries.from_values(PUBLISHED_SERIES[name])
    pairs = difference_pairs(s, included_generations=PUBLISHED_GENERATIONS[name])
    for (x, y), (px, py) in zip(pairs, PUBLISHED_PAIRS[name], strict=True):
        assert x == pytest.approx(px, abs=1e-12)
        assert y == py


@pytest.mark.parametrize("name", sorted(PUBLISHED_PAIRS))
def test_published_lines(name):
    f = fit_ols(PUBLISHED_PAIRS[name])
    a, b = PUBLISHED_LINES[name]
    assert abs(f.slope - a) <= 5e-4
    assert abs(f.intercept - b) <= 5e-4
    assert abs(limit_estimate(f) - PUBLISHED_LIMITS[name]) <= 1e-3


def test_difference_pair_selection():
    s = DegreeSeries.from_values([1.0, 2.0, 4.0, 7.0])
    assert difference_pairs(s) == [(1.0, 2.0), (2.0, 4.0), (3.0, 7.0)]
    assert difference_pairs(s, start_generation=3) == [(2.0, 4.0), (3.0, 7.0)]
    assert difference_pairs(s, included_generations=[4, 2]) == [(1.0, 2.0), (3.0, 7.0)]
    with pytest.raises(ValueError):
        difference_pairs(s, included_generations=[1, 2])
    with pytest.raises(ValueError):
        difference_pairs(s, start_generation=4)


def test_series_must_increase():
    with pytest.raises(ValueError):
        DegreeSeries(((2, 1.0), (2, 1.5)))


def test_series_parsing():
    a = parse_series("gen deg\n1 2.5\n2 3.0\n")
    b = parse_series("generation,d\n1,2.5\n2,3.0\n")
    c = parse_series("generation,V,T,avg\n1,4,10,2.5\n2,5,15,3.000000\n")
    assert a == b == c == DegreeSeries(((1, 2.5), (2, 3.0)))
    with pytest.raises(ValueError):
        parse_series("only a header\n")


@settings(max_examples=300, deadline=None)
@given(point_sets)
def test_residual_orthogonality(pts):
    xs = [x for x, _ in pts]
    assume(max(xs) - min(xs) > 1e-3)
    f = fit_ols(pts)
    r = residuals(f, pts)
    scale = 1.0 + max(abs(y) for _, y in pts) * len(pts)
    assert abs(math.fsum(r)) <= 1e-9 * scale
    assert abs(math.fsum(x * e for (x, _), e in zip(pts, r))) <= 1e-9 * scale * (1 + max(abs(x) for x in xs))


@settings(max_examples=200, deadline=None)
@given(point_sets, st.floats(min_value=-50, max_value=50, allow_nan=False).filter(lambda c: abs(c) > 1e-3))
def test_affine_equivariance(pts, c):
    xs = [x for x, _ in pts]
    assume(max(xs) - min(xs) > 1e-3)
    f = fit_ols(pts)
    g = fit_ols([(x, c * y) for x, y in pts])
    scale = 1.0 + abs(c) * (abs(f.intercept) + abs(f.slope) * (1 + max(abs(x) for x in xs)))
    assert g.intercept == pytest.approx(c * f.intercept, abs=1e-9 * scale)
    assert g.slope == pytest.approx(c * f.slope, abs=1e-9 * scale)
