from fractions import Fraction

import pytest
from shapely.geometry import Point, Polygon
from shapely.ops import unary_union

from aperiodic_degree import a2
from aperiodic_degree.a2 import (
    D_TABLE,
    LIMIT_EXACT,
    PHI,
    QSqrt5,
    SQRT5,
    avg_degree,
    fib,
    fib_closed,
    label_list,
    limit_avg_degree,
    middle_points,
    middle_points_from_sums,
    t_closed,
    t_count,
    t_recursive,
    v_closed,
    v_count,
    v_recursive,
    verify_against_graphs,
)
from aperiodic_degree.ring import AlgebraicPoint, embed, rotate, system
from aperiodic_degree.tilegraph import build_graph

from conftest import series


def test_fibonacci():
    assert (fib(0), fib(1), fib(2), fib(10)) == (0, 1, 1, 55)
    for n in range(1, 31):
        assert sum(fib(k) for k in range(1, n + 1)) == fib(n + 2) - 1
    for n in range(61):
        assert fib_closed(n).to_int() == fib(n)


def test_qsqrt5_arithmetic():
    assert PHI * PHI == PHI + 1
    assert SQRT5 * SQRT5 == QSqrt5.of(5)
    assert (PHI / PHI) == QSqrt5.of(1)
    assert PHI**-3 * PHI**3 == QSqrt5.of(1)
    assert float(PHI) == pytest.approx((1 + 5**0.5) / 2, abs=1e-15)
    with pytest.raises(ValueError):
        QSqrt5.of(Fraction(1, 2)).to_int()


def test_label_lists():
    assert label_list(7).labels == (1, 2, 3)
    assert label_list(8).labels == (2, 4, 1, 2)
    assert sorted(label_list(9).labels) == sorted((1, 3, 2, 4, 1))
    with pytest.raises(ValueError):
        label_list(6)
    lst = label_list(7)
    for _ in range(20):
        nxt = lst.successor()
        assert len(nxt) - len(lst) == lst.labels.count(1)
        lst = nxt


def test_middle_points_table_and_forms():
    assert tuple(middle_points(k) for k in range(1, 12)) == D_TABLE
    for k in range(1, 21):
        assert middle_points(k) == len(label_list(k + 6)) - 1
        assert middle_points(k) == middle_points_from_sums(k)
    assert middle_points(5) == -1 + fib(5) + fib(4) == 7


def test_increments_per_parity():
    # going from k to k+1 adds F(j+1) when k+1 = 2j and F(i) when k+1 = 2i+1
    for k in range(2, 30):
        step = middle_points(k + 1) - middle_points(k)
        m = k + 1
        assert step == (fib(m // 2 + 1) if m % 2 == 0 else fib((m - 1) // 2))


def test_table_values():
    assert [v_count(k) for k in range(1, 9)] == [6, 6, 9, 12, 18, 26, 40, 61]
    assert [t_count(k) for k in range(1, 9)] == [12, 12, 20, 28, 44, 66, 104, 162]
    assert (v_count(9), t_count(9)) == (95, 256)
    assert avg_degree(1) == 2


def test_closed_forms_start_at_seven():
    assert (v_closed(7).to_int(), v_closed(8).to_int()) == (40, 61)
    assert (t_closed(7).to_int(), t_closed(8).to_int()) == (104, 162)
    with pytest.raises(ValueError):
        v_closed(6)


@pytest.mark.parametrize("k", range(9, 61))
def test_closed_form_equals_recursion(k):
    assert v_closed(k).to_int() == v_recursive(k)
    assert t_closed(k).to_int() == t_recursive(k)
    assert v_count(k, "recursion") == v_count(k, "closed")


def test_bad_arguments():
    with pytest.raises(ValueError):
        v_count(0)
    with pytest.raises(ValueError):
        middle_points(0)
    with pytest.raises(ValueError):
        t_count(3, "guess")


def test_average_degree_range_and_monotone_convergence():
    lim = limit_avg_degree()
    for k in range(3, 61):
        assert 2 < avg_degree(k) < 3
    gaps = [abs(float(avg_degree(k)) - lim) for k in range(9, 41)]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))


def test_limit():
    assert limit_avg_degree() == pytest.approx(2.8396425434090715, abs=1e-12)
    assert LIMIT_EXACT == (QSqrt5.of(44) + 98 / SQRT5) / (QSqrt5.of(Fraction(31, 2)) + QSqrt5.of(69, 0) / (2 * SQRT5))


def test_convergence_rate():
    """The gap to the limit shrinks by about sqrt(phi) per stage.

    The second dominant eigenvalue of the count recursion is sqrt(phi)
    (from the F(k/2) terms), so the gap behaves like phi^(-k/2).
    """
    lim = limit_avg_degree()
    gap = {k: abs(float(avg_degree(k)) - lim) for k in range(9, 101)}
    for k in range(20, 99, 2):
        assert gap[k + 2] / gap[k] == pytest.approx(1 / float(PHI), rel=0.05)
    assert gap[40] > 1e-5
    assert gap[78] < 1e-8 < gap[76]


def test_verify_against_graphs_small():
    rep = verify_against_graphs(10)
    assert rep.ok
    assert [r[0] for r in rep.rows] == list(range(1, 11))
    with pytest.raises(ValueError):
        verify_against_graphs(a2.MAX_BRUTE_FORCE_K + 1)


def _pasting_line_vertices(k: int):
    """Vertices of A2-k on the line where A2-(k-1) and A2-(k-2) are joined."""
    s = system("A2")
    n = k - 1
    ps = series("A2", "SmallHex", 14)
    p = ps[n]
    psi = (1, 0, 0, 0)
    for _ in range(n - 2):
        psi = s.mul(psi, s.inflation_unit)
    up = AlgebraicPoint(s, ((0, 0, 0, 0), psi))
    top = {tuple(sorted(rotate(v, 1) + up for v in t.vertices)) for t in ps[n - 1].tiles}
    a = unary_union([Polygon(t.embedded()) for t in p.tiles if t.canonical_key in top])
    b = unary_union([Polygon(t.embedded()) for t in p.tiles if t.canonical_key not in top])
    line = a.boundary.intersection(b.boundary)
    outline = a.union(b).boundary
    g = build_graph(p)
    on = [v for v in g.vertices if line.distance(Point(embed(v))) < 1e-9]
    ends = [v for v in on if outline.distance(Point(embed(v))) < 1e-9]
    inner = [v for v in on if v not in ends]
    return g, inner, ends


@pytest.mark.parametrize("k", range(9, 15))
def test_pasting_line_degrees(k):
    g, inner, ends = _pasting_line_vertices(k)
    assert len(inner) == middle_points(k - 6)
    assert {g.degree(v) for v in inner} == {4}
    assert sorted(g.degree(v) for v in ends) == [3, 4]
