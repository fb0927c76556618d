import json
import subprocess
import sys

import pytest

from aperiodic_degree.cli import main
from aperiodic_degree.io import compat_quad_dump, dumps_patch, loads_patch, render_svg
from aperiodic_degree.regression import PUBLISHED_SERIES
from aperiodic_degree.substitution import generate
from aperiodic_degree.tilegraph import compat_average

from conftest import QUAD_SEEDS
from reference_reader import central_average


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("fam,var", QUAD_SEEDS + [("A2", "SmallHex"), ("A2", "LargeHex")])
def test_patch_file_round_trip(fam, var):
    p = generate(fam, var, 3)
    text = dumps_patch(p)
    q = loads_patch(text)
    assert q == p
    assert dumps_patch(q) == text


def test_generate_is_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for f in (a, b):
        assert run(["generate", "--family", "ab", "--seed", "square", "--gen", "2", "-o", str(f)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert doc["embeddingVersion"] == 1 and doc["family"] == "AB" and doc["seedKind"] == "Square"


def test_generate_examples(tmp_path, capsys):
    out = tmp_path / "p.json"
    run(["generate", "--family", "ab", "--seed", "square", "--gen", "1", "-o", str(out)], capsys)
    assert len(json.loads(out.read_text())["tiles"]) == 9
    run(["generate", "--family", "a2", "--seed", "small", "--gen", "0", "-o", str(out)], capsys)
    assert len(json.loads(out.read_text())["tiles"]) == 1


def test_usage_errors(capsys):
    assert run(["generate", "--family", "hat", "--seed", "x", "--gen", "1"], capsys)[0] == 2
    assert run(["generate", "--family", "ab", "--seed", "kite", "--gen", "1"], capsys)[0] == 2
    assert run(["generate", "--family", "ab", "--seed", "square", "--gen", "99"], capsys)[0] == 2
    assert run(["generate", "--family", "ab", "--seed", "square", "--gen", "-1"], capsys)[0] == 2
    assert run([], capsys)[0] == 2


def test_stats(tmp_path, capsys):
    f = tmp_path / "a2.json"
    f.write_text(dumps_patch(generate("a2", "small", 1)))
    code, out, _ = run(["stats", str(f)], capsys)
    rec = json.loads(out)
    assert code == 0 and (rec["V"], rec["T"], rec["avg"]) == (6, 12, 2.0)
    code, out, _ = run(["stats", str(f), "--format", "csv"], capsys)
    assert out.splitlines() == ["generation,V,T,avg", "1,6,12,2.000000"]


def test_stats_compat_uses_corner_counts(tmp_path, capsys):
    f = tmp_path / "ab.json"
    p = generate("ab", "square", 3)
    f.write_text(dumps_patch(p))
    rec = json.loads(run(["stats", str(f), "--window", "compat"], capsys)[1])
    assert rec["measure"] == "corners"
    assert rec["avg"] == compat_average(p)


def test_stats_empty_window(tmp_path, capsys):
    f = tmp_path / "sq.json"
    f.write_text(dumps_patch(generate("ab", "square", 0)))
    code, out, err = run(["stats", str(f), "--window", "middle-third"], capsys)
    rec = json.loads(out)
    assert code == 4
    assert rec["empty"] is True and rec["V"] == 0 and rec["avg"] is None
    assert "empty" in err


def test_stats_data_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(["stats", str(bad)], capsys)[0] == 3
    bad.write_text(json.dumps({"family": "AB", "seedKind": "Square", "generation": 0, "tiles": [{"kind": "Square", "vertices": [[[1, 2]]]}]}))
    assert run(["stats", str(bad)], capsys)[0] == 3
    assert run(["stats", str(tmp_path / "missing.json")], capsys)[0] == 3


def test_a2_command(capsys):
    code, out, _ = run(["a2", "--k-range", "1..9"], capsys)
    rows = [line.split(",") for line in out.splitlines()[1:]]
    assert code == 0
    assert [(int(r[1]), int(r[2])) for r in rows] == [(6, 12), (6, 12), (9, 20), (12, 28), (18, 44), (26, 66), (40, 104), (61, 162), (95, 256)]
    code, out, _ = run(["a2", "--limit"], capsys)
    assert float(out) == pytest.approx(2.8396425434090715, abs=1e-12)
    assert run(["a2", "--k-range", "0..3"], capsys)[0] == 2


def _series_file(tmp_path, name):
    f = tmp_path / f"{name}.csv"
    lines = ["generation,avg"] + [f"{i},{v}" for i, v in enumerate(PUBLISHED_SERIES[name], start=1)]
    f.write_text("\n".join(lines) + "\n")
    return f


def test_extrapolate_dart(tmp_path, capsys):
    f = _series_file(tmp_path, "dart")
    code, out, _ = run(["extrapolate", str(f), "--use-generations", "3,5-9"], capsys)
    rec = json.loads(out)
    assert code == 0
    assert abs(rec["intercept"] - 3.89151) <= 5e-4 and abs(rec["slope"] + 3.03555) <= 5e-4


def test_extrapolate_thin(tmp_path, capsys):
    f = _series_file(tmp_path, "thin")
    rec = json.loads(run(["extrapolate", str(f), "--start", "4"], capsys)[1])
    assert abs(rec["slope"] + 2.93142) <= 5e-4 and abs(rec["intercept"] - 4.08498) <= 5e-4
    rec = json.loads(run(["extrapolate", "--published", "thin"], capsys)[1])
    assert abs(rec["intercept"] - 4.08498) <= 5e-4


def test_extrapolate_degenerate(tmp_path, capsys):
    f = tmp_path / "flat.csv"
    f.write_text("n,d\n1,3\n2,3\n3,3\n")
    code, _, err = run(["extrapolate", str(f)], capsys)
    assert code == 4 and "undetermined" in err
    assert run(["extrapolate", "--published", "hat"], capsys)[0] == 2
    assert run(["extrapolate"], capsys)[0] == 2


def test_series_to_extrapolate_pipeline(tmp_path, capsys):
    csv_path = tmp_path / "dart.csv"
    assert run(["series", "--family", "pkd", "--seed", "dart", "--max-gen", "9", "-o", str(csv_path)], capsys)[0] == 0
    rows = csv_path.read_text().splitlines()
    assert rows[0] == "generation,V,T,avg" and len(rows) == 10
    first = json.loads(run(["extrapolate", str(csv_path), "--use-generations", "3,5,6,7,8,9"], capsys)[1])
    second = json.loads(run(["extrapolate", str(csv_path), "--use-generations", "3,5,6,7,8,9"], capsys)[1])
    assert first == second
    assert abs(first["intercept"] - 3.89151) <= 5e-4


def test_render_svg(tmp_path, capsys):
    p = generate("pr", "fat", 3)
    f, out = tmp_path / "p.json", tmp_path / "p.svg"
    f.write_text(dumps_patch(p))
    assert run(["render-svg", str(f), str(out), "--stroke", "#000"], capsys)[0] == 0
    svg = out.read_text()
    assert svg.count("<polygon") == len(p.tiles)
    assert 'stroke="#000"' in svg
    plain = render_svg(p, fill_by_kind=False)
    assert plain.count('fill="none"') == len(p.tiles)


@pytest.mark.parametrize("fam,var,n", [("PKD", "Dart", 5), ("PKD", "Kite", 4), ("PR", "Fat", 4), ("PR", "Thin", 4), ("AB", "Square", 2), ("AB", "Rhomb45", 2)])
def test_compat_dump_read_by_reference_reader(fam, var, n):
    p = generate(fam, var, n)
    text = compat_quad_dump(p)
    lines = text.splitlines()
    assert lines[-1] == "0 0" and len(lines) == 4 * len(p.tiles) + 1
    count, _, avg = central_average(text)
    assert count == 4 * len(p.tiles)
    assert avg == pytest.approx(compat_average(p), abs=1e-12)


def test_dump_command(tmp_path, capsys):
    f = tmp_path / "p.json"
    f.write_text(dumps_patch(generate("pr", "thin", 2)))
    code, out, _ = run(["dump", str(f), "--compat-quad"], capsys)
    assert code == 0 and out.endswith("0 0\n")
    f.write_text(dumps_patch(generate("a2", "small", 3)))
    code, _, err = run(["dump", str(f), "--compat-quad"], capsys)
    assert code == 2 and "A2" in err
    with pytest.raises(ValueError):
        compat_quad_dump(generate("a2", "small", 3))


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "aperiodic_degree", "a2", "--limit"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip().startswith("2.83964254340907")
