import csv
import io
import json
import math
import re
import subprocess
import sys

import numpy as np
import pytest

from glcurve.bench import BenchConfig, Grid, make_curves, run_bench
from glcurve.cli import main, parse_degrees
from glcurve.curve_engine import GLCurve, random_curve
from glcurve.io import CurveFile, CurveFileError, fmt, read_curve_file, write_curve_file
from glcurve.render import render_svg


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.reader(io.StringIO(text)))


@pytest.fixture
def curve_file(tmp_path):
    path = tmp_path / "c.json"
    write_curve_file(path, random_curve(10, 2, 42))
    return path


# ------------------------------------------------------------------------ io


def test_curve_file_roundtrip(tmp_path):
    c = random_curve(4, 3, 0)
    path = tmp_path / "x.json"
    write_curve_file(path, c)
    cf = read_curve_file(path)
    assert (cf.degree, cf.dimension) == (4, 3)
    assert np.array_equal(cf.to_curve().W, c.W)
    assert set(json.loads(path.read_text())) == {"degree", "dimension", "control_points"}


@pytest.mark.parametrize(
    "payload",
    ["not json", "[1, 2]", '{"degree": 1}',
     '{"degree": 2, "dimension": 1, "control_points": [[0], [1]]}',
     '{"degree": 1, "dimension": 1, "control_points": [[0], ["x"]]}',
     '{"degree": 0, "dimension": 1, "control_points": [[0]]}'],
)
def test_bad_curve_files(tmp_path, payload):
    path = tmp_path / "bad.json"
    path.write_text(payload)
    with pytest.raises(CurveFileError):
        read_curve_file(path)


def test_missing_file(tmp_path):
    with pytest.raises(CurveFileError):
        read_curve_file(tmp_path / "none.json")


def test_nonfinite_rejected():
    with pytest.raises(CurveFileError):
        CurveFile(1, 1, [[0.0], [math.inf]])


def test_fmt():
    assert fmt(0.1) == "0.10000000000000001"
    assert fmt(-0.0) == "-0"
    assert fmt(1e-20) == "9.9999999999999995e-21"
    assert "," not in fmt(1234567.0)


# ----------------------------------------------------------------------- roots


def test_roots(capsys):
    assert run(capsys, "roots", "1")[1] == "0\n"
    code, out, _ = run(capsys, "roots", "3")
    assert code == 0
    lines = out.split()
    assert float(lines[0]) == -0.7745966692414834 and lines[1] == "0"
    assert float(lines[2]) == 0.7745966692414834
    two = [float(v) for v in run(capsys, "roots", "2")[1].split()]
    assert abs(two[1] - 0.5773502691896258) <= 2e-16
    assert all(len(re.sub(r"[-.]|e.*", "", v).lstrip("0")) <= 17 for v in lines)


def test_roots_usage_error(capsys):
    code, _, err = run(capsys, "roots", "0")
    assert code == 2 and "n must be" in err


# ------------------------------------------------------------------------ eval


def test_eval_endpoints(capsys, curve_file):
    code, out, _ = run(capsys, "eval", "--curve", str(curve_file), "--at", "-1,1")
    assert code == 0
    table = rows(out)
    assert table[0] == ["t", "x1", "x2"]
    W = read_curve_file(curve_file).control_points
    assert [float(v) for v in table[1][1:]] == W[0].tolist()
    assert [float(v) for v in table[2][1:]] == W[-1].tolist()


def test_eval_legendre_vs_jacobi1(capsys, curve_file):
    outs = []
    for method in ("legendre", "jacobi1"):
        code, out, _ = run(capsys, "eval", "--curve", str(curve_file), "--method", method)
        assert code == 0
        outs.append(np.array(rows(out)[1:], dtype=float))
    assert outs[0].shape == (4999, 3)
    assert np.max(np.abs(outs[0] - outs[1])) <= 1e-12


def test_eval_integral_and_grid(capsys, curve_file, tmp_path):
    dest = tmp_path / "o.csv"
    code, out, _ = run(capsys, "eval", "--curve", str(curve_file), "--method", "integral",
                       "--grid", "5", "--out", str(dest))
    assert code == 0 and out == ""
    table = np.array(rows(dest.read_text())[1:], dtype=float)
    assert table[:, 0].tolist() == [-1.0, -0.5, 0.0, 0.5, 1.0]


def test_eval_constant_curve(capsys, tmp_path):
    path = tmp_path / "k.json"
    write_curve_file(path, GLCurve(np.tile([3.0], (6, 1))))
    code, out, _ = run(capsys, "eval", "--curve", str(path), "--grid", "7")
    assert code == 0
    assert np.allclose(np.array(rows(out)[1:], dtype=float)[:, 1], 3.0, atol=1e-12)


def test_eval_errors(capsys, curve_file, tmp_path):
    assert run(capsys, "eval", "--curve", str(curve_file), "--at", "0,1.5")[0] == 3
    assert run(capsys, "eval", "--curve", str(curve_file), "--at", "a")[0] == 2
    assert run(capsys, "eval", "--curve", str(curve_file), "--grid", "1")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    assert run(capsys, "eval", "--curve", str(bad))[0] == 2


def test_eval_threads_env(capsys, curve_file, monkeypatch):
    base = run(capsys, "eval", "--curve", str(curve_file), "--grid", "101")[1]
    monkeypatch.setenv("GLCURVE_THREADS", "3")
    assert run(capsys, "eval", "--curve", str(curve_file), "--grid", "101")[1] == base


# --------------------------------------------------------------------- compare


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--degree", "40", "--grid-size", "51")
    assert code == 0
    table = rows(out)
    assert table[0] == ["n", "method", "max_abs_error", "mean_abs_error"]
    err = {r[1]: float(r[2]) for r in table[1:]}
    assert set(err) == {"power", "legendre", "jacobi1"}
    assert err["power"] >= 1e3 * err["jacobi1"]


def test_compare_usage(capsys):
    assert run(capsys, "compare", "--degree", "0")[0] == 2


# ----------------------------------------------------------------------- bench


def test_parse_degrees():
    assert parse_degrees("1..3,10") == (1, 2, 3, 10)
    assert parse_degrees("20, 25") == (20, 25)


def test_bench_cli(capsys):
    code, out, _ = run(capsys, "bench", "--degrees", "2,3", "--curves", "2",
                       "--grid-count", "50", "--methods", "power,jacobi1")
    assert code == 0
    table = rows(out)
    assert table[0] == ["n", "method", "total_seconds"]
    assert [(r[0], r[1]) for r in table[1:]] == [
        ("2", "power"), ("2", "jacobi1"), ("3", "power"), ("3", "jacobi1")]
    assert all(float(r[2]) >= 0 for r in table[1:])


def test_bench_budget_exceeded(capsys):
    code, out, _ = run(capsys, "bench", "--degrees", "30", "--curves", "3",
                       "--methods", "integral,jacobi1", "--budget", "0")
    assert code == 4
    table = rows(out)
    assert table[1] == ["30", "integral", "exceeded"]


def test_bench_usage(capsys):
    assert run(capsys, "bench", "--degrees", "0")[0] == 2
    assert run(capsys, "bench", "--methods", "horner")[0] == 2
    assert run(capsys, "bench", "--repeats", "0")[0] == 2


def test_bench_curves_deterministic():
    a = make_curves(7, 5, 2, seed=3)
    b = make_curves(7, 5, 2, seed=3)
    assert all(np.array_equal(x.W, y.W) for x, y in zip(a, b))
    assert not np.array_equal(a[0].W, make_curves(7, 5, 2, seed=4)[0].W)


def test_grid():
    pts = Grid().points()
    assert pts.size == 4999
    assert pts[0] == -1 + 1 / 2500 and pts[-1] == pytest.approx(1 - 1 / 2500, abs=1e-15)
    with pytest.raises(ValueError):
        Grid(step=0)
    with pytest.raises(ValueError):
        Grid(count=0)


def test_run_bench_rows():
    cfg = BenchConfig(degrees=(1, 4), curves_per_degree=2, grid=Grid(count=20))
    seen = []
    out = run_bench(cfg, progress=seen.append)
    assert out == seen and len(out) == 8
    assert {r.method for r in out} == {"jacobi1", "legendre", "power", "integral"}


# ---------------------------------------------------------------------- render


def _polyline(svg, cls):
    m = re.search(rf'class="{cls}" points="([^"]*)"', svg)
    return np.array([[float(v) for v in p.split(",")] for p in m.group(1).split()])


def test_render_line(tmp_path, capsys):
    path = tmp_path / "l.json"
    write_curve_file(path, GLCurve([[0.0, 0.0], [2.0, 1.0]]))
    out = tmp_path / "l.svg"
    assert run(capsys, "render", "--curve", str(path), "--samples", "11", "--out", str(out))[0] == 0
    svg = out.read_text()
    pts = _polyline(svg, "curve")
    # every sample lies on the segment y = x/2 (y flipped in the file)
    assert np.allclose(-pts[:, 1], pts[:, 0] / 2, atol=1e-12)
    assert 'stroke="#b0b0b0"' in svg and 'stroke="#202020"' in svg


def test_render_viewbox_margin():
    svg = render_svg(GLCurve([[0.0, 0.0], [1.0, 1.0]]), samples=50)
    x, y, w, h = map(float, re.search(r'viewBox="([^"]*)"', svg).group(1).split())
    assert x == pytest.approx(-0.05, abs=1e-9) and w == pytest.approx(1.1, abs=1e-9)
    assert y == pytest.approx(-1.05, abs=1e-9) and h == pytest.approx(1.1, abs=1e-9)


def test_render_degenerate():
    svg = render_svg(GLCurve(np.tile([1.0, 2.0], (4, 1))), samples=5)
    x, y, w, h = map(float, re.search(r'viewBox="([^"]*)"', svg).group(1).split())
    assert w > 0 and h > 0 and all(map(math.isfinite, (x, y, w, h)))


def test_render_degree50_finite():
    svg = render_svg(random_curve(50, 2, 0), samples=400)
    assert "nan" not in svg.lower()
    assert _polyline(svg, "curve").shape == (400, 2)


def test_render_errors(tmp_path, capsys):
    path = tmp_path / "three.json"
    write_curve_file(path, random_curve(3, 3, 0))
    assert run(capsys, "render", "--curve", str(path), "--out", str(tmp_path / "x.svg"))[0] == 2
    with pytest.raises(ValueError):
        render_svg(random_curve(3, 2, 0), samples=1)


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "glcurve.cli", "roots", "2"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and len(r.stdout.split()) == 2
    r = subprocess.run([sys.executable, "-m", "glcurve.cli", "frobnicate"],
                       capture_output=True, text=True)
    assert r.returncode == 2
