from __future__ import annotations

import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from inellipse.besant import pair_distance
from inellipse.cli import ParseError, main, parse_line, parse_vertices
from inellipse.conic import Conic, coefficient_deviation, foci
from inellipse.quad import Point

EX = "0,0 0,1 2,4 6.8,-2.4"
EX_FRACTIONS = "0,0 0,1 2,4 34/5,-12/5"
TRAPEZOID = "0,0 0,1 2,2 2,-1"
SVG = "{http://www.w3.org/2000/svg}"


def run(argv: list[str]) -> tuple[int, list[str]]:
    lines: list[str] = []
    code = main(argv, out=lines.append)
    return code, lines


def report(argv: list[str]) -> dict:
    code, lines = run(argv)
    assert code == 0
    return json.loads(lines[0])


def conic_of(rep: dict) -> Conic:
    return Conic(*(rep["conic"][k] for k in "ABCDEF"))


class TestParsing:
    def test_decimals_and_fractions(self):
        assert parse_vertices(EX).vertices == parse_vertices(EX_FRACTIONS).vertices

    @pytest.mark.parametrize("text", ["0,0 0,1 1,2", "0,0 0,1 1,2 3", "0,0 0,1 1,2 x,1", "1/0,0 0,1 1,1 1,0"])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_vertices(text)

    def test_batch_lines(self):
        assert parse_line("  # comment") is None
        assert parse_line("") is None
        assert parse_line("ex: " + EX).label == "ex"
        assert parse_line("ex " + EX).label == "ex"
        assert parse_line(EX).label is None


class TestClassify:
    def test_example(self):
        rep = report(["classify", "--vertices", EX])
        assert rep["flags"] == {
            "cyclic": True,
            "orthodiagonal": True,
            "trapezoid": False,
            "parallelogram": False,
            "besant": True,
        }
        assert rep["r"] == pytest.approx(17 / 22, abs=1e-12)
        assert rep["EP"] == [4.0, 0.5] and rep["IP"] == [0.4, 0.8]
        assert rep["r_max_area"] == pytest.approx((-151 + math.sqrt(64621)) / 123, abs=1e-9)
        assert max(abs(x) for x in rep["conic"].values()) == 1
        assert rep["conic"]["A"] > 0
        assert all(c["passed"] for c in rep["checks"])

    def test_square(self):
        rep = report(["classify", "--vertices", "0,0 0,1 1,1 1,0"])
        assert rep["flags"]["parallelogram"] and not rep["flags"]["besant"]
        assert rep["reason"] == "Parallelogram"

    def test_not_cyclic(self):
        rep = report(["classify", "--vertices", "0,0 0,1 2,3 3,-1"])
        assert rep["reason"] == "NotCyclic" and rep["EP"] is None

    def test_counter_clockwise_reordered(self):
        ccw = " ".join(reversed(EX.split()))
        rep = report(["classify", "--vertices", ccw])
        assert rep["flags"]["besant"]
        assert pair_distance(foci(conic_of(rep)), (Point(4, 0.5), Point(0.4, 0.8))) < 1e-9

    def test_parse_error_exit(self, capsys):
        code, lines = run(["classify", "--vertices", "0,0 0,1 1,2"])
        assert code == 3 and lines == []
        assert "parse error" in capsys.readouterr().err

    def test_not_convex_exit(self, capsys):
        code, _ = run(["classify", "--vertices", "0,0 1,1 0,1 1,0"])
        assert code == 2
        assert capsys.readouterr().err.count("\n") == 1

    def test_missing_file_exit(self, tmp_path):
        code, _ = run(["classify", "--input-file", str(tmp_path / "missing.txt")])
        assert code == 4

    def test_plain_text(self):
        code, lines = run(["classify", "--vertices", EX, "--no-json"])
        assert code == 0
        assert "flags.besant: true" in lines[0].splitlines()


class TestBesant:
    def test_trapezoid(self):
        rep = report(["besant", "--vertices", TRAPEZOID])
        assert coefficient_deviation(conic_of(rep), Conic(3, 0, 4, -6, -4, 1)) < 1e-9
        names = {c["name"] for c in rep["checks"]}
        assert {"foci_are_EP_IP", "tangent_to_all_sides", "center_is_midpoint_circumcenter"} <= names
        assert all(c["passed"] for c in rep["checks"])

    def test_not_besant_in_band(self):
        rep = report(["besant", "--vertices", "0,0 0,1 2,3 3,-1"])
        assert rep["flags"]["besant"] is False and rep["reason"] == "NotCyclic"

    def test_svg_elements(self, tmp_path):
        path = tmp_path / "ex.svg"
        rep = report(["besant", "--vertices", EX, "--svg", str(path)])
        assert rep["svg"] == str(path)
        root = ET.parse(path).getroot()
        assert root.tag == SVG + "svg"

        def count(tag, cls):
            return sum(1 for e in root.iter(SVG + tag) if e.get("class") == cls)

        assert count("line", "side") == 4
        assert count("line", "diagonal") == 2
        assert count("circle", "circumcircle") == 1
        assert count("path", "ellipse") == 1
        labels = {e.get("data-label") for e in root.iter(SVG + "circle") if e.get("class") == "marker"}
        assert labels == {"EP", "IP", "center"}

    def test_svg_unwritable(self, tmp_path):
        code, _ = run(["besant", "--vertices", EX, "--svg", str(tmp_path / "no" / "such" / "dir.svg")])
        assert code == 4

    def test_svg_ellipse_path_on_conic(self, tmp_path):
        path = tmp_path / "ex.svg"
        rep = report(["besant", "--vertices", EX, "--svg", str(path)])
        d = next(e.get("d") for e in ET.parse(path).getroot().iter(SVG + "path"))
        x, y = (float(v) for v in d.split()[1:3])
        conic = conic_of(rep)
        # path start is a point of the ellipse (y is flipped in the figure)
        assert abs(conic(x, -y)) < 1e-5


class TestInscribe:
    def test_routes_agree(self):
        rep = report(["inscribe", "--vertices", EX, "--r", "0.5"])
        assert rep["cross_route_residual"] < 1e-8
        assert rep["marden_route"] == "marden_triangle"

    def test_besant_member(self):
        rep = report(["inscribe", "--vertices", EX_FRACTIONS, "--r", str(17 / 22)])
        got = [Point(*p) for p in rep["foci_coefficients"]]
        assert pair_distance(got, (Point(4, 0.5), Point(0.4, 0.8))) < 1e-9

    def test_trapezoid_route(self):
        rep = report(["inscribe", "--vertices", TRAPEZOID, "--r", "0.3"])
        assert rep["marden_route"] == "foci_quadratic"
        assert rep["cross_route_residual"] < 1e-8

    @pytest.mark.parametrize("r", ["1.5", "0", "-0.2"])
    def test_out_of_range(self, r):
        code, _ = run(["inscribe", "--vertices", EX, "--r", r])
        assert code == 2

    def test_foci_round_trip(self):
        rep = report(["inscribe", "--vertices", EX, "--r", "0.3"])
        got = foci(conic_of(rep))
        want = [Point(*p) for p in rep["foci_coefficients"]]
        assert pair_distance(got, want) < 1e-9


class TestMaxArea:
    def test_example(self):
        rep = report(["maxarea", "--vertices", EX])
        assert rep["r_max_area"] == pytest.approx((-151 + math.sqrt(64621)) / 123, abs=1e-6)
        assert rep["checks"][0]["passed"]

    def test_trapezoid(self):
        rep = report(["maxarea", "--vertices", TRAPEZOID])
        assert rep["r_max_area"] == pytest.approx(0.5, abs=1e-9)

    def test_area_scales_with_input(self):
        small = report(["maxarea", "--vertices", EX])
        big = report(["maxarea", "--vertices", "0,0 0,3 6,12 20.4,-7.2"])
        assert big["area"] == pytest.approx(9 * small["area"], rel=1e-9)


class TestBatch:
    def test_ordered_json_lines(self, tmp_path):
        f = tmp_path / "quads.txt"
        f.write_text(f"ex: {EX}\n# skip\n\ntrap {TRAPEZOID}\nbad: 0,0 1,1\n0,0 1,1 0,1 1,0\n")
        for jobs in ("1", "2"):
            code, lines = run(["classify", "--input-file", str(f), "--jobs", jobs])
            reps = [json.loads(x) for x in lines]
            assert [r.get("label") for r in reps[:2]] == ["ex", "trap"]
            assert reps[2]["error"] == "ParseError" and reps[2]["line"] == 5
            assert reps[3]["error"] == "NotConvex" and reps[3]["line"] == 6
            assert code == 3

    def test_parallel_matches_serial(self, tmp_path):
        f = tmp_path / "quads.txt"
        f.write_text("\n".join([EX, TRAPEZOID, "0,0 0,1 2,3 3,-1"] * 3) + "\n")
        _, serial = run(["maxarea", "--input-file", str(f)])
        _, parallel = run(["maxarea", "--input-file", str(f), "--jobs", "3"])
        assert serial == parallel


class TestTolerance:
    def test_flag_beats_environment(self, monkeypatch):
        near = "0,0 0,1 2,4 6.8,-2.4000001"
        monkeypatch.setenv("INELLIPSE_TOLERANCE", "1e-3")
        assert report(["classify", "--vertices", near])["flags"]["cyclic"] is True
        assert report(["classify", "--vertices", near, "--tolerance", "1e-12"])["flags"]["cyclic"] is False
        monkeypatch.delenv("INELLIPSE_TOLERANCE")
        assert report(["classify", "--vertices", near])["flags"]["cyclic"] is False


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "inellipse", "classify", "--vertices", EX]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b
    keys = list(json.loads(a))
    assert keys[:4] == ["command", "label", "input", "canonical"]
