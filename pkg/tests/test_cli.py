import csv
import io
import json
import math

import pytest

from bryophylla.cli import angle_resolution, main, parse_angle


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestAngles:
    @pytest.mark.parametrize("text, value", [
        ("pi/2", math.pi / 2), ("2*pi/3", 2 * math.pi / 3), ("-0.5", -0.5),
        ("π/5", math.pi / 5), ("tau/4", math.pi / 2), ("1e-1", 0.1),
    ])
    def test_parse(self, text, value):
        assert parse_angle(text) == pytest.approx(value, abs=1e-15)

    def test_degrees(self):
        assert parse_angle("90", degrees=True) == pytest.approx(math.pi / 2)

    @pytest.mark.parametrize("text", ["__import__('os')", "pi.real", "x", "", "2**1000**1000"])
    def test_rejects(self, text):
        with pytest.raises(Exception):
            parse_angle(text)

    def test_resolution(self):
        assert angle_resolution("1.5707963") == pytest.approx(5e-8)
        assert angle_resolution("pi/2") == 0


class TestInfo:
    def test_farey_point(self, capsys):
        code, out, _ = run(capsys, "info", "--phi", "1.5707963", "--psi", "0.6283185", "--json")
        data = json.loads(out)
        assert code == 0 and data["is_farey"] is True
        assert data["r"] == pytest.approx(0.221232, abs=1e-6)
        assert data["region"] == "FareyInterior"

    def test_point_l(self, capsys):
        code, out, _ = run(capsys, "info", "--phi", "2.0943951", "--psi", "0.5235988", "--json")
        data = json.loads(out)
        assert code == 0 and data["region"] == "BoundaryPL"
        assert abs(data["r"]) < 1e-7

    def test_text(self, capsys):
        code, out, _ = run(capsys, "info", "--phi", "pi/2", "--psi", "pi/5")
        assert code == 0 and "region       FareyInterior" in out and "is_farey     true" in out

    def test_excluded(self, capsys):
        code, _, err = run(capsys, "info", "--phi", "1.0", "--psi", "2.1415927")
        assert code == 2 and err

    def test_usage(self, capsys):
        assert run(capsys, "info", "--phi", "pi/2")[0] == 1
        assert run(capsys, "info", "--phi", "nope", "--psi", "1")[0] == 1
        assert run(capsys, "bogus")[0] == 1


class TestRender:
    def test_depth_counts(self, capsys):
        for depth, n in ((0, 1), (3, 15)):
            code, out, _ = run(capsys, "render", "--phi", "pi/2", "--psi", "pi/5", "--depth", str(depth))
            assert code == 0 and out.count("<path") == n

    def test_file_and_determinism(self, tmp_path, capsys):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        for p in (a, b):
            assert run(capsys, "render", "--phi", "2*pi/3", "--psi", "pi/6", "--depth", "4",
                       "--out", str(p))[0] == 0
        assert a.read_bytes() == b.read_bytes()

    def test_not_farey(self, capsys):
        assert run(capsys, "render", "--phi", "1.2", "--psi", "1.5")[0] == 2

    def test_io_error(self, tmp_path, capsys):
        out = tmp_path / "missing" / "x.svg"
        assert run(capsys, "render", "--phi", "pi/2", "--psi", "pi/5", "--out", str(out))[0] == 3

    def test_bad_depth(self, capsys):
        assert run(capsys, "render", "--phi", "pi/2", "--psi", "pi/5", "--depth", "17")[0] == 1


class TestScan:
    def _rows(self, capsys, n):
        code, out, _ = run(capsys, "scan", "--grid-phi", str(n), "--grid-psi", str(n))
        assert code == 0
        return list(csv.DictReader(io.StringIO(out, newline="")))

    def test_three_by_three(self, capsys):
        rows = self._rows(capsys, 3)
        assert len(rows) == 9 and all(r["region"] for r in rows)
        p = [r for r in rows if math.isclose(float(r["phi"]), math.pi / 2)
             and math.isclose(float(r["psi"]), math.pi / 4)]
        assert p[0]["region"] == "BoundaryPL"

    def test_example_point(self, capsys):
        rows = self._rows(capsys, 5)
        hit = [r for r in rows if math.isclose(float(r["phi"]), 2 * math.pi / 3)
               and math.isclose(float(r["psi"]), math.pi / 3)]
        assert hit[0]["region"] == "RminusOne_BD"

    def test_header_and_io(self, tmp_path, capsys):
        path = tmp_path / "s.csv"
        assert run(capsys, "scan", "--grid-phi", "2", "--grid-psi", "2", "--out", str(path))[0] == 0
        raw = path.read_bytes()
        assert raw.startswith(b"phi,psi,r,g1,g2,g3,region\r\n") and raw.count(b"\r\n") == 5
        assert run(capsys, "scan", "--grid-phi", "1")[0] == 1
        assert run(capsys, "scan", "--out", str(tmp_path / "no" / "s.csv"))[0] == 3


class TestLimit:
    def test_fixed_vertex(self, capsys):
        code, out, _ = run(capsys, "limit", "--phi", "pi/2", "--psi", "pi/5", "--period", "1", "--json")
        data = json.loads(out)
        assert code == 0 and data["bound"] == 0
        assert abs(complex(data["re"], data["im"]) - 1j) < 1e-12

    def test_two_expansions(self, capsys):
        pts = []
        for word, period in (("0", "1"), ("1", "0")):
            _, out, _ = run(capsys, "limit", "--phi", "pi/2", "--psi", "pi/5",
                            "--word", word, "--period", period, "--json")
            d = json.loads(out)
            pts.append(complex(d["re"], d["im"]))
        assert abs(pts[0] - pts[1]) < 1e-9

    def test_errors(self, capsys):
        assert run(capsys, "limit", "--phi", "pi/2", "--psi", "pi/5", "--word", "")[0] == 1
        assert run(capsys, "limit", "--phi", "pi/2", "--psi", "pi/5", "--word", "012")[0] == 1
        assert run(capsys, "limit", "--phi", "1.2", "--psi", "1.5", "--period", "1")[0] == 2
        assert run(capsys, "limit", "--phi", "pi/2", "--psi", "pi/5", "--word", "0110")[0] == 4
        assert run(capsys, "limit", "--phi", "pi/2", "--psi", "pi/5", "--period", "01",
                   "--iterate", "--max-depth", "5")[0] == 4


class TestFareyCoord:
    @pytest.mark.parametrize("alpha, eta, cf", [
        ("1/4", "1/3", "[0;2,1,inf]"), ("1/2", "1/2", None), ("0/1", "0/1", None),
    ])
    def test_examples(self, capsys, alpha, eta, cf):
        code, out, _ = run(capsys, "farey-coord", "--alpha", alpha, "--json")
        data = json.loads(out)
        assert code == 0 and data["eta"] == eta
        if cf:
            assert data["cf"].replace(" ", "") == cf

    def test_periodic(self, capsys):
        _, out, _ = run(capsys, "farey-coord", "--alpha", "1/3", "--json")
        data = json.loads(out)
        assert data["eta"] is None
        assert data["eta_float"] == pytest.approx((3 - math.sqrt(5)) / 2, abs=1e-15)

    @pytest.mark.parametrize("alpha", ["3/2", "-1/4", "abc", "1/0"])
    def test_bad(self, capsys, alpha):
        assert run(capsys, "farey-coord", f"--alpha={alpha}")[0] == 1


class TestVerify:
    def test_farey(self, capsys):
        code, out, _ = run(capsys, "verify", "--phi", "pi/2", "--psi", "pi/5", "--samples", "5")
        assert code == 0 and "FAIL" not in out

    def test_boundary(self, capsys):
        code, out, _ = run(capsys, "verify", "--phi", "pi/2", "--psi", "pi/4", "--samples", "5", "--json")
        data = json.loads(out)
        assert code == 0 and data["passed"]
        names = {c["name"]: c for c in data["checks"]}
        assert not names["nesting"]["skipped"] and not names["two_expansions"]["skipped"]

    def test_unreachable_tol(self, capsys):
        code, out, _ = run(capsys, "verify", "--phi", "pi/2", "--psi", "pi/5", "--samples", "3",
                           "--tol", "1e-30")
        assert code == 5 and "FAIL" in out
