"""CLI subcommands: schemas, determinism, exit codes, descriptor parsing."""

import math

import numpy as np
import pytest

from legbounds.cli import main


def read_csv(path):
    lines = path.read_text().splitlines()
    header = lines[0].split(",")
    rows = [[float(v) for v in line.split(",")] for line in lines[1:]]
    return header, np.array(rows)


class TestRatioFigure:
    def test_default_degrees_and_schema(self, tmp_path, capsys):
        assert main(["ratio-figure", "--grid", "501", "--out", str(tmp_path)]) == 0
        for n in (2, 6, 18):
            header, rows = read_csv(tmp_path / f"ratio_n{n}.csv")
            assert header == ["x", "ratio"]
            assert rows.shape == (501, 2)
            assert np.all(rows[:, 1] < 1.0)
        out = capsys.readouterr().out
        assert "max ratio" in out

    def test_svg_emission(self, tmp_path):
        assert main(["ratio-figure", "--n", "4", "--grid", "201", "--out",
                     str(tmp_path), "--format", "svg"]) == 0
        svg = (tmp_path / "ratio_n4.svg").read_text()
        assert svg.startswith("<svg")
        assert "polyline" in svg


class TestCoeffBounds:
    def test_schema_and_worked_numbers(self, tmp_path):
        out = tmp_path / "cb.csv"
        assert main(["coeff-bounds", "--out", str(out)]) == 0
        header, rows = read_csv(out)
        assert header == ["n", "abs_a_n", "B1", "B2", "B1_over_B2"]
        assert rows.shape == (396, 5)
        last = rows[-1]
        assert last[0] == 400
        assert last[1] == pytest.approx(1.991004306e-4, rel=1e-8)
        assert last[2] == pytest.approx(2.000963242e-4, rel=1e-9)
        assert np.all(rows[:, 1] <= rows[:, 2])
        assert np.all(rows[:, 2] < rows[:, 3])

    def test_rational_kink_location(self, tmp_path):
        out = tmp_path / "cb67.csv"
        assert main(["coeff-bounds", "--t", "6/7", "--n-min", "5", "--n-max", "60",
                     "--out", str(out)]) == 0
        _, rows = read_csv(out)
        cap = 2.0 * (1.0 - (6.0 / 7.0) ** 2) ** 0.25 / math.pi
        assert np.all(rows[:, 4] < cap)

    def test_determinism(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for path in (a, b):
            assert main(["coeff-bounds", "--n-min", "5", "--n-max", "80",
                         "--out", str(path)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_roundtrip_precision(self, tmp_path):
        from legbounds.bounds import abs_kink_bound_table

        out = tmp_path / "cb.csv"
        assert main(["coeff-bounds", "--n-min", "5", "--n-max", "12",
                     "--out", str(out)]) == 0
        _, rows = read_csv(out)
        table = abs_kink_bound_table(0.0, np.arange(5, 13))
        np.testing.assert_array_equal(rows[:, 2], table.B1)

    def test_domain_error_exit_code(self, tmp_path, capsys):
        assert main(["coeff-bounds", "--t", "2.0", "--out", str(tmp_path / "x.csv")]) == 2
        assert "error:" in capsys.readouterr().err

    def test_io_error_exit_code(self, capsys):
        assert main(["coeff-bounds", "--out", "/nonexistent-dir-xyz/out.csv"]) == 3
        assert "I/O error" in capsys.readouterr().err


class TestErrorStudy:
    def test_schema_bound_and_slope(self, tmp_path, capsys):
        out = tmp_path / "es.csv"
        assert main(["error-study", "--n-min", "3", "--n-max", "80",
                     "--grid", "5000", "--out", str(out)]) == 0
        header, rows = read_csv(out)
        assert header == ["N", "measured_sup_error", "corollary_bound", "bound_over_error"]
        assert rows.shape == (78, 4)
        assert rows[0, 2] == pytest.approx(8.0 / math.sqrt(math.pi), rel=1e-15)
        assert np.all(rows[:, 1] <= rows[:, 2])
        stdout = capsys.readouterr().out
        assert "slope" in stdout

    def test_default_n_set_includes_rate_points(self, tmp_path):
        out = tmp_path / "es.csv"
        assert main(["error-study", "--grid", "20000", "--out", str(out)]) == 0
        _, rows = read_csv(out)
        assert rows.shape[0] == 200
        assert rows[-2, 0] == 400 and rows[-1, 0] == 800

    def test_bad_range(self, tmp_path):
        assert main(["error-study", "--n-min", "1", "--n-max", "9",
                     "--out", str(tmp_path / "x.csv")]) == 2


class TestSelectDegree:
    def test_kink_loose_tolerance(self, capsys):
        assert main(["select-degree", "--eps", "0.5", "--grid", "20000"]) == 0
        out = capsys.readouterr().out
        assert "selected N = 44" in out
        assert "(<= eps: yes)" in out

    def test_domain_minimum(self, capsys):
        assert main(["select-degree", "--eps", "10", "--grid", "20000"]) == 0
        assert "selected N = 3" in capsys.readouterr().out

    def test_tight_tolerance_skips_measurement(self, capsys):
        assert main(["select-degree", "--eps", "0.01"]) == 0
        out = capsys.readouterr().out
        assert "selected N = 101862" in out
        assert "measurement skipped" in out

    def test_polynomial_descriptor(self, capsys):
        assert main(["select-degree", "--eps", "0.5", "--function", "polynomial",
                     "--pieces", "-1,0,1 ; 0,-1 ; 0,1", "--grid", "20000"]) == 0
        out = capsys.readouterr().out
        assert "smoothness order m = 1" in out
        assert "selected N = 44" in out

    def test_single_polynomial_is_exact(self, capsys):
        assert main(["select-degree", "--eps", "0.1", "--function", "polynomial",
                     "--pieces", "-1,1 ; 0,0,2.5"]) == 0
        out = capsys.readouterr().out
        assert "exact for every N >= 3" in out

    def test_missing_pieces(self):
        assert main(["select-degree", "--eps", "0.5", "--function", "polynomial"]) == 2

    def test_malformed_descriptor(self):
        assert main(["select-degree", "--eps", "0.5", "--function", "polynomial",
                     "--pieces", "-1,0,1 ; 0,q"]) == 2


class TestExitCodes:
    def test_numerical_failure_exit_code(self, tmp_path, monkeypatch, capsys):
        import legbounds.cli as cli_mod
        from legbounds.quadrature import ConvergenceError

        def boom(*args, **kwargs):
            raise ConvergenceError("simulated stagnation")

        monkeypatch.setattr(cli_mod.series, "abs_kink_series", boom)
        code = main(["error-study", "--n-min", "3", "--n-max", "10",
                     "--grid", "2000", "--out", str(tmp_path / "x.csv")])
        assert code == 4
        assert "numerical failure" in capsys.readouterr().err


class TestArgparse:
    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            main(["no-such-command"])
        assert exc.value.code == 2

    def test_eps_required(self):
        with pytest.raises(SystemExit) as exc:
            main(["select-degree"])
        assert exc.value.code == 2

    def test_rational_argument_rejects_garbage(self):
        with pytest.raises(SystemExit) as exc:
            main(["coeff-bounds", "--t", "a/b"])
        assert exc.value.code == 2
