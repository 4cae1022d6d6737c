import json

import numpy as np
import pytest

from dlite.cli import main


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDist:
    def test_matrix_output(self, capsys, fixture_csv_path):
        code, out, _ = _run(capsys, ["dist", "--input", fixture_csv_path])
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == ",P,Q,R"
        rows = [line.split(",") for line in lines[1:]]
        assert [r[0] for r in rows] == ["P", "Q", "R"]
        # Zero diagonal rendered exactly as "0"; symmetric cells identical.
        for i, row in enumerate(rows):
            assert row[i + 1] == "0"
        assert rows[0][2] == rows[1][1]

    def test_byte_identical_across_runs(self, capsys, fixture_csv_path):
        _, out1, _ = _run(capsys, ["dist", "--input", fixture_csv_path])
        _, out2, _ = _run(capsys, ["dist", "--input", fixture_csv_path])
        assert out1 == out2

    def test_output_file(self, capsys, fixture_csv_path, tmp_path):
        target = tmp_path / "matrix.csv"
        code, out, _ = _run(
            capsys,
            ["dist", "--input", fixture_csv_path, "--output", str(target)],
        )
        assert code == 0
        assert out == ""
        assert target.read_text().startswith(",P,Q,R")

    def test_kl_without_smoothing_exits_3(self, capsys, fixture_csv_path):
        code, _, err = _run(
            capsys, ["dist", "--input", fixture_csv_path, "--measure", "kl"]
        )
        assert code == 3
        assert "KlUndefined" in err

    def test_kl_with_smoothing_succeeds(self, capsys, fixture_csv_path):
        code, out, _ = _run(
            capsys,
            ["dist", "--input", fixture_csv_path, "--measure", "kl",
             "--smooth", "1e-6"],
        )
        assert code == 0
        assert out.startswith(",P,Q,R")

    def test_missing_file_exits_2(self, capsys):
        code, _, err = _run(capsys, ["dist", "--input", "/nonexistent.csv"])
        assert code == 2
        assert "cannot read" in err

    def test_unknown_extension_needs_format(self, capsys, tmp_path):
        path = tmp_path / "data.dat"
        path.write_text(",a,b\nP,1,0\nQ,0,1\n")
        code, _, err = _run(capsys, ["dist", "--input", str(path)])
        assert code == 2
        code, out, _ = _run(
            capsys, ["dist", "--input", str(path), "--format", "csv"]
        )
        assert code == 0

    def test_malformed_input_exits_2(self, capsys, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text(",a,b\nP,1,zzz\n")
        code, _, err = _run(capsys, ["dist", "--input", str(path)])
        assert code == 2
        assert "row 2" in err

    def test_json_input(self, capsys, fixture_json_path):
        code, out, _ = _run(capsys, ["dist", "--input", fixture_json_path])
        assert code == 0
        assert out.startswith(",P,Q,R")


class TestPair:
    def test_fields_and_consistency(self, capsys, fixture_csv_path):
        code, out, _ = _run(
            capsys, ["pair", "--input", fixture_csv_path, "P", "R"]
        )
        assert code == 0
        body = json.loads(out)
        assert list(body) == [
            "lit", "delta_h", "dlite", "dlite_cbrt", "kl", "jsd", "tv",
            "per_outcome",
        ]
        np.testing.assert_allclose(
            body["lit"] - body["delta_h"], body["dlite"], atol=1e-12
        )

    def test_identical_pair_zero(self, capsys, fixture_csv_path):
        code, out, _ = _run(
            capsys, ["pair", "--input", fixture_csv_path, "Q", "Q"]
        )
        body = json.loads(out)
        assert body["dlite"] == 0.0

    def test_unknown_name_exits_2(self, capsys, fixture_csv_path):
        code, _, err = _run(
            capsys, ["pair", "--input", fixture_csv_path, "P", "missing"]
        )
        assert code == 2
        assert "UnknownName" in err


class TestVerify:
    ARGS = ["verify", "--samples", "300", "--dims", "2,3"]

    def test_small_run_exits_0(self, capsys):
        code, out, _ = _run(capsys, self.ARGS)
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 11
        for line in lines:
            report = json.loads(line)
            assert report["passed"] is True

    def test_deterministic_output(self, capsys):
        _, out1, _ = _run(capsys, self.ARGS + ["--seed", "7"])
        _, out2, _ = _run(capsys, self.ARGS + ["--seed", "7"])
        assert out1 == out2

    def test_zero_samples_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--samples", "0"])
        assert exc.value.code == 2

    def test_bad_dims_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--dims", "1,99"])
        assert exc.value.code == 2

    def test_bad_tolerance_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--tolerance", "bogus=1"])
        assert exc.value.code == 2

    def test_tolerance_override_exits_1(self, capsys):
        code, out, _ = _run(
            capsys,
            self.ARGS + ["--tolerance", "scaling_identity=1e-18"],
        )
        assert code == 1
        failed = [
            json.loads(line)
            for line in out.strip().split("\n")
            if not json.loads(line)["passed"]
        ]
        assert [r["property_name"] for r in failed] == ["scaling_identity"]


class TestParser:
    def test_subcommand_required(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_serve_registered(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["serve", "--help"])
        assert exc.value.code == 0
