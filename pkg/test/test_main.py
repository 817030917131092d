# type: ignore
"""

    test_main.py

    Tests for the levyfock command line tool

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.

"""

import json

import numpy as np
import pytest

from levy_fock import Settings, __version__
from levy_fock.main import run
from levy_fock.serializers import digest, grid_table, table_text


def run_json(capsys, *argv):
    """Run the tool and return the exit code with the parsed JSON report"""
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else None)


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def sinc_csv(tmp_path):
    t = np.arange(0.0, 8.25, 0.25)
    return write(tmp_path, "sinc.csv", table_text(grid_table(t, np.sinc(t / np.pi))))


def gaussian_csv(tmp_path):
    t = np.arange(0.0, 4.25, 0.25)
    return write(tmp_path, "gaussian.csv", table_text(grid_table(t, np.exp(-0.5 * t * t))))


def test_eval(capsys):
    code, report = run_json(capsys, "eval", "--reference", "gaussian")
    assert code == 0
    assert report["command"] == "eval"
    assert report["pass"]
    assert [c["code"] for c in report["checks"]] == ["diffusion", "min1p2", "hermitian"]
    assert len(report["data"]["t"]) == 17
    # F(1) = exp(-1/2)
    ix = report["data"]["t"].index(1.0)
    assert abs(report["data"]["charfn"][ix][0] - np.exp(-0.5)) < 1e-15
    assert report["summary"]["variance"] == 1.0


def test_eval_csv(capsys):
    code = run(["eval", "-r", "mixed", "--grid=-1:1:0.5", "--format", "csv"])
    lines = capsys.readouterr().out.splitlines()
    assert code == 0
    assert lines[0] == "t,f_re,f_im,F_re,F_im"
    assert len(lines) == 6
    assert [float(x) for x in lines[3].split(",")] == [0.0, 0.0, 0.0, 1.0, 0.0]


def test_output_directory(tmp_path, capsys):
    out = tmp_path / "out"
    code = run(["eval", "-r", "poisson", "-o", str(out)])
    assert code == 0
    assert capsys.readouterr().out == ""
    text = (out / "eval.json").read_text(encoding="utf-8")
    manifest = json.loads((out / "eval.manifest.json").read_text(encoding="utf-8"))
    assert manifest["tool"] == "levyfock"
    assert manifest["version"] == __version__
    assert manifest["command"] == "eval"
    assert manifest["pass"] is True
    assert manifest["seed"] == 0
    assert manifest["outputs"] == {"eval.json": digest(text)}
    assert list(manifest["inputs"]) == ["reference:poisson"]
    assert manifest["settings"]["quadrature.tolerance"] == 1e-10


def test_triplet_file(tmp_path, capsys):
    path = write(tmp_path, "trip.json", '{"b": 1.0, "atoms": [[2.0, 3.0]], "convention": "definetti"}')
    code, report = run_json(capsys, "convert", "-i", path, "--target", "levy")
    assert code == 0
    assert report["summary"]["b_to"] == pytest.approx(2.2, abs=1e-12)
    assert report["data"]["triplet"]["convention"] == "levy"
    code, report = run_json(capsys, "convert", "-i", path)
    assert code == 2


def test_check_pd(capsys):
    code, report = run_json(capsys, "check-pd", "-r", "mixed")
    assert code == 0
    assert [c["code"] for c in report["checks"]] == ["gram_psd", "conditional_psd"]


def test_check_id(tmp_path, capsys):
    code, report = run_json(capsys, "check-id", "-r", "gaussian")
    assert code == 0
    assert len(report["data"]["verdicts"]) == 16
    assert all(v["pass"] for v in report["data"]["verdicts"])
    # sin t / t is positive definite but changes sign
    csv = sinc_csv(tmp_path)
    code = run(["check-pd", "-i", csv])
    capsys.readouterr()
    assert code == 0
    code = run(["check-id", "-i", csv])
    captured = capsys.readouterr()
    assert code == 1
    report = json.loads(captured.out)
    assert report["checks"][0]["code"] == "branch"
    assert "P003" in report["data"]["failure"]
    assert "branch" in captured.err


def test_gns(capsys):
    code, report = run_json(capsys, "gns", "-r", "gaussian")
    assert code == 0
    assert report["summary"]["rank"] == 1
    assert report["summary"]["coboundary"]["is_coboundary"] is False
    assert report["summary"]["coboundary"]["normalized"] > 0.1
    code, report = run_json(capsys, "gns", "-r", "poisson", "--grid=-2:2:0.5")
    assert code == 0
    assert report["summary"]["coboundary"]["is_coboundary"] is True


def test_grid_function_pipelines(tmp_path, capsys):
    path = gaussian_csv(tmp_path)
    code, report = run_json(capsys, "gns", "-i", path)
    assert code == 0
    assert report["summary"]["rank"] == 1
    assert report["summary"]["shift"] == 0.25
    # The points t with t + 0.25 still on the grid
    assert report["summary"]["shift_domain"] == 16
    assert "shift_covariance" in [c["code"] for c in report["checks"]]
    assert "coboundary" not in report["summary"]
    code, report = run_json(capsys, "report", "-i", path)
    assert code == 0
    assert set(report["summary"]) == {"check-pd", "check-id", "gns"}
    assert all(s["pass"] for s in report["summary"].values())
    # A shift off the grid is an input error
    assert run(["gns", "-i", path, "--shift", "0.1"]) == 2


def test_negative_grid_flag(capsys):
    code, report = run_json(capsys, "eval", "-r", "gaussian", "--grid", "-4:4:0.5")
    assert code == 0
    assert report["data"]["t"][0] == -4.0
    assert len(report["data"]["t"]) == 17
    code, short = run_json(capsys, "eval", "-r", "gaussian", "-g", "-4:4:0.5")
    assert code == 0
    code, joined = run_json(capsys, "eval", "-r", "gaussian", "--grid=-4:4:0.5")
    assert code == 0
    assert short["data"] == report["data"] == joined["data"]
    # A trailing flag without its value is still a usage error
    assert run(["eval", "-r", "gaussian", "--grid"]) == 2


def test_embed_verify(capsys):
    code, report = run_json(capsys, "embed-verify", "-r", "mixed", "--grid=-1:1:0.5", "--degree", "6")
    assert code == 0
    codes = [c["code"] for c in report["checks"]]
    assert codes == ["unitarity", "representation", "vacuum", "truncation"]
    assert report["summary"]["embedding"]["degree"] == 6
    assert report["summary"]["embedding"]["within_bound"] is True


def test_sample_is_reproducible(tmp_path, capsys):
    outputs = []
    for name in ("a", "b"):
        out = tmp_path / name
        assert run(["sample", "-r", "mixed", "--seed", "7", "--steps", "20", "-o", str(out)]) == 0
        outputs.append((out / "sample.json").read_bytes())
    assert outputs[0] == outputs[1]
    path = json.loads(outputs[0])["data"]
    assert len(path["t"]) == 21
    assert path["values"][0] == 0.0
    code = run(["sample", "-r", "mixed", "--seed", "8", "--steps", "20"])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["data"] != path


def test_ecf_compare(capsys):
    code, report = run_json(capsys, "ecf-compare", "-r", "mixed", "-n", "20000", "--seed", "3")
    assert code == 0
    assert [c["code"] for c in report["checks"]] == ["ecf", "divisibility_in_law"]
    assert report["data"]["n"] == 20000
    assert len(report["data"]["target"]) == 21


def test_report(tmp_path, capsys):
    code, report = run_json(capsys, "report", "-r", "poisson", "-n", "20000", "--grid=-2:2:0.5")
    assert code == 0
    assert set(report["summary"]) == {"eval", "check-pd", "check-id", "gns", "embed-verify", "ecf-compare"}
    # A grid function that crosses zero fails the report without aborting it
    code, report = run_json(capsys, "report", "-i", sinc_csv(tmp_path))
    assert code == 1
    assert report["summary"]["check-pd"]["pass"] is True
    assert report["summary"]["gns"]["error"]["code"] == "P003"


def test_config_override(tmp_path, capsys):
    conf = write(tmp_path, "loose.conf", "[tolerances]\npsd = 1e-6\n")
    out = tmp_path / "out"
    assert run(["check-pd", "-r", "gaussian", "--config", conf, "-o", str(out)]) == 0
    manifest = json.loads((out / "check-pd.manifest.json").read_text(encoding="utf-8"))
    assert manifest["settings"]["tolerances.psd"] == 1e-6
    # The override does not outlive the run
    assert Settings.PSD_TOL == 1e-8
    assert run(["check-pd", "-r", "gaussian", "--config", str(tmp_path / "none.conf")]) == 2


def test_usage_errors(tmp_path, capsys):
    out = tmp_path / "out"
    bad = write(tmp_path, "bad.json", '{"b": 0.0, "sigma": 1.0}')
    assert run(["eval", "-i", bad, "-o", str(out)]) == 2
    assert not out.exists()
    assert "I002" in capsys.readouterr().err
    assert run(["eval", "-i", write(tmp_path, "broken.json", '{"b": ')]) == 2
    assert run(["eval", "-i", str(tmp_path / "missing.json")]) == 2
    assert run(["eval"]) == 2
    assert run(["eval", "-r", "gaussian", "-i", bad]) == 2
    assert run(["eval", "-r", "cauchy"]) == 2
    assert run(["eval", "-r", "gaussian", "--grid", "0:1"]) == 2
    assert run(["sample", "-r", "gaussian", "--seed", "-1"]) == 2
    assert run(["frobnicate"]) == 2
    assert run([]) == 2
    assert run(["embed-verify", "-i", sinc_csv(tmp_path)]) == 2


def test_version(capsys):
    assert run(["--version"]) == 0
    assert capsys.readouterr().out.strip() == __version__
