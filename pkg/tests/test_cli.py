import json

import pytest

from fourinterp import cli


def run(argv):
    return cli.main(argv)


def test_usage_errors():
    with pytest.raises(SystemExit) as e:
        run(["no-such-command"])
    assert e.value.code == 2
    assert run(["basis-table", "--x-grid", "0:1:0"]) == 2
    assert run(["reconstruct", "--fixture", "nope"]) == 2
    assert run(["lattice-density", "leech"]) == 2
    assert run(["lp-check", "e8"]) == 2  # no built-in certificate in dim 8


def test_verify_suites_pass(capsys):
    for suite in ("theta", "classical", "lp"):
        assert run(["verify", suite]) == 0
        out = capsys.readouterr().out
        assert "residual,threshold" in out or '"threshold"' in out


def test_verify_json_report(tmp_path):
    out = tmp_path / "rep.json"
    assert run(["verify", "classical", "--format", "json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["passed"] is True
    for check in doc["checks"]:
        assert set(check) >= {"name", "residual", "threshold", "passed"}


def test_basis_table_determinism(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    args = ["basis-table", "--max-n", "2", "--x-grid", "0:1:0.5"]
    assert run(args + ["--out", str(a)]) == 0
    assert run(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert text.startswith("n,x,a,a_hat,err_a,err_ahat\n")
    assert "\r" not in text


def test_basis_table_max_n_zero(tmp_path, capsys):
    out = tmp_path / "t.csv"
    assert run(["basis-table", "--max-n", "0", "--x-grid", "0:1:0.5", "--out", str(out)]) == 0
    assert "a0(0) = 0.5" in capsys.readouterr().out


def test_reconstruct_report(tmp_path):
    out = tmp_path / "rec.json"
    code = run(
        [
            "reconstruct",
            "--fixture",
            "gauss",
            "--truncation-N",
            "10",
            "--format",
            "json",
            "--out",
            str(out),
            "0",
            "0.5",
        ]
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["passed"] is True
    assert len(doc["rows"]) == 2
    assert doc["rows"][0]["tolerance"] == 1e-3


def test_reconstruct_x_cap_warning(capsys):
    assert run(["reconstruct", "--truncation-N", "6", "3.4"]) == 0
    err = capsys.readouterr().err
    assert "exceeds the accuracy cap" in err


def test_poisson_command(tmp_path):
    out = tmp_path / "p.json"
    assert run(["poisson", "hex", "--format", "json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["checks"][0]["residual"] < 1e-9


def test_poisson_with_lattice_file(tmp_path):
    lat = tmp_path / "lat.txt"
    lat.write_text("1\n1\n")
    assert run(["poisson", "--lattice-file", str(lat)]) == 0


def test_lattice_density_json(tmp_path):
    out = tmp_path / "d.json"
    assert run(["lattice-density", "e8", "--format", "json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert abs(doc["density_nth_root"] - 0.84242944) < 1e-7


def test_classical_plot_data(tmp_path):
    out = tmp_path / "c.csv"
    assert run(["classical", "--x-grid", "0:2:0.5", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "x,value,error"
    assert len(lines) == 6


def test_config_file_precedence(tmp_path, capsys):
    cfgf = tmp_path / "cfg.txt"
    cfgf.write_text("max_n = 2\nformat = json\nx_grid = 0:1:0.5\n")
    out = tmp_path / "t1"
    assert run(["basis-table", "--config", str(cfgf), "--out", str(out)]) == 0
    assert out.read_text().lstrip().startswith("{")  # file format applied
    out2 = tmp_path / "t2"
    assert (
        run(["basis-table", "--config", str(cfgf), "--format", "csv", "--out", str(out2)])
        == 0
    )
    assert out2.read_text().startswith("n,x,")  # flag overrides file
    bad = tmp_path / "bad.txt"
    bad.write_text("bogus = 1\n")
    assert run(["basis-table", "--config", str(bad)]) == 2
