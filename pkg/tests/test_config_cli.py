"""Config parsing and the three command-line entry points."""
import numpy as np
import pytest

from asedf import load_case_config, parse_config, read_report, read_csv_1d
from asedf.cli import main


def _write(tmp_path, text, name="case.cfg"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_parse_config_basics(tmp_path):
    path = _write(tmp_path, """
# smooth advection study
case = sine1d
nx = 32          # mesh override
t_end = 0.05
order = 7
""")
    raw = parse_config(path)
    assert raw == {"case": "sine1d", "nx": "32", "t_end": "0.05",
                   "order": "7"}


def test_parse_config_rejects_unknown_key(tmp_path):
    path = _write(tmp_path, "case = sine1d\ncolor = red\n")
    with pytest.raises(ValueError, match="unknown key"):
        parse_config(path)


def test_parse_config_requires_case(tmp_path):
    path = _write(tmp_path, "nx = 32\n")
    with pytest.raises(ValueError, match="case"):
        parse_config(path)


def test_parse_config_rejects_bare_lines(tmp_path):
    path = _write(tmp_path, "case sine1d\n")
    with pytest.raises(ValueError, match="expected key"):
        parse_config(path)


def test_load_case_config_applies_values_and_overrides(tmp_path):
    path = _write(tmp_path, "case = config3\nnx = 20\nny = 20\n"
                            "t_end = 0.1\norder = 7\nsigma_thres = 3.0\n")
    setup, opts = load_case_config(path)
    assert setup.name == "config3"
    assert setup.mesh.nx == 20
    assert setup.t_end == pytest.approx(0.1)
    assert opts["order"] == 7
    assert opts["sigma_thres"] == pytest.approx(3.0)
    # caller overrides beat the file
    setup2, opts2 = load_case_config(path, overrides={"nx": 12, "ny": 12,
                                                      "order": 9})
    assert setup2.mesh.nx == 12
    assert opts2["order"] == 9


def test_cli_run_writes_data_and_report(tmp_path):
    cfg = _write(tmp_path, "case = sine1d\nnx = 32\nt_end = 0.02\n")
    out = tmp_path / "runout"
    rc = main(["run", cfg, "--out", str(out)])
    assert rc == 0
    report = read_report(out / "sine1d_o5_report.txt")
    assert report["case"] == "sine1d"
    assert int(report["steps"]) > 0
    assert float(report["min_p"]) > 0.0
    assert float(report["conserved_drift"]) < 1e-11
    data = read_csv_1d(out / "sine1d_o5.csv")
    assert len(data["rho"]) == 32
    assert "l1_error" in report


def test_cli_run_2d_writes_vtk(tmp_path):
    cfg = _write(tmp_path, "case = sine2d\nnx = 12\nny = 12\nt_end = 0.01\n")
    out = tmp_path / "runout2"
    rc = main(["run", cfg, "--order", "7", "--out", str(out)])
    assert rc == 0
    assert (out / "sine2d_o7.vtk").exists()
    report = read_report(out / "sine2d_o7_report.txt")
    assert report["order"] == "7"


def test_cli_converge_reports_orders(tmp_path):
    cfg = _write(tmp_path, "case = sine1d\n")
    out = tmp_path / "convout"
    rc = main(["converge", cfg, "--levels", "16,32", "--out", str(out)])
    assert rc == 0
    report = read_report(out / "sine1d_o5_converge_report.txt")
    errors = [float(s) for s in report["errors"].split(",")]
    assert len(errors) == 2
    assert errors[1] < errors[0] / 16.0  # at least fourth order observed


def test_cli_converge_rejects_cases_without_exact_solution(tmp_path, capsys):
    cfg = _write(tmp_path, "case = blast\nnx = 32\n")
    rc = main(["converge", cfg, "--levels", "16,32",
               "--out", str(tmp_path / "x")])
    assert rc == 1


def test_cli_bench_reports_ratios(tmp_path):
    cfg = _write(tmp_path, "case = sine2d\n")
    out = tmp_path / "benchout"
    rc = main(["bench", cfg, "--mesh", "24x24", "--steps", "2",
               "--orders", "5,7", "--out", str(out)])
    assert rc == 0
    report = read_report(out / "sine2d_bench_report.txt")
    assert float(report["seconds_o5"]) > 0.0
    assert float(report["ratio_o7"]) > 0.0


def test_cli_run_reports_failure_cleanly(tmp_path, capsys):
    # a deliberately hopeless configuration must exit nonzero, not raise
    cfg = _write(tmp_path, "case = config3\nnx = 12\nny = 12\n"
                           "t_end = 0.4\nflux = lf\ncfl = 20.0\n")
    rc = main(["run", cfg, "--out", str(tmp_path / "failout")])
    assert rc == 1
    assert "FAILED" in capsys.readouterr().err
