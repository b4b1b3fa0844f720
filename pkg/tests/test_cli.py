import io

import numpy as np
import pytest

from qdamped import DomainError
from qdamped.cli import RunConfig, main, run
from qdamped.output import TimeSeriesOutput, read_csv, to_csv, write_csv


def run_text(cfg):
    buf = io.StringIO()
    status = run(cfg, buf)
    return status, buf.getvalue()


def test_roots_critical_message(capsys):
    assert main(["roots", "--q", "2", "--Gamma", "2", "--omega", "1"]) == 0
    assert capsys.readouterr().out == "lambda = -1.0 (double), regime=critical\n"


def test_roots_under_reports_Omega():
    status, text = run_text(RunConfig("roots", Gamma=1.0, omega=1.0))
    assert status == 0 and "regime=under" in text and "Omega=" in text


def test_solve_writes_figure_data(tmp_path):
    path = tmp_path / "under.csv"
    status = main(
        ["solve", "--q", "2", "--Gamma", "1", "--omega", "1", "--A", "1", "--B", "1",
         "--t0", "0", "--t1", "10", "--steps", "1000", "--output", str(path)]
    )
    assert status == 0
    data = read_csv(str(path))
    assert data.t.size == 1000 and data.t[0] == 0.0 and data.t[-1] == 10.0
    assert data.x[0] == 1.0


def test_verify_critical_passes(capsys):
    assert main(["verify", "--q", "2", "--Gamma", "2", "--omega", "1"]) == 0
    out = capsys.readouterr().out
    values = dict(line.split("=", 1) for line in out.splitlines() if line.startswith(("series", "sampled")))
    assert float(values["series_residual_max"]) <= 1e-8
    assert float(values["sampled_residual_max"]) <= 1e-8
    assert "wronskian_closed(t=0.0)=-1.0" in out


def test_zeros_command():
    status, text = run_text(RunConfig("zeros", q=2.0, omega=1.0, count=4))
    assert text.split() == ["2.0", "4.0", "8.0", "16.0"]


def test_degenerate_command(tmp_path):
    out = tmp_path / "family.csv"
    status, text = run_text(RunConfig("degenerate", omega=1.0, n=3, q=2.0, t1=1.0, steps=11, output=str(out)))
    assert status == 0
    norms = [float(line.split("=")[-1]) for line in text.splitlines() if line.startswith("annihilation")]
    assert len(norms) == 3 and max(norms) <= 1e-12
    assert out.read_text().splitlines()[0] == "t,x0,x1,x2"


def test_riccati_command():
    status, text = run_text(RunConfig("riccati", Gamma=1.0, omega=1.0, t0=0.0, t1=1.0, steps=51))
    lines = text.splitlines()
    assert status == 0 and lines[0] == "t,y,residual"
    assert max(abs(float(l.split(",")[2])) for l in lines[1:]) <= 1e-8


def test_windows_command(tmp_path):
    status, text = run_text(RunConfig("windows", modulation="qperiodic", output=str(tmp_path)))
    assert status == 0
    grids = [read_csv(str(tmp_path / f"window_{s}.csv")) for s in (0.5, 0.05)]
    assert [g.t[-1] for g in grids] == [0.5, 0.05]
    assert all(g.t.size == 1000 for g in grids)


def test_figures_command(tmp_path):
    status, _ = run_text(RunConfig("figures", steps=50, output=str(tmp_path)))
    assert status == 0
    assert len(list(tmp_path.glob("*.csv"))) == 8
    assert len(list((tmp_path / "windows").glob("*.csv"))) == 2


def test_domain_error_exit_code(capsys):
    assert main(["solve", "--q", "0.5"]) == 2
    assert main(["solve", "--t0", "3", "--t1", "1"]) == 2
    assert "domain error" in capsys.readouterr().err


def test_tail_guard_exit_code(capsys):
    # basis evaluation falls back to the series near 0 only; force series use via verify at tiny order
    assert main(["verify", "--q", "1.1", "--Gamma", "1", "--omega", "1", "--order", "6"]) == 3
    assert "tail guard" in capsys.readouterr().err


def test_run_config_validation():
    with pytest.raises(DomainError):
        RunConfig("solve", steps=1)
    with pytest.raises(DomainError):
        RunConfig("nope")
    with pytest.raises(DomainError):
        RunConfig("solve", order=1)


def test_csv_round_trip_real_and_complex(tmp_path):
    t = np.linspace(0, 1, 17)
    for x in (np.sin(t) / 3, np.exp(1j * t) / 7):
        ts = TimeSeriesOutput(t=t, x=x)
        path = tmp_path / "x.csv"
        write_csv(path, ts)
        back = read_csv(str(path))
        np.testing.assert_array_equal(back.t, t)
        np.testing.assert_array_equal(back.x, x)
        assert to_csv(back) == path.read_text()
    assert to_csv(TimeSeriesOutput(t=t, x=np.exp(1j * t))).startswith("t,x_re,x_im\n")
