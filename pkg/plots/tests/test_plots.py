"""Plot package: renders real CLI output through the CSV contract only."""

import pathlib
import subprocess
import sys

import pytest

from xxz_plots import SchemaError, FigureSpec, load_rows
from xxz_plots.cli import main
from xxz_plots.render import render_convergence_table, render_overlap_figure


@pytest.fixture(scope="module")
def sweep_csv(tmp_path_factory):
    """Small odd-chain sweep crossing the vanishing threshold."""
    out = tmp_path_factory.mktemp("data") / "sweep.csv"
    res = subprocess.run(
        [sys.executable, "-m", "xxz_overlap.cli", "sweep", "--L", "9",
         "--zeta", "1.8", "--h-plus=-1", "--h1-minus", "0",
         "--grid=-1.5:2.5:0.5", "--ed", "--out", str(out)])
    assert res.returncode == 0
    return out


@pytest.fixture(scope="module")
def converge_csv(tmp_path_factory):
    out = tmp_path_factory.mktemp("data") / "converge.csv"
    res = subprocess.run(
        [sys.executable, "-m", "xxz_overlap.cli", "converge", "--L", "8",
         "--zeta", "1.5", "--h-plus", "2", "--h1-minus=-1", "--h2-minus", "0",
         "--lengths", "6,8,10", "--ed", "--out", str(out)])
    assert res.returncode == 0
    return out


def test_load_rows_checks_version(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("L,zeta\n1,2\n")
    with pytest.raises(SchemaError):
        load_rows(str(bad))


def test_load_rows_column_diff(sweep_csv):
    with pytest.raises(SchemaError) as err:
        load_rows(str(sweep_csv), required=("no_such_column",))
    assert "no_such_column" in str(err.value)


def test_overlap_figure_renders_with_plateau(sweep_csv, tmp_path):
    out = tmp_path / "fig.png"
    spec = FigureSpec(csv_path=str(sweep_csv), out_path=str(out))
    render_overlap_figure(spec)
    assert out.exists() and out.stat().st_size > 5000
    # the vanishing plateau: closed form exactly zero past the threshold
    rows = load_rows(str(sweep_csv))
    plateau = [r for r in rows if not r["error"] and r["h2_minus"] > 1.0]
    assert plateau and all(r["s_thermo"] == 0.0 for r in plateau)
    below = [r for r in rows if not r["error"] and r["h2_minus"] < 1.0]
    assert below and all(r["s_thermo"] > 0.9 for r in below)


def test_overlap_figure_empty_series_is_error(sweep_csv, tmp_path):
    out = tmp_path / "fig.png"
    spec = FigureSpec(csv_path=str(sweep_csv), out_path=str(out),
                      series=("s_product",))  # not requested in the sweep
    with pytest.raises(SchemaError):
        render_overlap_figure(spec)
    assert not out.exists()


def test_overlap_figure_rerender_identical(sweep_csv, tmp_path):
    a, b = tmp_path / "a.png", tmp_path / "b.png"
    render_overlap_figure(FigureSpec(csv_path=str(sweep_csv), out_path=str(a)))
    render_overlap_figure(FigureSpec(csv_path=str(sweep_csv), out_path=str(b)))
    assert a.read_bytes() == b.read_bytes()


def test_rendering_is_read_only(sweep_csv, tmp_path):
    before = sweep_csv.read_bytes()
    render_overlap_figure(FigureSpec(csv_path=str(sweep_csv),
                                     out_path=str(tmp_path / "f.png")))
    assert sweep_csv.read_bytes() == before


def test_convergence_table_renders(converge_csv, tmp_path):
    out = tmp_path / "conv.png"
    spec = FigureSpec(csv_path=str(converge_csv), out_path=str(out))
    path, table = render_convergence_table(spec)
    assert pathlib.Path(path).exists()
    assert (tmp_path / "conv.txt").exists()
    lines = table.strip().split("\n")
    assert len(lines) == 4  # header + one row per length
    assert "s_thermo" in lines[0]


def test_convergence_single_row_skips_plot(tmp_path):
    out_csv = tmp_path / "one.csv"
    res = subprocess.run(
        [sys.executable, "-m", "xxz_overlap.cli", "converge", "--L", "8",
         "--zeta", "1.5", "--h-plus", "2", "--h1-minus=-1", "--h2-minus", "0",
         "--lengths", "8", "--out", str(out_csv)])
    assert res.returncode == 0
    out = tmp_path / "one.png"
    path, table = render_convergence_table(
        FigureSpec(csv_path=str(out_csv), out_path=str(out)))
    assert path.endswith(".txt") and not out.exists()


def test_cli_overlap_and_converge(sweep_csv, converge_csv, tmp_path):
    fig = tmp_path / "cli_fig.png"
    assert main(["overlap", "--csv", str(sweep_csv), "--out", str(fig)]) == 0
    assert fig.exists()
    conv = tmp_path / "cli_conv.png"
    assert main(["converge", "--csv", str(converge_csv), "--out", str(conv)]) == 0
    assert conv.exists()


def test_cli_schema_error_exit(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("not,a,contract\n1,2,3\n")
    assert main(["overlap", "--csv", str(bad), "--out",
                 str(tmp_path / "x.png")]) == 2
