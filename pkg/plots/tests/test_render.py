"""Tests for the CSV renderers; the producing package is exercised only
through its command line."""

import shutil
import subprocess

import pytest

from lsq_plots.cli import main
from lsq_plots.render import build_heatmap_figure

HEATMAP_HEADER = ("alpha,beta,m,n,trials,mean_kappa,"
                  "mean_log10_kappa,clamped_fraction\n")
CONVERGENCE_HEADER = "alpha,beta,tau,theta,m,n,median_sup_error\n"

SMALL_MAP = HEATMAP_HEADER + "".join(
    f"0,0,{m},{n},2,{1.0 + 0.3 * m * n},{0.1 * m},0\n"
    for m in range(1, 6) for n in range(m + 1, 8)
)


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def is_png(path) -> bool:
    with open(path, "rb") as fh:
        return fh.read(8) == b"\x89PNG\r\n\x1a\n"


class TestHeatmap:
    def test_renders_nonempty_png(self, tmp_path):
        csv = write(tmp_path, "map.csv", SMALL_MAP)
        out = tmp_path / "map.png"
        assert main(["heatmap", csv, str(out), "--dash-exp", "2"]) == 0
        assert is_png(out) and out.stat().st_size > 2000

    def test_dashed_curve_present(self, tmp_path):
        import csv as csvmod
        import io

        rows = list(csvmod.DictReader(io.StringIO(SMALL_MAP)))
        fig = build_heatmap_figure(rows, 2.0)
        labels = [line.get_label() for ax in fig.axes for line in ax.get_lines()]
        assert "n = m^2" in labels

    def test_schema_violation_exits_2(self, tmp_path, capsys):
        csv = write(tmp_path, "bad.csv", "m,n\n1,2\n")
        out = tmp_path / "bad.png"
        assert main(["heatmap", csv, str(out), "--dash-exp", "2"]) == 2
        err = capsys.readouterr().err
        assert err.startswith("error: schema: missing columns:")
        assert "mean_kappa" in err

    def test_empty_csv_blank_axes(self, tmp_path):
        csv = write(tmp_path, "empty.csv", HEATMAP_HEADER)
        out = tmp_path / "empty.png"
        assert main(["heatmap", csv, str(out)]) == 0
        assert is_png(out)

    def test_deterministic_bytes(self, tmp_path):
        csv = write(tmp_path, "map.csv", SMALL_MAP)
        a, b = tmp_path / "a.png", tmp_path / "b.png"
        assert main(["heatmap", csv, str(a), "--dash-exp", "3"]) == 0
        assert main(["heatmap", csv, str(b), "--dash-exp", "3"]) == 0
        assert a.read_bytes() == b.read_bytes()


class TestConvergence:
    def test_renders_decay(self, tmp_path):
        text = CONVERGENCE_HEADER + "".join(
            f"0,0,0.5,1,{m},{m * m},{10 ** (-0.1 * m)}\n" for m in range(5, 20))
        csv = write(tmp_path, "conv.csv", text)
        out = tmp_path / "conv.png"
        assert main(["convergence", csv, str(out)]) == 0
        assert is_png(out)

    def test_single_row_warns(self, tmp_path, capsys):
        csv = write(tmp_path, "one.csv", CONVERGENCE_HEADER + "0,0,0.5,1,5,25,0.5\n")
        out = tmp_path / "one.png"
        assert main(["convergence", csv, str(out)]) == 0
        assert "single data point" in capsys.readouterr().err
        assert is_png(out)

    def test_schema_violation(self, tmp_path):
        csv = write(tmp_path, "bad.csv", "m,err\n1,0.5\n")
        assert main(["convergence", csv, str(tmp_path / "x.png")]) == 2


@pytest.mark.skipif(shutil.which("lsq-stability") is None,
                    reason="producer CLI not installed")
class TestEndToEnd:
    def test_map_from_producer_cli(self, tmp_path):
        csv_path = tmp_path / "map.csv"
        subprocess.run(
            ["lsq-stability", "stability-map", "--m-max", "6", "--n-max", "12",
             "--trials", "2", "--seed", "1", "--out", str(csv_path)],
            check=True,
        )
        out = tmp_path / "map.png"
        assert main(["heatmap", str(csv_path), str(out), "--dash-exp", "2"]) == 0
        assert is_png(out) and out.stat().st_size > 2000

    def test_convergence_from_producer_cli(self, tmp_path):
        csv_path = tmp_path / "conv.csv"
        subprocess.run(
            ["lsq-stability", "convergence", "--m-min", "3", "--m-max", "8",
             "--trials", "3", "--out", str(csv_path)],
            check=True,
        )
        out = tmp_path / "conv.png"
        assert main(["convergence", str(csv_path), str(out)]) == 0
        assert is_png(out)
