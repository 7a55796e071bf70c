"""Tests for the curve-CSV reader and figure renderer."""

from pathlib import Path

import pytest

from plotkit import (
    CurveFigureSpec,
    CurveFormatError,
    main,
    read_curve_csv,
    render,
)

DATA = Path(__file__).parent / "data"
# fixtures produced by the sweep tool:
#   sphquad curve --alpha 65/32,4,6,65/32 --a-min 1/200 --a-max 199/200
#       --steps 200 --out deg4_sweep.csv
#   sphquad curve --alpha 5/4,4,6,5/4   (same grid) --out gap_sweep.csv
DEG4 = DATA / "deg4_sweep.csv"
GAP = DATA / "gap_sweep.csv"


def real_total(path: Path) -> int:
    rows = path.read_text().splitlines()[1:]
    return sum(max(int(r.split(",")[2]), 0) for r in rows)


class TestReader:
    def test_points_match_real_counts(self):
        for path in (DEG4, GAP):
            data = read_curve_csv(path)
            assert data.rows == 200
            assert data.skipped_rows == 0 and data.failed_samples == 0
            assert len(data.points) == real_total(path)

    def test_gap_interval_present(self):
        # the second sweep has a genuine stretch with no real values
        rows = GAP.read_text().splitlines()[1:]
        counts = [int(r.split(",")[2]) for r in rows]
        assert 0 in counts
        first, last = counts.index(0), len(counts) - counts[::-1].index(0)
        assert all(c == 0 for c in counts[first:last])  # one contiguous gap

    def test_failed_sample_rows_counted(self, tmp_path):
        p = tmp_path / "c.csv"
        p.write_text(
            "a,degree,real_count,lambda_1,lambda_2\n"
            "0.25,2,1,-1.5,\n"
            "0.5,2,-1,,\n"
        )
        data = read_curve_csv(p)
        assert data.failed_samples == 1
        assert data.points == ((0.25, -1.5),)

    def test_malformed_rows_skipped_with_warning(self, tmp_path):
        p = tmp_path / "c.csv"
        p.write_text(
            "a,degree,real_count,lambda_1,lambda_2\n"
            "0.25,2,2,-1.5,-0.5\n"
            "0.5,2,2,-1.5\n"          # wrong cell count
            "0.75,2,2,-0.5,-1.5\n"    # not ascending
            "0.9,2,1,,\n"             # count says 1, no cells filled
            "0.95,2,2,-1.5,oops\n"    # unparseable value
        )
        with pytest.warns(UserWarning):
            data = read_curve_csv(p)
        assert data.rows == 5 and data.skipped_rows == 4
        assert len(data.points) == 2

    def test_bad_header_raises(self, tmp_path):
        p = tmp_path / "c.csv"
        p.write_text("a,real_count,lambda_1\n0.5,1,2.0\n")
        with pytest.raises(CurveFormatError):
            read_curve_csv(p)

    def test_missing_and_empty_files_raise(self, tmp_path):
        with pytest.raises(CurveFormatError):
            read_curve_csv(tmp_path / "absent.csv")
        p = tmp_path / "hollow.csv"
        p.write_text("")
        with pytest.raises(CurveFormatError):
            read_curve_csv(p)

    def test_non_ascii_file_raises_cleanly(self, tmp_path):
        p = tmp_path / "binary.csv"
        p.write_bytes("a,degree,real_count\n0.5,\xe2\x80\x94,1\n".encode("latin-1"))
        with pytest.raises(CurveFormatError):
            read_curve_csv(p)


class TestRender:
    @pytest.mark.parametrize("fixture", [DEG4, GAP], ids=["deg4", "gap"])
    def test_point_count_equals_csv_total(self, tmp_path, fixture):
        out = tmp_path / (fixture.stem + ".png")
        report = render(CurveFigureSpec(csv_path=str(fixture),
                                        out_path=str(out)))
        assert out.exists() and out.stat().st_size > 0
        # the figure's scatter artist holds exactly one point per real value
        assert report.points_plotted == real_total(fixture)
        assert report.skipped_rows == 0

    def test_input_left_untouched(self, tmp_path):
        out = tmp_path / "fig.png"
        before = DEG4.read_bytes()
        render(CurveFigureSpec(csv_path=str(DEG4), out_path=str(out)))
        assert DEG4.read_bytes() == before

    def test_empty_sweep_gives_empty_axes_with_warning(self, tmp_path):
        p = tmp_path / "empty.csv"
        p.write_text("a,degree,real_count\n")
        out = tmp_path / "empty.png"
        with pytest.warns(UserWarning, match="no plottable points"):
            report = render(CurveFigureSpec(csv_path=str(p),
                                            out_path=str(out)))
        assert out.exists() and report.points_plotted == 0

    def test_svg_output(self, tmp_path):
        out = tmp_path / "fig.svg"
        render(CurveFigureSpec(csv_path=str(GAP), out_path=str(out),
                               title="gap sweep"))
        assert out.read_text().lstrip().startswith("<?xml")


class TestMain:
    def test_success_line(self, tmp_path, capsys):
        out = tmp_path / "fig.png"
        code = main(["--csv", str(DEG4), "--out", str(out),
                     "--title", "degree-4 sweep"])
        assert code == 0
        printed = capsys.readouterr().out
        assert f"{real_total(DEG4)} points" in printed

    def test_malformed_file_exits_nonzero(self, tmp_path, capsys):
        bad = tmp_path / "bad.csv"
        bad.write_text("not,a,sweep\n1,2,3\n")
        code = main(["--csv", str(bad), "--out", str(tmp_path / "x.png")])
        assert code == 1
        assert "error:" in capsys.readouterr().err
