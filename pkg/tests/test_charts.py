"""SVG line charts: deterministic text output with no drawing dependency."""

import math

import pytest

from lexsim import DomainError, line_chart


def simple_series(n=2):
    xs = [0.0, 1.0, 2.0, 3.0]
    return [(f"series {i}", xs, [float(i + j) for j in range(4)]) for i in range(n)]


class TestOutputShape:
    def test_byte_identical_across_calls(self):
        a = line_chart(simple_series(), title="demo", x_label="x", y_label="y")
        b = line_chart(simple_series(), title="demo", x_label="x", y_label="y")
        assert a == b

    def test_is_a_single_svg_document(self):
        svg = line_chart(simple_series())
        assert svg.startswith("<svg ")
        assert svg.rstrip().endswith("</svg>")
        assert svg.endswith("\n")
        assert svg.count("<svg ") == 1

    def test_one_polyline_per_series(self):
        assert line_chart(simple_series(1)).count("<polyline") == 1
        assert line_chart(simple_series(4)).count("<polyline") == 4

    def test_legend_only_with_multiple_series(self):
        single = line_chart(simple_series(1))
        multi = line_chart(simple_series(3))
        assert "series 0" not in single
        for label in ("series 0", "series 1", "series 2"):
            assert label in multi

    def test_title_and_axis_labels_rendered(self):
        svg = line_chart(simple_series(), title="flows", x_label="period", y_label="count")
        for text in ("flows", "period", "count"):
            assert text in svg

    def test_markup_in_labels_is_escaped(self):
        # two series so the legend renders the raw labels
        svg = line_chart(
            [("a & b <c>", [0.0, 1.0], [0.0, 1.0]), ("other", [0.0, 1.0], [1.0, 0.0])],
            title="x & y",
        )
        assert "a &amp; b &lt;c&gt;" in svg
        assert "x &amp; y" in svg
        assert "<c>" not in svg

    def test_no_external_references(self):
        # the xmlns declaration is the only URL allowed in the document
        svg = line_chart(simple_series())
        assert svg.count("http") == 1
        assert 'xmlns="http://www.w3.org/2000/svg"' in svg
        assert "href" not in svg and "<image" not in svg


class TestDegenerateData:
    def test_flat_series_still_renders(self):
        svg = line_chart([("flat", [0.0, 1.0, 2.0], [5.0, 5.0, 5.0])])
        assert "<polyline" in svg
        assert "NaN" not in svg

    def test_single_point_series(self):
        svg = line_chart([("dot", [1.0], [2.0])])
        assert "<polyline" in svg

    def test_all_zero_series(self):
        svg = line_chart([("zero", [0.0, 1.0], [0.0, 0.0])])
        assert "NaN" not in svg and "Infinity" not in svg


class TestValidation:
    def test_rejects_empty_series_list(self):
        with pytest.raises(DomainError):
            line_chart([])

    def test_rejects_empty_series(self):
        with pytest.raises(DomainError):
            line_chart([("empty", [], [])])

    def test_rejects_length_mismatch(self):
        with pytest.raises(DomainError):
            line_chart([("bad", [0.0, 1.0], [0.0])])

    def test_rejects_non_finite_values(self):
        with pytest.raises(DomainError):
            line_chart([("nan", [0.0, 1.0], [0.0, math.nan])])
        with pytest.raises(DomainError):
            line_chart([("inf", [0.0, math.inf], [0.0, 1.0])])

    def test_rejects_tiny_canvas(self):
        with pytest.raises(DomainError):
            line_chart(simple_series(), width=10, height=10)
