import json

import pytest

from acutetour import io
from acutetour.errors import InvalidInputError
from acutetour.generate import DISTRIBUTIONS, generate_array, generate_points
from acutetour.svg import render_svg
from acutetour.tour import construct_acute_tour


def test_scaling_rounds_half_even():
    assert io.scale_decimal("1.5", 0) == 2
    assert io.scale_decimal("2.5", 0) == 2
    assert io.scale_decimal("-0.0000005", 6) == 0
    assert io.scale_decimal("0.0000015", 6) == 2
    assert io.scale_decimal("1e3", 2) == 100000
    with pytest.raises(InvalidInputError):
        io.scale_decimal("nan", 6)
    with pytest.raises(InvalidInputError):
        io.scale_decimal("x", 6)


def test_parse_points_comments_and_errors():
    text = ["# header", "1.5, -2", "", "3,4  # trailing", "  0.000001,0"]
    assert io.parse_points(text, 6) == [(1500000, -2000000), (3000000, 4000000), (1, 0)]
    with pytest.raises(InvalidInputError, match="line 1"):
        io.parse_points(["1,2,3"])
    with pytest.raises(InvalidInputError):
        io.parse_points(["1,2"], k=10)


def test_format_scaled_round_trip():
    for v in (0, 1, -1, 999999, -1000001, 123456789):
        assert io.scale_decimal(io.format_scaled(v, 6), 6) == v
    assert io.format_scaled(-5, 3) == "-0.005"


def test_read_order_forms(tmp_path):
    (tmp_path / "a.json").write_text('{"order": [2, 0, 1]}')
    (tmp_path / "b.txt").write_text("2 0\n1\n")
    (tmp_path / "c.json").write_text('{"tour": []}')
    assert io.read_order(tmp_path / "a.json") == [2, 0, 1]
    assert io.read_order(tmp_path / "b.txt") == [2, 0, 1]
    with pytest.raises(InvalidInputError):
        io.read_order(tmp_path / "c.json")


def test_result_document_is_deterministic(tmp_path):
    pts = generate_points(40, "uniform", 3)
    docs = []
    for name in ("x.json", "y.json"):
        io.write_document(tmp_path / name, io.result_document(construct_acute_tour(pts), 6))
        docs.append((tmp_path / name).read_bytes())
    assert docs[0] == docs[1]
    doc = json.loads(docs[0])
    assert doc["acute"] is True and doc["scale_k"] == 6 and doc["case_taken"] == "case1"
    assert sorted(doc["order"]) == list(range(40))


@pytest.mark.parametrize("dist", DISTRIBUTIONS)
def test_generators_are_seeded_and_distinct(dist):
    a = generate_array(500, dist, 11)
    b = generate_array(500, dist, 11)
    assert (a == b).all()
    assert len({tuple(p) for p in a.tolist()}) == 500
    assert not (generate_array(500, dist, 12) == a).all()


def test_collinear_generator_is_collinear():
    pts = generate_points(50, "collinear", 4)
    (x0, y0), (x1, y1) = pts[0], pts[1]
    assert all((x1 - x0) * (y - y0) == (y1 - y0) * (x - x0) for x, y in pts)


def test_generator_errors():
    with pytest.raises(InvalidInputError):
        generate_array(0)
    with pytest.raises(InvalidInputError):
        generate_array(10, "spiral")


def test_svg_contents():
    pts = generate_points(24, "circle", 1)
    tour = construct_acute_tour(pts)
    svg = render_svg(pts, tour.order, tour.partition.frame, obtuse=[3])
    assert svg.startswith('<?xml version="1.0"')
    assert 'width="1000" height="1000"' in svg and 'version="1.1"' in svg
    assert svg.count("stroke-dasharray") == 2
    assert svg.count("<polygon") == 1
    assert svg.count('stroke="red"') == 1
    assert svg.count("<circle") == 25


def test_svg_viewport_keeps_margin():
    import re

    pts = [(-300, 10), (700, 10), (200, 510), (200, -90)]
    svg = render_svg(pts)
    centers = [(float(x), float(y)) for x, y in re.findall(r'cx="([\d.]+)" cy="([\d.]+)"', svg)]
    xs, ys = zip(*centers)
    assert min(xs) == pytest.approx(50) and max(xs) == pytest.approx(950)
    # y grows downward on the canvas.
    assert centers[2][1] < centers[3][1]
    assert min(ys) >= 50 and max(ys) <= 950
