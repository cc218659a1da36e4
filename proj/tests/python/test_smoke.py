import json
import os
import subprocess
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

import sgasket


def test_worked_examples():
    d = sgasket.distance("(012)", "(1)")
    assert d.distance == Fraction(5, 7)
    assert d.sum_edge == Fraction(1, 2) + Fraction(6, 7)
    assert d.split_index == 1
    assert d.route == "P"

    tie = sgasket.distance("000(2)", "0122(0)")
    assert tie.distance == Fraction(7, 16)
    assert tie.route == "TIE"
    assert sgasket.distance("002(0)", "0122(0)").distance == Fraction(7, 16)


def test_code_space():
    c = sgasket.Code("012(02)")
    assert str(c) == "01(20)"
    assert c.preperiod == [0, 1, 2]
    assert sgasket.canonicalize(c) == sgasket.Code("01(20)")
    assert sgasket.symbol_at("(012)", 7) == 0
    assert sgasket.is_junction("0(1)")
    assert str(sgasket.twin("01(2)")) == "02(1)"
    assert sgasket.same_point("000(2)", "002(0)")
    with pytest.raises(sgasket.MalformedCode, match="offset 3"):
        sgasket.parse_code("01(3)")
    with pytest.raises(sgasket.NotAJunction):
        sgasket.twin("(0)")
    with pytest.raises(ValueError):
        sgasket.split_index("(0)", "0(0)")


def test_series_and_coordinates():
    assert sgasket.periodic_bit_sum([], [1, 0], 1) == Fraction(2, 3)
    assert sgasket.to_barycentric("(01)") == (Fraction(2, 3), Fraction(1, 3), Fraction(0))
    x, y = sgasket.to_cartesian((0, 0, 1))
    assert x == pytest.approx(0.5)
    assert y == pytest.approx(3 ** 0.5 / 2)
    assert sgasket.twin_coordinates_agree("01(2)")


def test_geodesic_and_oracle():
    g = sgasket.geodesic("1(0)", "1(2)", 5)
    assert g.length == Fraction(1, 2)
    assert [str(w) for w in g.waypoints] == ["1(0)", "1(2)"]
    assert json.loads(g.to_json())["route"] == "P"
    with pytest.raises(sgasket.SamePoint):
        sgasket.geodesic("0(1)", "1(0)", 4)

    graph = sgasket.LevelGraph(3)
    assert graph.vertex_count == 42
    assert graph.connected()
    approx = sgasket.oracle_distance("(012)", "(1)", 10)
    assert abs(approx - Fraction(5, 7)) <= sgasket.oracle_tolerance(10)
    assert sgasket.graph_distance(graph, (1, 0, 0), (0, 1, 0)) == 1
    with pytest.raises(sgasket.LevelTooLarge):
        sgasket.LevelGraph(15)


def test_check_and_svg():
    report = sgasket.run_check(50, 7, 5)
    assert report["passed"] == report["samples"] == 50
    svg = sgasket.render_svg("(012)", "(1)", 8)
    root = ET.fromstring(svg)
    assert root.attrib["viewBox"] == "0 0 1 0.8660254"


@pytest.mark.skipif("SGASKET_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_roundtrip():
    out = subprocess.run([os.environ["SGASKET_CLI"], "dist", "(012)", "(1)", "--json"],
                         check=True, capture_output=True, text=True).stdout
    envelope = json.loads(out)
    assert envelope["result"]["distance"] == {"num": 5, "den": 7}
