import copy
import re
import xml.etree.ElementTree as ET

import pytest

from tropchain import LatticePath, make_underline, phi, tableau_to_path
from tropchain.render import render, render_divisor, render_path

SVG = "{http://www.w3.org/2000/svg}"


def test_running_path_cusps(running_tableau):
    svg = render_path(tableau_to_path(running_tableau))
    polylines = re.findall(r'<polyline id="path-(\d)" points="([^"]*)"', svg)
    assert polylines == [
        ("1", "0,2 1,3 2,4 3,4 4,3 5,3 6,2"),
        ("2", "0,1 1,1 2,1 3,2 4,1 5,2 6,1"),
    ]


def test_output_is_wellformed_svg(running_tableau, running_graph):
    for svg in (render_path(tableau_to_path(running_tableau)), render_divisor(phi(running_tableau, running_graph))):
        root = ET.fromstring(svg.split("\n", 2)[2])
        assert root.tag == SVG + "svg" and root.get("version") == "1.1"


def test_deterministic(running_tableau, running_graph):
    path = tableau_to_path(running_tableau)
    assert render_path(path) == render_path(path)
    c = phi(running_tableau, running_graph)
    assert render_divisor(c) == render_divisor(c)


def test_zero_divisor(running_graph):
    svg = render_divisor(make_underline(running_graph, 0, [0] * 6))
    assert len(re.findall(r'id="loop-\d+"', svg)) == 6
    assert 'class="chip"' not in svg
    assert re.search(r'<text id="d0"[^>]*>0</text>', svg)


def test_chips_carry_positions(running_graph, running_tableau):
    svg = render_divisor(phi(running_tableau, running_graph))
    chips = re.findall(r'data-loop="(\d)" data-position="([^"]*)"', svg)
    assert chips == [("1", "3"), ("2", "4"), ("3", "2"), ("5", "2")]
    assert re.search(r'<text id="d0"[^>]*>2</text>', svg)


def test_render_does_not_mutate(running_tableau, running_graph):
    c = phi(running_tableau, running_graph)
    before = copy.deepcopy(c)
    render(c)
    assert c == before


def test_unsupported_pairing(running_tableau, running_graph):
    with pytest.raises(ValueError):
        render(tableau_to_path(running_tableau), "chip-config")
    with pytest.raises(ValueError):
        render(phi(running_tableau, running_graph), "lattice-path")
    with pytest.raises(ValueError):
        render(running_tableau)


def test_r0_path_has_no_polylines():
    assert "<polyline" not in render_path(LatticePath(0, ((),) * 4))
