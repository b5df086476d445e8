import re

from hypothesis import given

from conftest import tableaux
from sl3webs.mdiagram import from_tableau
from sl3webs.render import render_svg, tutte_layout
from sl3webs.tableau import StandardTableau
from sl3webs.webmap import Web, parse_web, format_web, web_of


def T(*rows):
    return StandardTableau(tuple(tuple(r) for r in rows))


def depth_labels(svg: str) -> list[int]:
    return sorted(int(x) for x in re.findall(r'class="depth"[^>]*>(\d+)<', svg))


def test_single_m_diagram():
    svg = render_svg(from_tableau(T([1], [2], [3])))
    assert svg.count('class="arc"') == 2
    assert svg.count('class="stem"') == 1


def test_one_connector():
    svg = render_svg(web_of(T([1, 2], [3, 4], [5, 6])))
    assert svg.count('class="connector"') == 1


def test_arrow_per_edge():
    w = web_of(T([1, 2], [3, 4], [5, 6]))
    assert render_svg(w).count('class="arrow"') == len(w.edges)


def test_points_on_the_line():
    svg = render_svg(from_tableau(T([1], [2])))
    assert 'M 40.00 0.00 A 20.00 20.00 0 0 1 80.00 0.00' in svg


def test_depth_labels_web_and_mdiagram():
    t = T([1, 2], [3, 5], [4, 6])
    assert depth_labels(render_svg(web_of(t), depths=True)) == [0, 1, 1, 2, 2]
    assert depth_labels(render_svg(from_tableau(t), depths=True)) == [0, 1, 1, 2, 2]
    assert depth_labels(render_svg(web_of(t))) == []


def test_without_layout_falls_back_to_tutte():
    w = parse_web(format_web(web_of(T([1, 2], [3, 4], [5, 6]))))
    assert w.layout is None
    pos = tutte_layout(w)
    assert all(y > 0 for x, y in pos[6:])
    svg = render_svg(w)
    assert svg.count('class="edge"') == len(w.edges)


def test_empty():
    assert "<svg" in render_svg(Web(0, (), (), ()))


@given(tableaux(max_size=10))
def test_byte_stable(t):
    w = web_of(t)
    a = render_svg(w, depths=True)
    assert a == render_svg(w, depths=True)
    assert a == render_svg(web_of(StandardTableau(t.rows)), depths=True)
    assert render_svg(from_tableau(t), depths=True) == render_svg(from_tableau(t), depths=True)
