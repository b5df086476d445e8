"""Deterministic SVG drawings of m-diagrams and webs.

Boundary point ``i`` sits at ``x = 40 i`` on the line ``y = 0`` and arcs rise
above it (negative SVG ``y``).  All coordinates are printed with two
decimals so the output is byte-stable.
"""
from __future__ import annotations

import math

import numpy as np

from .mdiagram import Arc, MDiagram, arrangement, crossings
from .webmap import Web

UNIT = 40.0
LABEL_HEIGHT = 0.15
STEM_HEIGHT = 0.3


def _f(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def _pt(p) -> tuple[float, float]:
    return UNIT * p[0], -UNIT * p[1]


class _Svg:
    def __init__(self, n_points: int, top: float):
        self.n = n_points
        self.top = top
        self.body: list[str] = []

    def line(self, a, b, cls: str):
        (x1, y1), (x2, y2) = _pt(a), _pt(b)
        self.body.append(f'<line class="{cls}" x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}"/>')

    def arc(self, a, b, radius: float, cls: str = "arc"):
        """Upper circular arc from the left point to the right point."""
        if a[0] > b[0]:
            a, b = b, a
        (x1, y1), (x2, y2) = _pt(a), _pt(b)
        r = _f(UNIT * radius)
        self.body.append(f'<path class="{cls}" d="M {_f(x1)} {_f(y1)} A {r} {r} 0 0 1 {_f(x2)} {_f(y2)}"/>')

    def arrow(self, at, direction):
        x, y = _pt(at)
        dx, dy = direction[0], -direction[1]
        norm = math.hypot(dx, dy) or 1.0
        dx, dy = dx / norm, dy / norm
        pts = [(x + 4 * dx, y + 4 * dy), (x - 4 * dx - 3 * dy, y - 4 * dy + 3 * dx), (x - 4 * dx + 3 * dy, y - 4 * dy - 3 * dx)]
        self.body.append('<polygon class="arrow" points="' + " ".join(f"{_f(px)},{_f(py)}" for px, py in pts) + '"/>')

    def text(self, at, s: str, cls: str):
        x, y = _pt(at)
        self.body.append(f'<text class="{cls}" x="{_f(x)}" y="{_f(y)}" text-anchor="middle">{s}</text>')

    def document(self) -> str:
        width = UNIT * (self.n + 1)
        height = UNIT * (self.top + 0.5) + 30
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(width)}" height="{_f(height)}" '
            f'viewBox="0.00 {_f(-UNIT * (self.top + 0.5))} {_f(width)} {_f(height)}">\n'
            "<style>line,path{fill:none;stroke:black;stroke-width:1.5}"
            ".wall{stroke:#888}.connector{stroke-width:2.5}.arrow{fill:black}"
            ".depth{font:10px sans-serif;fill:#a00}.label{font:11px sans-serif}</style>\n"
        )
        return head + "\n".join(self.body) + "\n</svg>\n"


def _baseline(svg: _Svg):
    n = svg.n
    svg.line((0.5, 0), (n + 0.5, 0), "wall")
    for p in range(1, n + 1):
        svg.text((p, -0.45), str(p), "label")


def _anchor(witness: int | None, corners) -> tuple[float, float]:
    if witness is not None:
        return witness + 0.5, LABEL_HEIGHT
    xs = [c[0] for c in corners]
    ys = [c[1] for c in corners]
    return sum(xs) / len(xs), sum(ys) / len(ys)


def render_mdiagram(d: MDiagram, depths: bool = False) -> str:
    top = max((float(a.radius) for a in d.arcs), default=0.0)
    svg = _Svg(d.n_points, max(top, STEM_HEIGHT))
    _baseline(svg)
    for a in d.arcs:
        svg.arc((a.lo, 0), (a.hi, 0), float(a.radius))
    for _, j, _ in d.ms:
        svg.line((j, 0), (j, STEM_HEIGHT), "stem")
    if depths and d.n_points:
        arr = arrangement(d)
        points = [(p, 0.0) for p in range(1, d.n_points + 1)]
        for c in crossings(d):
            points.append((float(c.x), math.sqrt(float(c.y_squared))))
        for f in arr.faces:
            if f.is_exterior:
                continue
            corners = [points[arr.map.dart_vertex[dd]] for dd in f.darts]
            svg.text(_anchor(min(f.witnesses, default=None), corners), str(f.depth), "depth")
    return svg.document()


def tutte_layout(w: Web) -> list[tuple[float, float]]:
    """Barycentric placement with boundary vertices pinned on the line and an apex above.

    Vertices on the outer face are tied to the apex; every internal vertex
    also feels a weak pull towards it so nothing collapses onto the line.
    """
    n_v = len(w.vertices)
    n = w.n_boundary
    apex = ((n + 1) / 2, (n + 1) / 2)
    fixed = {w.boundary_vertex[p]: (float(p), 0.0) for p in range(1, n + 1)}
    free = [v for v in range(n_v) if v not in fixed]
    if not free:
        return [fixed[v] for v in range(n_v)]
    index = {v: k for k, v in enumerate(free)}
    table = w.face_table
    on_outer = {w.map.dart_vertex[d] for d in table.faces[table.outer].darts} if n else set()
    lap = np.zeros((len(free), len(free)))
    rhs = np.zeros((len(free), 2))
    for v in free:
        k = index[v]
        pull = 1.0 if v in on_outer else 0.1
        lap[k, k] += pull
        rhs[k] += pull * np.array(apex)
        for e in w.rotation[v]:
            tail, head = w.edges[e]
            u = head if tail == v else tail
            lap[k, k] += 1.0
            if u in index:
                lap[k, index[u]] -= 1.0
            else:
                rhs[k] += np.array(fixed[u])
    sol = np.linalg.solve(lap, rhs)
    return [fixed[v] if v in fixed else (float(sol[index[v], 0]), float(sol[index[v], 1])) for v in range(n_v)]


def render_web(w: Web, depths: bool = False) -> str:
    layout = w.layout
    pos = list(layout.positions) if layout else tutte_layout(w)
    top = max((p[1] for p in pos), default=0.0)
    if layout:
        top = max([top] + [float(a.radius) for a in layout.edge_arcs if a is not None])
    svg = _Svg(w.n_boundary, max(top, STEM_HEIGHT))
    _baseline(svg)
    for e, (tail, head) in enumerate(w.edges):
        a, b = pos[tail], pos[head]
        kind = layout.edge_kinds[e] if layout else "edge"
        arc: Arc | None = layout.edge_arcs[e] if layout else None
        if arc is not None:
            svg.arc(a, b, float(arc.radius))
            mid, direction = _arc_midpoint(arc, a, b)
        else:
            svg.line(a, b, kind)
            mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
            direction = (b[0] - a[0], b[1] - a[1])
        svg.arrow(mid, direction)
    if depths:
        table = w.face_table
        wall_label = {w.wall_dart(p): p for p in range(1, w.n_boundary + 1)}
        for f in table.faces:
            if f.is_exterior:
                continue
            labels = [wall_label[d] for d in f.darts if d in wall_label]
            corners = [pos[w.map.dart_vertex[d]] for d in f.darts] or [(0.5, LABEL_HEIGHT)]
            svg.text(_anchor(min(labels, default=None), corners), str(f.depth), "depth")
    return svg.document()


def _arc_midpoint(arc: Arc, a, b):
    """Point on the arc's circle halfway (by angle) between two vertices, and the tail-to-head tangent there."""
    c, r = float(arc.center), float(arc.radius)
    ta = math.atan2(a[1], a[0] - c)
    tb = math.atan2(b[1], b[0] - c)
    t = (ta + tb) / 2
    mid = (c + r * math.cos(t), r * math.sin(t))
    # counterclockwise tangent; flip when the edge runs clockwise (left to right)
    tangent = (-math.sin(t), math.cos(t))
    if tb < ta:
        tangent = (-tangent[0], -tangent[1])
    return mid, tangent


def render_svg(obj: MDiagram | Web, depths: bool = False) -> str:
    if isinstance(obj, MDiagram):
        return render_mdiagram(obj, depths)
    if isinstance(obj, Web):
        return render_web(obj, depths)
    raise TypeError(f"cannot render {type(obj).__name__}")
