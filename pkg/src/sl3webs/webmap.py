"""Directed boundary-labelled webs on a disk, and the resolution of m-diagrams into them.

A web is stored as a rotation system.  The disk boundary is implicit: wall
edges join boundary label ``i`` to ``i + 1`` and label ``N`` back to ``1``.
Each boundary vertex lists its edges counterclockwise from the wall towards
``i + 1`` to the wall towards ``i - 1``, so rotating the disk only relabels
boundary vertices.  The face on the inner side of the wall from ``N`` to ``1``
is the outer face (depth 0); the face outside the wall cycle is the disk
exterior and never takes part in depth computations.
"""
from __future__ import annotations

import enum
import math
import re
from collections import deque
from dataclasses import dataclass, field, replace
from functools import cached_property, lru_cache

from ._maps import PlanarMap
from .errors import DomainViolation, NotAllSources, NotIrreducible, NotThreeRow, ParseError, PositionOutOfRange
from .mdiagram import Arc, MDiagram, arrangement, crossings, from_tableau
from .tableau import StandardTableau


class Orientation(enum.Enum):
    SOURCE = "source"
    SINK = "sink"


@dataclass(frozen=True)
class Vertex:
    label: int | None = None  # boundary label; None for internal vertices
    orientation: Orientation | None = None  # None only for a boundary vertex with no edges

    @property
    def is_boundary(self) -> bool:
        return self.label is not None


@dataclass(frozen=True)
class Layout:
    """Drawing hints left by :func:`resolve`; ignored by equality."""

    positions: tuple[tuple[float, float], ...]
    edge_kinds: tuple[str, ...]
    edge_arcs: tuple[Arc | None, ...]


@dataclass(frozen=True)
class Web:
    n_boundary: int
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int], ...]  # (tail, head)
    rotation: tuple[tuple[int, ...], ...]  # counterclockwise edge ids per vertex
    layout: Layout | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        labels = sorted(v.label for v in self.vertices if v.is_boundary)
        if labels != list(range(1, self.n_boundary + 1)):
            raise ValueError(f"boundary labels {labels} are not 1..{self.n_boundary}")
        if len(self.rotation) != len(self.vertices):
            raise ValueError("one rotation list per vertex is required")
        seen: dict[int, list[int]] = {}
        for v, around in enumerate(self.rotation):
            for e in around:
                if not 0 <= e < len(self.edges):
                    raise ValueError(f"vertex {v} lists unknown edge {e}")
                seen.setdefault(e, []).append(v)
        for e, (tail, head) in enumerate(self.edges):
            if tail == head:
                raise ValueError(f"edge {e} is a loop at vertex {tail}")
            if sorted(seen.get(e, [])) != sorted((tail, head)):
                raise ValueError(f"edge {e} ({tail}->{head}) is not listed exactly once at each end")

    @cached_property
    def boundary_vertex(self) -> dict[int, int]:
        """Boundary label -> vertex id."""
        return {v.label: k for k, v in enumerate(self.vertices) if v.is_boundary}

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def dart(self, e: int, v: int) -> int:
        return 2 * e if self.edges[e][0] == v else 2 * e + 1

    def wall_dart(self, label: int, side: str = "right") -> int:
        """Wall dart at boundary ``label`` heading towards ``label + 1`` (right) or ``label - 1``."""
        n_e, n = len(self.edges), self.n_boundary
        if side == "right":
            return 2 * (n_e + label - 1)
        return 2 * (n_e + (label - 2) % n) + 1

    def is_wall_dart(self, d: int) -> bool:
        return d >= 2 * len(self.edges)

    @cached_property
    def map(self) -> PlanarMap:
        n_e, n = len(self.edges), self.n_boundary
        dart_vertex = [v for tail, head in self.edges for v in (tail, head)]
        for label in range(1, n + 1):
            dart_vertex += [self.boundary_vertex[label], self.boundary_vertex[label % n + 1]]
        rotation = []
        for v, vert in enumerate(self.vertices):
            around = [self.dart(e, v) for e in self.rotation[v]]
            if vert.is_boundary:
                around = [self.wall_dart(vert.label)] + around + [self.wall_dart(vert.label, "left")]
            rotation.append(tuple(around))
        return PlanarMap(tuple(dart_vertex), tuple(rotation))

    @cached_property
    def face_table(self) -> "FaceTable":
        return path_depth(self)

    def __str__(self):
        return format_web(self)


@dataclass(frozen=True)
class Face:
    darts: tuple[int, ...]
    edge_count: int  # non-wall edge sides on the boundary walk
    touches_wall: bool
    is_outer: bool = False
    is_exterior: bool = False
    depth: int | None = None


@dataclass(frozen=True)
class FaceTable:
    faces: tuple[Face, ...]
    face_of_dart: tuple[int, ...]
    web: Web = field(compare=False, repr=False)

    @property
    def outer(self) -> int:
        return next(k for k, f in enumerate(self.faces) if f.is_outer)

    def face_above(self, label: int) -> int:
        """Face on the boundary segment just right of ``label`` (label N: the outer face)."""
        if self.web.n_boundary == 0:
            return 0
        return self.face_of_dart[self.web.wall_dart(label)]

    def __len__(self):
        return len(self.faces)


def faces(w: Web) -> FaceTable:
    """Trace every face of the web, walls included; depths are left unset."""
    if w.n_boundary == 0 and not w.vertices:
        return FaceTable((Face((), 0, False, is_outer=True),), (), w)
    walks, face_of = w.map.faces()
    n_e = len(w.edges)
    outer_dart = w.wall_dart(w.n_boundary) if w.n_boundary else None
    out = []
    for walk in walks:
        out.append(Face(
            darts=walk,
            edge_count=sum(1 for d in walk if d < 2 * n_e),
            touches_wall=any(d >= 2 * n_e for d in walk),
            is_outer=outer_dart in walk if outer_dart is not None else not out,
            is_exterior=any(d >= 2 * n_e and d % 2 for d in walk),
        ))
    return FaceTable(tuple(out), face_of, w)


def path_depth(w: Web) -> FaceTable:
    """Dual-graph distance of each face from the outer face; walls are never crossed."""
    table = faces(w)
    n_e = len(w.edges)
    depth: list[int | None] = [None] * len(table.faces)
    start = table.outer
    depth[start] = 0
    queue = deque([start])
    while queue:
        f = queue.popleft()
        for d in table.faces[f].darts:
            if d >= 2 * n_e:
                continue
            g = table.face_of_dart[d ^ 1]
            if depth[g] is None:
                depth[g] = depth[f] + 1
                queue.append(g)
    return replace(table, faces=tuple(replace(f, depth=k) for f, k in zip(table.faces, depth)))


@dataclass(frozen=True)
class DepthProfile:
    deltas: tuple[int, ...]  # d(i + eps) - d(i - eps) for labels 1..N
    orientations: tuple[Orientation | None, ...]


def boundary_depth_profile(w: Web) -> DepthProfile:
    table = w.face_table
    n = w.n_boundary
    deltas = []
    for label in range(1, n + 1):
        right = table.faces[table.face_above(label)].depth
        left = table.faces[table.face_above(label - 1 if label > 1 else n)].depth
        deltas.append(right - left)
    orient = tuple(w.vertices[w.boundary_vertex[label]].orientation for label in range(1, n + 1))
    return DepthProfile(tuple(deltas), orient)


@dataclass(frozen=True)
class ReducedCheck:
    reduced: bool
    face: int | None = None  # offending face index in the face table
    vertex_label: int | None = None  # offending isolated boundary vertex

    def __bool__(self):
        return self.reduced


def is_reduced(w: Web) -> ReducedCheck:
    """Non-elliptic test: interior faces need six or more edges, no boundary vertex may be isolated."""
    for label in range(1, w.n_boundary + 1):
        if w.degree(w.boundary_vertex[label]) == 0:
            return ReducedCheck(False, vertex_label=label)
    for k, f in enumerate(w.face_table.faces):
        if f.is_outer or f.is_exterior or f.touches_wall:
            continue
        if f.edge_count < 6:
            return ReducedCheck(False, face=k)
    return ReducedCheck(True)


def web_problems(w: Web) -> list[str]:
    """Violations of the web axioms; an empty list means the value is a valid web."""
    problems = []
    for v, vert in enumerate(w.vertices):
        deg = w.degree(v)
        if vert.is_boundary and deg > 1:
            problems.append(f"boundary vertex {vert.label} has degree {deg}")
        if not vert.is_boundary and deg != 3:
            problems.append(f"internal vertex {v} has degree {deg}")
        if deg:
            outs = sum(1 for e in w.rotation[v] if w.edges[e][0] == v)
            actual = Orientation.SOURCE if outs == deg else Orientation.SINK if outs == 0 else None
            if actual is None:
                problems.append(f"vertex {v} is neither a source nor a sink")
            elif actual != vert.orientation:
                problems.append(f"vertex {v} is recorded as {vert.orientation} but is a {actual.value}")
    if w.vertices:
        if w.map.components() != 1:
            problems.append("web is not connected through walls and edges")
        n_edges = len(w.edges) + w.n_boundary
        euler = len(w.vertices) - n_edges + len(w.face_table.faces)
        if euler != 2:
            problems.append(f"Euler characteristic is {euler}, not 2")
    return problems


def is_bipartite(w: Web) -> bool:
    """Every cycle has even length iff the underlying graph 2-colours."""
    colour: dict[int, int] = {}
    for v0 in range(len(w.vertices)):
        if v0 in colour:
            continue
        colour[v0] = 0
        stack = [v0]
        while stack:
            v = stack.pop()
            for e in w.rotation[v]:
                tail, head = w.edges[e]
                u = head if tail == v else tail
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True


# resolution ---------------------------------------------------------------

Y_HEIGHT = 0.3
SPLIT = 0.12


@dataclass(frozen=True)
class Resolution:
    """A resolved m-diagram with the map from arrangement faces to web faces."""

    diagram: MDiagram
    web: Web
    face_map: tuple[int, ...]


@lru_cache(maxsize=4096)
def resolution(d: MDiagram) -> Resolution:
    if d.max_level > 2:
        raise NotThreeRow(f"diagram has arcs of level {d.max_level}; webs need at most three rows")
    n = d.n_points
    arr = arrangement(d)
    cross = crossings(d)
    pmap = arr.map
    n_seg = arr.n_segments
    ms = d.ms
    middle = {j: k for k, (_, j, _) in enumerate(ms)}
    y_base = n
    cross_base = n + len(ms)
    n_vertices = cross_base + 2 * len(cross)
    n_edges = n_seg + len(ms) + len(cross)

    def leftward(a: Arc) -> bool:
        return a.level == 2

    def is_in(dart: int) -> bool:
        a = arr.segment_arc[dart // 2]
        return bool(dart % 2) != leftward(a)

    def image(dart: int) -> int:
        """Web vertex that inherits the arrangement dart's origin."""
        v = pmap.dart_vertex[dart]
        if v < n:
            return y_base + middle[v + 1] if v + 1 in middle else v
        k = v - n
        return cross_base + 2 * k + (0 if is_in(dart) else 1)

    edges: list[tuple[int, int]] = []
    for s in range(n_seg):
        left, right = image(2 * s), image(2 * s + 1)
        edges.append((right, left) if leftward(arr.segment_arc[s]) else (left, right))
    stem = {}
    for k, (_, j, _) in enumerate(ms):
        stem[j] = len(edges)
        edges.append((j - 1, y_base + k))
    connector = []
    for k in range(len(cross)):
        connector.append(len(edges))
        edges.append((cross_base + 2 * k + 1, cross_base + 2 * k))

    rotation: list[tuple[int, ...]] = [()] * n_vertices
    for p in range(1, n + 1):
        inner = pmap.rotation[p - 1][1:-1]
        if p in middle:
            rotation[p - 1] = (stem[p],)
            k = middle[p]
            # stem points down from the Y, the arc to the right follows, then the arc to the left
            rotation[y_base + k] = (stem[p],) + tuple(dd // 2 for dd in inner)
        else:
            rotation[p - 1] = tuple(dd // 2 for dd in inner)
    for k in range(len(cross)):
        around = pmap.rotation[n + k]
        ins = [is_in(dd) for dd in around]
        starts = [s for s in range(4) if ins[s] and ins[(s + 1) % 4]]
        if len(starts) != 1 or sum(ins) != 2:
            raise AssertionError(f"in-ends at crossing {cross[k]} are not cyclically adjacent")
        s = starts[0]
        ordered = [around[(s + t) % 4] // 2 for t in range(4)]
        rotation[cross_base + 2 * k] = (ordered[0], ordered[1], connector[k])
        rotation[cross_base + 2 * k + 1] = (ordered[2], ordered[3], connector[k])

    vertices = []
    for v in range(n_vertices):
        label = v + 1 if v < n else None
        outs = sum(1 for e in rotation[v] if edges[e][0] == v)
        if not rotation[v]:
            orient = None
        else:
            orient = Orientation.SOURCE if outs == len(rotation[v]) else Orientation.SINK
        vertices.append(Vertex(label, orient))

    kinds = ["arc"] * n_seg + ["stem"] * len(ms) + ["connector"] * len(cross)
    edge_arcs = list(arr.segment_arc) + [None] * (len(ms) + len(cross))
    layout = Layout(_positions(d, arr, cross, ms, n_vertices), tuple(kinds), tuple(edge_arcs))
    web = Web(n, tuple(vertices), tuple(edges), tuple(rotation), layout)

    # every arrangement dart survives as a web dart with the same face on its left
    n_e = len(edges)

    def web_dart(dart: int) -> int:
        if dart >= 2 * n_seg:
            return dart - 2 * n_seg + 2 * n_e
        return web.dart(dart // 2, image(dart))

    table = faces(web)
    face_map = []
    for f in arr.faces:
        targets = {table.face_of_dart[web_dart(dd)] for dd in f.darts} or {table.outer}
        if len(targets) != 1:
            raise AssertionError(f"arrangement face {f.darts} splits into web faces {targets}")
        face_map.append(targets.pop())
    if sorted(face_map) != list(range(len(table.faces))):
        raise AssertionError("resolution does not preserve the set of faces")
    return Resolution(d, web, tuple(face_map))


def _positions(d, arr, cross, ms, n_vertices):
    n = d.n_points
    pos: list[tuple[float, float]] = [(0.0, 0.0)] * n_vertices
    for p in range(1, n + 1):
        pos[p - 1] = (float(p), 0.0)
    for k, (_, j, _) in enumerate(ms):
        pos[n + k] = (float(j), Y_HEIGHT)
    base = n + len(ms)
    for k, c in enumerate(cross):
        x, y = float(c.x), math.sqrt(float(c.y_squared))
        # the first arc comes in from the left, the second from the right
        ta = (y, float(c.arc_a.center) - x)
        tb = (y, float(c.arc_b.center) - x)
        in_a = ta if c.arc_a.level == 2 else (-ta[0], -ta[1])
        in_b = tb if c.arc_b.level == 2 else (-tb[0], -tb[1])
        ux, uy = in_a[0] / math.hypot(*in_a) + in_b[0] / math.hypot(*in_b), in_a[1] / math.hypot(*in_a) + in_b[1] / math.hypot(*in_b)
        norm = math.hypot(ux, uy) or 1.0
        ux, uy = ux / norm, uy / norm
        pos[base + 2 * k] = (x + SPLIT * ux, y + SPLIT * uy)
        pos[base + 2 * k + 1] = (x - SPLIT * ux, y - SPLIT * uy)
    return tuple(pos)


def resolve(d: MDiagram) -> Web:
    return resolution(d).web


def web_of(t: StandardTableau) -> Web:
    """Resolved m-diagram of a tableau with at most three rows."""
    return resolve(from_tableau(t))


# depth maps ---------------------------------------------------------------

def depth_map(w: Web) -> StandardTableau:
    """Rows from boundary depth changes: +1 bottom, 0 middle, -1 top."""
    check = is_reduced(w)
    if not check:
        where = f"vertex {check.vertex_label}" if check.vertex_label else f"face {check.face}"
        raise NotIrreducible(f"web is not irreducible at {where}")
    sinks = [label for label in range(1, w.n_boundary + 1)
             if w.vertices[w.boundary_vertex[label]].orientation != Orientation.SOURCE]
    if sinks:
        raise NotAllSources(f"boundary vertices {sinks} are not sources")
    row_of = {1: 0, 0: 1, -1: 2}
    word = []
    for label, delta in enumerate(boundary_depth_profile(w).deltas, start=1):
        if delta not in row_of:
            raise NotIrreducible(f"depth jumps by {delta} at boundary vertex {label}")
        word.append(row_of[delta])
    try:
        t = StandardTableau.from_row_word(word)
    except ValueError as exc:
        raise NotIrreducible(f"depth profile does not describe a standard tableau: {exc}") from exc
    if t.n_rows and not t.shape.is_rectangular() or t.n_rows not in (0, 3):
        raise NotIrreducible(f"depth profile gives shape {t.shape}, not 3 x n")
    return t


def extended_depth_map(w: Web) -> StandardTableau:
    """Depth map allowing boundary sinks: a drop at a sink puts the label on the middle row."""
    check = is_reduced(w)
    if not check:
        raise DomainViolation("web is not irreducible")
    profile = boundary_depth_profile(w)
    word = []
    for label, (delta, orient) in enumerate(zip(profile.deltas, profile.orientations), start=1):
        if delta == 1:
            word.append(0)
        elif delta == 0:
            word.append(1)
        elif delta == -1:
            word.append(2 if orient == Orientation.SOURCE else 1)
        else:
            raise DomainViolation(f"depth jumps by {delta} at boundary vertex {label}")
    try:
        t = StandardTableau.from_row_word(word)
    except ValueError as exc:
        raise DomainViolation(f"depth profile does not describe a standard tableau: {exc}") from exc
    lengths = t.shape.row_lengths
    if not (len(lengths) == 3 and lengths[0] == lengths[1]) and not (len(lengths) == 2 and lengths[0] == lengths[1]) \
            and lengths != ():
        raise DomainViolation(f"depth profile gives shape {t.shape}, not of the form (k, k, n) with n <= k")
    return t


# operations ---------------------------------------------------------------

def rotate(w: Web) -> Web:
    """Move boundary vertex 1 to position N; every other label drops by one."""
    n = w.n_boundary
    if n == 0:
        return w
    vertices = tuple(
        replace(v, label=(v.label - 1 if v.label > 1 else n)) if v.is_boundary else v
        for v in w.vertices
    )
    return Web(n, vertices, w.edges, w.rotation)


def join(w_outer: Web, i: int, w_inner: Web) -> Web:
    """Cut the boundary of ``w_outer`` just after label ``i`` and slip ``w_inner`` into the gap."""
    n, n_in = w_outer.n_boundary, w_inner.n_boundary
    if not 0 <= i <= n:
        raise PositionOutOfRange(f"join position {i} not in 0..{n}")
    v_off, e_off = len(w_outer.vertices), len(w_outer.edges)
    vertices = [
        replace(v, label=v.label + n_in) if v.is_boundary and v.label > i else v
        for v in w_outer.vertices
    ]
    vertices += [replace(v, label=v.label + i) if v.is_boundary else v for v in w_inner.vertices]
    edges = list(w_outer.edges) + [(a + v_off, b + v_off) for a, b in w_inner.edges]
    rotation = list(w_outer.rotation) + [tuple(e + e_off for e in r) for r in w_inner.rotation]
    return Web(n + n_in, tuple(vertices), tuple(edges), tuple(rotation))


def canonical_form(w: Web) -> tuple[str, ...]:
    """Breadth-first encoding of the rooted map, rooted at the wall leaving boundary vertex 1.

    Each vertex is written once, in discovery order, followed by its darts in
    counterclockwise order starting from the dart it was discovered through.
    A dart records the discovery index of the far end and the twin's position
    in that vertex's list, which pins down multiple edges.  Two webs get the
    same tokens exactly when their boundary-labelled rotation systems agree.
    """
    if w.n_boundary == 0:
        if w.vertices:
            raise ValueError("canonical form needs at least one boundary vertex")
        return ("N=0",)
    pmap = w.map
    pos_in = {}
    for v, around in enumerate(pmap.rotation):
        for k, d in enumerate(around):
            pos_in[d] = (v, k)
    root = w.boundary_vertex[1]
    index = {root: 0}
    order = [root]
    ref = {root: pos_in[w.wall_dart(1)][1]}
    tokens = [f"N={w.n_boundary}"]
    n_e = len(w.edges)
    for v in order:
        vert = w.vertices[v]
        if vert.is_boundary:
            tokens.append(f"b{vert.label}")
        else:
            tokens.append("i" + ("+" if vert.orientation == Orientation.SOURCE else "-"))
        around = pmap.rotation[v]
        start = ref[v]
        for t in range(len(around)):
            d = around[(start + t) % len(around)]
            u, k = pos_in[d ^ 1]
            if u not in index:
                index[u] = len(order)
                order.append(u)
                ref[u] = k
            rel = (k - ref[u]) % len(pmap.rotation[u])
            kind = "w" if d >= 2 * n_e else (">" if d % 2 == 0 else "<")
            tokens.append(f"{kind}{index[u]}.{rel}")
        tokens.append("|")
    if len(order) != len(w.vertices):
        raise ValueError("web is not connected through walls and edges")
    return tuple(tokens)


def same_web(a: Web, b: Web) -> bool:
    return canonical_form(a) == canonical_form(b)


# text format --------------------------------------------------------------

def format_web(w: Web) -> str:
    lines = [f"N={w.n_boundary}"]
    for k, v in enumerate(w.vertices):
        if v.is_boundary:
            lines.append(f"V {k} boundary {v.label}")
        else:
            lines.append(f"V {k} internal {v.orientation.value}")
    lines += [f"E {a} {b}" for a, b in w.edges]
    for k, around in enumerate(w.rotation):
        lines.append(f"R {k}:" + "".join(f" {e}" for e in around))
    return "\n".join(lines) + "\n"


_V_LINE = re.compile(r"V\s+(\d+)\s+(?:boundary\s+(\d+)|internal\s+(source|sink))\s*$")
_E_LINE = re.compile(r"E\s+(\d+)\s+(\d+)\s*$")
_R_LINE = re.compile(r"R\s+(\d+):((?:\s+\d+)*)\s*$")


def parse_web(text: str) -> Web:
    n = None
    verts: dict[int, tuple[int | None, Orientation | None]] = {}
    edges: list[tuple[int, int]] = []
    rot: dict[int, tuple[int, ...]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s:
            continue
        col = line.index(s[0]) + 1
        if n is None:
            m = re.fullmatch(r"N=(\d+)", s)
            if not m:
                raise ParseError(f"expected N=<n>, got {s!r}", lineno, col)
            n = int(m[1])
        elif m := _V_LINE.match(s):
            vid = int(m[1])
            if vid in verts:
                raise ParseError(f"vertex {vid} declared twice", lineno, col)
            verts[vid] = (int(m[2]), None) if m[2] else (None, Orientation(m[3]))
        elif m := _E_LINE.match(s):
            edges.append((int(m[1]), int(m[2])))
        elif m := _R_LINE.match(s):
            rot[int(m[1])] = tuple(int(x) for x in m[2].split())
        else:
            raise ParseError(f"unrecognised line {s!r}", lineno, col)
    if n is None:
        raise ParseError("missing N=<n> header", 1, 1)
    if sorted(verts) != list(range(len(verts))):
        raise ParseError("vertex ids must be 0..V-1", 1, 1)
    vertices = []
    for vid in range(len(verts)):
        label, orient = verts[vid]
        if label is not None:
            around = rot.get(vid, ())
            if around:
                outs = sum(1 for e in around if 0 <= e < len(edges) and edges[e][0] == vid)
                orient = Orientation.SOURCE if outs == len(around) else Orientation.SINK
        vertices.append(Vertex(label, orient))
    try:
        return Web(n, tuple(vertices), tuple(edges), tuple(rot.get(v, ()) for v in range(len(verts))))
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from exc
