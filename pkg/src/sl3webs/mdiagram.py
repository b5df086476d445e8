"""m-diagrams: semicircular arcs read off a standard tableau.

Boundary point ``i`` sits at ``(i, 0)``; the arc ``(lo, hi)`` is the upper
semicircle centred at ``((lo + hi) / 2, 0)``.  Crossing abscissas are exact
fractions, and the cyclic order of arc ends at a crossing is decided by
comparing centres, so no floating point enters the combinatorics.
"""
from __future__ import annotations

import enum
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from ._maps import PlanarMap
from .errors import NotThreeRow, ParseError
from .tableau import StandardTableau


@dataclass(frozen=True, order=True)
class Arc:
    """A level-``k`` arc joins an entry of row ``k - 1`` to one of row ``k`` (0-based rows)."""

    lo: int
    hi: int
    level: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"arc endpoints must satisfy lo < hi, got ({self.lo}, {self.hi})")
        if self.level < 1:
            raise ValueError(f"arc level must be positive, got {self.level}")

    @property
    def center(self) -> Fraction:
        return Fraction(self.lo + self.hi, 2)

    @property
    def radius(self) -> Fraction:
        return Fraction(self.hi - self.lo, 2)

    def contains(self, x) -> bool:
        """True if the vertical line at abscissa ``x`` passes under this arc."""
        return self.lo < x < self.hi


class Role(enum.Enum):
    FIRST_OF_M = "first"
    MIDDLE_OF_M = "middle"
    THIRD_OF_M = "third"
    ISOLATED_LO = "isolated-lo"
    ISOLATED_HI = "isolated-hi"
    UNUSED = "unused"
    # point of a chain of three or more arcs; only tableaux with four or more rows have these
    CHAINED = "chained"


class PairPosition(enum.Enum):
    DISJOINT = "disjoint"
    NESTED_UNDER_FIRST_ARC = "nested-under-first-arc"
    NESTED_UNDER_SECOND_ARC = "nested-under-second-arc"
    CROSS_SECOND_OVER_FIRST = "cross-second-over-first"
    CROSS_FIRST_OVER_SECOND = "cross-first-over-second"


@dataclass(frozen=True)
class MDiagram:
    n_points: int
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        arcs = tuple(sorted(self.arcs))
        object.__setattr__(self, "arcs", arcs)
        ups: dict[int, Arc] = {}
        downs: dict[int, Arc] = {}
        for a in arcs:
            if not 1 <= a.lo < a.hi <= self.n_points:
                raise ValueError(f"arc {a} leaves the boundary 1..{self.n_points}")
            if a.lo in ups or a.hi in downs:
                raise ValueError(f"arc {a} shares an end with another arc in the same direction")
            ups[a.lo] = a
            downs[a.hi] = a
        for p, a in ups.items():
            if p in downs and downs[p].level + 1 != a.level:
                raise ValueError(f"arcs {downs[p]} and {a} meet at {p} with incompatible levels")

    @cached_property
    def _up(self) -> dict[int, Arc]:
        return {a.lo: a for a in self.arcs}

    @cached_property
    def _down(self) -> dict[int, Arc]:
        return {a.hi: a for a in self.arcs}

    def arc_up(self, p: int) -> Arc | None:
        """The arc leaving ``p`` to the right, if any."""
        return self._up.get(p)

    def arc_down(self, p: int) -> Arc | None:
        """The arc arriving at ``p`` from the left, if any."""
        return self._down.get(p)

    @property
    def max_level(self) -> int:
        return max((a.level for a in self.arcs), default=0)

    @cached_property
    def ms(self) -> tuple[tuple[int, int, int], ...]:
        """Every m ``(i, j, k)`` in order of its first point."""
        out = []
        for j, second in self._up.items():
            first = self._down.get(j)
            if first is None:
                continue
            i, k = first.lo, second.hi
            if i not in self._down and k not in self._up:
                out.append((i, j, k))
        return tuple(sorted(out))

    @cached_property
    def isolated_arcs(self) -> tuple[Arc, ...]:
        return tuple(
            a for a in self.arcs if a.lo not in self._down and a.hi not in self._up
        )

    @cached_property
    def roles(self) -> dict[int, Role]:
        roles = {p: Role.UNUSED for p in range(1, self.n_points + 1)}
        for p in range(1, self.n_points + 1):
            if p in self._up or p in self._down:
                roles[p] = Role.CHAINED
        for i, j, k in self.ms:
            roles[i], roles[j], roles[k] = Role.FIRST_OF_M, Role.MIDDLE_OF_M, Role.THIRD_OF_M
        for a in self.isolated_arcs:
            roles[a.lo], roles[a.hi] = Role.ISOLATED_LO, Role.ISOLATED_HI
        return roles

    def __str__(self):
        return format_mdiagram(self)


def from_tableau(t: StandardTableau) -> MDiagram:
    """Join each entry off the bottom row to the largest free smaller entry on the row below."""
    word = t.row_word
    arcs = []
    # taken[r] holds row-r entries already joined to an entry of row r + 1
    taken: list[set[int]] = [set() for _ in range(t.n_rows)]
    for i, r in enumerate(word, start=1):
        if r == 0:
            continue
        candidates = [k for k in t.rows[r - 1] if k < i and k not in taken[r - 1]]
        j = max(candidates)
        taken[r - 1].add(j)
        arcs.append(Arc(j, i, r))
    return MDiagram(t.size, tuple(arcs))


def arcs_cross(a: Arc, b: Arc) -> bool:
    return a.lo < b.lo < a.hi < b.hi or b.lo < a.lo < b.hi < a.hi


def join(outer: MDiagram, i: int, inner: MDiagram) -> MDiagram:
    """Cut the boundary of ``outer`` after point ``i`` and insert ``inner`` there."""
    n_in = inner.n_points

    def shift(p):
        return p if p <= i else p + n_in

    arcs = [Arc(shift(a.lo), shift(a.hi), a.level) for a in outer.arcs]
    arcs += [Arc(a.lo + i, a.hi + i, a.level) for a in inner.arcs]
    return MDiagram(outer.n_points + n_in, tuple(arcs))


def pair_position(d: MDiagram, m1: tuple[int, int, int], m2: tuple[int, int, int]) -> PairPosition:
    """Relative position of two m's, read with the m starting further left as the reference.

    Nested positions say which arc of the left m covers the other m.  Crossing
    positions say which arc of the left m is crossed: its second arc crossing
    the right m's first arc, or its first arc crossed by the right m's second arc.
    """
    if d.max_level > 2:
        raise NotThreeRow(f"diagram has arcs of level {d.max_level}")
    ms = set(d.ms)
    for m in (m1, m2):
        if tuple(m) not in ms:
            raise ValueError(f"{m} is not an m of this diagram")
    if tuple(m1) == tuple(m2):
        raise ValueError("pair_position needs two distinct m's")
    (i, j, k), (i2, j2, k2) = sorted([tuple(m1), tuple(m2)])
    left_first, left_second = Arc(i, j, 1), Arc(j, k, 2)
    right_first, right_second = Arc(i2, j2, 1), Arc(j2, k2, 2)
    if k < i2:
        return PairPosition.DISJOINT
    if arcs_cross(left_second, right_first):
        return PairPosition.CROSS_SECOND_OVER_FIRST
    if arcs_cross(left_first, right_second):
        return PairPosition.CROSS_FIRST_OVER_SECOND
    if i < i2 < k2 < j:
        return PairPosition.NESTED_UNDER_FIRST_ARC
    if j < i2 < k2 < k:
        return PairPosition.NESTED_UNDER_SECOND_ARC
    raise AssertionError(f"m's {m1} and {m2} are in no known relative position")


@dataclass(frozen=True)
class Crossing:
    arc_a: Arc
    arc_b: Arc
    x: Fraction
    index_a: int
    index_b: int

    @property
    def y_squared(self) -> Fraction:
        return self.arc_a.radius ** 2 - (self.x - self.arc_a.center) ** 2


def crossing_abscissa(a: Arc, b: Arc) -> Fraction:
    ca, cb, ra, rb = a.center, b.center, a.radius, b.radius
    return (ra * ra - rb * rb + cb * cb - ca * ca) / (2 * (cb - ca))


@lru_cache(maxsize=4096)
def crossings(d: MDiagram) -> tuple[Crossing, ...]:
    """All crossings, ordered by (arc_a, x); ``arc_a`` is the arc with the smaller ``lo``.

    ``index_a``/``index_b`` give the rank of the crossing along each arc,
    counted from the arc's left end.
    """
    raw = []
    for n, a in enumerate(d.arcs):
        for b in d.arcs[n + 1:]:
            if arcs_cross(a, b):
                raw.append((a, b, crossing_abscissa(a, b)))
    along: dict[Arc, list[Fraction]] = {}
    for a, b, x in raw:
        along.setdefault(a, []).append(x)
        along.setdefault(b, []).append(x)
    for xs in along.values():
        xs.sort()
    out = [Crossing(a, b, x, along[a].index(x), along[b].index(x)) for a, b, x in raw]
    return tuple(sorted(out, key=lambda c: (c.arc_a, c.x)))


@dataclass(frozen=True)
class ArrangementFace:
    darts: tuple[int, ...]
    containment: frozenset | None  # arcs lying above the face; None for the disk exterior
    witnesses: tuple[int, ...]  # i such that the face sits on the boundary segment (i, i + 1)
    is_outer: bool = False
    is_exterior: bool = False

    @property
    def depth(self) -> int | None:
        return None if self.containment is None else len(self.containment)


@dataclass(frozen=True)
class Arrangement:
    """The planar map cut out by the arcs and the boundary, with its faces.

    Vertex ``p - 1`` is boundary point ``p``; vertices from ``n_points`` on are
    crossings in the order of :func:`crossings`.  Edges are arc segments
    (``segment_arc`` gives the arc) followed by ``n_points`` wall edges, wall
    ``i - 1`` running from point ``i`` to ``i + 1`` (and point N back to 1).
    A segment's even dart sits at its left end.
    """

    diagram: MDiagram
    map: PlanarMap
    segment_arc: tuple[Arc, ...]
    faces: tuple[ArrangementFace, ...]
    face_of_dart: tuple[int, ...]

    @property
    def n_segments(self) -> int:
        return len(self.segment_arc)

    def wall_dart(self, i: int, side: str = "right") -> int:
        """Dart of the wall at point ``i`` heading right (interior on its left) or left."""
        n_seg, n = self.n_segments, self.diagram.n_points
        if side == "right":
            return 2 * (n_seg + i - 1)
        return 2 * (n_seg + (i - 2) % n) + 1

    @property
    def outer_face(self) -> int:
        return next(k for k, f in enumerate(self.faces) if f.is_outer)

    def face_above(self, i: int) -> int:
        """Face sitting on the boundary segment just right of point ``i``."""
        return self.face_of_dart[self.wall_dart(i)]


def _segments(d: MDiagram):
    """Cut every arc at its crossings; returns vertex ids per arc and the crossing list."""
    n = d.n_points
    cross = crossings(d)
    at: dict[Arc, list[tuple[Fraction, int]]] = {a: [] for a in d.arcs}
    for k, c in enumerate(cross):
        at[c.arc_a].append((c.x, n + k))
        at[c.arc_b].append((c.x, n + k))
    chains = {}
    for a in d.arcs:
        inner = [v for _, v in sorted(at[a])]
        chains[a] = [a.lo - 1] + inner + [a.hi - 1]
    return cross, chains


def crossing_rotation(c: Crossing, a_plus, a_minus, b_plus, b_minus):
    """Counterclockwise order of the four arc ends at a crossing.

    At the crossing the rightward tangent of a semicircle centred at ``c`` has
    slope ``(c - x) / y``, so the arc with the smaller centre turns first.
    """
    if c.arc_a.center < c.arc_b.center:
        return (a_plus, b_plus, a_minus, b_minus)
    return (b_plus, a_plus, b_minus, a_minus)


@lru_cache(maxsize=4096)
def arrangement(d: MDiagram) -> Arrangement:
    n = d.n_points
    cross, chains = _segments(d)
    n_vertices = n + len(cross)
    segment_arc: list[Arc] = []
    dart_vertex: list[int] = []
    # (arc, vertex) -> dart leaving vertex along the arc to the right / left
    plus: dict[tuple[Arc, int], int] = {}
    minus: dict[tuple[Arc, int], int] = {}
    for a in d.arcs:
        chain = chains[a]
        for u, v in zip(chain, chain[1:]):
            s = len(segment_arc)
            segment_arc.append(a)
            dart_vertex += [u, v]
            plus[a, u] = 2 * s
            minus[a, v] = 2 * s + 1
    n_seg = len(segment_arc)
    for i in range(1, n + 1):
        dart_vertex += [i - 1, i % n]
    rotation: list[tuple[int, ...]] = [() for _ in range(n_vertices)]
    for p in range(1, n + 1):
        around = [2 * (n_seg + p - 1)]
        if (a := d.arc_up(p)) is not None:
            around.append(plus[a, p - 1])
        if (a := d.arc_down(p)) is not None:
            around.append(minus[a, p - 1])
        around.append(2 * (n_seg + (p - 2) % n) + 1)
        rotation[p - 1] = tuple(around)
    for k, c in enumerate(cross):
        v = n + k
        rotation[v] = crossing_rotation(
            c, plus[c.arc_a, v], minus[c.arc_a, v], plus[c.arc_b, v], minus[c.arc_b, v]
        )
    pmap = PlanarMap(tuple(dart_vertex), tuple(rotation))
    walks, face_of = pmap.faces() if n else (((),), ())
    containment = _propagate_containment(walks, face_of, segment_arc, n, n_seg)
    faces = []
    for f, walk in enumerate(walks):
        witnesses = tuple(sorted(
            (dd // 2) - n_seg + 1 for dd in walk if dd >= 2 * n_seg and dd % 2 == 0
        ))
        is_outer = n == 0 or 2 * (n_seg + n - 1) in walk
        is_exterior = n > 0 and any(dd >= 2 * n_seg and dd % 2 == 1 for dd in walk)
        faces.append(ArrangementFace(walk, containment[f], witnesses, is_outer, is_exterior))
    return Arrangement(d, pmap, tuple(segment_arc), tuple(faces), face_of)


def _propagate_containment(walks, face_of, segment_arc, n, n_seg, root_dart=None):
    """Breadth-first search from the outer face toggling an arc whenever one of its segments is crossed."""
    result: list[frozenset | None] = [None] * len(walks)
    if n == 0:
        result[0] = frozenset()
        return result
    start = face_of[2 * (n_seg + n - 1)] if root_dart is None else face_of[root_dart]
    result[start] = frozenset()
    queue = deque([start])
    while queue:
        f = queue.popleft()
        for dd in walks[f]:
            if dd >= 2 * n_seg:
                continue
            g = face_of[dd ^ 1]
            if result[g] is None:
                result[g] = result[f] ^ {segment_arc[dd // 2]}
                queue.append(g)
    return result


def circle_depth(d: MDiagram) -> tuple[ArrangementFace, ...]:
    """Faces of the arrangement with the set of arcs lying above each one."""
    return arrangement(d).faces


def containment_conflicts(d: MDiagram) -> list[tuple[int, int]]:
    """Adjacent face pairs whose containment sets do not differ by exactly the shared arc.

    An empty list means the breadth-first labelling is independent of the
    spanning tree it happened to use.
    """
    arr = arrangement(d)
    bad = []
    for dd in range(2 * arr.n_segments):
        f, g = arr.face_of_dart[dd], arr.face_of_dart[dd ^ 1]
        cf, cg = arr.faces[f].containment, arr.faces[g].containment
        if cf is None or cg is None or cf ^ cg != {arr.segment_arc[dd // 2]}:
            bad.append((f, g))
    return bad


def depth_from_witness(d: MDiagram, i: int) -> int:
    """Number of arcs passing over the boundary segment (i, i + 1); 0 for the segment past N."""
    if i == d.n_points:
        return 0
    x = Fraction(2 * i + 1, 2)
    return sum(1 for a in d.arcs if a.contains(x))


def format_mdiagram(d: MDiagram) -> str:
    lines = [f"N={d.n_points}"]
    lines += [f"arc {a.lo} {a.hi} level {a.level}" for a in d.arcs]
    return "\n".join(lines) + "\n"


_ARC_LINE = re.compile(r"arc\s+(\d+)\s+(\d+)\s+level\s+(\d+)\s*$")


def parse_mdiagram(text: str) -> MDiagram:
    lines = text.splitlines()
    body = [(k, line) for k, line in enumerate(lines, start=1) if line.strip()]
    if not body:
        raise ParseError("missing N=<n> header", 1, 1)
    k, header = body[0]
    m = re.fullmatch(r"\s*N=(\d+)\s*", header)
    if not m:
        raise ParseError(f"expected N=<n>, got {header.strip()!r}", k, 1)
    arcs = []
    for k, line in body[1:]:
        stripped = line.strip()
        m = _ARC_LINE.match(stripped)
        if not m:
            raise ParseError(f"expected 'arc <lo> <hi> level <k>', got {stripped!r}", k, line.index(stripped[0]) + 1)
        try:
            arcs.append(Arc(int(m[1]), int(m[2]), int(m[3])))
        except ValueError as exc:
            raise ParseError(str(exc), k, 1) from exc
    try:
        return MDiagram(int(body[0][1].strip()[2:]), tuple(arcs))
    except ValueError as exc:
        raise ParseError(str(exc), body[0][0], 1) from exc
