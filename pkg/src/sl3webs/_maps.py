"""Combinatorial maps as rotation systems over darts.

Edge ``e`` owns darts ``2e`` and ``2e + 1``; a dart's twin is ``d ^ 1``.
Each vertex lists its darts in counterclockwise order.  Faces are traced
keeping the face on the left of every dart.
"""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class PlanarMap:
    dart_vertex: tuple[int, ...]
    rotation: tuple[tuple[int, ...], ...]
    _position: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pos = {}
        for v, darts in enumerate(self.rotation):
            for k, d in enumerate(darts):
                if self.dart_vertex[d] != v:
                    raise ValueError(f"dart {d} listed at vertex {v} but belongs to {self.dart_vertex[d]}")
                if d in pos:
                    raise ValueError(f"dart {d} listed twice in the rotation")
                pos[d] = k
        if len(pos) != len(self.dart_vertex):
            missing = sorted(set(range(len(self.dart_vertex))) - set(pos))
            raise ValueError(f"darts {missing} missing from the rotation")
        object.__setattr__(self, "_position", pos)

    @property
    def n_vertices(self) -> int:
        return len(self.rotation)

    @property
    def n_edges(self) -> int:
        return len(self.dart_vertex) // 2

    def next_in_face(self, d: int) -> int:
        t = d ^ 1
        around = self.rotation[self.dart_vertex[t]]
        return around[self._position[t] - 1]

    def faces(self) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        """Return (face walks, face index of every dart)."""
        face_of = [-1] * len(self.dart_vertex)
        walks = []
        for start in range(len(self.dart_vertex)):
            if face_of[start] >= 0:
                continue
            walk = []
            d = start
            while face_of[d] < 0:
                face_of[d] = len(walks)
                walk.append(d)
                d = self.next_in_face(d)
            walks.append(tuple(walk))
        return tuple(walks), tuple(face_of)

    def components(self) -> int:
        seen = set()
        count = 0
        for v0 in range(self.n_vertices):
            if v0 in seen:
                continue
            count += 1
            stack = [v0]
            seen.add(v0)
            while stack:
                v = stack.pop()
                for d in self.rotation[v]:
                    w = self.dart_vertex[d ^ 1]
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return count
