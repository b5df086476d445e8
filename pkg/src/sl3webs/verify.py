"""Exhaustive and seeded-random property suites for the tableau/web correspondence.

Each suite returns a :class:`VerifyReport`.  Reports merge associatively and
print as one line per outcome, so a run can be split across workers and
stitched back together.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from . import mdiagram as md
from .errors import BoundExceeded, WebsError
from .mdiagram import Role, arrangement, containment_conflicts, depth_from_witness, from_tableau
from .tableau import (
    Shape,
    StandardTableau,
    count_standard,
    enumerate_standard,
    promote,
    promotion_witness,
    partitions,
    random_standard,
    shuffle,
)
from .webmap import (
    Orientation,
    boundary_depth_profile,
    canonical_form,
    depth_map,
    extended_depth_map,
    is_bipartite,
    is_reduced,
    join,
    path_depth,
    resolution,
    rotate,
    web_of,
    web_problems,
)

MAX_N = 5  # 3 x 5 already has 6006 tableaux
MAX_BOXES = 15


class Failure(NamedTuple):
    instance: str
    prop: str
    witness: str


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    params: tuple[tuple[str, object], ...] = ()
    instances: int = 0
    failures: tuple[Failure, ...] = ()
    expected_mismatches: tuple[str, ...] = ()
    seed: int | None = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "VerifyReport") -> "VerifyReport":
        """Combine two reports; the result does not depend on the order of merging."""
        suite = self.suite if self.suite == other.suite else "+".join(sorted({*self.suite.split("+"), *other.suite.split("+")}))
        return VerifyReport(
            suite=suite,
            params=tuple(sorted(set(self.params) | set(other.params), key=repr)),
            instances=self.instances + other.instances,
            failures=tuple(sorted(self.failures + other.failures)),
            expected_mismatches=tuple(sorted(self.expected_mismatches + other.expected_mismatches)),
            seed=self.seed if self.seed is not None else other.seed,
            elapsed=self.elapsed + other.elapsed,
        )

    def lines(self) -> list[str]:
        out = [f"expected-mismatch {self.suite} {m}" for m in self.expected_mismatches]
        out += [f"FAIL {self.suite} {f.instance} {f.prop} {f.witness}" for f in self.failures]
        if self.passed:
            out.append(f"ok {self.suite} {self.instances}")
        return out

    def __str__(self):
        return "\n".join(self.lines())


class _Run:
    """Collects outcomes while a suite runs."""

    def __init__(self, suite: str, params: dict, seed: int | None = None):
        self.suite, self.params, self.seed = suite, params, seed
        self.instances = 0
        self.failures: list[Failure] = []
        self.expected: list[str] = []
        self.start = time.perf_counter()

    def check(self, instance, prop: str, ok: bool, witness="") -> bool:
        if not ok:
            self.failures.append(Failure(_key(instance), prop, _one_line(witness) or "-"))
        return ok

    def guard(self, instance, prop: str, fn: Callable):
        """Run ``fn``; a library error counts as a failure of ``prop``."""
        try:
            return fn()
        except WebsError as exc:
            self.check(instance, prop, False, f"{type(exc).__name__}: {exc}")
            return None

    def report(self) -> VerifyReport:
        return VerifyReport(
            suite=self.suite,
            params=tuple(sorted(self.params.items())),
            instances=self.instances,
            failures=tuple(sorted(self.failures)),
            expected_mismatches=tuple(sorted(self.expected)),
            seed=self.seed,
            elapsed=time.perf_counter() - self.start,
        )


def _key(x) -> str:
    return "[" + "|".join(" ".join(map(str, row)) for row in x.rows) + "]" if isinstance(x, StandardTableau) else _one_line(x)


def _one_line(x) -> str:
    return " ".join(str(x).split()).replace(" ", "_")


def _rectangle_bound(n: int):
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > MAX_N:
        raise BoundExceeded(f"n = {n} exceeds the configured bound {MAX_N}")


def verify_bijection(n: int) -> VerifyReport:
    """depth_map inverts the tableau-to-web map on 3 x n, and the webs are reduced and distinct."""
    _rectangle_bound(n)
    run = _Run("bijection", {"n": n})
    seen: dict[tuple[str, ...], StandardTableau] = {}
    for t in enumerate_standard(Shape.rectangle(3, n)):
        run.instances += 1
        w = run.guard(t, "resolve", lambda: web_of(t))
        if w is None:
            continue
        problems = web_problems(w)
        run.check(t, "web-axioms", not problems, "; ".join(problems))
        run.check(t, "reduced", bool(is_reduced(w)), is_reduced(w))
        back = run.guard(t, "depth-map", lambda: depth_map(w))
        if back is not None:
            run.check(t, "round-trip", back == t, _key(back))
        form = canonical_form(w)
        if form in seen:
            run.check(t, "distinct", False, _key(seen[form]))
        seen[form] = t
    expected = count_standard(Shape.rectangle(3, n))
    run.check(f"3x{n}", "count", run.instances == expected, f"{run.instances}!={expected}")
    return run.report()


def check_depth_agreement(run: _Run, t: StandardTableau):
    """Per-face comparison of circle depth with path depth through the face-identity map."""
    d = from_tableau(t)
    res = run.guard(t, "resolve", lambda: resolution(d))
    if res is None:
        return
    arr = arrangement(d)
    table = path_depth(res.web)
    run.check(t, "containment-path-independent", not containment_conflicts(d), containment_conflicts(d))
    for k, f in enumerate(arr.faces):
        g = table.faces[res.face_map[k]]
        if f.is_exterior or g.is_exterior:
            run.check(t, "exterior-preserved", f.is_exterior and g.is_exterior, f"face {k}")
            continue
        run.check(t, "circle=path", f.depth == g.depth, f"face {k}: circle {f.depth} path {g.depth}")
        for i in f.witnesses:
            run.check(t, "witness-depth", f.depth == depth_from_witness(d, i), f"face {k} at {i}")


def verify_depth_agreement(n: int) -> VerifyReport:
    _rectangle_bound(n)
    run = _Run("depth", {"n": n})
    for t in enumerate_standard(Shape.rectangle(3, n)):
        run.instances += 1
        check_depth_agreement(run, t)
    return run.report()


PROMOTION_COUNTEREXAMPLE = StandardTableau(((1, 4), (2, 5), (3,)))


def verify_promotion_rotation(n: int) -> VerifyReport:
    """Rotating a web matches promoting its tableau on 3 x n; the known non-rectangular case must differ."""
    _rectangle_bound(n)
    run = _Run("promotion", {"n": n})
    for t in enumerate_standard(Shape.rectangle(3, n)):
        run.instances += 1
        p = promote(t)
        run.check(t, "rotate=promote", canonical_form(rotate(web_of(t))) == canonical_form(web_of(p)), _key(p))
    t = PROMOTION_COUNTEREXAMPLE
    same = canonical_form(rotate(web_of(t))) == canonical_form(web_of(promote(t)))
    if run.check(t, "expected-mismatch", not same, "rotation and promotion agree"):
        run.expected.append(f"{_key(t)} rotate!=promote")
    return run.report()


SHUFFLE_FIGURE = (
    StandardTableau(((1, 3), (2, 5), (4, 6))),  # inserted
    3,
    StandardTableau(((1, 2), (3, 4), (5, 6))),  # host
    StandardTableau(((1, 2, 4, 6), (3, 5, 8, 10), (7, 9, 11, 12))),
)
SHUFFLE_COUNTEREXAMPLE = (StandardTableau(((1,), (2,))), 2, StandardTableau(((1,), (2,), (3,))))


def _random_shape(rng: random.Random, size: int, max_rows: int = 3) -> Shape:
    return rng.choice(list(partitions(size, max_rows)))


def _shuffle_matches_join(run: _Run, inner: StandardTableau, i: int, outer: StandardTableau, prop: str) -> bool:
    label = f"{_key(inner)}@{i}@{_key(outer)}"
    s = shuffle(inner, i, outer)
    d_join = md.join(from_tableau(outer), i, from_tableau(inner))
    same_diagram = from_tableau(s) == d_join
    same_web = canonical_form(web_of(s)) == canonical_form(join(web_of(outer), i, web_of(inner)))
    if prop == "expected-mismatch":
        return not same_diagram and not same_web
    run.check(label, f"{prop}-mdiagram", same_diagram, _key(s))
    run.check(label, f"{prop}-web", same_web, _key(s))
    return same_diagram and same_web


def verify_shuffle_join(seed: int = 0, trials: int = 200, max_boxes: int = MAX_BOXES) -> VerifyReport:
    """Shuffle of tableaux against join of m-diagrams and of webs."""
    rng = random.Random(seed)
    run = _Run("shuffle", {"trials": trials, "max_boxes": max_boxes}, seed)

    inner, i, outer, expected = SHUFFLE_FIGURE
    run.instances += 1
    run.check("figure", "figure-shuffle", shuffle(inner, i, outer) == expected, _key(shuffle(inner, i, outer)))
    _shuffle_matches_join(run, inner, i, outer, "part2")

    inner, i, outer = SHUFFLE_COUNTEREXAMPLE
    run.instances += 1
    if run.check(f"{_key(inner)}@{i}@{_key(outer)}", "expected-mismatch",
                 _shuffle_matches_join(run, inner, i, outer, "expected-mismatch"), "join agrees with shuffle"):
        run.expected.append(f"{_key(inner)}@{i}@{_key(outer)} join!=shuffle")

    for _ in range(trials):
        # part 1: arbitrary shapes, inserted after the last entry
        total = rng.randint(2, max_boxes)
        n_outer = rng.randint(1, total - 1)
        outer = random_standard(_random_shape(rng, n_outer), rng)
        inner = random_standard(_random_shape(rng, total - n_outer), rng)
        run.instances += 1
        _shuffle_matches_join(run, inner, outer.size, outer, "part1")

        # part 2: a rectangle at least as tall as the host, inserted anywhere
        outer = random_standard(_random_shape(rng, rng.randint(1, max_boxes - 1)), rng)
        rows = rng.randint(outer.n_rows, 3)
        cols = rng.randint(1, max(1, (max_boxes - outer.size) // rows))
        if rows * cols + outer.size > max_boxes:
            continue
        inner = random_standard(Shape.rectangle(rows, cols), rng)
        run.instances += 1
        _shuffle_matches_join(run, inner, rng.randint(0, outer.size), outer, "part2")
    return run.report()


_DELTA_BY_ROLE = {
    Role.FIRST_OF_M: 1,
    Role.ISOLATED_LO: 1,
    Role.MIDDLE_OF_M: 0,
    Role.THIRD_OF_M: -1,
    Role.ISOLATED_HI: -1,
}


def check_web_of_nkk(run: _Run, t: StandardTableau, n: int, k: int):
    """Round trip, census, boundary deltas and face sizes for one tableau of shape (n, k, k)."""
    d = from_tableau(t)
    w = run.guard(t, "resolve", lambda: web_of(t))
    if w is None:
        return
    problems = web_problems(w)
    run.check(t, "web-axioms", not problems, "; ".join(problems))
    run.check(t, "bipartite", is_bipartite(w))
    back = run.guard(t, "extended-depth-map", lambda: extended_depth_map(w))
    if back is not None:
        run.check(t, "extended-round-trip", back == t, _key(back))
    if n == k:
        plain = run.guard(t, "depth-map", lambda: depth_map(w))
        run.check(t, "extended=plain", plain == back, _key(plain))
    sources = sum(1 for lab in range(1, w.n_boundary + 1)
                  if w.vertices[w.boundary_vertex[lab]].orientation == Orientation.SOURCE)
    sinks = w.n_boundary - sources
    run.check(t, "census", (sources, sinks) == (3 * n + (k - n), k - n), f"{sources}/{sinks}")
    profile = boundary_depth_profile(w)
    roles = d.roles
    for p, delta in enumerate(profile.deltas, start=1):
        run.check(t, "delta-by-role", delta == _DELTA_BY_ROLE.get(roles[p]), f"{p}:{roles[p].name}:{delta}")
    for f in w.face_table.faces:
        if f.is_outer or f.is_exterior or f.touches_wall:
            continue
        size = f.edge_count
        run.check(t, "face-size", size >= 6 and size % 2 == 0, size)


def verify_extended(n: int, k: int) -> VerifyReport:
    """Extended depth map and boundary census on tableaux of shape (n, k, k), i.e. rows k, k, n from the bottom."""
    if not 0 <= n <= k or k < 1:
        raise ValueError(f"need 0 <= n <= k and k >= 1, got n={n}, k={k}")
    if n + 2 * k > MAX_BOXES:
        raise BoundExceeded(f"{n + 2 * k} boxes exceeds the configured bound {MAX_BOXES}")
    run = _Run("extended", {"n": n, "k": k})
    shape = Shape((k, k, n) if n else (k, k))
    for t in enumerate_standard(shape):
        run.instances += 1
        check_web_of_nkk(run, t, n, k)
    return run.report()


def nkk_shapes(max_boxes: int) -> list[tuple[int, int]]:
    return [(n, k) for k in range(1, max_boxes + 1) for n in range(0, k + 1) if n + 2 * k <= max_boxes]


def verify_extended_all(max_boxes: int = 12) -> VerifyReport:
    report = VerifyReport("extended")
    for n, k in nkk_shapes(max_boxes):
        report = report.merge(verify_extended(n, k))
    return report


SLIDE_RULES = ("stated", "corrected")


def slide_prediction(t: StandardTableau, rule: str = "stated") -> list[tuple[int, int | None]]:
    """Which entry the arc rule says slides down into each row the hole visits, as (row, entry).

    With the hole at ``b`` on row ``r``, the stated rule picks the largest
    entry above whose arc lands on some number ``<= b``, provided it sits in
    ``b``'s column or further right.  The corrected rule also demands that
    the arcs match the entries of row ``r + 1`` up to that column with
    entries of row ``r`` up to the same column; without it the rule fails on
    shapes such as 1 2 5 / 3 4 6 / 7 8.
    """
    if rule not in SLIDE_RULES:
        raise ValueError(f"unknown slide rule {rule!r}")
    d = from_tableau(t)
    actual = {s.target[0]: s for s in promotion_witness(t).vertical_slides}
    out = []
    r, col = 0, 0
    while True:
        b = t.rows[r][col]
        predicted = None
        if r + 1 < t.n_rows:
            above = t.rows[r + 1]
            tops = [x for x in above if d.arc_down(x).lo <= b]
            if tops and above.index(max(tops)) >= col:
                k = above.index(max(tops))
                matched = all(t.rows[r].index(d.arc_down(x).lo) <= k for x in above[:k + 1])
                if rule == "stated" or matched:
                    predicted = max(tops)
        out.append((r, predicted))
        s = actual.get(r)
        if s is None:
            break
        r, col = s.source
    return out


def verify_slide_lemma(bound: int = 12, rule: str = "stated", rectangular_only: bool = False) -> VerifyReport:
    """Vertical jeu de taquin slides against an arc rule, over all tableaux with at most three rows."""
    if bound > MAX_BOXES:
        raise BoundExceeded(f"bound {bound} exceeds {MAX_BOXES}")
    params = {"bound": bound, "rule": rule}
    if rectangular_only:
        params["rectangular_only"] = True
    run = _Run("slides", params)
    for size in range(1, bound + 1):
        for shape in partitions(size, 3):
            if rectangular_only and not shape.is_rectangular():
                continue
            for t in enumerate_standard(shape):
                run.instances += 1
                actual = {s.target[0]: s.entry for s in promotion_witness(t).vertical_slides}
                predicted = slide_prediction(t, rule)
                for r, entry in predicted:
                    run.check(t, "slide-rule", actual.get(r) == entry, f"row {r + 1}: rule {entry} actual {actual.get(r)}")
                visited = {r for r, _ in predicted}
                run.check(t, "slide-rows", set(actual) <= visited, sorted(actual))
    return run.report()


SUITES = ("bijection", "depth", "promotion", "shuffle", "extended", "slides")


def run_suite(name: str, n: int | None = None, k: int | None = None, seed: int = 0, trials: int = 200,
              rule: str = "stated") -> VerifyReport:
    """Dispatch by suite name with the defaults the command line uses."""
    if name == "bijection":
        return verify_bijection(n or 3)
    if name == "depth":
        return verify_depth_agreement(n or 3)
    if name == "promotion":
        return verify_promotion_rotation(n or 3)
    if name == "shuffle":
        return verify_shuffle_join(seed, trials)
    if name == "extended":
        if k is not None:
            return verify_extended(n or 0, k)
        return verify_extended_all(n or 12)
    if name == "slides":
        return verify_slide_lemma(n or 9, rule)
    if name == "all":
        report = VerifyReport("all")
        for s in SUITES:
            report = report.merge(run_suite(s, n=n if s not in ("extended", "slides") else None, seed=seed, trials=trials))
        return report
    raise KeyError(name)
