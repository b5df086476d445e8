"""Independent reference computations used by the tests.

Nothing here calls the code paths it is meant to check: counts come from
brute force, arcs from a stack matcher, promotion from Bender-Knuth moves,
crossings from the circle equations, and face counts from Euler's formula.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from sl3webs.tableau import StandardTableau


def brute_force_count(row_lengths) -> int:
    """Count standard fillings of a shape by trying every permutation."""
    n = sum(row_lengths)
    count = 0
    for perm in permutations(range(1, n + 1)):
        rows, k = [], 0
        for length in row_lengths:
            rows.append(perm[k:k + length])
            k += length
        ok = all(row[c] < row[c + 1] for row in rows for c in range(len(row) - 1))
        ok = ok and all(rows[r][c] > rows[r - 1][c] for r in range(1, len(rows)) for c in range(len(rows[r])))
        count += ok
    return count


def stack_arcs(t: StandardTableau) -> set[tuple[int, int, int]]:
    """Arcs (lo, hi, level) by scanning entries left to right with one stack per row pair."""
    row_of = {x: r for r, row in enumerate(t.rows) for x in row}
    stacks: dict[int, list[int]] = {r: [] for r in range(t.n_rows)}
    arcs = set()
    for x in range(1, t.size + 1):
        r = row_of[x]
        if r > 0:
            lo = stacks[r - 1].pop()
            arcs.add((lo, x, r))
        stacks[r].append(x)
    return arcs


def bender_knuth_promotion(t: StandardTableau) -> StandardTableau:
    """Promotion as the composite of Bender-Knuth moves on the row word."""
    word = list(t.row_word)
    for i in range(len(word) - 1):
        trial = word.copy()
        trial[i], trial[i + 1] = trial[i + 1], trial[i]
        try:
            StandardTableau.from_row_word(trial)
        except ValueError:
            continue
        word = trial
    return StandardTableau.from_row_word(word)


def definition_shuffle(inner: StandardTableau, i: int, outer: StandardTableau) -> StandardTableau:
    """Shuffle by the three placement rules, row by row."""
    rows: dict[int, list[int]] = {}
    for r, row in enumerate(outer.rows):
        for j in row:
            rows.setdefault(r, []).append(j if j <= i else j + inner.size)
    for r, row in enumerate(inner.rows):
        for j in row:
            rows.setdefault(r, []).append(j + i)
    return StandardTableau(tuple(tuple(sorted(rows[r])) for r in sorted(rows)))


def circle_meet(a: tuple[int, int], b: tuple[int, int]) -> tuple[Fraction, Fraction]:
    """Abscissa and squared height where two upper semicircles on the given diameters meet.

    Subtracting (x - c1)^2 + y^2 = r1^2 from the second circle's equation is
    linear in x; the height then comes from the first circle.
    """
    c1, r1 = Fraction(a[0] + a[1], 2), Fraction(a[1] - a[0], 2)
    c2, r2 = Fraction(b[0] + b[1], 2), Fraction(b[1] - b[0], 2)
    # x^2 - 2 c1 x + c1^2 - r1^2 = x^2 - 2 c2 x + c2^2 - r2^2
    x = (c2 * c2 - r2 * r2 - c1 * c1 + r1 * r1) / (2 * (c2 - c1))
    return x, r1 * r1 - (x - c1) ** 2


def euler_faces(n_vertices: int, n_edges: int, n_boundary: int) -> int:
    """Faces of a connected plane map with the boundary walls counted as edges."""
    return 2 - n_vertices + n_edges + n_boundary


def arcs_over(arcs, x: Fraction) -> int:
    return sum(1 for lo, hi, *_ in arcs if lo < x < hi)


# depth labels read off the five 3 x 2 pictures: segment (i, i+1) -> depth, plus the sorted face depths
GOLDEN_3X2 = {
    ((1, 4), (2, 5), (3, 6)): {
        "arcs": {(1, 2), (4, 5), (2, 3), (5, 6)},
        "crossings": 0,
        "segments": {1: 1, 2: 1, 3: 0, 4: 1, 5: 1},
        "face_depths": [0, 1, 1, 1, 1],
    },
    ((1, 2), (3, 5), (4, 6)): {
        "arcs": {(2, 3), (1, 5), (3, 4), (5, 6)},
        "crossings": 0,
        "segments": {2: 2, 3: 2, 4: 1, 5: 1},
        "face_depths": [0, 1, 1, 2, 2],
    },
    ((1, 3), (2, 4), (5, 6)): {
        "arcs": {(3, 4), (1, 2), (4, 5), (2, 6)},
        "crossings": 0,
        "segments": {1: 1, 2: 1, 3: 2, 4: 2},
        "face_depths": [0, 1, 1, 2, 2],
    },
    ((1, 2), (3, 4), (5, 6)): {
        "arcs": {(1, 4), (2, 3), (4, 5), (3, 6)},
        "crossings": 1,
        "segments": {1: 1, 2: 2, 3: 2, 4: 2, 5: 1},
        "face_depths": [0, 1, 1, 2, 2, 2],
    },
    ((1, 3), (2, 5), (4, 6)): {
        "arcs": {(1, 2), (3, 5), (5, 6), (2, 4)},
        "crossings": 1,
        "segments": {1: 1, 2: 1, 3: 2, 4: 1, 5: 1},
        "face_depths": [0, 1, 1, 1, 1, 2],
    },
}


def ballot_count(row_lengths) -> int:
    """Count lattice words filling the rows (bottom row first) by dynamic programming over row fill levels."""
    target = tuple(row_lengths)
    ways = {tuple(0 for _ in target): 1}
    for _ in range(sum(target)):
        step: dict[tuple[int, ...], int] = {}
        for filled, count in ways.items():
            for r in range(len(target)):
                if filled[r] < target[r] and (r == 0 or filled[r] < filled[r - 1]):
                    nxt = filled[:r] + (filled[r] + 1,) + filled[r + 1:]
                    step[nxt] = step.get(nxt, 0) + count
        ways = step
    return sum(ways.values())


def hook_product_count(row_lengths) -> int:
    """n! over the product of hooks, with hooks taken from column heights."""
    from math import factorial, prod
    rows = list(row_lengths)
    heights = [sum(1 for length in rows if length > c) for c in range(max(rows, default=0))]
    hooks = prod(rows[r] - c - 1 + heights[c] - r - 1 + 1 for r in range(len(rows)) for c in range(rows[r]))
    return factorial(sum(rows)) // hooks


def expected_delta(arcs, p: int) -> int:
    """+1 if an arc starts at p, -1 if one ends there, summed."""
    return sum(1 for lo, _, _ in arcs if lo == p) - sum(1 for _, hi, _ in arcs if hi == p)
