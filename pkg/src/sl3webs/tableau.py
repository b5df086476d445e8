"""Standard Young tableaux: validation, counting, enumeration, promotion, shuffle.

Rows are indexed bottom row first, so row 0 holds the entry 1 and columns
increase upward.  A tableau is an immutable value; every operation returns
a new one.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, NamedTuple, Sequence

from .errors import (
    ColumnNotIncreasing,
    DuplicateEntry,
    EmptyTableau,
    EntryOutOfRange,
    InvalidResultShape,
    ParseError,
    PositionOutOfRange,
    RowNotIncreasing,
    ShapeMismatch,
)

Cell = tuple[int, int]


@dataclass(frozen=True)
class Shape:
    """Row lengths listed bottom row first; weakly decreasing upward."""

    row_lengths: tuple[int, ...] = ()

    def __post_init__(self):
        lengths = tuple(int(x) for x in self.row_lengths)
        object.__setattr__(self, "row_lengths", lengths)
        for r, length in enumerate(lengths):
            if length <= 0:
                raise ShapeMismatch(f"row {r} has non-positive length {length}")
            if r and length > lengths[r - 1]:
                raise ShapeMismatch(
                    f"row {r} (length {length}) is longer than row {r - 1} "
                    f"(length {lengths[r - 1]})"
                )

    @classmethod
    def rectangle(cls, rows: int, cols: int) -> "Shape":
        return cls((cols,) * rows if cols else ())

    @property
    def size(self) -> int:
        return sum(self.row_lengths)

    @property
    def n_rows(self) -> int:
        return len(self.row_lengths)

    def is_rectangular(self) -> bool:
        return len(set(self.row_lengths)) <= 1

    def __iter__(self):
        return iter(self.row_lengths)

    def __len__(self):
        return len(self.row_lengths)

    def __str__(self):
        return ",".join(map(str, self.row_lengths))


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        _check_standard(rows)

    @classmethod
    def from_row_word(cls, word: Sequence[int]) -> "StandardTableau":
        """Build the tableau putting entry ``i + 1`` on row ``word[i]``."""
        n_rows = max(word, default=-1) + 1
        rows: list[list[int]] = [[] for _ in range(n_rows)]
        for entry, r in enumerate(word, start=1):
            rows[r].append(entry)
        return cls(tuple(tuple(row) for row in rows))

    @property
    def shape(self) -> Shape:
        return Shape(tuple(len(row) for row in self.rows))

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def row_word(self) -> tuple[int, ...]:
        """Row index of each entry 1..N, in entry order."""
        word = [0] * self.size
        for r, row in enumerate(self.rows):
            for entry in row:
                word[entry - 1] = r
        return tuple(word)

    def cell(self, entry: int) -> Cell:
        for r, row in enumerate(self.rows):
            if entry in row:
                return r, row.index(entry)
        raise KeyError(entry)

    def __str__(self):
        return format_tableau(self)


def _check_standard(rows):
    seen: dict[int, Cell] = {}
    n = sum(len(row) for row in rows)
    for r, row in enumerate(rows):
        if not row:
            raise ShapeMismatch(f"row {r} is empty")
        if r and len(row) > len(rows[r - 1]):
            raise ShapeMismatch(
                f"row {r} has {len(row)} boxes but row {r - 1} has {len(rows[r - 1])}"
            )
        for c, entry in enumerate(row):
            if entry in seen:
                raise DuplicateEntry(
                    f"entry {entry} at cell ({r}, {c}) already used at cell {seen[entry]}"
                )
            seen[entry] = (r, c)
    for entry, (r, c) in seen.items():
        if not 1 <= entry <= n:
            raise EntryOutOfRange(f"entry {entry} at cell ({r}, {c}) is outside 1..{n}")
    for r, row in enumerate(rows):
        for c in range(1, len(row)):
            if row[c] <= row[c - 1]:
                raise RowNotIncreasing(
                    f"cell ({r}, {c}) holds {row[c]}, not greater than {row[c - 1]} on its left"
                )
        if r:
            below = rows[r - 1]
            for c, entry in enumerate(row):
                if entry <= below[c]:
                    raise ColumnNotIncreasing(
                        f"cell ({r}, {c}) holds {entry}, not greater than {below[c]} below it"
                    )


def validate(shape: Shape | Sequence[int], rows: Sequence[Sequence[int]]) -> StandardTableau:
    """Check a raw filling against ``shape`` and return it as a tableau."""
    shape = shape if isinstance(shape, Shape) else Shape(tuple(shape))
    if len(rows) != shape.n_rows:
        raise ShapeMismatch(f"shape has {shape.n_rows} rows but filling has {len(rows)}")
    for r, (row, length) in enumerate(zip(rows, shape.row_lengths)):
        if len(row) != length:
            raise ShapeMismatch(f"row {r} has {len(row)} boxes, shape requires {length}")
    return StandardTableau(tuple(tuple(row) for row in rows))


def partitions(size: int, max_rows: int | None = None, cap: int | None = None) -> Iterator[Shape]:
    """Shapes with ``size`` boxes and at most ``max_rows`` rows, longest bottom row first."""
    max_rows = size if max_rows is None else max_rows
    cap = size if cap is None else cap
    if size == 0:
        yield Shape(())
        return
    if max_rows == 0:
        return
    for first in range(min(size, cap), 0, -1):
        for rest in partitions(size - first, max_rows - 1, first):
            yield Shape((first,) + rest.row_lengths)


def hook_lengths(shape: Shape) -> list[list[int]]:
    lengths = shape.row_lengths
    hooks = []
    for r, length in enumerate(lengths):
        row = []
        for c in range(length):
            arm = length - c - 1
            leg = sum(1 for rr in range(r + 1, len(lengths)) if lengths[rr] > c)
            row.append(arm + leg + 1)
        hooks.append(row)
    return hooks


def count_standard(shape: Shape | Sequence[int]) -> int:
    """Number of standard tableaux of ``shape`` by the hook length formula."""
    shape = shape if isinstance(shape, Shape) else Shape(tuple(shape))
    hooks = prod(h for row in hook_lengths(shape) for h in row)
    return factorial(shape.size) // hooks


def enumerate_standard(shape: Shape | Sequence[int]) -> Iterator[StandardTableau]:
    """Yield every standard tableau of ``shape``.

    Order is lexicographic in the row word (row of 1, row of 2, ...).
    """
    shape = shape if isinstance(shape, Shape) else Shape(tuple(shape))
    lengths = shape.row_lengths
    filled = [0] * len(lengths)
    word: list[int] = []

    def extend():
        if len(word) == shape.size:
            yield StandardTableau.from_row_word(word)
            return
        for r, length in enumerate(lengths):
            if filled[r] < length and (r == 0 or filled[r] < filled[r - 1]):
                filled[r] += 1
                word.append(r)
                yield from extend()
                word.pop()
                filled[r] -= 1

    yield from extend()


def random_standard(shape: Shape | Sequence[int], rng: random.Random) -> StandardTableau:
    """Uniformly random tableau of ``shape``.

    The largest entry goes into an outer corner chosen with probability
    proportional to the number of tableaux of the remaining shape.
    """
    shape = shape if isinstance(shape, Shape) else Shape(tuple(shape))
    lengths = list(shape.row_lengths)
    word = [0] * shape.size
    for entry in range(shape.size, 0, -1):
        corners = [
            r for r, length in enumerate(lengths)
            if r + 1 == len(lengths) or lengths[r + 1] < length
        ]
        weights = []
        for r in corners:
            rest = lengths.copy()
            rest[r] -= 1
            weights.append(count_standard(Shape(tuple(x for x in rest if x))))
        (r,) = rng.choices(corners, weights=weights)
        word[entry - 1] = r
        lengths[r] -= 1
        if lengths[r] == 0:
            lengths.pop()
    return StandardTableau.from_row_word(word)


class Slide(NamedTuple):
    entry: int
    source: Cell
    target: Cell

    @property
    def vertical(self) -> bool:
        return self.source[0] != self.target[0]


@dataclass(frozen=True)
class PromotionWitness:
    """Record of the jeu de taquin slides made while promoting a tableau."""

    start: Cell
    slides: tuple[Slide, ...]

    @property
    def path(self) -> tuple[Cell, ...]:
        """Successive positions of the empty box, from the removed 1 to the final corner."""
        return (self.start,) + tuple(s.source for s in self.slides)

    @property
    def vertical_slides(self) -> tuple[Slide, ...]:
        return tuple(s for s in self.slides if s.vertical)


def _slide_out(rows) -> tuple[list[list[int]], PromotionWitness]:
    grid = [list(row) for row in rows]
    r, c = 0, 0
    grid[0][0] = 0
    slides = []
    while True:
        above = grid[r + 1][c] if r + 1 < len(grid) and c < len(grid[r + 1]) else None
        right = grid[r][c + 1] if c + 1 < len(grid[r]) else None
        if above is None and right is None:
            break
        if right is None or (above is not None and above < right):
            src = (r + 1, c)
        else:
            src = (r, c + 1)
        entry = grid[src[0]][src[1]]
        slides.append(Slide(entry, src, (r, c)))
        grid[r][c] = entry
        grid[src[0]][src[1]] = 0
        r, c = src
    return grid, PromotionWitness((0, 0), tuple(slides))


def promotion_witness(t: StandardTableau) -> PromotionWitness:
    if t.size == 0:
        raise EmptyTableau("cannot promote the empty tableau")
    return _slide_out(t.rows)[1]


def promote(t: StandardTableau) -> StandardTableau:
    """Jeu de taquin promotion: remove 1, slide, decrement everything, insert N."""
    if t.size == 0:
        raise EmptyTableau("cannot promote the empty tableau")
    grid, _ = _slide_out(t.rows)
    n = t.size
    rows = tuple(tuple(x - 1 if x else n for x in row) for row in grid)
    return StandardTableau(rows)


def shuffle(t_inner: StandardTableau, i: int, t_outer: StandardTableau) -> StandardTableau:
    """Shuffle ``t_inner`` into ``t_outer`` after position ``i``.

    Entries 1..i follow ``t_outer``; the next N' entries follow ``t_inner``;
    the rest follow the remainder of ``t_outer``.
    """
    n = t_outer.size
    if not 0 <= i <= n:
        raise PositionOutOfRange(f"shuffle position {i} not in 0..{n}")
    outer = t_outer.row_word
    word = outer[:i] + t_inner.row_word + outer[i:]
    counts = [word.count(r) for r in range(max(word, default=-1) + 1)]
    if any(counts[r] > counts[r - 1] for r in range(1, len(counts))) or 0 in counts:
        raise InvalidResultShape(f"shuffle produces row lengths {counts}")
    try:
        return StandardTableau.from_row_word(word)
    except (RowNotIncreasing, ColumnNotIncreasing, ShapeMismatch) as exc:
        raise InvalidResultShape(str(exc)) from exc


def format_tableau(t: StandardTableau) -> str:
    """Rows bottom to top separated by ``/``, e.g. ``1 2 / 3 4 / 5 6``."""
    return " / ".join(" ".join(map(str, row)) for row in t.rows)


def parse_tableau(text: str) -> StandardTableau:
    """Inverse of :func:`format_tableau`; rejects anything :func:`validate` rejects."""
    if not text.strip():
        return StandardTableau(())
    rows: list[list[int]] = [[]]
    for m in re.finditer(r"/|[^\s/]+", text):
        token = m.group()
        if token == "/":
            if not rows[-1]:
                raise ParseError("empty row", 1, m.start() + 1)
            rows.append([])
        elif token.isdigit():
            rows[-1].append(int(token))
        else:
            raise ParseError(f"expected a positive integer, got {token!r}", 1, m.start() + 1)
    if not rows[-1]:
        raise ParseError("empty row", 1, len(text) + 1)
    return StandardTableau(tuple(tuple(row) for row in rows))
