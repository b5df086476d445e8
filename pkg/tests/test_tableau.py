import random

import pytest
from hypothesis import given, strategies as st

from conftest import shapes, tableaux
from oracles import bender_knuth_promotion, brute_force_count, definition_shuffle
from sl3webs.errors import (
    ColumnNotIncreasing,
    DuplicateEntry,
    EmptyTableau,
    EntryOutOfRange,
    ParseError,
    PositionOutOfRange,
    RowNotIncreasing,
    ShapeMismatch,
)
from sl3webs.tableau import (
    Shape,
    StandardTableau,
    count_standard,
    enumerate_standard,
    format_tableau,
    parse_tableau,
    partitions,
    promote,
    promotion_witness,
    random_standard,
    shuffle,
    validate,
)


def T(*rows):
    return StandardTableau(tuple(tuple(r) for r in rows))


class TestValidate:
    def test_accepts_rectangle(self):
        t = validate((2, 2, 2), [[1, 2], [3, 4], [5, 6]])
        assert t.shape == Shape((2, 2, 2))

    @pytest.mark.parametrize("rows, error", [
        ([[1, 1], [3, 4], [5, 6]], DuplicateEntry),
        ([[2, 1], [3, 4], [5, 6]], RowNotIncreasing),
        ([[1, 4], [2, 3], [5, 6]], ColumnNotIncreasing),
        ([[1, 2], [3, 4], [5, 7]], EntryOutOfRange),
    ])
    def test_rejects(self, rows, error):
        with pytest.raises(error):
            validate((2, 2, 2), rows)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            validate((2, 2, 2), [[1, 2, 3], [4, 5], [6]])
        with pytest.raises(ShapeMismatch):
            T([1], [2, 3])

    def test_error_names_the_cell(self):
        with pytest.raises(ColumnNotIncreasing, match=r"cell \(1, 1\)"):
            T([1, 4], [2, 3])


class TestCounting:
    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 5), (3, 42), (4, 462)])
    def test_three_row_rectangles(self, n, expected):
        assert count_standard(Shape.rectangle(3, n)) == expected

    @pytest.mark.parametrize("shape", [(2, 2, 2), (3, 2, 1), (4, 2), (2, 2, 1), (3, 3), (1, 1, 1, 1), (4, 3)])
    def test_hook_formula_matches_brute_force(self, shape):
        assert count_standard(shape) == brute_force_count(shape)

    @given(shapes(max_size=9))
    def test_enumeration_is_complete_and_distinct(self, shape):
        listed = list(enumerate_standard(shape))
        assert len(listed) == len(set(listed)) == count_standard(shape)
        assert all(t.shape == shape for t in listed)

    def test_enumeration_order_is_lexicographic_in_row_word(self):
        words = [t.row_word for t in enumerate_standard((3, 3, 3))]
        assert words == sorted(words)

    def test_partitions(self):
        assert [s.row_lengths for s in partitions(4, 2)] == [(4,), (3, 1), (2, 2)]
        assert len(list(partitions(6))) == 11

    def test_random_standard_is_deterministic_and_covers_the_shape(self):
        a = [random_standard((2, 2, 2), random.Random(7)) for _ in range(3)]
        assert a[0] == a[1] == a[2]
        rng = random.Random(1)
        seen = {random_standard((2, 2, 2), rng) for _ in range(200)}
        assert seen == set(enumerate_standard((2, 2, 2)))


class TestPromotion:
    def test_non_rectangular_example(self):
        assert promote(T([1, 4], [2, 5], [3])) == T([1, 3], [2, 4], [5])

    def test_empty(self):
        with pytest.raises(EmptyTableau):
            promote(StandardTableau(()))

    @given(tableaux(max_rows=4, max_size=10, min_size=1))
    def test_matches_bender_knuth(self, t):
        assert promote(t) == bender_knuth_promotion(t)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_order_on_rectangles(self, n):
        # promotion has order 3n on 3 x n tableaux
        for t in enumerate_standard(Shape.rectangle(3, n)):
            p = t
            for _ in range(3 * n):
                p = promote(p)
            assert p == t

    def test_witness_path_ends_at_the_vacated_corner(self):
        t = T([1, 2, 5], [3, 4, 6], [7, 8])
        w = promotion_witness(t)
        end = w.path[-1]
        assert promote(t).rows[end[0]][end[1]] == t.size
        assert [s.entry for s in w.vertical_slides] == [4]


class TestShuffle:
    def test_figure_instance(self):
        got = shuffle(T([1, 3], [2, 5], [4, 6]), 3, T([1, 2], [3, 4], [5, 6]))
        assert got == T([1, 2, 4, 6], [3, 5, 8, 10], [7, 9, 11, 12])

    def test_two_row_into_column(self):
        assert shuffle(T([1], [2]), 2, T([1], [2], [3])) == T([1, 3], [2, 4], [5])

    def test_position_range(self):
        with pytest.raises(PositionOutOfRange):
            shuffle(T([1]), 3, T([1, 2]))
        with pytest.raises(PositionOutOfRange):
            shuffle(T([1]), -1, T([1, 2]))

    @given(tableaux(max_size=7), tableaux(max_size=7), st.data())
    def test_matches_definition(self, inner, outer, data):
        i = data.draw(st.integers(0, outer.size))
        assert shuffle(inner, i, outer) == definition_shuffle(inner, i, outer)


class TestFormat:
    def test_print(self):
        assert format_tableau(T([1, 2], [3, 4], [5, 6])) == "1 2 / 3 4 / 5 6"

    def test_empty(self):
        assert parse_tableau("") == StandardTableau(())
        assert format_tableau(StandardTableau(())) == ""

    @pytest.mark.parametrize("text, column", [("1 2 / / 3", 7), ("1 a", 3), ("1 2 /", 6)])
    def test_parse_errors_carry_position(self, text, column):
        with pytest.raises(ParseError) as info:
            parse_tableau(text)
        assert info.value.column == column and info.value.line == 1

    def test_parse_rejects_non_standard(self):
        with pytest.raises(ColumnNotIncreasing):
            parse_tableau("1 4 / 2 3")

    @given(tableaux(max_rows=5, max_size=15))
    def test_round_trip(self, t):
        assert parse_tableau(format_tableau(t)) == t
