from fractions import Fraction

import pytest
from hypothesis import given

from conftest import tableaux
from oracles import GOLDEN_3X2, arcs_over, circle_meet, stack_arcs
from sl3webs.errors import NotThreeRow, ParseError
from sl3webs.mdiagram import (
    Arc,
    MDiagram,
    PairPosition,
    Role,
    arcs_cross,
    circle_depth,
    containment_conflicts,
    crossings,
    depth_from_witness,
    format_mdiagram,
    from_tableau,
    join,
    pair_position,
    parse_mdiagram,
)
from sl3webs.tableau import StandardTableau, enumerate_standard


def T(*rows):
    return StandardTableau(tuple(tuple(r) for r in rows))


def arc_set(d):
    return {(a.lo, a.hi, a.level) for a in d.arcs}


class TestFromTableau:
    def test_first_example(self):
        d = from_tableau(T([1, 4], [2, 5], [3, 6]))
        assert arc_set(d) == {(1, 2, 1), (4, 5, 1), (2, 3, 2), (5, 6, 2)}
        assert d.ms == ((1, 2, 3), (4, 5, 6))

    def test_fourth_example(self):
        d = from_tableau(T([1, 2], [3, 4], [5, 6]))
        assert arc_set(d) == {(2, 3, 1), (1, 4, 1), (4, 5, 2), (3, 6, 2)}
        assert set(d.ms) == {(2, 3, 6), (1, 4, 5)}
        assert len(crossings(d)) == 1

    def test_single_column(self):
        d = from_tableau(T([1], [2], [3]))
        assert arc_set(d) == {(1, 2, 1), (2, 3, 2)}
        assert d.roles == {1: Role.FIRST_OF_M, 2: Role.MIDDLE_OF_M, 3: Role.THIRD_OF_M}

    @pytest.mark.parametrize("rows", list(GOLDEN_3X2))
    def test_golden_pictures(self, rows):
        d = from_tableau(T(*rows))
        assert {(a.lo, a.hi) for a in d.arcs} == GOLDEN_3X2[rows]["arcs"]

    def test_roles_of_a_non_rectangular_shape(self):
        d = from_tableau(T([1, 4, 6], [2, 5], [3]))
        assert d.roles[6] == Role.UNUSED
        assert (d.roles[4], d.roles[5]) == (Role.ISOLATED_LO, Role.ISOLATED_HI)

    def test_four_rows_give_chains(self):
        d = from_tableau(T([1], [2], [3], [4]))
        assert set(d.roles.values()) == {Role.CHAINED}
        assert d.max_level == 3

    @given(tableaux(max_rows=5, max_size=12))
    def test_matches_stack_oracle(self, t):
        assert arc_set(from_tableau(t)) == stack_arcs(t)

    @given(tableaux(max_rows=5, max_size=12))
    def test_same_level_arcs_never_cross(self, t):
        d = from_tableau(t)
        for a in d.arcs:
            for b in d.arcs:
                if a < b and a.level == b.level:
                    assert not arcs_cross(a, b)

    @given(tableaux(max_size=12))
    def test_three_row_crossings_pair_levels_one_and_two(self, t):
        d = from_tableau(t)
        for c in crossings(d):
            assert {c.arc_a.level, c.arc_b.level} == {1, 2}
        for p in range(1, d.n_points + 1):
            assert (d.arc_up(p) is not None) + (d.arc_down(p) is not None) <= 2


class TestCrossings:
    def test_arcs_cross(self):
        assert arcs_cross(Arc(1, 4, 1), Arc(3, 6, 2))
        assert not arcs_cross(Arc(2, 3, 1), Arc(1, 4, 1))
        assert not arcs_cross(Arc(1, 2, 1), Arc(3, 4, 1))
        assert not arcs_cross(Arc(1, 2, 1), Arc(2, 3, 2))

    def test_equal_radii_meet_halfway(self):
        (c,) = crossings(from_tableau(T([1, 2], [3, 4], [5, 6])))
        assert (c.arc_a.lo, c.arc_a.hi, c.arc_b.lo, c.arc_b.hi) == (1, 4, 3, 6)
        x, y2 = circle_meet((1, 4), (3, 6))
        assert c.x == x == Fraction(7, 2)
        assert c.y_squared == y2 == Fraction(5, 4)

    def test_none_without_interleaving(self):
        assert crossings(from_tableau(T([1, 4], [2, 5], [3, 6]))) == ()
        assert crossings(from_tableau(T([1], [2], [3]))) == ()

    @given(tableaux(max_size=12))
    def test_abscissa_matches_circle_oracle(self, t):
        for c in crossings(from_tableau(t)):
            x, y2 = circle_meet((c.arc_a.lo, c.arc_a.hi), (c.arc_b.lo, c.arc_b.hi))
            assert c.x == x and c.y_squared == y2 > 0
            inner_lo = max(c.arc_a.lo, c.arc_b.lo)
            inner_hi = min(c.arc_a.hi, c.arc_b.hi)
            assert inner_lo < c.x < inner_hi

    @given(tableaux(max_size=12))
    def test_order_along_each_arc(self, t):
        by_arc = {}
        for c in crossings(from_tableau(t)):
            by_arc.setdefault(c.arc_a, []).append((c.index_a, c.x))
            by_arc.setdefault(c.arc_b, []).append((c.index_b, c.x))
        for items in by_arc.values():
            assert [k for k, _ in sorted(items, key=lambda p: p[1])] == list(range(len(items)))


class TestPairPosition:
    def positions(self, *rows):
        d = from_tableau(T(*rows))
        return pair_position(d, *d.ms)

    def test_disjoint(self):
        assert self.positions([1, 4], [2, 5], [3, 6]) == PairPosition.DISJOINT

    def test_nested_under_first_arc(self):
        # (2,3,4) sits under the arc (1,5) of the m (1,5,6)
        assert self.positions([1, 2], [3, 5], [4, 6]) == PairPosition.NESTED_UNDER_FIRST_ARC

    def test_nested_under_second_arc(self):
        # (3,4,5) sits under the arc (2,6) of the m (1,2,6)
        assert self.positions([1, 3], [2, 4], [5, 6]) == PairPosition.NESTED_UNDER_SECOND_ARC

    def test_crossings(self):
        assert self.positions([1, 3], [2, 5], [4, 6]) == PairPosition.CROSS_SECOND_OVER_FIRST
        assert self.positions([1, 2], [3, 4], [5, 6]) == PairPosition.CROSS_FIRST_OVER_SECOND

    def test_order_of_arguments_does_not_matter(self):
        d = from_tableau(T([1, 2], [3, 5], [4, 6]))
        a, b = d.ms
        assert pair_position(d, a, b) == pair_position(d, b, a)

    def test_needs_three_rows(self):
        d = from_tableau(T([1, 4], [2, 5], [3, 6], [7]))
        with pytest.raises(NotThreeRow):
            pair_position(d, (1, 2, 3), (4, 5, 6))

    @pytest.mark.parametrize("n", [3, 4])
    def test_total_on_rectangles(self, n):
        for t in enumerate_standard((n, n, n)):
            d = from_tableau(t)
            for a in d.ms:
                for b in d.ms:
                    if a < b:
                        pair_position(d, a, b)


class TestCircleDepth:
    @pytest.mark.parametrize("rows", list(GOLDEN_3X2))
    def test_golden_labels(self, rows):
        d = from_tableau(T(*rows))
        faces = circle_depth(d)
        expected = GOLDEN_3X2[rows]
        assert sorted(f.depth for f in faces if not f.is_exterior) == expected["face_depths"]
        for f in faces:
            for i in f.witnesses:
                if i in expected["segments"]:
                    assert f.depth == expected["segments"][i]

    def test_empty_diagram(self):
        faces = circle_depth(MDiagram(0, ()))
        assert [(f.depth, f.is_outer) for f in faces] == [(0, True)]

    def test_outer_face_is_empty(self):
        faces = circle_depth(from_tableau(T([1, 2], [3, 4], [5, 6])))
        (outer,) = [f for f in faces if f.is_outer]
        assert outer.containment == frozenset()

    @given(tableaux(max_size=12))
    def test_path_independent(self, t):
        assert containment_conflicts(from_tableau(t)) == []

    @given(tableaux(max_size=12))
    def test_witness_depth(self, t):
        d = from_tableau(t)
        arcs = [(a.lo, a.hi) for a in d.arcs]
        for f in circle_depth(d):
            for i in f.witnesses:
                expected = 0 if i == d.n_points else arcs_over(arcs, Fraction(2 * i + 1, 2))
                assert f.depth == expected == depth_from_witness(d, i)


class TestJoin:
    def test_arc_into_m(self):
        m = MDiagram(3, (Arc(1, 2, 1), Arc(2, 3, 2)))
        arc = MDiagram(2, (Arc(1, 2, 1),))
        joined = join(m, 1, arc)
        assert joined.ms == ((1, 4, 5),)
        assert [(a.lo, a.hi) for a in joined.isolated_arcs] == [(2, 3)]

    def test_at_the_end_concatenates(self):
        m = from_tableau(T([1], [2], [3]))
        assert arc_set(join(m, 3, m)) == arc_set(from_tableau(T([1, 4], [2, 5], [3, 6])))


class TestFormat:
    def test_print(self):
        d = from_tableau(T([1, 2], [3, 4], [5, 6]))
        assert format_mdiagram(d) == "N=6\narc 1 4 level 1\narc 2 3 level 1\narc 3 6 level 2\narc 4 5 level 2\n"

    @pytest.mark.parametrize("text, line, column", [
        ("", 1, 1),
        ("M=3\n", 1, 1),
        ("N=3\narc 1 2 level 1\n  bend 2 3\n", 3, 3),
        ("N=3\narc 2 1 level 1\n", 2, 1),
    ])
    def test_parse_errors(self, text, line, column):
        with pytest.raises(ParseError) as info:
            parse_mdiagram(text)
        assert (info.value.line, info.value.column) == (line, column)

    @given(tableaux(max_rows=5, max_size=15))
    def test_round_trip(self, t):
        d = from_tableau(t)
        assert parse_mdiagram(format_mdiagram(d)) == d
