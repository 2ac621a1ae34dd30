import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dbic.balls import (BFB, FBF, PathParams, Pattern, all_balls, ball_bfs,
                        ball_closed_form, enumerate_path_params, pattern_for,
                        prefix_bound, prefix_margin, prefix_set)
from dbic.errors import InvalidParameters, NotApplicable
from dbic.graph import DeBruijnGraph
from dbic.strings import DBString, decode, encode
from dbic.vertexset import popcount, to_ids

from oracles import all_strings, ball_strings


def names(g, mask):
    return {g.vertex_string(v) for v in to_ids(mask)}


class TestBallBfs:
    def test_radius_one_at_011(self):
        g = DeBruijnGraph(2, 3)
        got = names(g, ball_bfs(g, encode(DBString.parse("011", 2)), 1))
        assert got == {"011", "001", "101", "110", "111"}

    def test_radius_zero(self):
        g = DeBruijnGraph(3, 4)
        assert to_ids(ball_bfs(g, 17, 0)) == [17]

    def test_radius_two_at_011_reaches_everything(self):
        # hand BFS: 000 and 100 are both two steps away via 001
        g = DeBruijnGraph(2, 3)
        got = names(g, ball_bfs(g, encode(DBString.parse("011", 2)), 2))
        assert got == set(all_strings(2, 3))

    def test_frozen_two_ball_in_ternary(self):
        g = DeBruijnGraph(3, 3)
        got = names(g, ball_bfs(g, encode(DBString.parse("012", 3)), 2))
        assert got == {
            "000", "001", "010", "011", "012", "020", "100", "101", "110",
            "112", "120", "121", "122", "200", "201", "202", "210", "211",
            "212", "220", "221", "222",
        }

    def test_rejects_negative_radius(self):
        with pytest.raises(InvalidParameters):
            ball_bfs(DeBruijnGraph(2, 2), 0, -1)

    def test_all_balls_indexed_by_vertex(self):
        g = DeBruijnGraph(2, 3)
        balls = all_balls(g, 1)
        assert len(balls) == 8
        for v in range(8):
            assert balls[v] == ball_bfs(g, v, 1)


class TestPathParams:
    def test_radius_zero_is_empty(self):
        assert enumerate_path_params(0) == []

    def test_radius_one(self):
        assert enumerate_path_params(1) == [
            PathParams(FBF, (0, 1, 0), 1),
            PathParams(BFB, (0, 1, 0), 1),
        ]

    def test_radius_two_includes_balanced_runs(self):
        # the equal-length run shapes rewrite the first/last symbol and are
        # not reachable through any strictly-dominant triple
        got = enumerate_path_params(2)
        assert [p.runs for p in got if p.kind == FBF] == [
            (0, 1, 0), (0, 1, 1), (0, 2, 0), (1, 1, 0)]
        assert [p.runs for p in got if p.kind == BFB] == [
            (0, 1, 0), (0, 1, 1), (0, 2, 0), (1, 1, 0)]

    def test_dominance_and_budget_hold(self):
        for p in enumerate_path_params(4):
            first, middle, last = p.runs
            assert middle >= 1 and middle >= first and middle >= last
            assert first + middle + last <= 4

    def test_invalid_params_rejected(self):
        with pytest.raises(InvalidParameters):
            PathParams(FBF, (2, 1, 0), 4)
        with pytest.raises(InvalidParameters):
            PathParams(BFB, (0, 1, 2), 4)
        with pytest.raises(InvalidParameters):
            PathParams(FBF, (1, 2, 1), 3)
        with pytest.raises(InvalidParameters):
            PathParams("XYZ", (0, 1, 0), 1)


class TestPatternFor:
    def test_single_backward_step(self):
        x = DBString.parse("0112", 3)
        p = pattern_for(x, PathParams(FBF, (0, 1, 0), 1))
        assert str(p) == "112*"

    def test_single_forward_step(self):
        x = DBString.parse("0112", 3)
        p = pattern_for(x, PathParams(BFB, (0, 1, 0), 1))
        assert str(p) == "*011"

    def test_empty_middle(self):
        x = DBString.parse("01", 3)
        p = pattern_for(x, PathParams(FBF, (0, 2, 0), 2))
        assert str(p) == "**"
        assert p.mid.n == 0

    def test_balanced_runs_rewrite_first_symbol(self):
        x = DBString.parse("0112", 3)
        p = pattern_for(x, PathParams(FBF, (0, 1, 1), 2))
        assert str(p) == "*112"

    def test_not_applicable_when_run_exceeds_length(self):
        x = DBString.parse("01", 3)
        with pytest.raises(NotApplicable):
            pattern_for(x, PathParams(FBF, (0, 3, 0), 3))
        with pytest.raises(NotApplicable):
            pattern_for(x, PathParams(BFB, (0, 3, 0), 3))

    def test_expansion_cardinality(self):
        p = Pattern(3, 1, DBString.parse("01", 3), 1)
        assert p.count == 9
        assert popcount(p.expand()) == 9

    def test_expansion_matches_brute_force(self):
        p = Pattern(3, 2, DBString.parse("2", 3), 1)
        got = {str(decode(v, 3, 4)) for v in to_ids(p.expand())}
        want = {a + b + "2" + c
                for a in "012" for b in "012" for c in "012"}
        assert got == want

    def test_bracketed_form_for_wide_alphabets(self):
        p = Pattern(12, 1, DBString(12, (10, 3)), 0)
        assert str(p) == "[*,10,3]"


class TestClosedForm:
    def test_matches_theorem_ball_shape(self):
        x = DBString.parse("011", 2)
        g = DeBruijnGraph(2, 3)
        assert ball_closed_form(x, 1) == ball_bfs(g, encode(x), 1)

    def test_radius_zero_is_center(self):
        x = DBString.parse("120", 3)
        assert to_ids(ball_closed_form(x, 0)) == [encode(x)]

    def test_covers_first_symbol_rewrites(self):
        # 1100 is two steps from 0100 (0100 -> 1000 -> 1100); only the
        # balanced backward-forward shape produces it
        x = DBString.parse("0100", 2)
        g = DeBruijnGraph(2, 4)
        mask = ball_closed_form(x, 2)
        assert (mask >> encode(DBString.parse("1100", 2))) & 1
        assert mask == ball_bfs(g, encode(x), 2)

    def test_raises_outside_validity(self):
        with pytest.raises(NotApplicable):
            ball_closed_form(DBString.parse("01", 3), 3)

    @pytest.mark.parametrize("d,n,t", [
        (2, 2, 1), (2, 4, 2), (2, 5, 3), (2, 6, 2),
        (3, 2, 2), (3, 3, 2), (3, 4, 3), (3, 5, 2),
        (4, 2, 1), (4, 3, 2), (4, 4, 4),
    ])
    def test_equals_bfs_exhaustively(self, d, n, t):
        g = DeBruijnGraph(d, n)
        for v in range(g.vertex_count):
            x = decode(v, d, n)
            assert ball_closed_form(x, t) == ball_bfs(g, v, t), str(x)

    @given(st.integers(2, 4), st.data())
    @settings(max_examples=40, deadline=None)
    def test_monotone_and_symmetric(self, d, data):
        n = data.draw(st.integers(1, 5))
        g = DeBruijnGraph(d, n)
        v = data.draw(st.integers(0, g.vertex_count - 1))
        t = data.draw(st.integers(0, n))
        ball = ball_bfs(g, v, t)
        assert ball & ball_bfs(g, v, t + 1) == ball  # monotone in t
        w = data.draw(st.integers(0, g.vertex_count - 1))
        assert bool((ball >> w) & 1) == bool((ball_bfs(g, w, t) >> v) & 1)


class TestPrefixSet:
    def test_distinct_prefixes_bounded_pair(self):
        got = {str(p) for p in prefix_set(DBString.parse("0123", 4), 1)}
        assert got <= {"0", "1"}
        assert len(got) <= 2

    def test_constant_word_collapses(self):
        got = prefix_set(DBString.parse("0000", 2), 1)
        assert {str(p) for p in got} == {"0"}

    def test_frozen_ternary_example(self):
        got = {str(p) for p in prefix_set(DBString.parse("001122", 3), 2)}
        assert got == {"00", "01", "10", "11", "20"}
        assert len(got) <= prefix_bound(3, 2).total

    def test_requires_long_strings(self):
        with pytest.raises(InvalidParameters):
            prefix_set(DBString.parse("012", 3), 2)
        with pytest.raises(InvalidParameters):
            prefix_set(DBString.parse("012", 3), 0)

    def test_prefixes_against_string_oracle(self):
        d, n, t = 3, 4, 2
        for v in range(d ** n):
            x = decode(v, d, n)
            word = str(x)
            ball = ball_strings(word, d, t)
            kept = {y[:t] for y in ball if y[t:] != word[:n - t]}
            assert {str(p) for p in prefix_set(x, t)} == kept


class TestPrefixBound:
    def test_radius_one(self):
        b = prefix_bound(3, 1)
        assert (b.center, b.right_shifted, b.left_shifted, b.total) == (1, 1, 0, 2)

    def test_radius_two(self):
        assert prefix_bound(3, 2).total == 6

    def test_radius_three_cases(self):
        b = prefix_bound(4, 3)
        assert b.total == 39
        assert (b.center, b.right_shifted, b.left_shifted) == (1, 6, 32)

    @pytest.mark.parametrize("d", range(2, 7))
    @pytest.mark.parametrize("t", range(1, 9))
    def test_cases_recombine_to_closed_form(self, d, t):
        b = prefix_bound(d, t)
        closed = 1 - d ** (t // 2) + 2 * sum(d ** j for j in range(t))
        assert b.center + b.right_shifted + b.left_shifted == closed
        assert b.total == closed

    def test_rejects_bad_parameters(self):
        with pytest.raises(InvalidParameters):
            prefix_bound(1, 2)
        with pytest.raises(InvalidParameters):
            prefix_bound(3, 0)


class TestPrefixMargin:
    @pytest.mark.parametrize("d,t,value", [(3, 1, 2), (3, 2, 4), (2, 4, -10)])
    def test_frozen_values(self, d, t, value):
        assert prefix_margin(d, t) == value

    def test_relation_to_bound(self):
        for d in range(2, 7):
            for t in range(1, 9):
                assert prefix_margin(d, t) == d ** t - (prefix_bound(d, t).total - 1)
