import pytest

from wordavoid.riordan import family_triangle
from wordavoid.rules import (
    Label,
    LevelCensus,
    Production,
    avoid_rule,
    catalan_marked_rule,
    catalan_plain_rule,
    expand,
    expand_exhaustive,
    motzkin_jump_rule,
)

CATALAN = [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786]


def levelmap(census, level):
    return {v: census.count(level, v) for v in census.level_values(level)}


class TestLabel:
    def test_defaults(self):
        lab = Label(3)
        assert lab.value == 3
        assert not lab.marked
        assert lab.variant == "plain"

    def test_flipped(self):
        lab = Label(2, marked=True)
        assert lab.flipped() == Label(2)
        assert Label(2).flipped() == lab

    def test_validation(self):
        with pytest.raises(ValueError):
            Label(-1)
        with pytest.raises(ValueError):
            Label(0, variant="odd")
        with pytest.raises(ValueError):
            Label(1, variant="zero1")

    def test_production_validation(self):
        with pytest.raises(ValueError):
            Production(0, (Label(1),))


class TestAvoidRule:
    def test_axiom_and_shape(self):
        rule = avoid_rule(2)
        assert rule.axiom == Label(0)
        plain, marked = rule.produce(3)
        assert plain.jump == 1
        assert marked.jump == 3
        # k + 3 children: two level-one variants plus values 1..k+1
        assert len(plain.labels) == 6
        assert plain.labels[0] == Label(0, variant="zero1")
        assert plain.labels[1] == Label(0, variant="zero2")
        assert plain.labels[2:] == tuple(Label(v) for v in (1, 2, 3, 4))
        assert marked.labels == tuple(lab.flipped() for lab in plain.labels)

    def test_j_validated(self):
        with pytest.raises(ValueError):
            avoid_rule(0)

    def test_level_zero(self):
        census = expand(avoid_rule(1), 0)
        assert census.counts == {(0, 0): 1}

    def test_level_one_is_family_independent(self):
        for j in (1, 2, 3):
            census = expand(avoid_rule(j), 1)
            assert levelmap(census, 1) == {0: 2, 1: 1}

    def test_j1_level_two(self):
        census = expand(avoid_rule(1), 2)
        assert levelmap(census, 2) == {0: 4, 1: 2, 2: 1}

    def test_j2_level_three(self):
        census = expand(avoid_rule(2), 3)
        assert levelmap(census, 3) == {0: 18, 1: 9, 2: 4, 3: 1}

    def test_matches_triangle_rows(self):
        for j in (1, 2, 3):
            census = expand(avoid_rule(j), 10)
            assert census.triangle_rows() == [
                list(row) for row in family_triangle(j, 10).rows
            ]


class TestCatalanRules:
    def test_plain_axiom_level(self):
        census = expand(catalan_plain_rule(), 1)
        assert levelmap(census, 1) == {2: 1, 3: 1}

    def test_marked_level_one(self):
        census = expand(catalan_marked_rule(), 1)
        assert levelmap(census, 1) == {2: 1, 3: 1}

    def test_totals_agree_and_are_catalan(self):
        plain = expand(catalan_plain_rule(), 10).totals()
        marked = expand(catalan_marked_rule(), 10).totals()
        assert plain == CATALAN
        assert marked == CATALAN


class TestMotzkinRule:
    def test_first_levels(self):
        census = expand(motzkin_jump_rule(), 3)
        assert levelmap(census, 0) == {1: 1}
        assert levelmap(census, 1) == {2: 1}
        assert census.totals() == [1, 1, 3, 6]

    def test_jump_skips_levels(self):
        # the axiom's jump-two child lands at level 2 alongside the
        # level-1 node's immediate children
        census = expand(motzkin_jump_rule(), 2)
        assert levelmap(census, 2) == {1: 2, 3: 1}


class TestExhaustiveAgreement:
    @pytest.mark.parametrize(
        "rule,levels",
        [
            (avoid_rule(1), 8),
            (avoid_rule(2), 7),
            (catalan_marked_rule(), 8),
            (motzkin_jump_rule(), 8),
        ],
        ids=["avoid-j1", "avoid-j2", "catalan-marked", "motzkin"],
    )
    def test_dp_matches_node_walk(self, rule, levels):
        assert expand(rule, levels) == expand_exhaustive(rule, levels)

    def test_node_budget_enforced(self):
        with pytest.raises(ValueError):
            expand_exhaustive(avoid_rule(1), 8, max_nodes=10)

    def test_negative_levels_rejected(self):
        with pytest.raises(ValueError):
            expand(avoid_rule(1), -1)


class TestLevelCensus:
    def test_zero_entries_dropped(self):
        census = LevelCensus(1, {(0, 0): 1, (1, 0): 0, (1, 1): 2})
        assert census.counts == {(0, 0): 1, (1, 1): 2}
        assert census.count(1, 0) == 0

    def test_matrix_and_rows(self):
        census = expand(avoid_rule(2), 3)
        m = census.matrix()
        assert len(m) == 4
        assert all(len(row) == 4 for row in m)
        assert m[3] == [18, 9, 4, 1]
        assert census.triangle_rows()[3] == [18, 9, 4, 1]

    def test_serialization_deterministic(self):
        census = expand(avoid_rule(1), 2)
        assert census.to_csv() == "1,0,0\n2,1,0\n4,2,1\n"
        assert census.to_json() == '[[1,0,0],[2,1,0],[4,2,1]]'

    def test_level_total(self):
        census = expand(avoid_rule(1), 3)
        assert census.level_total(3) == 8 + 4 + 2 + 1
