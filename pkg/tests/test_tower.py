from fractions import Fraction

import pytest

import oracles
from fermat_ranks.errors import InconsistentOverrideError, ValidationError
from fermat_ranks.tower import (
    fermat_genus,
    field_degrees,
    rank_sum,
    sum_growth_ratio,
    tower_level,
    tower_table,
)


@pytest.mark.parametrize("d, g", [(1, 0), (2, 0), (3, 1), (4, 3), (9, 28)])
def test_genus_examples(d, g):
    assert fermat_genus(d) == g == oracles.lattice_genus(d)


def test_genus_rejects_zero():
    with pytest.raises(ValidationError):
        fermat_genus(0)


@pytest.mark.parametrize(
    "p, n, genus, new", [(3, 0, 0, 0), (3, 1, 1, 1), (3, 2, 28, 27), (3, 3, 325, 297), (5, 1, 6, 6)]
)
def test_tower_level(p, n, genus, new):
    lv = tower_level(p, n)
    assert (lv.genus, lv.dim_J, lv.dim_Jprime) == (genus, genus, new)
    assert lv.degree == p**n


class TestFieldDegrees:
    def test_p3_rationals(self):
        assert field_degrees(3, 3).over_Q == (2, 2, 6, 18)

    def test_totient(self):
        for p in (3, 5, 7, 11):
            degs = field_degrees(p, 4)
            assert degs.over_Q[1:] == tuple(oracles.totient(p**i) for i in range(1, 5))
            assert degs.over_F(0) == 1
        assert field_degrees(5, 2).over_Q[2] == 20

    def test_K_degree_scales(self):
        degs = field_degrees(3, 2, K_degree=4)
        assert degs.over_Q == (8, 8, 24)
        assert degs.over_K == (2, 2, 6)
        assert degs.F_degree == 8

    def test_overrides(self):
        # K = Q(zeta_9)^+ style degeneration: [F_2:F] = 1
        degs = field_degrees(3, 3, K_degree=3, overrides={0: 6, 1: 6, 2: 6, 3: 18})
        assert degs.over_K == (2, 2, 2, 6)

    @pytest.mark.parametrize(
        "overrides",
        [{2: 7}, {2: 2 * 9}, {0: 4, 1: 4}, {1: 6}, {5: 2}],
    )
    def test_inconsistent_overrides(self, overrides):
        with pytest.raises(InconsistentOverrideError):
            field_degrees(3, 3, overrides=overrides)

    def test_not_linearly_disjoint_needs_overrides(self):
        with pytest.raises(ValidationError):
            field_degrees(3, 2, linearly_disjoint=False)
        degs = field_degrees(3, 1, K_degree=2, linearly_disjoint=False, overrides={0: 2, 1: 2})
        assert degs.over_K == (1, 1)


class TestRankSum:
    def test_examples(self):
        degs = field_degrees(3, 6)
        assert rank_sum(3, 3, degs) == Fraction(43, 2)
        assert rank_sum(3, 6, degs) == 719
        assert rank_sum(3, 0, degs) == 0

    def test_terms(self):
        # 1/2 + 27/6 + 297/18 + 2835/54 + 26001/162 + 235467/486
        new = [tower_level(3, i).dim_Jprime for i in range(1, 7)]
        assert new == [1, 27, 297, 2835, 26001, 235467]

    def test_ratio_examples(self):
        degs = field_degrees(3, 6)
        assert sum_growth_ratio(3, 3, degs) == Fraction(43, 54)
        assert sum_growth_ratio(3, 6, degs) == Fraction(719, 729)
        assert sum_growth_ratio(3, 0, degs) == 0

    def test_matches_oracle(self):
        for p in (3, 5, 7):
            degs = field_degrees(p, 4)
            for n in range(5):
                assert rank_sum(p, n, degs) == oracles.rank_sum_oracle(p, n)

    def test_degrees_too_short(self):
        with pytest.raises(ValidationError):
            rank_sum(3, 4, field_degrees(3, 2))

    def test_table(self):
        table = tower_table(3, 6)
        assert table.partial_sums[3] == Fraction(43, 2)
        assert table.partial_sums[6] == 719
        assert list(table.partial_sums) == sorted(table.partial_sums)
        assert sum(lv.dim_Jprime for lv in table.levels) == table.levels[-1].dim_J


def test_dim_J_order_p_2n():
    for p in (3, 5, 7):
        for n in range(2, 11):
            dim = tower_level(p, n).dim_J
            assert abs(Fraction(dim, p ** (2 * n)) - Fraction(1, 2)) <= Fraction(2, p**n)
