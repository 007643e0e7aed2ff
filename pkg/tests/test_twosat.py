import random

import pytest

from ecmod import (
    Group,
    Literal,
    TwoCnf,
    group_del_almost_2sat,
    group_to_var_reduction,
    solve_2sat,
    var_del_almost_2sat,
)
from ecmod.twosat import dimacs_dump, lit, neg

from helpers import group_del_oracle, tt_satisfiable, var_del_oracle


def test_literal_involution():
    l = Literal(3, True)
    assert l.negated().negated() == l
    assert Literal.decode(l.encode()) == l
    assert neg(neg(lit(5))) == lit(5)


def test_contradiction_pair():
    f = TwoCnf(1, [(lit(0),), (neg(lit(0)),)])
    assert solve_2sat(f) is None


def test_empty_formula_all_false():
    f = TwoCnf(3, [])
    a = solve_2sat(f)
    assert a.values == (False, False, False)


def test_xor_clauses():
    f = TwoCnf(2, [(lit(0), lit(1)), (neg(lit(0)), neg(lit(1)))])
    a = solve_2sat(f)
    assert a is not None and a.values[0] != a.values[1]


def test_solver_matches_truth_tables():
    rng = random.Random(42)
    for _ in range(400):
        nv = rng.randint(1, 6)
        clauses = []
        for _ in range(rng.randint(0, 10)):
            width = rng.randint(1, 2)
            cl = tuple(2 * rng.randrange(nv) + rng.randrange(2) for _ in range(width))
            clauses.append(cl)
        f = TwoCnf(nv, clauses)
        got = solve_2sat(f)
        expect = tt_satisfiable(nv, clauses)
        assert (got is None) == (expect is None)
        if got is not None:
            assert got.satisfies(clauses)


def test_group_validation():
    with pytest.raises(ValueError):
        TwoCnf(2, [(lit(0),), (lit(1),)], [Group((0, 1), 0)])
    with pytest.raises(ValueError):
        TwoCnf(2, [(lit(0),)], [Group((), 0)])


class TestVarDeletion:
    def test_single_contradiction(self):
        f = TwoCnf(1, [(lit(0),), (neg(lit(0)),)])
        assert var_del_almost_2sat(f, 1) == (0,)

    def test_two_contradictions(self):
        f = TwoCnf(2, [(lit(0),), (neg(lit(0)),), (lit(1),), (neg(lit(1)),)])
        assert var_del_almost_2sat(f, 1) is None
        assert var_del_almost_2sat(f, 2) == (0, 1)

    def test_matches_oracle_random(self):
        rng = random.Random(5)
        for _ in range(200):
            nv = rng.randint(1, 6)
            clauses = [
                tuple(
                    2 * rng.randrange(nv) + rng.randrange(2)
                    for _ in range(rng.randint(1, 2))
                )
                for _ in range(rng.randint(0, 9))
            ]
            f = TwoCnf(nv, clauses)
            k = rng.randint(0, 3)
            got = var_del_almost_2sat(f, k)
            expect = var_del_oracle(f, k)
            assert got == expect, (clauses, k)
            if got is not None:
                dead = set(got)
                live = [cl for cl in clauses if all((l >> 1) not in dead for l in cl)]
                assert solve_2sat(TwoCnf(nv, live)) is not None

    def test_monotone_in_budget(self):
        rng = random.Random(6)
        for _ in range(60):
            nv = rng.randint(1, 5)
            clauses = [
                tuple(
                    2 * rng.randrange(nv) + rng.randrange(2)
                    for _ in range(rng.randint(1, 2))
                )
                for _ in range(rng.randint(0, 8))
            ]
            f = TwoCnf(nv, clauses)
            for k in range(3):
                if var_del_almost_2sat(f, k) is not None:
                    assert var_del_almost_2sat(f, k + 1) is not None


def _random_grouped(rng, max_vars=6, max_groups=4, max_group_clauses=3):
    nv = rng.randint(1, max_vars)
    clauses = []
    groups = []
    for _ in range(rng.randint(1, max_groups)):
        witness = rng.randrange(nv)
        idx = []
        for _ in range(rng.randint(1, max_group_clauses)):
            w_lit = 2 * witness + rng.randrange(2)
            if rng.random() < 0.5:
                cl = (w_lit,)
            else:
                cl = (w_lit, 2 * rng.randrange(nv) + rng.randrange(2))
            idx.append(len(clauses))
            clauses.append(cl)
        groups.append(Group(tuple(idx), witness))
    return TwoCnf(nv, clauses, groups)


class TestGroupDeletion:
    def test_two_singleton_groups(self):
        f = TwoCnf(1, [(lit(0),), (neg(lit(0)),)], [Group((0,), 0), Group((1,), 0)])
        assert group_del_almost_2sat(f, 1) == (0,)

    def test_one_group_holding_contradiction(self):
        f = TwoCnf(1, [(lit(0),), (neg(lit(0)),)], [Group((0, 1), 0)])
        assert group_del_almost_2sat(f, 1) == (0,)

    def test_requires_groups(self):
        with pytest.raises(ValueError):
            group_del_almost_2sat(TwoCnf(1, [(lit(0),)]), 1)

    def test_matches_oracle_random(self):
        rng = random.Random(8)
        for _ in range(200):
            f = _random_grouped(rng)
            k = rng.randint(0, 3)
            assert group_del_almost_2sat(f, k) == group_del_oracle(f, k)


class TestGroupToVarReduction:
    def test_single_group_is_pure_renaming(self):
        f = TwoCnf(2, [(lit(0), lit(1))], [Group((0,), 0)])
        reduced, back = group_to_var_reduction(f)
        assert reduced.num_vars == 2
        assert len(reduced.clauses) == 1
        assert set(back.values()) == {0}

    def test_equality_clauses_link_occurring_copies(self):
        f = TwoCnf(
            3,
            [(lit(0), lit(1)), (neg(lit(0)), lit(2))],
            [Group((0,), 0), Group((1,), 0)],
        )
        reduced, back = group_to_var_reduction(f)
        # copies: x in both groups, y in group 0, z in group 1
        assert reduced.num_vars == 4
        # one renamed clause per group plus the two equality clauses for x
        assert len(reduced.clauses) == 4

    def test_verdict_preserved(self):
        rng = random.Random(11)
        for _ in range(150):
            f = _random_grouped(rng)
            k = rng.randint(0, 2)
            reduced, _ = group_to_var_reduction(f)
            direct = group_del_oracle(f, k)
            via = var_del_almost_2sat(reduced, k)
            assert (direct is None) == (via is None)


def test_dimacs_dump_mentions_groups():
    f = TwoCnf(2, [(lit(0),), (lit(1), neg(lit(0)))], [Group((0, 1), 0)])
    text = dimacs_dump(f)
    assert "p cnf 2 2" in text
    assert "c group 0" in text
