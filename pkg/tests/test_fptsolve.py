import random

import pytest

from ecmod import (
    ColouredGraph,
    ProblemKind,
    Target,
    apply_certificate,
    core_targets,
    find_rb_odd_r_path,
    find_odd_blue_parity_cycle,
    hom_exists_bruteforce,
    is_homomorphism,
    solve,
    solve_edel,
    solve_edel_fpt,
    solve_edel_ptime,
    solve_switch,
    solve_vdel,
    solve_xp,
)
from ecmod.fptsolve import ContractError
from ecmod.graphs import make_order1_target, make_order2_target

from helpers import random_two_coloured

CORES = core_targets()


def G(n, *edges):
    return ColouredGraph(n, edges)


RBR_PATH = G(4, (0, 1, "r"), (1, 2, "b"), (2, 3, "r"))


def check_replay(g, h, sol):
    if not sol.answer:
        return
    assert len(sol.certificate) <= max(sol.budget_used, len(sol.certificate))
    modified = apply_certificate(sol.problem, g, sol.certificate)
    assert is_homomorphism(modified, sol.homomorphism.mapping, h)
    assert hom_exists_bruteforce(modified, h) is not None


class TestSolveXp:
    def test_zero_budget_when_already_mapping(self):
        g = G(2, (0, 1, "b"))
        sol = solve_xp(ProblemKind.EDEL, g, CORES["H2b_-,-"], 0)
        assert sol.answer and sol.certificate == ()

    def test_vdel_rbr_path(self):
        sol = solve_xp(ProblemKind.VDEL, RBR_PATH, CORES["H2b_r,b"], 1)
        assert sol.answer and sol.budget_used == 1
        check_replay(RBR_PATH, CORES["H2b_r,b"], sol)

    def test_switch_all_red_triangle_to_blue_loop(self):
        tri = G(3, (0, 1, "r"), (1, 2, "r"), (0, 2, "r"))
        for k in range(4):
            assert not solve_xp(ProblemKind.SWITCH, tri, CORES["H1_b"], k).answer

    def test_exact_size_mode(self):
        g = G(2, (0, 1, "r"))
        assert solve_xp(ProblemKind.SWITCH, g, CORES["H1_b"], 2).answer
        assert not solve_xp(
            ProblemKind.SWITCH, g, CORES["H1_b"], 2, exact_size=True
        ).answer

    def test_min_size_certificate_in_lex_order(self):
        two_paths = G(
            8,
            (0, 1, "r"), (1, 2, "b"), (2, 3, "r"),
            (4, 5, "r"), (5, 6, "b"), (6, 7, "r"),
        )
        sol = solve_xp(ProblemKind.EDEL, two_paths, CORES["H2b_r,b"], 3)
        assert sol.answer and sol.budget_used == 2
        assert sol.certificate == ((0, 1, "r", 0), (4, 5, "r", 0))


class TestSolveVdel:
    def test_rbr_path(self):
        sol = solve_vdel(RBR_PATH, CORES["H2b_r,b"], 1)
        assert sol.answer and len(sol.certificate) == 1
        check_replay(RBR_PATH, CORES["H2b_r,b"], sol)

    def test_edgeless_zero_budget(self):
        sol = solve_vdel(G(3), CORES["H1_-"], 0)
        assert sol.answer and sol.certificate == ()

    def test_blue_triangle_with_centre(self):
        # Matches the XP oracle on the all-blue triangle instance whatever
        # the verdict is (it already maps, so both answer yes at cost 0).
        g = G(3, (0, 1, "b"), (0, 2, "b"), (1, 2, "b"))
        h = CORES["H2-_r,b"]
        oracle = solve_xp(ProblemKind.VDEL, g, h, 1, hom_test="bruteforce")
        sol = solve_vdel(g, h, 1)
        assert sol.answer == oracle.answer
        assert sol.budget_used == oracle.budget_used == 0

    def test_vertex_cover_special_case(self):
        # Red edges against an order-1 blue-loop target is vertex cover of
        # the red subgraph.
        g = G(4, (0, 1, "r"), (1, 2, "r"), (2, 3, "r"), (0, 3, "b"))
        h = make_order1_target("b")
        assert not solve_vdel(g, h, 1).answer
        sol = solve_vdel(g, h, 2)
        assert sol.answer and sol.budget_used == 2
        check_replay(g, h, sol)

    def test_order3_target_falls_back_to_xp(self):
        tri = Target(G(3, (0, 1, "b"), (1, 2, "b"), (0, 2, "b")))
        g = G(2, (0, 1, "b"))
        sol = solve_vdel(g, tri, 0)
        assert sol.answer and sol.used_xp_fallback


class TestSolveEdel:
    def test_rbr_path(self):
        sol = solve_edel(RBR_PATH, CORES["H2b_r,b"], 1)
        assert sol.answer and sol.budget_used == 1
        check_replay(RBR_PATH, CORES["H2b_r,b"], sol)

    def test_zero_budget_when_mapping(self):
        g = G(2, (0, 1, "b"), (0, 0, "r"))
        assert solve_edel(g, CORES["H2b_r,b"], 0).answer

    def test_two_disjoint_paths(self):
        g = G(
            8,
            (0, 1, "r"), (1, 2, "b"), (2, 3, "r"),
            (4, 5, "r"), (5, 6, "b"), (6, 7, "r"),
        )
        assert not solve_edel(g, CORES["H2b_r,b"], 1).answer
        sol = solve_edel(g, CORES["H2b_r,b"], 2)
        assert sol.answer and sol.budget_used == 2

    def test_parallel_copies_are_separate_objects(self):
        g = G(2, (0, 1, "b"), (0, 1, "b"), (0, 0, "r"), (1, 1, "r"))
        h = CORES["H2-_r,b"]
        assert not solve_edel(g, h, 1).answer
        sol = solve_edel(g, h, 2)
        assert sol.answer and sol.budget_used == 2
        check_replay(g, h, sol)
        # the grouped FPT route sees each parallel copy as its own group and
        # returns the lex-least minimum set
        fpt = solve_edel_fpt(g, h, 2)
        assert fpt.certificate == ((0, 1, "b", 0), (0, 1, "b", 1))


class TestSolveEdelPtime:
    def test_conflicting_pair(self):
        g = G(3, (0, 1, "r"), (1, 2, "b"))
        h = CORES["H2-_r,b"]
        sol = solve_edel_ptime(g, h, 1)
        assert sol.answer and sol.budget_used == 1
        check_replay(g, h, sol)

    def test_monochromatic_star_free(self):
        g = G(4, (0, 1, "r"), (0, 2, "r"), (0, 3, "r"))
        sol = solve_edel_ptime(g, CORES["H2-_r,b"], 0)
        assert sol.answer and sol.certificate == ()

    def test_foreign_colour_count(self):
        g = G(4, (0, 1, "r"), (2, 3, "r"))
        h = make_order1_target("b")
        assert not solve_edel_ptime(g, h, 1).answer
        sol = solve_edel_ptime(g, h, 2)
        assert sol.answer and sol.budget_used == 2

    def test_rejects_intractable_target(self):
        with pytest.raises(ContractError):
            solve_edel_ptime(G(1), CORES["H2b_r,b"], 0)

    def test_green_splitting_pipeline(self):
        # loops {b, g} at 0 and {r, g} at 1: green edges may sit anywhere,
        # red-blue conflicts still decide the instance
        h = Target(
            G(2, (0, 0, "b"), (0, 0, "g"), (1, 1, "r"), (1, 1, "g"))
        )
        g = G(3, (0, 1, "g"), (1, 2, "b"), (0, 2, "r"))
        for k in range(4):
            expect = solve_xp(ProblemKind.EDEL, g, h, k, hom_test="bruteforce")
            got = solve_edel_ptime(g, h, k)
            assert got.answer == expect.answer, k
            check_replay(g, h, got)

    def test_all_three_colour_dropping(self):
        h = Target(
            G(2, (0, 1, "a"), (0, 0, "a"), (1, 1, "a"), (0, 0, "r"), (1, 1, "b"))
        )
        g = G(3, (0, 1, "a"), (1, 2, "a"), (0, 1, "r"), (1, 2, "b"))
        for k in range(3):
            expect = solve_xp(ProblemKind.EDEL, g, h, k, hom_test="bruteforce")
            got = solve_edel_ptime(g, h, k)
            assert got.answer == expect.answer, k

    def test_three_routes_agree_on_random_instances(self):
        rng = random.Random(31)
        h = CORES["H2-_r,b"]
        for _ in range(50):
            g = random_two_coloured(rng, max_n=6, max_m=10)
            k = rng.randint(0, 3)
            a = solve_edel_ptime(g, h, k).answer
            b = solve_edel_fpt(g, h, k).answer
            c = solve_xp(ProblemKind.EDEL, g, h, k, hom_test="bruteforce").answer
            assert a == b == c


class TestSolveSwitch:
    def test_blue_loop_target_single_red_edge(self):
        sol = solve_switch(G(2, (0, 1, "r")), CORES["H1_b"], 1)
        assert sol.answer and len(sol.certificate) == 1

    def test_rbr_path_to_h2b_rb(self):
        h = CORES["H2b_r,b"]
        sol = solve_switch(RBR_PATH, h, 1)
        expect = solve_xp(ProblemKind.SWITCH, RBR_PATH, h, 1, hom_test="bruteforce")
        assert sol.answer == expect.answer == True  # noqa: E712
        check_replay(RBR_PATH, h, sol)

    def test_parity_cycle_blocks_h2b_rdash(self):
        g = G(3, (0, 1, "b"), (1, 2, "r"), (0, 2, "r"))
        assert find_odd_blue_parity_cycle(g) is not None
        for k in range(5):
            assert not solve_switch(g, CORES["H2b_r,-"], k).answer

    def test_always_yes_target(self):
        g = G(2, (0, 1, "r"), (0, 0, "b"))
        sol = solve_switch(g, CORES["H1_rb"], 0)
        assert sol.answer and sol.certificate == ()

    def test_edgeless_target(self):
        assert solve_switch(G(2), CORES["H1_-"], 5).answer
        assert not solve_switch(G(2, (0, 1, "b")), CORES["H1_-"], 5).answer

    def test_colour_swapped_target_dispatch(self):
        # red-loop order-1 target is the colour swap of the blue one
        h = make_order1_target("r")
        sol = solve_switch(G(2, (0, 1, "b")), h, 1)
        assert sol.answer and len(sol.certificate) == 1
        check_replay(G(2, (0, 1, "b")), h, sol)

    def test_search_tree_branch_soundness(self):
        rng = random.Random(37)
        h = CORES["H2b_r,-"]
        checked = 0
        for _ in range(800):
            g = random_two_coloured(rng, max_n=6, max_m=8)
            if find_odd_blue_parity_cycle(g) is not None:
                continue
            obs = find_rb_odd_r_path(g)
            if obs is None:
                continue
            branch = {obs.vertices[0], obs.vertices[1], obs.vertices[-2], obs.vertices[-1]}
            k = 2
            for code in range(1 << g.n):
                s = {v for v in range(g.n) if code >> v & 1}
                if len(s) > k:
                    continue
                switched = g.switch_set(s)
                if hom_exists_bruteforce(switched, h) is not None:
                    assert s & branch, (g, s, obs)
            checked += 1
        assert checked >= 20


class TestOracleAgreement:
    def test_small_random_battery(self):
        rng = random.Random(101)
        for name, h in CORES.items():
            for _ in range(12):
                g = random_two_coloured(rng, max_n=6, max_m=9)
                k = rng.randint(0, 2)
                for problem, solver in (
                    (ProblemKind.VDEL, solve_vdel),
                    (ProblemKind.EDEL, solve_edel),
                    (ProblemKind.SWITCH, solve_switch),
                ):
                    expect = solve_xp(problem, g, h, k, hom_test="bruteforce")
                    got = solver(g, h, k)
                    assert got.answer == expect.answer, (name, problem, g, k)
                    check_replay(g, h, got)

    def test_budget_monotonicity(self):
        rng = random.Random(103)
        for _ in range(40):
            g = random_two_coloured(rng, max_n=6, max_m=8)
            h = CORES[rng.choice(sorted(CORES))]
            for problem, solver in (
                (ProblemKind.VDEL, solve_vdel),
                (ProblemKind.EDEL, solve_edel),
            ):
                for k in range(2):
                    if solver(g, h, k).answer:
                        assert solver(g, h, k + 1).answer

    def test_switch_verdict_invariant_under_switching(self):
        rng = random.Random(107)
        for _ in range(30):
            g = random_two_coloured(rng, max_n=5, max_m=7)
            base = solve_switch(g, CORES["H2b_r,r"], 0).answer
            for _ in range(4):
                s = {v for v in range(g.n) if rng.random() < 0.5}
                assert solve_switch(g.switch_set(s), CORES["H2b_r,r"], 0).answer == base


class TestDispatcher:
    def test_strict_flag(self):
        g = G(2, (0, 1, "r"))
        assert solve("switch", g, CORES["H1_b"], 2).answer
        assert not solve("switch", g, CORES["H1_b"], 2, strict=True).answer

    def test_force_xp(self):
        sol = solve("vdel", RBR_PATH, CORES["H2b_r,b"], 1, force_xp=True)
        assert sol.answer
