"""Star and diameter-3 solvers: budget counting, examples, oracle equivalence."""

import dataclasses
import random

import pytest

from gerrygraph import (
    CaseGuess,
    UnsupportedInstanceError,
    beta_count,
    evaluate_guess,
    evaluate_partition,
    solve_brute_force,
    solve_diameter3,
    solve_star,
)

from conftest import make_diam3, make_path, make_star, random_diam3, random_star


class TestBetaCount:
    def test_non_strict(self):
        assert beta_count([5, 3, 1], 4) == 1  # 3+1 fits exactly

    def test_strict_needs_strictly_less(self):
        assert beta_count([5, 3, 1], 4, strict=True) == 2

    def test_budget_covers_everything(self):
        assert beta_count([9, 4, 4], 17) == 0
        assert beta_count([], 0) == 0

    def test_negative_budget_excludes_all(self):
        assert beta_count([5, 3], -1) == 2

    def test_unsorted_rejected(self):
        with pytest.raises(ValueError):
            beta_count([1, 5], 10)

    def test_matches_linear_scan(self):
        rng = random.Random(20)
        for _ in range(200):
            ws = sorted((rng.randint(0, 9) for _ in range(rng.randint(0, 8))), reverse=True)
            budget = rng.randint(-3, sum(ws) + 3)
            strict = rng.random() < 0.5
            got = beta_count(ws, budget, strict)
            expect = len(ws)
            for b in range(len(ws) + 1):
                rest = sum(ws[b:])
                if (rest < budget) if strict else (rest <= budget):
                    expect = b
                    break
            assert got == expect, (ws, budget, strict)


class TestSolveStar:
    def test_star_k4(self):
        inst = make_star("q", 2, [("p", 1)] * 3, k=4)
        result = solve_star(inst)
        assert result.answer
        assert evaluate_partition(inst, result.witness).is_solution

    def test_star_k2(self):
        inst = make_star("q", 2, [("p", 1)] * 3, k=2)
        assert not solve_star(inst).answer

    def test_no_target_weight_anywhere(self):
        inst = make_star("q", 2, [("q", 1), ("q", 3), ("q", 2)])
        for k in range(1, 5):
            assert not solve_star(dataclasses.replace(inst, k=k)).answer

    def test_degenerate_sizes(self):
        single = make_path([2], ["p"], k=1)
        assert solve_star(single).answer
        edge = make_path([2, 1], ["p", "q"], k=2)
        result = solve_star(edge)
        assert result.answer == solve_brute_force(edge).answer

    def test_diameter3_rejected(self):
        inst = make_diam3(("q", "q"), (1, 1), [("p", 3)], [("p", 3)])
        with pytest.raises(UnsupportedInstanceError):
            solve_star(inst)

    def test_witness_is_deterministic(self):
        inst = make_star("q", 3, [("p", 2), ("p", 2), ("q", 1), ("r", 4)],
                         colors=("p", "q", "r"), k=3)
        a = solve_star(inst)
        b = solve_star(inst)
        assert a.answer == b.answer
        if a.answer:
            assert a.witness.blocks == b.witness.blocks


class TestSolveDiameter3:
    def test_cut_between_centers(self):
        inst = make_diam3(("q", "q"), (1, 1), [("p", 3)], [("p", 3)], k=2)
        result = solve_diameter3(inst)
        assert result.answer
        assert evaluate_partition(inst, result.witness).is_solution

    def test_all_singletons_fail(self):
        inst = make_diam3(("q", "q"), (1, 1), [("p", 3)], [("p", 3)], k=4)
        assert not solve_diameter3(inst).answer

    def test_single_block_uniquely_target(self):
        inst = make_diam3(("p", "p"), (5, 5), [("q", 1)], [("q", 2)], k=1)
        assert solve_diameter3(inst).answer

    def test_star_rejected(self):
        inst = make_star("q", 2, [("p", 1)] * 3)
        with pytest.raises(UnsupportedInstanceError):
            solve_diameter3(inst)

    def test_path4_is_diameter3(self):
        inst = make_path([2, 1, 1, 2], ["p", "q", "q", "p"], k=2)
        assert solve_diameter3(inst).answer == solve_brute_force(inst).answer


class TestEvaluateGuess:
    def test_feasible_star_guess(self):
        inst = make_star("q", 2, [("p", 1)] * 3, k=4)
        out = evaluate_guess(
            inst, CaseGuess(case="merged", q_star=("q",), alpha_p=(3,), alpha_qstar=(0,))
        )
        assert out.feasible
        assert out.x == 3
        assert out.partition is not None
        assert evaluate_partition(inst, out.partition).is_solution

    def test_infeasible_star_guess(self):
        inst = make_star("q", 2, [("p", 1)] * 3, k=2)
        out = evaluate_guess(
            inst, CaseGuess(case="merged", q_star=("p",), alpha_p=(1,), alpha_qstar=(1,))
        )
        assert not out.feasible
        assert out.partition is None

    def test_split_guess(self):
        inst = make_diam3(("q", "q"), (1, 1), [("p", 3)], [("p", 3)], k=2)
        out = evaluate_guess(
            inst,
            CaseGuess(case="split", q_star=("p", "p"), alpha_p=(0, 0), alpha_qstar=(0, 0)),
        )
        assert out.feasible
        assert out.x == 2


class TestOracleEquivalence:
    def test_stars_match_brute_force(self):
        # also exercises the heaviest-kept / lightest-kept exchange rules:
        # if restricting to them lost solutions, some yes would come back no
        rng = random.Random(21)
        for trial in range(250):
            n = rng.randint(1, 10)
            base = random_star(rng, n, rng.randint(1, 4), 6, 1)
            for k in range(1, n + 1):
                inst = dataclasses.replace(base, k=k)
                got = solve_star(inst)
                want = solve_brute_force(inst).answer
                assert got.answer == want, (inst.color_of, inst.weight, k)
                if got.answer:
                    assert evaluate_partition(inst, got.witness).is_solution

    def test_diam3_match_brute_force(self):
        rng = random.Random(22)
        for trial in range(150):
            n = rng.randint(4, 12)
            base = random_diam3(rng, n, rng.randint(1, 4), 6, 1)
            for k in range(1, n + 1):
                inst = dataclasses.replace(base, k=k)
                got = solve_diameter3(inst)
                want = solve_brute_force(inst).answer
                assert got.answer == want, (inst.edges, inst.color_of, inst.weight, k)
                if got.answer:
                    assert evaluate_partition(inst, got.witness).is_solution

    def test_unit_weight_ties(self):
        rng = random.Random(23)
        for trial in range(80):
            n = rng.randint(4, 10)
            base = random_diam3(rng, n, rng.randint(2, 5), 1, 1)
            for k in range(1, n + 1):
                inst = dataclasses.replace(base, k=k)
                assert solve_diameter3(inst).answer == solve_brute_force(inst).answer
