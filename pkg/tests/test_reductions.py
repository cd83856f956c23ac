"""Generators for the two hardness constructions and their witnesses."""

from itertools import combinations, combinations_with_replacement

import pytest

from gerrygraph import (
    SourceGraph,
    block_tally,
    clique_to_path,
    clique_witness,
    evaluate_partition,
    partition_to_tree,
    partition_witness,
    solve_brute_force,
    validate_clique_path,
    validate_instance,
)

K3 = SourceGraph(3, ((0, 1), (0, 2), (1, 2)))
C5 = SourceGraph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)))


class TestCliquePathGeneration:
    def test_k3_disconnected_shape(self):
        out = clique_to_path(K3, 3)
        p = out.params
        assert (p.n, p.m, p.d, p.N) == (3, 3, 2, 36)
        assert p.z == 79
        assert p.k == 88
        assert out.instance.mode == "disconnected"
        assert validate_instance(out.instance) == []
        assert validate_clique_path(out) == []
        assert all(len(ids) == 143 for ids in out.gadgets.vertex_paths.values())
        assert len(out.gadgets.edge_paths) == 3
        assert len(out.gadgets.s_vertices) == 73

    def test_k3_connected_shape(self):
        out = clique_to_path(K3, 3, connected=True)
        assert out.instance.n == 34912
        assert out.params.k == 34485
        assert out.params.M == 441
        assert len(out.gadgets.connectors) == 78
        assert validate_clique_path(out) == []

    def test_c5_disconnected(self):
        out = clique_to_path(C5, 2)
        assert out.params.N == 100
        assert out.params.z == 208
        assert validate_clique_path(out) == []

    def test_unit_weights(self):
        out = clique_to_path(K3, 2)
        assert set(out.instance.weight.values()) == {1}

    def test_non_regular_source_rejected(self):
        path3 = SourceGraph(3, ((0, 1), (1, 2)))
        with pytest.raises(ValueError):
            clique_to_path(path3, 2)

    def test_ell_out_of_range(self):
        with pytest.raises(ValueError):
            clique_to_path(K3, 4)

    def test_determinism(self):
        assert clique_to_path(C5, 2).instance == clique_to_path(C5, 2).instance


class TestCliqueWitness:
    def test_k3_full_clique(self):
        out = clique_to_path(K3, 3)
        witness = clique_witness(K3, 3, [0, 1, 2])
        assert len(witness.blocks) == 88
        rep = evaluate_partition(out.instance, witness)
        assert rep.is_solution
        assert rep.uniquely_p_count == 37  # N + 1
        assert rep.colored_count["q"] == 36  # exactly N

    def test_c5_edge_clique(self):
        out = clique_to_path(C5, 2)
        witness = clique_witness(C5, 2, [3, 4])
        rep = evaluate_partition(out.instance, witness)
        assert rep.is_solution
        assert rep.uniquely_p_count == out.params.N + 1
        assert rep.colored_count["q"] == out.params.N

    def test_connected_mode_witness(self):
        out = clique_to_path(K3, 3, connected=True)
        witness = clique_witness(K3, 3, [0, 1, 2], connected=True)
        assert len(witness.blocks) == out.params.k
        rep = evaluate_partition(out.instance, witness)
        assert rep.is_solution
        assert rep.uniquely_p_count == 37
        assert rep.colored_count["q"] == 36

    def test_wrong_size_rejected(self):
        with pytest.raises(ValueError):
            clique_witness(K3, 3, [0, 1])

    def test_non_clique_rejected(self):
        with pytest.raises(ValueError):
            clique_witness(C5, 2, [0, 2])  # not adjacent in the 5-cycle


class TestPartitionTreeGeneration:
    def test_two_twos(self):
        out = partition_to_tree([2, 2])
        p = out.params
        assert (p.N, p.M, p.k) == (5, 64, 4)
        inst = out.instance
        assert inst.weight[p.center] == 131
        assert inst.weight[p.leaves[0]] == 1
        g1, g2 = p.gadgets[1], p.gadgets[2]
        assert inst.weight[g1["xq"]] == 76
        assert inst.weight[g1["xr"]] == 54
        assert inst.weight[g1["yr"]] == 76
        assert inst.weight[g1["yq"]] == 54
        assert inst.weight[g2["xq"]] == 86
        assert inst.weight[g2["xr"]] == 44
        assert inst.weight[g2["yr"]] == 86
        assert inst.weight[g2["yq"]] == 44
        assert validate_instance(inst) == []
        assert inst.n == 9 * 2 // 2 + 1

    def test_ones(self):
        p = partition_to_tree([1, 1]).params
        assert (p.N, p.M, p.k) == (3, 39, 4)

    def test_gadget_pairs_have_fixed_winners(self):
        out = partition_to_tree([3, 1, 0, 4])
        inst = out.instance
        for i, g in out.params.gadgets.items():
            x_pair = block_tally(inst, {g["xq"], g["xr"]})
            y_pair = block_tally(inst, {g["yq"], g["yr"]})
            assert x_pair.uniquely == "q"
            assert y_pair.uniquely == "r"

    def test_normalization_when_sum_not_divisible(self):
        out = partition_to_tree([1, 2])  # sum 3, not divisible by 2
        assert out.params.scale == 2
        assert out.params.elements == (2, 4)
        assert out.params.original_elements == (1, 2)
        assert validate_instance(out.instance) == []

    def test_odd_count_rejected(self):
        with pytest.raises(ValueError):
            partition_to_tree([1, 2, 3])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            partition_to_tree([])


class TestPartitionWitness:
    def test_first_index(self):
        out = partition_to_tree([2, 2])
        witness = partition_witness([2, 2], [1])
        assert len(witness.blocks) == 4
        rep = evaluate_partition(out.instance, witness)
        assert rep.is_solution
        tally = block_tally(out.instance, witness.blocks[0])
        assert tally.weight_by_color == {"p": 131, "q": 130, "r": 130}

    def test_second_index_symmetric(self):
        out = partition_to_tree([2, 2])
        rep = evaluate_partition(out.instance, partition_witness([2, 2], [2]))
        assert rep.is_solution

    def test_center_tallies_match_formulas(self):
        elements = [4, 0, 2, 2]
        out = partition_to_tree(elements)
        p = out.params
        witness = partition_witness(elements, [2, 1])  # 4 + 0 = s/2
        tally = block_tally(out.instance, witness.blocks[0])
        assert tally.weight_by_color["p"] == p.M * p.n + p.s // 2 + 1
        assert tally.weight_by_color["q"] == p.M * p.n + p.s // 2
        assert tally.weight_by_color["r"] == p.M * p.n + p.s // 2

    def test_wrong_cardinality_rejected(self):
        with pytest.raises(ValueError):
            partition_witness([2, 2], [1, 2])

    def test_wrong_sum_rejected(self):
        with pytest.raises(ValueError):
            partition_witness([1, 3], [1])


class TestRoundTrip:
    def test_small_multisets_agree_with_subset_enumeration(self):
        # n = 2 here; the full n = 4 sweep runs in the acceptance suite
        for A in combinations_with_replacement(range(5), 2):
            s = sum(A)
            if s % 2 != 0:
                continue
            inst = partition_to_tree(list(A)).instance
            expected = any(2 * sum(c) == s for c in combinations(A, 1))
            assert solve_brute_force(inst).answer == expected, A
