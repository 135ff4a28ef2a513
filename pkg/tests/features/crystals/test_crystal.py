import itertools

import pytest

from app.features.crystals.domain.entities import (
    CHECK,
    AntichainModule,
    ModClass,
    check_axioms,
    generate_crystal,
    is_cospecial,
    is_special,
    module_crystal,
    reineke_tables,
)
from app.features.quivers.domain.entities import (
    QuiverSpec,
    all_orientations,
    build_quiver,
    standard_quiver,
    weyl_dimension,
)
from app.shared.exceptions import (
    CrystalMembershipError,
    NodeLimitExceeded,
    NotSpecialError,
    RankMismatchError,
)


BRANCH_SOURCE_D4 = QuiverSpec("D", 4, ((3, 1), (3, 2), (3, 4)))


def module(quiver, *roots):
    counts = {}
    for root in roots:
        counts[root] = counts.get(root, 0) + 1
    return ModClass.from_mapping(quiver, counts)


def raw_eps_star(tables, m, i):
    return max(tables.f_stat_check(m, v, i) for v in tables.antichain_modules(i, CHECK))


def sample_cases():
    cases = [(q, (1, 1, 1)) for q in all_orientations("A", 3)]
    d4 = standard_quiver("D", 4)
    cases += [(d4, (0, 0, 1, 0)), (d4, (1, 0, 0, 1))]
    return cases


class TestSpecialQuivers:
    def test_type_a_is_special_and_cospecial(self):
        for n in range(1, 6):
            for quiver in all_orientations("A", n):
                assert is_special(quiver)
                assert is_cospecial(quiver)

    def test_standard_d4_is_special_and_cospecial(self, d4):
        assert is_special(d4)
        assert is_cospecial(d4)

    def test_branch_vertex_source_is_not_special(self):
        quiver = build_quiver(BRANCH_SOURCE_D4)
        assert not is_special(quiver)
        with pytest.raises(NotSpecialError):
            module_crystal(quiver)

    def test_highest_weight_crystal_needs_cospecial(self):
        opposite = build_quiver(BRANCH_SOURCE_D4).opposite()
        crystal = module_crystal(opposite)
        with pytest.raises(NotSpecialError):
            crystal.in_highest_weight_crystal(ModClass.zero(opposite), (1, 0, 0, 0))


class TestOperators:
    def test_a2_lowering(self, a2):
        crystal = module_crystal(a2)
        zero = ModClass.zero(a2)
        s1 = module(a2, (1, 0))
        s2 = module(a2, (0, 1))
        assert crystal.apply_f(zero, 1) == s1
        assert crystal.apply_f(s1, 1) == module(a2, (1, 0), (1, 0))
        assert crystal.apply_f(s1, 2) == module(a2, (1, 1))
        assert crystal.apply_f(zero, 2) == s2
        assert crystal.apply_f(s2, 1) == module(a2, (1, 0), (0, 1))

    def test_a2_raising(self, a2):
        crystal = module_crystal(a2)
        assert crystal.apply_e(module(a2, (1, 1)), 2) == module(a2, (1, 0))
        assert crystal.apply_e(ModClass.zero(a2), 1) is None
        assert crystal.eps(module(a2, (1, 1)), 1) == 0

    def test_raising_inverts_lowering(self):
        for quiver in [*all_orientations("A", 3), standard_quiver("D", 4)]:
            crystal = module_crystal(quiver)
            lam = (1, 1, 1) if quiver.family == "A" else (0, 0, 1, 0)
            for node in generate_crystal(quiver, lam).nodes:
                m = node.key
                for i in quiver.vertices:
                    assert crystal.apply_e(crystal.apply_f(m, i), i) == m
                    raised = crystal.apply_e(m, i)
                    if raised is not None:
                        assert crystal.apply_f(raised, i) == m

    def test_lowering_raises_eps_by_one(self, d4):
        crystal = module_crystal(d4)
        for node in generate_crystal(d4, (0, 0, 1, 0)).nodes:
            for i in d4.vertices:
                assert crystal.eps(crystal.apply_f(node.key, i), i) == crystal.eps(node.key, i) + 1

    def test_weight(self, a2):
        crystal = module_crystal(a2)
        assert crystal.weight(module(a2, (1, 1)), (1, 0)) == (0, -1)
        assert crystal.weight(ModClass.zero(a2)) == (0, 0)
        with pytest.raises(RankMismatchError):
            crystal.weight(ModClass.zero(a2), (1, 0, 0))
        with pytest.raises(CrystalMembershipError):
            crystal.check_weight((-1, 0))

    def test_lambda_operators_stay_inside(self, a2):
        crystal = module_crystal(a2)
        s1 = module(a2, (1, 0))
        assert crystal.apply_f_lambda(s1, 1, (1, 0)) is None
        assert crystal.apply_f_lambda(s1, 2, (1, 0)) == module(a2, (1, 1))
        assert crystal.apply_e_lambda(s1, 1, (1, 0)) == ModClass.zero(a2)
        with pytest.raises(CrystalMembershipError):
            crystal.apply_f_lambda(module(a2, (0, 1)), 1, (1, 0))


class TestStarredStatistics:
    def test_plain_and_starred_statistics_sum_to_the_symmetric_form(self):
        for quiver, lam in sample_cases():
            tables = reineke_tables(quiver)
            for node in generate_crystal(quiver, lam).nodes:
                m = node.key
                for i in quiver.vertices:
                    simple = AntichainModule((quiver.unit(i),))
                    total = tables.f_stat(m, simple, i) + tables.f_stat_check(m, simple, i)
                    assert total == quiver.sym_euler(m.dim, quiver.unit(i))

    def test_starred_length_moves_only_along_simple_additions(self):
        for quiver, lam in sample_cases():
            crystal = module_crystal(quiver)
            tables = crystal.tables
            for node in generate_crystal(quiver, lam).nodes:
                m = node.key
                for j in quiver.vertices:
                    image = crystal.apply_f(m, j)
                    for i in quiver.vertices:
                        before, after = raw_eps_star(tables, m, i), raw_eps_star(tables, image, i)
                        if i != j:
                            assert after == before
                            continue
                        v_m, _, _ = tables.select_vm_um(m, i)
                        simple = AntichainModule((quiver.unit(i),))
                        grows = v_m == simple and before == tables.f_stat_check(m, simple, i)
                        assert after == before + (1 if grows else 0)

    def test_leaving_the_crystal_exactly_when_phi_vanishes(self):
        for quiver, lam in sample_cases():
            crystal = module_crystal(quiver)
            for node in generate_crystal(quiver, lam).nodes:
                m = node.key
                for i in quiver.vertices:
                    image = crystal.apply_f(m, i)
                    leaves = any(crystal.eps_star(image, j) > lam[j - 1] for j in quiver.vertices)
                    assert leaves == (crystal.phi(m, i, lam) == 0)

    def test_membership_grows_with_lambda(self, a2):
        crystal = module_crystal(a2)
        for node in generate_crystal(a2, (1, 1)).nodes:
            assert crystal.in_highest_weight_crystal(node.key, (2, 1))
            assert crystal.in_highest_weight_crystal(node.key, (1, 2))


class TestGeneration:
    def test_a2_fundamental_crystals(self, a2):
        first = generate_crystal(a2, (1, 0))
        assert [str(node.key) for node in first.nodes] == ["0", "M(10)", "M(11)"]
        assert first.edges == [(0, 1, 1), (1, 2, 2)]
        assert [node.weight for node in first.nodes] == [(1, 0), (-1, 1), (0, -1)]

        second = generate_crystal(a2, (0, 1))
        assert [str(node.key) for node in second.nodes] == ["0", "M(01)", "M(01) + M(10)"]
        assert second.edges == [(0, 2, 1), (1, 1, 2)]

    @pytest.mark.parametrize(
        "family,rank,weights",
        [
            ("A", 1, [(0,), (1,), (2,), (3,)]),
            ("A", 2, [(a, b) for a in range(3) for b in range(3)]),
            ("A", 3, [(a, b, c) for a in range(3) for b in range(3) for c in range(3) if a + b + c <= 3]),
            ("A", 4, [(1, 0, 0, 1), (0, 1, 0, 0), (0, 0, 2, 0), (1, 1, 0, 0)]),
            ("D", 4, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]),
        ],
    )
    def test_generated_crystals_are_clean_and_have_weyl_size(self, family, rank, weights):
        quiver = standard_quiver(family, rank)
        for lam in weights:
            graph = generate_crystal(quiver, lam)
            assert check_axioms(graph) == []
            assert len(graph) == weyl_dimension(quiver, lam)

    @pytest.mark.parametrize("rank", [1, 2, 3, 4])
    def test_every_weight_up_to_two_has_weyl_size(self, rank):
        quiver = standard_quiver("A", rank)
        for lam in itertools.product(range(3), repeat=rank):
            assert len(generate_crystal(quiver, lam)) == weyl_dimension(quiver, lam), lam

    def test_every_type_a_orientation_gives_the_same_size(self):
        for quiver in all_orientations("A", 3):
            graph = generate_crystal(quiver, (1, 0, 1))
            assert check_axioms(graph) == []
            assert len(graph) == 15

    def test_thread_count_does_not_change_the_result(self, d4):
        single = generate_crystal(d4, (0, 0, 1, 0), threads=1)
        pooled = generate_crystal(d4, (0, 0, 1, 0), threads=4)
        assert [n.key for n in single.nodes] == [n.key for n in pooled.nodes]
        assert single.edges == pooled.edges

    def test_node_limit(self, a2):
        with pytest.raises(NodeLimitExceeded) as info:
            generate_crystal(a2, (1, 1), max_nodes=3)
        assert info.value.limit == 3

    def test_zero_weight_is_a_single_node(self, d4):
        graph = generate_crystal(d4, (0, 0, 0, 0))
        assert len(graph) == 1
        assert graph.edges == []
