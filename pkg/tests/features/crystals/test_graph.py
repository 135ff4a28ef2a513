import dataclasses

import numpy as np
import pytest

from app.features.crystals.domain.entities import (
    NEG_INF,
    character,
    check_axioms,
    connected_components,
    generate_crystal,
    graph_iso,
    highest_weight_nodes,
    subgraph,
    t_lambda,
    tensor,
)
from app.features.quivers.domain.entities import standard_quiver
from app.shared.exceptions import GraphIsomorphismError


@pytest.fixture
def a1_fundamental():
    return generate_crystal(standard_quiver("A", 1), (1,))


@pytest.fixture
def a2_fundamental(a2):
    return generate_crystal(a2, (1, 0))


class TestAxiomCheck:
    def test_recolored_edge_is_reported(self, a2_fundamental):
        broken = dataclasses.replace(a2_fundamental, edges=[(0, 1, 1), (1, 1, 2)])
        assert check_axioms(broken)

    def test_duplicate_out_edge_is_reported(self, a2_fundamental):
        broken = dataclasses.replace(a2_fundamental, edges=[(0, 1, 1), (0, 1, 2), (1, 2, 2)])
        assert any("outgoing" in line for line in check_axioms(broken))

    def test_wrong_weight_is_reported(self, a2_fundamental):
        nodes = list(a2_fundamental.nodes)
        nodes[2] = dataclasses.replace(nodes[2], weight=(1, -1))
        assert check_axioms(dataclasses.replace(a2_fundamental, nodes=nodes))

    def test_unknown_color_is_reported(self, a2_fundamental):
        broken = dataclasses.replace(a2_fundamental, edges=a2_fundamental.edges + [(2, 7, 0)])
        assert any("unknown color" in line for line in check_axioms(broken))


class TestTensor:
    def test_a1_square_splits_into_triplet_and_singlet(self, a1_fundamental):
        square = tensor(a1_fundamental, a1_fundamental)
        assert check_axioms(square) == []
        assert [len(part) for part in connected_components(square)] == [3, 1]
        assert highest_weight_nodes(square) == [0, 1]
        assert square.edges == [(0, 1, 2), (2, 1, 3)]

    def test_components_are_highest_weight_crystals(self, a1_fundamental):
        square = tensor(a1_fundamental, a1_fundamental)
        triplet = subgraph(square, connected_components(square)[0])
        assert triplet.highest_weight == 0
        assert triplet.lam == (2,)
        assert graph_iso(triplet, generate_crystal(standard_quiver("A", 1), (2,))) is not None

    def test_t_lambda_shifts_weights_and_keeps_edges(self, a2_fundamental):
        shift = t_lambda(a2_fundamental.cartan, (1, 1))
        assert shift.nodes[0].eps == (NEG_INF, NEG_INF)
        for product in (tensor(a2_fundamental, shift), tensor(shift, a2_fundamental)):
            assert product.edges == a2_fundamental.edges
            assert [n.weight for n in product.nodes] == [
                tuple(w + 1 for w in n.weight) for n in a2_fundamental.nodes
            ]

    def test_mismatched_colors_are_rejected(self, a1_fundamental, a2_fundamental):
        with pytest.raises(GraphIsomorphismError):
            tensor(a1_fundamental, a2_fundamental)


class TestIsomorphism:
    def test_identity(self, a2_fundamental):
        assert graph_iso(a2_fundamental, a2_fundamental) == {0: 0, 1: 1, 2: 2}

    def test_dual_fundamental_is_not_isomorphic(self, a2, a2_fundamental):
        assert graph_iso(a2_fundamental, generate_crystal(a2, (0, 1))) is None

    def test_needs_a_unique_source(self, a1_fundamental):
        square = tensor(a1_fundamental, a1_fundamental)
        with pytest.raises(GraphIsomorphismError):
            graph_iso(square, square)


class TestCharacter:
    @pytest.mark.parametrize(
        "family,rank,lam",
        [("A", 2, (1, 1)), ("A", 3, (1, 0, 1)), ("A", 3, (0, 2, 0)), ("D", 4, (0, 0, 1, 0))],
    )
    def test_character_is_weyl_invariant(self, family, rank, lam):
        quiver = standard_quiver(family, rank)
        counts = character(generate_crystal(quiver, lam))
        cartan = np.asarray(quiver.cartan)
        for i in quiver.vertices:
            reflected = {}
            for weight, mult in counts.items():
                image = tuple(int(x) for x in np.asarray(weight) - weight[i - 1] * cartan[i - 1])
                reflected[image] = mult
            assert reflected == dict(counts)

    def test_highest_weight_occurs_once(self, d4):
        counts = character(generate_crystal(d4, (0, 0, 1, 0)))
        assert counts[(0, 0, 1, 0)] == 1
        assert counts[(0, 0, 0, 0)] == 4
