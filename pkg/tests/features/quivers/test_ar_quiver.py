import numpy as np
import pytest

from app.features.quivers.domain.entities import (
    all_orientations,
    build_ar_graph,
    positive_roots,
    standard_quiver,
    type_a_nakayama,
)
from app.shared.exceptions import ForeignModuleError, RankMismatchError


def interval_hom_dim(quiver, m, n) -> int:
    """dim Hom(M, N) for thin type A modules, by solving the commuting-square system."""
    shared = [i for i in quiver.vertices if m[i - 1] and n[i - 1]]
    if not shared:
        return 0
    column = {i: k for k, i in enumerate(shared)}
    rows = []
    for src, dst in quiver.arrows:
        # N(h) x_src = x_dst M(h) along the arrow h: src -> dst.
        row = np.zeros(len(shared))
        if src in column and n[dst - 1]:
            row[column[src]] += 1
        if dst in column and m[src - 1]:
            row[column[dst]] -= 1
        if row.any():
            rows.append(row)
    if not rows:
        return len(shared)
    return len(shared) - int(np.linalg.matrix_rank(np.array(rows)))


class TestKnitting:
    def test_d4_projectives_and_injectives(self, d4):
        ar = build_ar_graph(d4)
        assert [ar.projective(i).dim for i in d4.vertices] == [
            (1, 0, 0, 0),
            (0, 1, 0, 0),
            (1, 1, 1, 0),
            (1, 1, 1, 1),
        ]
        assert [ar.injective(i).dim for i in d4.vertices] == [
            (1, 0, 1, 1),
            (0, 1, 1, 1),
            (0, 0, 1, 1),
            (0, 0, 0, 1),
        ]

    def test_d4_layers(self, d4):
        ar = build_ar_graph(d4)
        assert [ar.at(i, 1).dim for i in d4.vertices] == [
            (0, 1, 1, 0),
            (1, 0, 1, 0),
            (1, 1, 2, 1),
            (0, 0, 1, 0),
        ]
        assert [ar.at(i, 2).dim for i in d4.vertices] == [
            (1, 0, 1, 1),
            (0, 1, 1, 1),
            (0, 0, 1, 1),
            (0, 0, 0, 1),
        ]
        assert all(ar.at(i, 2).is_injective for i in d4.vertices)
        assert ar.at(1, 3) is None

    def test_every_positive_root_appears_once(self):
        for family, rank in (("A", 4), ("D", 4), ("D", 5)):
            for quiver in all_orientations(family, rank):
                ar = build_ar_graph(quiver)
                assert sorted(ind.dim for ind in ar) == sorted(positive_roots(quiver))

    def test_tau_matches_coxeter(self, d4):
        ar = build_ar_graph(d4)
        for ind in ar:
            if ind.is_projective:
                assert ar.tau(ind) is None
            else:
                assert ar.tau(ind).dim == d4.coxeter(ind.dim)
            if not ind.is_injective:
                assert ar.tau(ar.tau_inv(ind)) == ind
        assert ar.tau((1, 1, 2, 1)).dim == (1, 1, 1, 0)

    def test_meshes_are_additive(self):
        for quiver in all_orientations("D", 5):
            ar = build_ar_graph(quiver)
            for ind in ar:
                successor = ar.tau_inv(ind)
                if successor is None:
                    continue
                middle = np.sum([m.dim for m in ar.mesh_middle(ind)], axis=0)
                assert tuple(middle) == tuple(a + b for a, b in zip(ind.dim, successor.dim))

    def test_orbit_end_is_injective(self, d4):
        ar = build_ar_graph(d4)
        assert ar.orbit_end(ar.projective(1)) == ar.at(1, 2)

    def test_type_a_nakayama_permutation(self):
        for n in range(1, 7):
            ar = build_ar_graph(standard_quiver("A", n))
            for i in range(1, n + 1):
                shift, vertex = type_a_nakayama(n, 0, i)
                assert ar.nakayama()[ar.projective(i)].proj_coordinate == (vertex, shift)


class TestHomAndExt:
    @pytest.mark.parametrize(
        "family,rank", [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("A", 5), ("D", 4), ("D", 5)]
    )
    def test_hom_minus_ext_is_the_euler_form(self, family, rank):
        for quiver in all_orientations(family, rank):
            ar = build_ar_graph(quiver)
            for m in ar:
                for n in ar:
                    assert ar.hom_dim(m, n) - ar.ext_dim(m, n) == quiver.euler_form(m.dim, n.dim)

    @pytest.mark.parametrize("rank", [2, 3, 4, 5])
    def test_type_a_hom_matches_linear_algebra(self, rank):
        for quiver in all_orientations("A", rank):
            ar = build_ar_graph(quiver)
            for m in ar:
                for n in ar:
                    assert ar.hom_dim(m, n) == interval_hom_dim(quiver, m.dim, n.dim), (quiver, m, n)

    def test_hom_is_one_dimensional_on_the_diagonal(self, d4):
        ar = build_ar_graph(d4)
        assert all(ar.hom_dim(ind, ind) == 1 for ind in ar)
        assert all(ar.ext_dim(ind, ind) == 0 for ind in ar)

    def test_path_order(self, d4):
        ar = build_ar_graph(d4)
        assert ar.precedes(ar.projective(1), ar.injective(1))
        assert not ar.precedes(ar.injective(1), ar.projective(1))
        assert ar.precedes((1, 1, 2, 1), (1, 1, 2, 1))
        assert ar.injective(4).dim in ar.successors_closure(ar.projective(4))


class TestLookup:
    def test_get_rejects_bad_references(self, d4, a2):
        ar = build_ar_graph(d4)
        with pytest.raises(RankMismatchError):
            ar.get((1, 1))
        with pytest.raises(ForeignModuleError):
            ar.get((2, 0, 0, 0))
        with pytest.raises(ForeignModuleError):
            ar.get(build_ar_graph(a2).simple(1))

    def test_contains_and_labels(self, d4):
        ar = build_ar_graph(d4)
        assert (1, 1, 2, 1) in ar
        assert (1, 1, 2, 2) not in ar
        assert str(ar.get((1, 1, 2, 1))) == "M(1121)"

    def test_dualize_keeps_the_dimension_vector(self, d4):
        ar = build_ar_graph(d4)
        dual = ar.dualize(ar.projective(1))
        assert dual.dim == (1, 0, 0, 0)
        assert dual.quiver == d4.opposite()
        assert dual.is_injective

    def test_orbit_ends_are_the_injectives(self):
        for quiver in [*all_orientations("D", 4), *all_orientations("A", 4)]:
            ar = build_ar_graph(quiver)
            ends = {ar.orbit_end(ar.projective(i)).dim for i in quiver.vertices}
            assert ends == {ar.injective(i).dim for i in quiver.vertices}


class TestDuality:
    @pytest.mark.parametrize("family,rank", [("A", 3), ("D", 4)])
    def test_duality_turns_tau_into_tau_inverse(self, family, rank):
        for quiver in all_orientations(family, rank):
            ar = build_ar_graph(quiver)
            dual = build_ar_graph(quiver.opposite())
            for m in ar:
                tau = ar.tau(m)
                image = dual.tau_inv(ar.dualize(m))
                if tau is None:
                    assert image is None
                else:
                    assert image == ar.dualize(tau)

    @pytest.mark.parametrize("family,rank", [("A", 3), ("D", 4)])
    def test_duality_reverses_hom(self, family, rank):
        for quiver in all_orientations(family, rank):
            ar = build_ar_graph(quiver)
            dual = build_ar_graph(quiver.opposite())
            for m in ar:
                for n in ar:
                    assert ar.hom_dim(m, n) == dual.hom_dim(ar.dualize(n), ar.dualize(m))
