import pytest

from app.features.crystals.domain.entities import ModClass, check_axioms, generate_crystal, module_crystal
from app.features.quivers.domain.entities import standard_quiver, weyl_dimension
from app.features.tableaux.domain.entities import (
    E,
    F,
    Tableau,
    enumerate_ssyt,
    highest_weight_tableau,
    phi,
    phi_inv,
    tab_crystal_op,
    tab_e,
    tab_eps,
    tab_f,
    tab_phi,
    tab_promote,
    tableau_crystal,
)
from app.shared.exceptions import CrystalMembershipError, UnsupportedOrientationError
from tests.helpers import interval_module


EXAMPLE = Tableau.of([[1, 2, 4], [3, 4, 5], [4, 6, 6]])


class TestTableau:
    def test_shape_and_weight(self):
        assert EXAMPLE.shape == (3, 3)
        assert EXAMPLE.content(6) == (1, 1, 1, 3, 1, 2)
        assert EXAMPLE.weight(5) == (0, 0, -2, 2, -1)
        assert str(EXAMPLE) == "1 2 4 / 3 4 5 / 4 6 6"

    def test_semistandard(self):
        assert EXAMPLE.is_semistandard(alphabet=6)
        assert not EXAMPLE.is_semistandard(alphabet=5)
        assert not Tableau.of([[2, 1]]).is_semistandard()
        assert not Tableau.of([[1, 2], [1, 3]]).is_semistandard()
        assert not Tableau.of([[1, 2], [3]]).is_semistandard()

    def test_reading_word_starts_at_the_bottom_row(self):
        letters = [letter for letter, _, _ in Tableau.of([[1, 1], [2, 3]]).reading_word()]
        assert letters == [2, 3, 1, 1]


class TestSignatureRule:
    def test_single_box(self):
        box = Tableau.of([[1]])
        assert tab_f(box, 1) == Tableau.of([[2]])
        assert tab_e(Tableau.of([[2]]), 1) == box
        assert tab_f(box, 2) is None

    def test_unpaired_letters(self):
        row = Tableau.of([[1, 2]])
        assert (tab_eps(row, 1), tab_phi(row, 1)) == (1, 1)
        assert tab_f(row, 1) == Tableau.of([[2, 2]])
        assert tab_e(row, 1) == Tableau.of([[1, 1]])

    def test_column_pairs_off(self):
        column = Tableau.of([[1], [2]])
        assert tab_eps(column, 1) == tab_phi(column, 1) == 0
        assert tab_crystal_op(column, 1, F) is None
        assert tab_crystal_op(column, 1, E) is None

    def test_bad_direction(self):
        with pytest.raises(ValueError):
            tab_crystal_op(EXAMPLE, 1, "x")

    def test_highest_weight_tableau_is_killed_by_raising(self):
        top = highest_weight_tableau(2, 3)
        assert top == Tableau.of([[1, 1, 1], [2, 2, 2]])
        assert all(tab_e(top, i) is None for i in range(1, 4))


class TestEnumeration:
    @pytest.mark.parametrize(
        "j,m,alphabet,count",
        [(1, 1, 2, 2), (1, 1, 3, 3), (1, 2, 3, 6), (2, 2, 4, 20), (2, 3, 5, 175), (3, 1, 4, 4)],
    )
    def test_counts(self, j, m, alphabet, count):
        found = list(enumerate_ssyt(j, m, alphabet))
        assert len(found) == count
        assert len(set(found)) == count
        assert all(t.is_semistandard(alphabet) for t in found)

    def test_lexicographic_order(self):
        found = list(enumerate_ssyt(2, 2, 4))
        assert found == sorted(found)
        assert found[0] == highest_weight_tableau(2, 2)

    @pytest.mark.parametrize("n,j,m", [(1, 1, 2), (2, 1, 2), (3, 2, 2), (4, 2, 1), (3, 3, 2)])
    def test_tableau_crystal(self, n, j, m):
        graph = tableau_crystal(n, j, m)
        lam = tuple(m if k == j else 0 for k in range(1, n + 1))
        assert check_axioms(graph) == []
        assert len(graph) == weyl_dimension(standard_quiver("A", n), lam)


class TestPromotion:
    def test_example(self):
        assert tab_promote(EXAMPLE, 5) == Tableau.of([[1, 1, 3], [2, 4, 5], [5, 5, 6]])

    def test_order(self):
        for tableau in enumerate_ssyt(2, 3, 4):
            current = tableau
            for _ in range(4):
                current = tab_promote(current, 3)
            assert current == tableau

    def test_single_row_rotates_letters(self):
        assert tab_promote(Tableau.of([[1, 3, 3]]), 2) == Tableau.of([[1, 1, 2]])


class TestCorrespondence:
    def test_example(self, example_module):
        assert phi(example_module, 3, 3) == EXAMPLE
        assert phi_inv(EXAMPLE, 5) == example_module

    def test_phi_rejects_bad_input(self, d4, example_module):
        with pytest.raises(UnsupportedOrientationError):
            phi(ModClass.zero(d4), 1, 1)
        with pytest.raises(CrystalMembershipError):
            phi(example_module, 2, 3)
        with pytest.raises(CrystalMembershipError):
            phi(example_module, 3, 2)
        with pytest.raises(CrystalMembershipError):
            phi_inv(Tableau.of([[2, 1]]), 2)

    def test_statistics_agree(self):
        n, j, m = 2, 1, 2
        lam = (2, 0)
        crystal = module_crystal(standard_quiver("A", n))
        for node in generate_crystal(crystal.quiver, lam).nodes:
            tableau = phi(node.key, j, m)
            assert node.weight == tableau.weight(n)
            for i in (1, 2):
                assert tab_eps(tableau, i) == crystal.eps(node.key, i)
                assert tab_phi(tableau, i) == crystal.phi(node.key, i, lam)

    def test_phi_intertwines_lowering(self):
        n, j, m = 3, 2, 2
        lam = (0, 2, 0)
        crystal = module_crystal(standard_quiver("A", n))
        for node in generate_crystal(crystal.quiver, lam).nodes:
            for i in range(1, n + 1):
                image = crystal.apply_f_lambda(node.key, i, lam)
                expected = tab_f(phi(node.key, j, m), i)
                assert (None if image is None else phi(image, j, m)) == expected

    def test_row_with_gap(self):
        assert phi(interval_module(3, (1, 2, 1)), 1, 2) == Tableau.of([[1, 3]])
