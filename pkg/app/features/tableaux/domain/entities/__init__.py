"""Domain entities for the tableaux feature."""
from .tableau import (
    E,
    F,
    Tableau,
    enumerate_ssyt,
    highest_weight_tableau,
    tab_crystal_op,
    tab_e,
    tab_eps,
    tab_f,
    tab_phi,
    tab_promote,
    tableau_crystal,
)
from .correspondence import phi, phi_inv

__all__ = [
    "E",
    "F",
    "Tableau",
    "enumerate_ssyt",
    "highest_weight_tableau",
    "tab_crystal_op",
    "tab_e",
    "tab_eps",
    "tab_f",
    "tab_phi",
    "tab_promote",
    "tableau_crystal",
    "phi",
    "phi_inv",
]
