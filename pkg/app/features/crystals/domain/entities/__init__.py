"""Domain entities for the crystals feature."""
from .reineke import AntichainModule, ModClass, ReinekeTables, reineke_tables, CHECK, PLAIN
from .graph import (
    CrystalGraph,
    CrystalNode,
    NEG_INF,
    character,
    check_axioms,
    connected_components,
    graph_iso,
    highest_weight_nodes,
    subgraph,
    t_lambda,
    tensor,
)
from .crystal import ModuleCrystal, generate_crystal, is_cospecial, is_special, module_crystal

__all__ = [
    "AntichainModule",
    "ModClass",
    "ReinekeTables",
    "reineke_tables",
    "CHECK",
    "PLAIN",
    "CrystalGraph",
    "CrystalNode",
    "NEG_INF",
    "character",
    "check_axioms",
    "connected_components",
    "graph_iso",
    "highest_weight_nodes",
    "subgraph",
    "t_lambda",
    "tensor",
    "ModuleCrystal",
    "generate_crystal",
    "is_cospecial",
    "is_special",
    "module_crystal",
]
