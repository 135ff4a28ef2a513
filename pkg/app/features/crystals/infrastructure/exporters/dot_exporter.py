"""Graphviz DOT export of crystal graphs."""
import logging

from app.features.crystals.domain.entities import CrystalGraph


logger = logging.getLogger(__name__)

# One color per Dynkin vertex; color 0 (affine) is drawn in black.
PALETTE = ("black", "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan")


class CrystalDotExporter:
    """Renders a crystal graph with nodes in id order and edge labels equal to colors."""

    def export(self, graph: CrystalGraph) -> str:
        lines = ["digraph crystal {", "  node [shape=box, fontname=monospace];"]
        for k, node in enumerate(graph.nodes):
            label = str(node.key).replace('"', "'").replace(" / ", "\\n")
            lines.append(f'  n{k} [label="{label}"];')
        for src, color, dst in graph.edges:
            tint = PALETTE[color % len(PALETTE)]
            lines.append(f'  n{src} -> n{dst} [label="{color}", color={tint}, fontcolor={tint}];')
        lines.append("}")
        logger.debug(f"Exported crystal graph with {len(graph)} nodes")
        return "\n".join(lines) + "\n"
