"""Graphviz DOT export of Auslander-Reiten quivers."""
import logging

from app.features.quivers.domain.entities import ARGraph


logger = logging.getLogger(__name__)


class ARQuiverDotExporter:
    """
    Renders Gamma_Q as DOT: solid edges are irreducible maps, dashed edges
    labeled "tau" point from M to tau(M). Nodes appear in knitting order.
    """

    def export(self, ar: ARGraph) -> str:
        lines = [f'digraph "{ar.quiver}" {{', "  rankdir=LR;", "  node [shape=box];"]
        for ind in ar.indecs:
            shape = ", style=bold" if ind.is_projective or ind.is_injective else ""
            lines.append(f'  "{ind.label}" [label="{ind.label}\\n({ind.orbit},{ind.shift})"{shape}];')
        for src, dst in sorted(ar.graph.edges):
            lines.append(f'  "{_label(src)}" -> "{_label(dst)}";')
        for ind in ar.indecs:
            tau = ar.tau(ind)
            if tau is not None:
                lines.append(f'  "{ind.label}" -> "{tau.label}" [style=dashed, label="tau", constraint=false];')
        lines.append("}")
        logger.debug(f"Exported AR quiver of {ar.quiver} with {len(ar)} nodes")
        return "\n".join(lines) + "\n"


def _label(dim) -> str:
    return "".join(str(d) for d in dim)
