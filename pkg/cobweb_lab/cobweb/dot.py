"""
Graphviz DOT export of a cobweb chain.

Each level becomes a subgraph with rank=same; arcs run from the lower level
to the next one. Vertex labels read "L<r>_<i>" with the level r counted from 1
and the position i counted from 0. Render with e.g.

    dot -Tpng -O chain.gv
"""

from typing import List

from cobweb_lab.models.chain import CobwebChain


def _node(level: int, position: int) -> str:
    return f"L{level + 1}_{position}"


def to_dot(c: CobwebChain, name: str = "cobweb") -> str:
    lines: List[str] = [f"digraph {name} {{", "\trankdir = BT;"]
    for level, size in enumerate(c.levels.sizes):
        lines.append(f"\tsubgraph level_{level + 1} {{")
        lines.append("\t\trank = same;")
        for position in range(size):
            node = _node(level, position)
            lines.append(f'\t\t"{node}" [label="{node}"];')
        lines.append("\t}")
    for level, block in enumerate(c.blocks):
        for i, j in block.ones_positions():
            lines.append(f'\t"{_node(level, i)}" -> "{_node(level + 1, j)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
