"""DOT export of tree graphs."""

from typing import List

from ..treegraph import TreeGraphAdjacency


def tree_graph_to_dot(tg: TreeGraphAdjacency, name: str = "T") -> str:
    """Undirected DOT graph: one node per tree labelled by its edge ids, one edge per adjacency."""
    lines: List[str] = [f"graph {name} {{"]
    for tree_id, tree in enumerate(tg.trees):
        label = " ".join(map(str, tree.edges.ids()))
        lines.append(f'  t{tree_id} [label="{{{label}}}", component={tg.component_label[tree_id]}];')
    for i, row in enumerate(tg.adjacency):
        for j in row:
            if i < j:
                lines.append(f"  t{i} -- t{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
