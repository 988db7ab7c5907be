"""JSON, DOT and text renderings of a possibility tree.

Arbitrary-precision integers (a, b, alpha, beta) are written as decimal
strings so JSON consumers with 64-bit numbers do not lose precision.
"""

from __future__ import annotations

import json

from .tree import Tree, TreeNode


def node_record(node: TreeNode) -> dict:
    return {
        "id": node.id,
        "parent": node.parent,
        "depth": node.depth,
        "a": str(node.progression.a),
        "b": str(node.progression.b),
        "alpha": str(node.index_map.alpha),
        "beta": str(node.index_map.beta),
        "word": str(node.word),
        "branch": node.branch.value if node.branch else None,
    }


def tree_to_json(tree: Tree) -> str:
    return json.dumps([node_record(n) for n in tree], indent=1) + "\n"


def _label(node: TreeNode) -> str:
    return f"{node.progression}\\ni={node.index_map}\\n{node.word}"


def tree_to_dot(tree: Tree, name: str = "collatz") -> str:
    lines = [f"digraph {name} {{", "  node [shape=box, fontname=monospace];"]
    for n in tree:
        lines.append(f'  n{n.id} [label="{_label(n)}"];')
    for n in tree:
        if n.parent is not None:
            lines.append(f'  n{n.parent} -> n{n.id} [label="{n.branch.value}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_text(tree: Tree) -> str:
    out = []
    for d in range(tree.depth + 1):
        cells = [f'{n.progression}["{n.word}"]' if n.depth else str(n.progression) for n in tree.level(d)]
        out.append(f"depth {d}: " + ", ".join(cells))
    return "\n".join(out) + "\n"
