"""The symbolic Collatz possibility tree.

Every node stands for a whole arithmetic progression of values.  Expanding a
node splits its progression by parity and applies the matching compact
Collatz step to each half.  Each child records its progression, the index
map back to the root seed, the operator word, and which branch (even/odd)
produced it.

Node ids are assigned breadth first with the even child first, so the children
of node ``n`` are ``2n + 1`` (even) and ``2n + 2`` (odd).  Walking a single
path with :func:`descend` produces the same ids as :func:`build`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .errors import DepthLimitExceeded, NotFound, WordSyntaxError
from .indexing import IndexMap, OperatorWord, compose, identity_map
from .progression import Op, Progression, split_parity, step_even, step_odd_compact

DEFAULT_DEPTH_LIMIT = 24


class BranchTag(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @property
    def letter(self) -> str:
        return self.value[0]


@dataclass(frozen=True, slots=True)
class TreeNode:
    id: int
    parent: int | None
    depth: int
    progression: Progression
    index_map: IndexMap
    word: OperatorWord
    branch: BranchTag | None = None
    intermediate: Progression | None = None

    def value(self, j: int) -> int:
        return self.progression(j)

    def seed(self, j: int) -> int:
        return self.index_map(j)


def root() -> TreeNode:
    return TreeNode(0, None, 0, Progression(1, 0), identity_map(), OperatorWord())


def _child(n: TreeNode, tag: BranchTag, extracted: Progression, op: Op) -> TreeNode:
    if tag is BranchTag.EVEN:
        prog, cid = step_even(extracted), 2 * n.id + 1
    else:
        prog, cid = step_odd_compact(extracted), 2 * n.id + 2
    return TreeNode(
        id=cid,
        parent=n.id,
        depth=n.depth + 1,
        progression=prog,
        index_map=compose(n.index_map, op),
        word=n.word.extend(op),
        branch=tag,
        intermediate=extracted,
    )


def expand_node(n: TreeNode) -> tuple[TreeNode, TreeNode]:
    """Return the (even, odd) children of ``n``."""
    split = split_parity(n.progression)
    return (
        _child(n, BranchTag.EVEN, *split.even),
        _child(n, BranchTag.ODD, *split.odd),
    )


def even_op(p: Progression) -> Op:
    """Operator that extracts the even terms of ``p`` (odd difference assumed)."""
    return Op.T1 if p.b % 2 == 0 else Op.T2


def descend(word: OperatorWord | str, start: TreeNode | None = None) -> TreeNode:
    """Walk one root-to-node path by operator word without storing the tree."""
    node = root() if start is None else start
    for op in OperatorWord.of(word):
        even, odd = expand_node(node)
        node = even if even.word[-1] is op else odd
    return node


def descend_branches(letters: str, start: TreeNode | None = None) -> TreeNode:
    """Walk one path by branch letters, e.g. ``"oeeoe"``."""
    node = root() if start is None else start
    for c in letters.strip().lower():
        if c not in "eo":
            raise WordSyntaxError(f"parity word may contain only 'e' and 'o', got {letters!r}")
        even, odd = expand_node(node)
        node = even if c == "e" else odd
    return node


def branches_to_word(letters: str) -> OperatorWord:
    return descend_branches(letters).word


class Tree:
    """Complete binary tree of nodes stored in breadth-first order."""

    def __init__(self, nodes: list[TreeNode], depth: int):
        self.nodes = nodes
        self.depth = depth

    def __len__(self):
        return len(self.nodes)

    def __iter__(self) -> Iterator[TreeNode]:
        return iter(self.nodes)

    def __getitem__(self, node_id: int) -> TreeNode:
        return self.nodes[node_id]

    @property
    def root(self) -> TreeNode:
        return self.nodes[0]

    def children(self, node_id: int) -> tuple[TreeNode, TreeNode] | None:
        if self.nodes[node_id].depth >= self.depth:
            return None
        return self.nodes[2 * node_id + 1], self.nodes[2 * node_id + 2]

    def level(self, d: int) -> list[TreeNode]:
        if not 0 <= d <= self.depth:
            raise NotFound(f"depth {d} not built (tree depth {self.depth})")
        return self.nodes[(1 << d) - 1:(1 << (d + 1)) - 1]

    def ancestors(self, node_id: int) -> Iterator[TreeNode]:
        """Proper ancestors of a node, nearest first."""
        parent = self.nodes[node_id].parent
        while parent is not None:
            node = self.nodes[parent]
            yield node
            parent = node.parent

    def branch_word(self, node_id: int) -> str:
        letters = []
        node = self.nodes[node_id]
        while node.branch is not None:
            letters.append(node.branch.letter)
            node = self.nodes[node.parent]
        return "".join(reversed(letters))

    def node_at(self, word: OperatorWord | str) -> TreeNode:
        word = OperatorWord.of(word)
        if len(word) > self.depth:
            raise NotFound(f"word {str(word)!r} is longer than tree depth {self.depth}")
        node_id = 0
        for op in word:
            node = self.nodes[node_id]
            is_even = op is even_op(node.progression)
            node_id = 2 * node_id + (1 if is_even else 2)
        return self.nodes[node_id]


def build(depth: int, limit: int = DEFAULT_DEPTH_LIMIT) -> Tree:
    if depth < 0:
        raise ValueError(f"depth must be nonnegative, got {depth}")
    if depth > limit:
        raise DepthLimitExceeded(depth, limit)
    nodes = [root()]
    for i in range((1 << depth) - 1):
        nodes.extend(expand_node(nodes[i]))
    return Tree(nodes, depth)
