"""Cycle search over node/ancestor pairs of the possibility tree.

A descendant node with progression a1*x + b1 and seed map alpha1*x + beta1 and
an ancestor with a2*y + b2, alpha2*y + beta2 close a cycle when some seed
reaches both with the same value:

    a1*x + b1 = a2*y + b2
    alpha1*x + beta1 = alpha2*y + beta2

With D = a1*alpha2 - a2*alpha1 != 0 the system has the single rational
solution

    x = (a2*(beta1 - beta2) + alpha2*(b2 - b1)) / D
    y = (a1*(beta1 - beta2) + alpha1*(b2 - b1)) / D

which is kept only when both are nonnegative integers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator

from .errors import DepthLimitExceeded
from .oracle import run
from .tree import Tree, TreeNode

DEFAULT_FALLBACK_BOUND = 10**6


class Outcome(enum.Enum):
    UNIQUE = "unique"
    NO_SOLUTION = "no_solution"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class CyclePair:
    descendant: TreeNode
    ancestor: TreeNode

    @property
    def t(self) -> int:
        return self.descendant.depth - self.ancestor.depth

    @property
    def determinant(self) -> int:
        d, a = self.descendant, self.ancestor
        return d.progression.a * a.index_map.alpha - a.progression.a * d.index_map.alpha


@dataclass(frozen=True)
class PairResult:
    outcome: Outcome
    x: int | None = None
    y: int | None = None


@dataclass(frozen=True)
class CycleSolution:
    pair: CyclePair
    x: int
    y: int
    value: int
    seed: int
    verified: bool

    def to_json(self) -> dict:
        return {
            "descendant_word": str(self.pair.descendant.word),
            "ancestor_word": str(self.pair.ancestor.word),
            "t": self.pair.t,
            "x": str(self.x),
            "y": str(self.y),
            "value": str(self.value),
            "seed": str(self.seed),
            "verified": self.verified,
        }


def _coefficients(pair: CyclePair):
    d, a = pair.descendant, pair.ancestor
    return (
        d.progression.a, d.progression.b, d.index_map.alpha, d.index_map.beta,
        a.progression.a, a.progression.b, a.index_map.alpha, a.index_map.beta,
    )


def solve_pair(pair: CyclePair, allow_negative: bool = False) -> PairResult:
    a1, b1, al1, be1, a2, b2, al2, be2 = _coefficients(pair)
    det = a1 * al2 - a2 * al1
    if det == 0:
        return PairResult(Outcome.DEGENERATE)
    nx = a2 * (be1 - be2) + al2 * (b2 - b1)
    ny = a1 * (be1 - be2) + al1 * (b2 - b1)
    if nx % det or ny % det:
        return PairResult(Outcome.NO_SOLUTION)
    x, y = nx // det, ny // det
    if not allow_negative and (x < 0 or y < 0):
        return PairResult(Outcome.NO_SOLUTION)
    return PairResult(Outcome.UNIQUE, x, y)


def search_degenerate(pair: CyclePair, bound: int = DEFAULT_FALLBACK_BOUND) -> tuple[int, int] | None:
    """Smallest x in [0, bound] (with y >= 0) solving a system whose rows are proportional.

    Candidates for x come from the congruence a1*x = b2 - b1 (mod a2) rather
    than a linear sweep.  Because the rows are proportional, the seed equation
    either holds at every solution of the value equation or at none.
    """
    a1, b1, al1, be1, a2, b2, al2, be2 = _coefficients(pair)
    rhs = b2 - b1
    g = math.gcd(a1, a2)
    if rhs % g:
        return None
    mod = a2 // g
    x = (rhs // g) * pow(a1 // g, -1, mod) % mod if mod > 1 else 0
    if a1 * x < rhs:
        # lift x until y = (a1*x - rhs) / a2 is nonnegative
        x += -(-(rhs - a1 * x) // (a1 * mod)) * mod
    if x > bound:
        return None
    y = (a1 * x - rhs) // a2
    if al1 * x + be1 != al2 * y + be2:
        return None
    return x, y


def verify(pair: CyclePair, x: int, y: int) -> bool:
    """Check a candidate on the concrete compact iteration."""
    d = pair.descendant
    seed = d.index_map.alpha * x + d.index_map.beta
    value = d.progression.a * x + d.progression.b
    if seed < 1 or x < 0 or y < 0:
        return False
    values = run(seed, d.depth).values
    return values[pair.ancestor.depth] == values[d.depth] == value


def iter_pairs(tree: Tree, max_depth: int | None = None, all_pairs: bool = False) -> Iterator[CyclePair]:
    depth = tree.depth if max_depth is None else max_depth
    nodes = tree.nodes[:(1 << (depth + 1)) - 1]
    for node in nodes:
        if all_pairs:
            others = [o for o in nodes if o.depth < node.depth or (o.depth == node.depth and o.id < node.id)]
            for o in sorted(others, key=lambda o: (node.depth - o.depth, o.id)):
                yield CyclePair(node, o)
        else:
            for anc in tree.ancestors(node.id):
                yield CyclePair(node, anc)


def scan(
    tree: Tree,
    max_depth: int | None = None,
    *,
    all_pairs: bool = False,
    fallback_bound: int = DEFAULT_FALLBACK_BOUND,
    allow_negative: bool = False,
    include_zero: bool = False,
) -> list[CycleSolution]:
    """Solve every node/ancestor pair and oracle-check each solution.

    Solutions with seed 0 (the halving fixed point 0 on the all-T1 path) are
    dropped unless ``include_zero`` is set; they cannot be run on the oracle.
    """
    if max_depth is not None and max_depth > tree.depth:
        raise DepthLimitExceeded(max_depth, tree.depth)
    found = []
    for pair in iter_pairs(tree, max_depth, all_pairs):
        res = solve_pair(pair, allow_negative=allow_negative)
        if res.outcome is Outcome.DEGENERATE:
            xy = search_degenerate(pair, fallback_bound)
            if xy is None:
                continue
            x, y = xy
        elif res.outcome is Outcome.UNIQUE:
            x, y = res.x, res.y
        else:
            continue
        d = pair.descendant
        seed = d.index_map.alpha * x + d.index_map.beta
        if seed == 0 and not include_zero:
            continue
        value = d.progression.a * x + d.progression.b
        found.append(CycleSolution(pair, x, y, value, seed, verify(pair, x, y)))
    found.sort(key=lambda s: (s.pair.descendant.id, s.pair.t, s.pair.ancestor.id))
    return found
