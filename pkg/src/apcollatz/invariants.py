"""Level-by-level check of the all-odd path and its invariant b = a - 1.

Taking the odd branch from S(1, 0) k times gives S(3**k, 3**k - 1) with seed
map 2**k * j + 2**k - 1, so the smallest seed sustaining k odd compact steps
grows without bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotOdd
from .progression import Progression, step_odd_compact, t2
from .tree import TreeNode, expand_node, root


@dataclass(frozen=True)
class OddLevel:
    k: int
    a: int
    b: int
    alpha: int
    beta: int
    holds: bool

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "a": str(self.a),
            "b": str(self.b),
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "invariant_holds": self.holds,
        }


@dataclass(frozen=True)
class AllOddReport:
    depth: int
    levels: tuple[OddLevel, ...] = field(default=())

    @property
    def invariant_holds(self) -> bool:
        return all(lv.holds for lv in self.levels)

    @property
    def violations(self) -> list[int]:
        return [lv.k for lv in self.levels if not lv.holds]

    @property
    def min_seed(self) -> int:
        return self.levels[-1].beta

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "invariant_holds": self.invariant_holds,
            "min_seed": str(self.min_seed),
            "levels": [lv.to_json() for lv in self.levels],
        }


def _record(node: TreeNode) -> OddLevel:
    p, m = node.progression, node.index_map
    return OddLevel(node.depth, p.a, p.b, m.alpha, m.beta, p.a % 2 == 1 and p.b == p.a - 1)


def all_odd_path(k: int) -> AllOddReport:
    if k < 0:
        raise ValueError(f"depth must be nonnegative, got {k}")
    node = root()
    levels = [_record(node)]
    for _ in range(k):
        node = expand_node(node)[1]
        levels.append(_record(node))
    return AllOddReport(k, tuple(levels))


def lemma_step_check(a: int) -> bool:
    """True iff extracting with T2 and stepping S(a, a-1) gives S(3a, 3a-1), 3a odd."""
    if a % 2 == 0:
        raise NotOdd(f"lemma requires odd a, got {a}")
    nxt = step_odd_compact(t2(Progression(a, a - 1)))
    return nxt == Progression(3 * a, 3 * a - 1) and nxt.a % 2 == 1


def min_seed_growth(k: int) -> int:
    """Smallest seed whose first k compact steps all take the odd branch.

    For k = 0 this is 0, which the oracle does not accept; callers treat it
    as a flag rather than a runnable seed.
    """
    if k < 0:
        raise ValueError(f"depth must be nonnegative, got {k}")
    return (1 << k) - 1
