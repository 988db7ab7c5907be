import itertools

import numpy as np
import pytest

from apcollatz import oracle
from apcollatz.cycles import CyclePair, Outcome, iter_pairs, scan, search_degenerate, solve_pair, verify
from apcollatz.errors import DepthLimitExceeded
from apcollatz.indexing import IndexMap, OperatorWord
from apcollatz.progression import Progression as S
from apcollatz.tree import TreeNode, build


def node(a, b, alpha, beta, depth=0, word=""):
    return TreeNode(0, None, depth, S(a, b), IndexMap(alpha, beta), OperatorWord.parse(word))


def brute_force(pair, bound):
    """All (x, y) in [0, bound]^2 solving both equations, by sweeping x."""
    d, a = pair.descendant, pair.ancestor
    xs = np.arange(bound + 1, dtype=np.int64)
    num = d.progression.a * xs + d.progression.b - a.progression.b
    ok = (num >= 0) & (num % a.progression.a == 0)
    ys = num // a.progression.a
    ok &= ys <= bound
    ok &= d.index_map.alpha * xs + d.index_map.beta == a.index_map.alpha * ys + a.index_map.beta
    return list(zip(xs[ok].tolist(), ys[ok].tolist()))


@pytest.fixture(scope="module")
def t8():
    return build(8)


def test_fig3_pair():
    pair = CyclePair(node(9, 2, 8, 1, 3, "211"), node(3, 2, 2, 1, 1, "2"))
    res = solve_pair(pair)
    assert (res.outcome, res.x, res.y) == (Outcome.UNIQUE, 0, 0)
    assert pair.t == 2 and pair.determinant == -6
    assert verify(pair, 0, 0)


def test_no_solution_example():
    pair = CyclePair(node(9, 8, 4, 3, 2, "22"), node(3, 2, 2, 1, 1, "2"))
    assert solve_pair(pair).outcome is Outcome.NO_SOLUTION
    assert brute_force(pair, 10**4) == []
    # the only rational solution is (-1, -1)
    res = solve_pair(pair, allow_negative=True)
    assert (res.x, res.y) == (-1, -1)


@pytest.mark.parametrize("a1, a2, al1, al2, b, beta", [(9, 3, 8, 2, 2, 1), (27, 1, 16, 1, 5, 3), (3, 9, 2, 16, 0, 0)])
def test_equal_offsets_give_origin(a1, a2, al1, al2, b, beta):
    pair = CyclePair(node(a1, b, al1, beta), node(a2, b, al2, beta))
    res = solve_pair(pair)
    assert (res.outcome, res.x, res.y) == (Outcome.UNIQUE, 0, 0)


def test_degenerate():
    pair = CyclePair(node(3, 5, 3, 4), node(3, 2, 3, 1))
    assert solve_pair(pair).outcome is Outcome.DEGENERATE
    assert search_degenerate(pair) == (0, 1) == min(brute_force(pair, 50))
    # y >= 0 forces x up to 1
    flipped = CyclePair(node(3, 2, 3, 1), node(3, 5, 3, 4))
    assert search_degenerate(flipped) == (1, 0) == min(brute_force(flipped, 50))
    assert search_degenerate(flipped, bound=0) is None
    # value equation solvable, seed equation never
    inconsistent = CyclePair(node(3, 5, 3, 4), node(3, 2, 3, 0))
    assert search_degenerate(inconsistent) is None and brute_force(inconsistent, 200) == []
    # value equation unsolvable
    assert search_degenerate(CyclePair(node(3, 1, 4, 1), node(3, 2, 4, 2))) is None


def test_degenerate_needs_lift():
    pair = CyclePair(node(2, 0, 2, 0), node(4, 7, 4, 7))
    hits = brute_force(pair, 100)
    assert search_degenerate(pair) == (hits[0] if hits else None)


def test_closed_form_matches_brute_force(t8):
    bound = 5000
    pairs = list(iter_pairs(t8))
    assert len(pairs) == sum(d * 2**d for d in range(9))
    for pair in pairs:
        res = solve_pair(pair)
        hits = brute_force(pair, bound)
        assert res.outcome is not Outcome.DEGENERATE
        if res.outcome is Outcome.UNIQUE and max(res.x, res.y) <= bound:
            assert hits == [(res.x, res.y)]
        else:
            assert hits == []


def test_scan_small():
    assert scan(build(1), 1) == []
    sols = scan(build(3), 3)
    fig3 = [s for s in sols if (str(s.pair.descendant.word), str(s.pair.ancestor.word)) == ("211", "2")]
    assert len(fig3) == 1
    s = fig3[0]
    assert (s.x, s.y, s.value, s.seed, s.pair.t, s.verified) == (0, 0, 2, 1, 2, True)
    assert {s.value for s in sols} == {1, 2}


def test_scan_includes_zero_on_request():
    sols = scan(build(1), 1, include_zero=True)
    assert [(s.value, s.seed, s.verified) for s in sols] == [(0, 0, False)]


@pytest.mark.parametrize("depth", [3, 4, 6, 9])
def test_trivial_cycle_found_at_every_depth(depth):
    sols = scan(build(depth), depth)
    assert any(s.pair.descendant.progression == S(9, 2) and s.pair.ancestor.progression == S(3, 2)
               and s.pair.descendant.index_map == IndexMap(8, 1) for s in sols)


def test_scan_solutions_exact_and_verified():
    t = build(10)
    sols = scan(t, 10)
    assert sols == sorted(sols, key=lambda s: (s.pair.descendant.id, s.pair.t, s.pair.ancestor.id))
    for s in sols:
        d, a = s.pair.descendant, s.pair.ancestor
        assert d.progression(s.x) == a.progression(s.y) == s.value
        assert d.index_map(s.x) == a.index_map(s.y) == s.seed
        assert s.verified
        values = oracle.run(s.seed, d.depth).values
        assert values[a.depth] == values[d.depth]


def test_scan_depth_beyond_tree():
    with pytest.raises(DepthLimitExceeded):
        scan(build(2), 3)


def test_all_pairs_mode_adds_nothing_across_branches():
    t = build(5)
    anc = scan(t, 5)
    every = scan(t, 5, all_pairs=True)
    key = lambda s: (s.pair.descendant.id, s.pair.ancestor.id)
    assert sorted(map(key, every)) == sorted(map(key, anc))
    for d, o in itertools.combinations(t.level(5), 2):
        # same depth, distinct seed classes: never the same seed
        assert solve_pair(CyclePair(o, d)).outcome in (Outcome.NO_SOLUTION, Outcome.DEGENERATE)
