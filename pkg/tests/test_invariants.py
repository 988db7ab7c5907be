import pytest

from apcollatz import oracle
from apcollatz.errors import NotOdd
from apcollatz.indexing import seed_progression
from apcollatz.invariants import all_odd_path, lemma_step_check, min_seed_growth


def odd_run_length(seed, cap):
    n = 0
    while n < cap and seed % 2:
        seed = oracle.step_compact(seed)
        n += 1
    return n


def test_small_paths():
    r = all_odd_path(0)
    assert [(lv.a, lv.b, lv.alpha, lv.beta) for lv in r.levels] == [(1, 0, 1, 0)]
    assert r.invariant_holds
    r = all_odd_path(2)
    assert [(lv.a, lv.b, lv.alpha, lv.beta) for lv in r.levels] == [(1, 0, 1, 0), (3, 2, 2, 1), (9, 8, 4, 3)]
    assert r.min_seed == 3


def test_closed_form_up_to_64():
    r = all_odd_path(64)
    assert r.violations == []
    for lv in r.levels:
        assert (lv.a, lv.b, lv.alpha, lv.beta) == (3**lv.k, 3**lv.k - 1, 2**lv.k, 2**lv.k - 1)


@pytest.mark.parametrize("a", [1, 3, 9, 27, 3**40, 5, 101])
def test_lemma_step(a):
    assert lemma_step_check(a)


def test_lemma_rejects_even():
    with pytest.raises(NotOdd):
        lemma_step_check(4)


@pytest.mark.parametrize("k, expected", [(0, 0), (3, 7), (5, 31), (64, 2**64 - 1)])
def test_min_seed_growth(k, expected):
    assert min_seed_growth(k) == expected


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 8])
def test_min_seed_brute_force(k):
    first = next(s for s in range(1, 2**k + 1) if odd_run_length(s, k) == k)
    assert first == min_seed_growth(k)
    pre = oracle.run(first, k).values[:k]
    assert all(v % 2 for v in pre)


def test_odd_runs_match_seed_progression():
    k_max = 12
    limit = 2**k_max
    runs = {s: odd_run_length(s, k_max) for s in range(1, limit + 1)}
    for k in range(1, k_max + 1):
        prog = seed_progression("2" * k)
        assert {s for s, n in runs.items() if n >= k} == {s for s in runs if s % prog.a == prog.b}


def test_report_json():
    data = all_odd_path(40).to_json()
    assert data["levels"][40]["a"] == str(3**40)
    assert data["min_seed"] == str(2**40 - 1)
    assert data["invariant_holds"] is True
