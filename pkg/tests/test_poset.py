"""Poset construction, structure queries, sums, canonical forms,
enumeration."""

from __future__ import annotations

import itertools

import pytest

from ipckit.errors import BudgetExceeded, CycleDetected, DuplicateElement, UnknownElement
from ipckit.poset import (
    EMPTY,
    Poset,
    are_isomorphic,
    automorphism_count,
    build_poset,
    canonical_code,
    enumerate_posets,
    enumerate_rooted,
    root,
    sum_posets,
    upset_masks,
    upsets,
    width,
)


def chain(k):
    return build_poset([f"c{i}" for i in range(k)],
                       [(f"c{i}", f"c{i+1}") for i in range(k - 1)])


ONE = build_poset(["o"], [])
TWO = build_poset(["a", "b"], [])
F2 = build_poset(["r", "a", "b"], [("r", "a"), ("r", "b")])
F3 = build_poset(["r", "a", "b", "c"], [("r", "a"), ("r", "b"), ("r", "c")])


def test_build_cover_closure():
    p = build_poset(["a", "b"], [("a", "b")], mode="cover")
    assert p.leq("a", "b") and not p.leq("b", "a")
    assert root(p) == "a"


def test_build_one_point():
    p = build_poset(["a"], [], mode="cover")
    assert p.n == 1 and root(p) == "a"


def test_build_rejects_cycle():
    with pytest.raises(CycleDetected):
        build_poset(["a", "b"], [("a", "b"), ("b", "a")], mode="full")
    with pytest.raises(CycleDetected):
        build_poset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])


def test_build_rejects_bad_names():
    with pytest.raises(DuplicateElement):
        build_poset(["a", "a"], [])
    with pytest.raises(UnknownElement):
        build_poset(["a"], [("a", "zz")])


def test_width_examples():
    assert width(EMPTY) == 0
    assert width(chain(5)) == 1
    assert width(F3) == 3
    # non-rooted widths go through principal upsets
    assert width(TWO) == 1
    assert width(sum_posets(TWO, TWO)) == 2


def test_root_examples():
    assert root(F2) == "r"
    assert root(TWO) is None
    assert root(ONE) == "o"


def test_sum_examples():
    assert are_isomorphic(sum_posets(ONE, ONE), chain(2))
    assert len(upset_masks(sum_posets(TWO, TWO), cap=4)) == 4 + 4 - 1
    # pasting below keeps the lower part under everything
    s = sum_posets(F2, ONE)
    assert root(s) is not None and s.n == 4


def test_upsets_examples():
    assert len(upsets(chain(2))) == 3
    assert len(upsets(TWO)) == 4
    assert len(upsets(F2)) == 5
    ups = upsets(F2)
    assert frozenset() in ups and frozenset(F2.elements) in ups


def test_upsets_budget():
    big = build_poset([f"x{i}" for i in range(13)], [])
    with pytest.raises(BudgetExceeded):
        upsets(big)


def test_canonical_relabel_invariance():
    a = build_poset(["a", "b"], [("a", "b")])
    b = build_poset(["x", "y"], [("x", "y")])
    assert canonical_code(a) == canonical_code(b)
    assert canonical_code(F2) != canonical_code(chain(3))


def test_canonical_many_random_relabelings():
    import random

    rng = random.Random(11)
    for n in range(2, 7):
        for p in enumerate_posets(n):
            perm = list(range(n))
            rng.shuffle(perm)
            q = Poset(
                tuple(f"z{i}" for i in range(n)),
                tuple(
                    _permute_mask(p.up[perm.index(k)], perm, n)
                    for k in range(n)
                ),
            )
            assert canonical_code(q) == canonical_code(p)


def _permute_mask(mask, perm, n):
    out = 0
    for j in range(n):
        if mask >> j & 1:
            out |= 1 << perm[j]
    return out


def test_enumerate_counts():
    assert [len(enumerate_posets(n)) for n in range(8)] == [1, 1, 2, 5, 16, 63, 318, 2045]
    assert len(enumerate_rooted(3)) == 2
    assert len(enumerate_rooted(5)) == 16
    assert len(enumerate_rooted(3, max_width=1)) == 1


def test_enumerate_yields_are_rooted_distinct():
    for size in (3, 4, 5, 6):
        seen = set()
        for p in enumerate_rooted(size):
            assert p.n == size
            assert root(p) is not None
            code = canonical_code(p)
            assert code not in seen
            seen.add(code)


def test_enumerate_budget_cap():
    with pytest.raises(BudgetExceeded):
        enumerate_rooted(9)


def _labeled_posets(n):
    """All reflexive-transitive-antisymmetric relations on range(n)."""
    if n == 0:
        return [()]
    out = []
    offdiag = [(i, j) for i in range(n) for j in range(n) if i != j]
    for picks in itertools.product((0, 1), repeat=len(offdiag)):
        rel = [1 << i for i in range(n)]
        for bit, (i, j) in zip(picks, offdiag):
            if bit:
                rel[i] |= 1 << j
        ok = True
        for i in range(n):
            for j in range(n):
                if i != j and rel[i] >> j & 1:
                    if rel[j] >> i & 1 or rel[j] & ~rel[i]:
                        ok = False
                        break
            if not ok:
                break
        if ok:
            out.append(tuple(rel))
    return out


def test_labeled_orbit_cross_check():
    # unlabeled classes weighted by orbit size give the labeled count
    for n in range(1, 5):
        labeled = len(_labeled_posets(n))
        fact = 1
        for k in range(2, n + 1):
            fact *= k
        total = sum(fact // automorphism_count(p) for p in enumerate_posets(n))
        assert total == labeled
    assert len(_labeled_posets(3)) == 19
    assert len(_labeled_posets(4)) == 219


def test_rooted_orbit_cross_check():
    # labeled rooted posets on n points = n * labeled posets on n-1 points
    for n in range(2, 6):
        labeled_rest = len(_labeled_posets(n - 1))
        fact = 1
        for k in range(2, n + 1):
            fact *= k
        total = sum(fact // automorphism_count(p) for p in enumerate_rooted(n))
        assert total == n * labeled_rest


def test_sum_width_invariant():
    posets = [p for n in range(1, 5) for p in enumerate_rooted(n)]
    for p in posets:
        for q in posets:
            assert width(sum_posets(p, q)) == max(width(p), width(q))


def test_sum_width_invariant_on_catalog_pairs():
    from ipckit.catalog import catalog_get, catalog_keys

    rooted = []
    for key in catalog_keys():
        if "(" in key and not key.split("(")[1][:1].isdigit():
            continue  # parameterized placeholders like F(n)
        p = catalog_get(key)
        if p.n <= 6 and root(p) is not None:
            rooted.append(p)
    assert len(rooted) > 10
    for p in rooted:
        for q in rooted:
            assert width(sum_posets(p, q)) == max(width(p), width(q))


def test_sum_associativity():
    posets = [p for n in range(0, 5) for p in enumerate_posets(n)]
    pair = {}
    for a in posets:
        for b in posets:
            pair[id(a), id(b)] = sum_posets(a, b)
    for a, b, c in itertools.product(posets, repeat=3):
        left = sum_posets(pair[id(a), id(b)], c)
        right = sum_posets(a, pair[id(b), id(c)])
        assert canonical_code(left) == canonical_code(right)
