"""Splitting and subframe axioms, and the sum decomposition."""

from __future__ import annotations

import pytest

from ipckit.axioms import (
    decompose_kg,
    jankov_syntactic,
    sum_blocks,
    validates_jankov,
    validates_subframe,
)
from ipckit.catalog import catalog_get, ladder_top_segment, ladder_upset, one_point
from ipckit.poset import (
    are_isomorphic,
    build_poset,
    enumerate_posets,
    enumerate_rooted,
    upset_masks,
)
from ipckit.semantics import is_valid

CH3 = build_poset(["a", "b", "c"], [("a", "b"), ("b", "c")])
CH4 = build_poset(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")])
F2 = build_poset(["r", "a", "b"], [("r", "a"), ("r", "b")])


def test_validates_jankov_examples():
    assert not validates_jankov(F2, F2)
    assert validates_jankov(CH4, F2)
    assert validates_jankov(F2, CH3)


def test_validates_subframe_examples():
    p2, p3 = catalog_get("P2"), catalog_get("P3")
    for i in range(1, 8):
        assert not validates_subframe(catalog_get(f"K({i})"), p2)
    for i in range(1, 7):
        assert not validates_subframe(catalog_get(f"G({i})"), p3)
    assert validates_subframe(CH3, F2)


def test_rejects_unrooted_targets():
    two = build_poset(["a", "b"], [])
    with pytest.raises(ValueError):
        validates_jankov(F2, two)
    with pytest.raises(ValueError):
        validates_subframe(F2, two)


def test_jankov_antitonicity_in_host():
    targets = [p for n in range(1, 4) for p in enumerate_rooted(n)]
    hosts = [catalog_get(k) for k in
             ("P1", "P2", "P3", "K2", "K5", "G2", "G5", "BW2(7)", "BW1(2)")]
    for h in hosts:
        for t in targets:
            if not validates_jankov(h, t):
                continue
            for mask in upset_masks(h, cap=h.n):
                assert validates_jankov(h.restrict(mask), t)


def test_subframe_antitonicity_under_subposets():
    targets = [p for n in range(1, 4) for p in enumerate_rooted(n)]
    hosts = [catalog_get(k) for k in ("P2", "P3", "K5", "G5", "BW1(2)")]
    for h in hosts:
        for t in targets:
            if not validates_subframe(h, t):
                continue
            for mask in range(1, 1 << h.n):
                assert validates_subframe(h.restrict(mask), t)


def test_jankov_syntactic_grid():
    targets = [p for n in range(1, 4) for p in enumerate_rooted(n)]
    hosts = [p for n in range(1, 5) for p in enumerate_posets(n)]
    for t in targets:
        formula = jankov_syntactic(t)
        for h in hosts:
            assert is_valid(h, formula) == validates_jankov(h, t)


def test_jankov_syntactic_self_refutation():
    for n in range(1, 5):
        for t in enumerate_rooted(n):
            assert not is_valid(t, jankov_syntactic(t))


def test_jankov_of_point_refuted_everywhere():
    formula = jankov_syntactic(one_point())
    for n in range(1, 5):
        for h in enumerate_posets(n):
            assert not is_valid(h, formula)


def test_sum_blocks():
    blocks = sum_blocks(CH3)
    assert [b.n for b in blocks] == [1, 1, 1]
    l4 = ladder_upset(4)
    blocks = sum_blocks(l4)
    assert [b.n for b in blocks] == [3, 1]
    assert are_isomorphic(blocks[0], ladder_top_segment(2))


def test_decompose_examples():
    factors = decompose_kg(CH3)
    assert [f.n for f in factors] == [1, 1]
    l4 = catalog_get("L(4)")
    factors = decompose_kg(l4)
    assert len(factors) == 1 and factors[0].n == 3
    assert decompose_kg(catalog_get("P1")) is None
    assert decompose_kg(one_point()) == []


def test_decompose_matches_subframe_axioms():
    axioms = [catalog_get(f"P({i})") for i in (1, 2, 3)]
    for n in range(1, 7):
        for p in enumerate_rooted(n):
            dec = decompose_kg(p) is not None
            val = all(validates_subframe(p, a) for a in axioms)
            assert dec == val, p.up


def test_ladder_upsets_decompose():
    for k in range(0, 10):
        assert decompose_kg(ladder_upset(k)) is not None
