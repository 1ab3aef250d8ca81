"""Finite Heyting algebras and the finite duality."""

from __future__ import annotations

import pytest

from ipckit.errors import BudgetExceeded
from ipckit.heyting import (
    algebra_sum,
    algebras_isomorphic,
    boolean_two,
    count_quotients,
    count_subalgebras,
    dual_poset,
    is_si,
    upset_algebra,
)
from ipckit.morphisms import epartitions
from ipckit.poset import (
    are_isomorphic,
    build_poset,
    enumerate_posets,
    enumerate_rooted,
    root,
    sum_posets,
    upset_masks,
)

ONE = build_poset(["o"], [])
TWO = build_poset(["a", "b"], [])
CH2 = build_poset(["a", "b"], [("a", "b")])
CH3 = build_poset(["a", "b", "c"], [("a", "b"), ("b", "c")])
F2 = build_poset(["r", "a", "b"], [("r", "a"), ("r", "b")])


def test_upset_algebra_shapes():
    assert algebras_isomorphic(upset_algebra(ONE), boolean_two())
    assert upset_algebra(CH2).size == 3
    assert upset_algebra(TWO).size == 4


def test_residual_on_antichain():
    # {a} -> empty is {b}
    alg = upset_algebra(TWO)
    masks = upset_masks(TWO, cap=2)
    pos = {m: i for i, m in enumerate(masks)}
    a_only = pos[0b01]
    empty = pos[0]
    assert masks[alg.imp[a_only][empty]] == 0b10


def test_is_si():
    assert is_si(upset_algebra(F2))
    assert not is_si(upset_algebra(TWO))
    assert is_si(boolean_two())


def test_si_iff_rooted():
    for n in range(1, 7):
        for p in enumerate_posets(n):
            assert is_si(upset_algebra(p)) == (root(p) is not None)


def test_algebra_sum_examples():
    b2 = boolean_two()
    assert algebras_isomorphic(algebra_sum(b2, b2), upset_algebra(CH2))
    assert algebra_sum(algebra_sum(b2, b2), b2).size == 4


def test_sum_duality():
    rooted = [p for n in range(1, 5) for p in enumerate_rooted(n)]
    for p in rooted:
        for q in rooted:
            lhs = upset_algebra(sum_posets(p, q))
            rhs = algebra_sum(upset_algebra(p), upset_algebra(q))
            assert algebras_isomorphic(lhs, rhs)


def test_dual_poset_examples():
    assert are_isomorphic(dual_poset(upset_algebra(CH3)), CH3)
    assert are_isomorphic(dual_poset(boolean_two()), ONE)
    assert are_isomorphic(dual_poset(upset_algebra(F2)), F2)


def test_duality_roundtrip():
    for n in range(0, 6):
        for p in enumerate_posets(n):
            assert are_isomorphic(dual_poset(upset_algebra(p)), p)


def test_count_subalgebras_examples():
    assert count_subalgebras(upset_algebra(CH2)) == 2
    assert count_subalgebras(upset_algebra(TWO)) == 2
    assert count_subalgebras(boolean_two()) == 1


def test_count_subalgebras_budget():
    big = build_poset([f"x{i}" for i in range(5)], [])
    with pytest.raises(BudgetExceeded):
        count_subalgebras(upset_algebra(big))


def test_count_quotients_examples():
    assert count_quotients(upset_algebra(CH2)) == 3
    assert count_quotients(upset_algebra(F2)) == len(upset_masks(F2, cap=3))
    assert count_quotients(boolean_two()) == 2


def test_all_filters_are_principal_bruteforce():
    # the quotient count walks principal filters; check nothing is missed
    for p in (ONE, CH2, TWO, F2):
        alg = upset_algebra(p)
        k = alg.size
        filters = 0
        for mask in range(1, 1 << k):
            members = [x for x in range(k) if mask >> x & 1]
            up_closed = all(
                alg.leq[x] & ~mask == 0 for x in members
            )
            meet_closed = all(
                mask >> alg.meet[x][y] & 1 for x in members for y in members
            )
            if up_closed and meet_closed:
                filters += 1
        assert filters == count_quotients(alg)


def test_duality_counts_invariant():
    for n in range(0, 5):
        for p in enumerate_posets(n):
            alg = upset_algebra(p)
            assert count_quotients(alg) == len(upset_masks(p, cap=p.n))
            assert count_subalgebras(alg) == len(epartitions(p))


def test_algebras_isomorphic_via_frames():
    for n in range(1, 6):
        for p in enumerate_posets(n):
            for q in enumerate_posets(n):
                assert algebras_isomorphic(upset_algebra(p), upset_algebra(q)) == \
                    are_isomorphic(p, q)
    assert not algebras_isomorphic(upset_algebra(F2), upset_algebra(CH3))
