"""Compiled and pure valuation scanners must be interchangeable."""

from __future__ import annotations

import random

from ipckit import _kernel, _pureval
from ipckit.formulas import bw, grz_axiom, parse, variables
from ipckit.poset import enumerate_posets, upset_masks
from ipckit.semantics import compile_formula
from helpers import random_formula as _random_formula


def _both(p, f, domain, limit=None):
    vs = sorted(variables(f))
    slot = {v: i for i, v in enumerate(vs)}
    ops, args = compile_formula(f, slot)
    fast = _kernel.scan_validity(
        p.n, list(p.up), p.full_mask, ops, args, len(vs), list(domain), limit)
    pure = _pureval.scan_validity(
        p.n, list(p.up), p.full_mask, ops, args, len(vs), list(domain), limit)
    return fast, pure


def test_twins_agree_on_fixed_formulas():
    fs = [bw(1), bw(2), grz_axiom(), parse("p0 | ~p0"),
          parse("[](p0 -> p1) -> ([]p0 -> []p1)"), parse("bot -> p0")]
    for n in range(1, 5):
        for p in enumerate_posets(n):
            ups = upset_masks(p, cap=p.n)
            subsets = list(range(1 << p.n))
            for f in fs:
                for domain in (ups, subsets):
                    fast, pure = _both(p, f, domain)
                    assert fast == pure


def test_twins_agree_on_random_formulas_and_budgets():
    rng = random.Random(99)
    posets = [p for n in range(1, 5) for p in enumerate_posets(n)]
    for _ in range(300):
        p = rng.choice(posets)
        f = _random_formula(rng, rng.randrange(0, 5), modal=True)
        domain = upset_masks(p, cap=p.n)
        limit = rng.choice([None, 1, 3, 10, 100])
        fast, pure = _both(p, f, domain, limit)
        assert fast == pure


def test_work_counts_match():
    p = enumerate_posets(3)[0]
    f = parse("p0 -> p0")
    fast, pure = _both(p, f, upset_masks(p, cap=3))
    assert fast[2] == pure[2]
