"""Benchmark the compiled valuation kernel against the pure-Python twin.

Usage: python benchmarks/bench_kernels.py [--repeat N]

The workloads are the hot loops of the verification scenarios: bounded
width validity over the rooted 6-element enumeration, modal validity of
the grz axiom plus translated formulas over all 5-element posets, and
the syntactic splitting-formula check on the widest 5-element host.
"""

from __future__ import annotations

import argparse
import time


def _workloads():
    from ipckit.axioms import jankov_syntactic
    from ipckit.formulas import bw, godel_translate, grz_axiom
    from ipckit.poset import build_poset, enumerate_posets, enumerate_rooted

    rooted6 = enumerate_rooted(6)
    posets5 = [p for n in range(1, 6) for p in enumerate_posets(n)]
    wide_host = build_poset(
        ["r", "a", "b", "c", "d"],
        [("r", "a"), ("r", "b"), ("r", "c"), ("r", "d")])
    fork = build_poset(["r", "a", "b"], [("r", "a"), ("r", "b")])

    def bounded_width(is_valid, is_valid_modal):
        hits = 0
        for p in rooted6:
            for n in (2, 3):
                hits += is_valid(p, bw(n))
        return hits

    def modal_grz(is_valid, is_valid_modal):
        hits = 0
        grz = grz_axiom()
        tr = godel_translate(bw(1))
        for p in posets5:
            hits += is_valid_modal(p, grz)
            hits += is_valid_modal(p, tr)
        return hits

    def splitting(is_valid, is_valid_modal):
        formula = jankov_syntactic(fork)
        return sum(is_valid(p, formula) for p in posets5 + [wide_host])

    return [("bw validity, rooted size 6", bounded_width),
            ("grz + translated bw(1), posets size <= 5", modal_grz),
            ("splitting formula of the fork, hosts size <= 5", splitting)]


def _timed(fn, is_valid, is_valid_modal, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(is_valid, is_valid_modal)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    import ipckit._kernel as kernel
    from ipckit import _pureval, semantics

    try:
        from ipckit import _fastval
    except ImportError:
        _fastval = None

    if _fastval is None:
        print("compiled kernel unavailable; benchmarking pure only")

    rows = []
    for label, fn in _workloads():
        timings = {}
        for mode, impl in (("compiled", _fastval), ("pure", _pureval)):
            if impl is None:
                continue
            kernel.scan_validity = impl.scan_validity
            best, result = _timed(fn, semantics.is_valid,
                                  semantics.is_valid_modal, args.repeat)
            timings[mode] = (best, result)
        rows.append((label, timings))
    kernel.scan_validity = (_fastval or _pureval).scan_validity

    print(f"{'workload':<48} {'compiled':>10} {'pure':>10} {'speedup':>8}")
    for label, timings in rows:
        fast = timings.get("compiled")
        pure = timings.get("pure")
        if fast and pure:
            assert fast[1] == pure[1], "kernels disagree"
            print(f"{label:<48} {fast[0]:>9.3f}s {pure[0]:>9.3f}s "
                  f"{pure[0] / fast[0]:>7.1f}x")
        elif pure:
            print(f"{label:<48} {'-':>10} {pure[0]:>9.3f}s")


if __name__ == "__main__":
    main()
