"""Named verification scenarios.

Each scenario walks a deterministic instance space (poset enumerations in
canonical-code order, or explicit parameter grids), checks one discrete
property per instance, and aggregates a VerificationReport.  Budgets are
work units (valuation rows + search nodes); running out flips the status
to "budget" at a schedule-independent instance, so reports are
byte-identical across reruns and worker counts.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .axioms import decompose_kg, jankov_syntactic, validates_jankov, validates_subframe
from .budget import WorkMeter
from .catalog import (
    catalog_get,
    chain,
    fan,
    gn_trunc,
    ladder_trunc,
    ladder_upset,
    one_point,
    simple_space,
    stack,
    two_antichain,
    xm_trunc,
    y_poset,
)
from .errors import BudgetExceeded, UnknownScenario
from .formulas import BOT, And, Imp, Or, Var, bw, godel_translate, grz_axiom, kc_axiom, pretty
from .heyting import count_quotients, count_subalgebras, dual_poset, upset_algebra
from .morphisms import PMorphism, epartitions, find_pmorphism, image_of_upset, quotient
from .poset import (
    are_isomorphic,
    canonical_code,
    enumerate_posets,
    enumerate_rooted,
    root,
    upset_masks,
    width,
)
from .report import Counterexample, VerificationReport
from .semantics import is_valid, is_valid_modal


def _rooted_upto(size, max_width=None):
    out = []
    for n in range(1, size + 1):
        out.extend(enumerate_rooted(n, max_width=max_width, cap=size))
    return out


def _posets_upto(size, include_empty=False):
    out = []
    for n in range(0 if include_empty else 1, size + 1):
        out.extend(enumerate_posets(n))
    return out


# -- fixed formula suite for the translation scenario -----------------------


def _random_formula(rng, depth):
    if depth == 0 or rng.random() < 0.2:
        return rng.choice([Var(0), Var(1), BOT])
    op = rng.randrange(3)
    left = _random_formula(rng, depth - 1)
    right = _random_formula(rng, depth - 1)
    if op == 0:
        return And(left, right)
    if op == 1:
        return Or(left, right)
    return Imp(left, right)


@lru_cache(maxsize=None)
def godel_suite(count=200):
    """bw(1), bw(2), the weak excluded middle, then seeded random fills."""
    pinned = [bw(1), bw(2), kc_axiom()]
    seen = {pretty(f) for f in pinned}
    out = list(pinned)
    rng = random.Random(0x1C0FFEE)
    while len(out) < count:
        f = _random_formula(rng, 4)
        s = pretty(f)
        if s not in seen:
            seen.add(s)
            out.append(f)
    return tuple(out)


# -- closure family ----------------------------------------------------------


def _words_upto(weight):
    """Compositions over {1, 2} with total at most weight, shortlex order."""
    out = [()]
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            for k in (1, 2):
                if sum(w) + k <= weight:
                    nw = w + (k,)
                    out.append(nw)
                    nxt.append(nw)
        frontier = nxt
    return out


def rn_members(size, nmax):
    """All closure-family members of at most the given size with chain
    parameter at most nmax, deduplicated; returns (poset, param) pairs in
    canonical-code order.

    The single point is included as the degenerate member: it is the
    image of any principal upset, while the sum shapes all have two or
    more points."""
    found = {canonical_code(one_point()): (one_point(), 0)}
    for word in _words_upto(size):
        w = sum(word)
        for k in range(0, size + 1):
            tail = ladder_upset(k) if k > 0 else one_point()
            total = 1 + w + tail.n
            if total > size:
                continue
            top = stack([("h", one_point()), ("s", simple_space(word)),
                         ("t", tail)])
            code = canonical_code(top)
            if code not in found or found[code][1] > 0:
                found[code] = (top, 0)
        for m in range(0, nmax + 1):
            total = 1 + w + 1 + 4 + m
            if total > size:
                continue
            member = stack([
                ("h", one_point()),
                ("s", simple_space(word)),
                ("j", one_point()),
                ("f", ladder_upset(4)),
                ("c", chain(m)),
            ])
            code = canonical_code(member)
            if code not in found or found[code][1] > m:
                found[code] = (member, m)
    # degenerate top: collapsing the whole upper segment of a chain-type
    # member onto its maximum lands on these, so they belong to the family
    for m in range(0, nmax + 1):
        if 1 + 4 + m <= size:
            member = stack([("h", one_point()), ("f", ladder_upset(4)),
                            ("c", chain(m))])
            code = canonical_code(member)
            if code not in found or found[code][1] > m:
                found[code] = (member, m)
    return [found[c] for c in sorted(found)]


# -- scenario bodies ---------------------------------------------------------
# Each body returns (instances, check) where check(instance, meter) yields
# (ok, poset_for_report, detail_or_None).


def _sobolev_width(params):
    posets = _rooted_upto(params["size"])
    ns = tuple(params["ns"])

    def check(p, meter):
        w = width(p)
        for n in ns:
            v = is_valid(p, bw(n), meter=meter)
            if v != (w <= n):
                return False, p, f"width={w} but bw({n}) {'valid' if v else 'refuted'}"
        return True, p, None

    return posets, check


def _bw_subframe_triangle(params):
    posets = _rooted_upto(params["size"])
    ns = tuple(params["ns"])
    fans = {n: fan(n + 1) for n in ns}

    def check(p, meter):
        for n in ns:
            v = is_valid(p, bw(n), meter=meter)
            s = validates_subframe(p, fans[n], meter=meter)
            if v != s:
                return False, p, f"bw({n})={v} but subframe(F({n+1}))={s}"
        return True, p, None

    return posets, check


def _kracht_bw2(params):
    posets = _rooted_upto(params["size"])
    frames = [catalog_get(f"BW2({i})") for i in range(1, 12)]

    def check(p, meter):
        w = width(p)
        ok = all(validates_jankov(p, fr, meter=meter) for fr in frames)
        if ok != (w <= 2):
            return False, p, f"width={w} but splitting check gave {ok}"
        return True, p, None

    return posets, check


def _appendix_k(params):
    posets = _rooted_upto(params["size"], max_width=2)
    p2 = catalog_get("P2")
    frames = [catalog_get(f"K({i})") for i in range(1, 8)]

    def check(p, meter):
        lhs = validates_subframe(p, p2, meter=meter)
        rhs = all(validates_jankov(p, fr, meter=meter) for fr in frames)
        if lhs != rhs:
            return False, p, f"beta(P2)={lhs} but K-splittings={rhs}"
        return True, p, None

    return posets, check


def _appendix_g(params):
    p2 = catalog_get("P2")
    p3 = catalog_get("P3")
    frames = [catalog_get(f"G({i})") for i in range(1, 7)]
    posets = [p for p in _rooted_upto(params["size"], max_width=2)
              if validates_subframe(p, p2)]

    def check(p, meter):
        lhs = validates_subframe(p, p3, meter=meter)
        rhs = all(validates_jankov(p, fr, meter=meter) for fr in frames)
        if lhs != rhs:
            return False, p, f"beta(P3)={lhs} but G-splittings={rhs}"
        return True, p, None

    return posets, check


def _duality_counts(params):
    small = _posets_upto(params["size"], include_empty=True)
    mid = _posets_upto(params["dual_size"], include_empty=True)
    instances = [("counts", p) for p in small] + [("dual", p) for p in mid]

    def check(inst, meter):
        kind, p = inst
        alg = upset_algebra(p)
        if kind == "counts":
            nup = len(upset_masks(p, cap=p.n))
            if count_quotients(alg) != nup:
                return False, p, "quotient count differs from upset count"
            if count_subalgebras(alg) != len(epartitions(p)):
                return False, p, "subalgebra count differs from E-partition count"
            return True, p, None
        if not are_isomorphic(dual_poset(alg), p):
            return False, p, "dual of the upset algebra is not the poset"
        return True, p, None

    return instances, check


def _godel_transfer(params):
    posets = _posets_upto(params["size"])
    suite = godel_suite(params["formulas"])
    grz = grz_axiom()

    def check(p, meter):
        if not is_valid_modal(p, grz, meter=meter):
            return False, p, "grz axiom refuted"
        for f in suite:
            ii = is_valid(p, f, meter=meter)
            mm = is_valid_modal(p, godel_translate(f), meter=meter)
            if ii != mm:
                return False, p, f"transfer fails for {pretty(f)}"
        return True, p, None

    return posets, check


def _jankov_oracle(params):
    targets = _rooted_upto(params["target_size"])
    hosts = _posets_upto(params["host_size"])
    instances = [(h, t) for h in hosts for t in targets]

    def check(inst, meter):
        host, target = inst
        syntactic = is_valid(host, jankov_syntactic(target), meter=meter)
        semantic = not image_of_upset(target, host, meter=meter)
        if syntactic != semantic:
            return False, host, (
                f"syntactic={syntactic} semantic={semantic} "
                f"for target {canonical_code(target).decode()}")
        return True, host, None

    return instances, check


def _ym_rigidity(params):
    mmax = params["max_m"]
    trunc = params["trunc"]
    ys = {m: y_poset(m) for m in range(1, mmax + 1)}
    instances = [("map", k, m) for k in range(1, mmax + 1)
                 for m in range(1, mmax + 1)]
    instances += [("collapse", m, 0) for m in range(1, mmax + 1)]

    def check(inst, meter):
        kind, k, m = inst
        if kind == "map":
            pm = find_pmorphism(ys[k], ys[m], surjective=True, meter=meter)
            if (pm is not None) != (k == m):
                return False, ys[k], f"surjection Y({k})->Y({m}) {'found' if pm else 'missing'}"
            return True, ys[k], None
        x = xm_trunc(k, 3, trunc)
        y = ys[k]
        d = x.index("d")
        mapping = tuple(
            y.index("d") if x.leq_idx(d, i) else y.index(x.elements[i])
            for i in range(x.n)
        )
        pm = PMorphism(x, y, mapping)
        pm.validate()
        if not pm.is_surjective():
            return False, y, "collapse map not onto"
        return True, y, None

    return instances, check


def _rn_closure(params):
    nmax = params["n"]
    size = params["size"]
    members = rn_members(size, nmax)
    member_codes = {canonical_code(p) for p, _ in members}
    negative = stack([("h", one_point()), ("f", ladder_upset(4)),
                      ("c", chain(nmax + 1))])
    instances = [("closure", p) for p, _ in members]
    instances += [("negative", p) for p, _ in members]

    def check(inst, meter):
        kind, member = inst
        if kind == "negative":
            if image_of_upset(negative, member, meter=meter):
                return False, member, "chain-extended member arises as an image"
            return True, member, None
        for mask in upset_masks(member, cap=member.n):
            sub = member.restrict(mask)
            for part in epartitions(sub, cap=sub.n):
                q, _ = quotient(sub, part)
                if root(q) is None:
                    continue
                if canonical_code(q) not in member_codes:
                    return False, member, (
                        f"rooted image {canonical_code(q).decode()} "
                        "escapes the family")
        return True, member, None

    return instances, check


def _kg_structure(params):
    posets = _rooted_upto(params["size"])
    axioms = [catalog_get(f"P({i})") for i in (1, 2, 3)]

    def check(p, meter):
        dec = decompose_kg(p) is not None
        val = all(validates_subframe(p, a, meter=meter) for a in axioms)
        if dec != val:
            return False, p, f"decomposition={dec} but subframe axioms={val}"
        return True, p, None

    return posets, check


def _pm_constructions(params):
    nmax = params["max_n"]
    nlv = params["trunc"]
    instances = []
    for n in range(1, nmax + 1):
        for m in range(1, n + 1):
            instances.append(("chain-collapse", n, m))
        instances.append(("ladder-collapse", n, 0))
    middles = [("one", one_point()), ("two", two_antichain()),
               ("onetwo", stack([("a", one_point()), ("b", two_antichain())]))]
    for tag, _ in middles:
        instances.append(("middle-drop", tag, 0))
    mid_by_tag = dict(middles)

    def check(inst, meter):
        kind, a, b = inst
        if kind == "chain-collapse":
            n, m = a, b
            src = gn_trunc(n, nlv)
            dst = gn_trunc(m, nlv)
            mapping = []
            for e in src.elements:
                if e.startswith("c.c"):
                    i = int(e[3:])
                    mapping.append(dst.index(f"c.c{min(i, m - 1)}"))
                else:
                    mapping.append(dst.index(e))
            pm = PMorphism(src, dst, tuple(mapping))
            pm.validate()
            return pm.is_surjective(), src, None if pm.is_surjective() else "not onto"
        if kind == "ladder-collapse":
            n = a
            src = gn_trunc(n, nlv)
            dst = stack([("t", one_point()), ("f", ladder_upset(4)),
                         ("c", chain(n))])
            top = dst.index("t.pt")
            mapping = []
            for e in src.elements:
                if e.startswith(("t.", "l.")):
                    mapping.append(top)
                else:
                    mapping.append(dst.index(e))
            pm = PMorphism(src, dst, tuple(mapping))
            pm.validate()
            return pm.is_surjective(), src, None if pm.is_surjective() else "not onto"
        # middle-drop: send the middle summand to the truncation bottom
        mid = mid_by_tag[a]
        z = stack([("f", ladder_upset(4)), ("c", chain(1))])
        src = stack([("x", one_point()), ("l", ladder_trunc(nlv)),
                     ("y", mid), ("z", z)])
        dst = stack([("x", one_point()), ("l", ladder_trunc(nlv)), ("z", z)])
        omega = dst.index("l.omega")
        mapping = []
        for e in src.elements:
            if e.startswith("y."):
                mapping.append(omega)
            else:
                mapping.append(dst.index(e))
        pm = PMorphism(src, dst, tuple(mapping))
        pm.validate()
        return pm.is_surjective(), src, None if pm.is_surjective() else "not onto"

    return instances, check


_SCENARIOS = {
    "sobolev-width": ({"size": 6, "ns": (1, 2, 3)}, _sobolev_width),
    "bw-subframe-triangle": ({"size": 6, "ns": (1, 2)}, _bw_subframe_triangle),
    "kracht-bw2": ({"size": 7}, _kracht_bw2),
    "appendix-K": ({"size": 8}, _appendix_k),
    "appendix-G": ({"size": 8}, _appendix_g),
    "duality-counts": ({"size": 4, "dual_size": 6}, _duality_counts),
    "godel-transfer": ({"size": 5, "formulas": 200}, _godel_transfer),
    "jankov-oracle": ({"target_size": 4, "host_size": 5}, _jankov_oracle),
    "ym-rigidity": ({"max_m": 4, "trunc": 8}, _ym_rigidity),
    "rn-closure": ({"size": 8, "n": 2}, _rn_closure),
    "kg-structure": ({"size": 8}, _kg_structure),
    "pm-constructions": ({"max_n": 3, "trunc": 12}, _pm_constructions),
}


def scenario_names():
    return sorted(_SCENARIOS)


def _run_check(check, inst, budget):
    meter = WorkMeter(limit=budget)
    try:
        ok, poset, detail = check(inst, meter)
        return ok, poset, detail, meter.spent, False
    except BudgetExceeded:
        return True, None, None, meter.spent, True


_WORKER = {}


def _worker_init(name, params):
    _, body = _SCENARIOS[name]
    _WORKER["check"] = body(params)[1]


def _worker_run(args):
    inst, budget = args
    return _run_check(_WORKER["check"], inst, budget)


def run_scenario(name, params=None, budget=None, jobs=1,
                 max_counterexamples=10) -> VerificationReport:
    """Execute a registered scenario and return its report.

    Every instance runs against the full budget; the aggregation walks
    instances in order and trips at the first one pushing the cumulative
    work over budget, so the outcome does not depend on jobs.
    """
    if name not in _SCENARIOS:
        raise UnknownScenario(name)
    defaults, body = _SCENARIOS[name]
    merged = dict(defaults)
    merged.update(params or {})
    report = VerificationReport(scenario=name, params=dict(merged))
    instances, check = body(merged)

    if jobs and jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(
                jobs, initializer=_worker_init, initargs=(name, merged)) as pool:
            results = pool.map(
                _worker_run, [(inst, budget) for inst in instances],
                chunksize=max(1, len(instances) // (jobs * 4) or 1))
    else:
        results = (_run_check(check, inst, budget) for inst in instances)

    for ok, poset, detail, spent, tripped in results:
        report.work_units += spent
        if tripped or (budget is not None and report.work_units > budget):
            report.status = "budget"
            break
        report.instances_checked += 1
        if not ok:
            report.status = "fail"
            if len(report.counterexamples) < max_counterexamples:
                report.counterexamples.append(Counterexample(poset, detail))
    return report
