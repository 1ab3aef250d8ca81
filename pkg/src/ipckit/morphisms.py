"""P-morphism search, upset/subposet image criteria, and E-partitions.

A total map a between posets is a p-morphism when the image of every
up-set is the up-set of the image.  Assigning sources in order of
decreasing height makes the condition local: once everything strictly
above x is mapped to S, the image of x must be the unique t with
up(t) = S or up(t) = S + {t}.  That keeps the branching factor at two,
so exhaustive absence proofs stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import budget as _budget
from .budget import WorkMeter
from .errors import BudgetExceeded, NotAnEPartition
from .poset import Poset, _bits, upset_masks, width, _max_antichain


@dataclass(frozen=True)
class PMorphism:
    source: Poset
    target: Poset
    mapping: tuple  # source index -> target index

    def __call__(self, name):
        return self.target.elements[self.mapping[self.source.index(name)]]

    def as_dict(self):
        return {
            e: self.target.elements[self.mapping[i]]
            for i, e in enumerate(self.source.elements)
        }

    def is_surjective(self):
        return len(set(self.mapping)) == self.target.n

    def validate(self):
        """Exhaustive check of totality, monotonicity and the back
        condition up(a(x)) == a(up(x))."""
        src, dst, m = self.source, self.target, self.mapping
        if len(m) != src.n:
            raise ValueError("mapping is not total")
        if any(not 0 <= t < dst.n for t in m):
            raise ValueError("mapping leaves the target")
        for i in range(src.n):
            img = 0
            for j in _bits(src.up[i]):
                img |= 1 << m[j]
            if img != dst.up[m[i]]:
                raise ValueError(
                    f"back condition fails at {src.elements[i]}")
        for i in range(src.n):
            for j in _bits(src.up[i]):
                if not dst.leq_idx(m[i], m[j]):
                    raise ValueError("not monotone")
        return True


def compose(first: PMorphism, then: PMorphism) -> PMorphism:
    if first.target is not then.source and first.target.up != then.source.up:
        raise ValueError("composition mismatch")
    return PMorphism(
        first.source, then.target,
        tuple(then.mapping[t] for t in first.mapping))


def _height_order(p):
    h = p.heights()
    return sorted(range(p.n), key=lambda i: (h[i], i))


def find_pmorphism(source: Poset, target: Poset, surjective=False,
                   meter: WorkMeter | None = None):
    """First p-morphism found, or None; exhaustive, so None is a proof."""
    if source.n == 0:
        return None if (surjective and target.n > 0) else PMorphism(source, target, ())
    if target.n == 0:
        return None
    if surjective and target.n > source.n:
        return None
    order = _height_order(source)
    by_upmask = {target.up[t]: t for t in range(target.n)}
    mapping = [-1] * source.n
    hit = [0] * target.n

    def rec(k, unhit):
        if meter is not None:
            meter.charge()
        if k == len(order):
            return not surjective or unhit == 0
        i = order[k]
        if surjective and unhit > len(order) - k:
            return False
        s_mask = 0
        for j in _bits(source.strict_up(i)):
            s_mask |= 1 << mapping[j]
        cands = []
        t = by_upmask.get(s_mask)
        if t is not None and s_mask >> t & 1:
            cands.append(t)
        for t in _bits(~s_mask & ((1 << target.n) - 1)):
            if target.up[t] == s_mask | 1 << t:
                cands.append(t)
        for t in cands:
            mapping[i] = t
            hit[t] += 1
            rec_unhit = unhit - (1 if hit[t] == 1 else 0)
            if rec(k + 1, rec_unhit):
                return True
            hit[t] -= 1
            mapping[i] = -1
        return False

    if rec(0, target.n):
        pm = PMorphism(source, target, tuple(mapping))
        pm.validate()
        return pm
    return None


def _can_map_onto(source, target, meter):
    return find_pmorphism(source, target, surjective=True, meter=meter) is not None


def image_of_upset(target: Poset, host: Poset, meter: WorkMeter | None = None) -> bool:
    """Is the rooted target a p-morphic image of some upset of host?"""
    if target.n == 0:
        return True
    tw = width(target)
    th = max(target.heights()) if target.n else 0
    for mask in sorted(upset_masks(host, cap=host.n),
                       key=lambda m: -bin(m).count("1")):
        size = bin(mask).count("1")
        if size < target.n:
            continue
        if _max_antichain(host, mask) < tw:
            continue
        sub = host.restrict(mask)
        if max(sub.heights(), default=-1) < th:
            continue
        if _can_map_onto(sub, target, meter):
            return True
    return False


def image_of_subposet(target: Poset, host: Poset, meter: WorkMeter | None = None) -> bool:
    """Is the rooted target a p-morphic image of some subposet of host?"""
    if target.n == 0:
        return True
    if target.n > host.n:
        return False
    tw = width(target)
    th = max(target.heights())
    if _max_antichain(host, host.full_mask) < tw:
        return False
    full = 1 << host.n
    for mask in range(full - 1, 0, -1):
        if bin(mask).count("1") < target.n:
            continue
        sub = host.restrict(mask)
        if max(sub.heights()) < th:
            continue
        if _can_map_onto(sub, target, meter):
            return True
    return False


# E-partitions ------------------------------------------------------------


@dataclass(frozen=True)
class EPartition:
    poset: Poset
    blocks: tuple  # tuple of frozensets of element names

    def block_masks(self):
        out = []
        for b in self.blocks:
            m = 0
            for e in b:
                m |= 1 << self.poset.index(e)
            out.append(m)
        return out


def _set_partitions(n):
    """Restricted-growth enumeration of set partitions of range(n)."""
    parts = []

    def rec(i):
        if i == n:
            yield [list(b) for b in parts]
            return
        for b in parts:
            b.append(i)
            yield from rec(i + 1)
            b.pop()
        parts.append([i])
        yield from rec(i + 1)
        parts.pop()

    yield from rec(0)


def _blocks_ok(p, masks):
    """Condition (a) plus a partial order on blocks."""
    k = len(masks)
    # sees[b][c]: some element of block b lies below some element of block c
    sees = [[False] * k for _ in range(k)]
    for b in range(k):
        for c in range(k):
            any_sees = False
            all_see = True
            for i in _bits(masks[b]):
                if p.up[i] & masks[c]:
                    any_sees = True
                else:
                    all_see = False
            if any_sees and not all_see:
                return None  # condition (a) fails
            sees[b][c] = any_sees
    # antisymmetry is the finite content of the saturated-upset separation
    for b in range(k):
        for c in range(k):
            if b != c and sees[b][c] and sees[c][b]:
                return None
    return sees


def epartitions(p: Poset, cap: int | None = None):
    """All E-partitions of p, deterministic block ordering."""
    cap = _budget.DEFAULT_EPARTITION_CAP if cap is None else cap
    if p.n > cap:
        raise BudgetExceeded(f"{p.n} elements exceeds E-partition cap {cap}")
    if p.n == 0:
        return [EPartition(p, ())]
    out = []
    for part in _set_partitions(p.n):
        masks = []
        for b in part:
            m = 0
            for i in b:
                m |= 1 << i
            masks.append(m)
        if _blocks_ok(p, masks) is None:
            continue
        blocks = tuple(
            frozenset(p.elements[i] for i in b)
            for b in sorted(part, key=min)
        )
        out.append(EPartition(p, blocks))
    return out


def is_epartition(p: Poset, blocks) -> bool:
    masks = []
    covered = 0
    for b in blocks:
        m = 0
        for e in b:
            m |= 1 << p.index(e)
        if m & covered:
            return False
        covered |= m
        masks.append(m)
    if covered != p.full_mask:
        return False
    return _blocks_ok(p, masks) is not None


def quotient(p: Poset, r: EPartition):
    """The quotient poset and its projection p-morphism."""
    masks = r.block_masks()
    covered = 0
    for m in masks:
        if m & covered or m == 0:
            raise NotAnEPartition("blocks are not a partition")
        covered |= m
    if covered != p.full_mask:
        raise NotAnEPartition("blocks are not a partition")
    sees = _blocks_ok(p, masks)
    if sees is None:
        raise NotAnEPartition("blocks violate the E-partition conditions")
    k = len(masks)
    ups = []
    for b in range(k):
        m = 0
        for c in range(k):
            if b == c or sees[b][c]:
                m |= 1 << c
        ups.append(m)
    q = Poset(tuple(f"b{b}" for b in range(k)), tuple(ups))
    block_of = {}
    for b, m in enumerate(masks):
        for i in _bits(m):
            block_of[i] = b
    pm = PMorphism(p, q, tuple(block_of[i] for i in range(p.n)))
    pm.validate()
    return q, pm


def collapse_upset(p: Poset, upset_names):
    """The E-partition identifying the given upset to one point."""
    mask = 0
    for e in upset_names:
        mask |= 1 << p.index(e)
    blocks = [frozenset(upset_names)]
    for i in range(p.n):
        if not mask >> i & 1:
            blocks.append(frozenset([p.elements[i]]))
    blocks.sort(key=lambda b: min(p.index(e) for e in b))
    return EPartition(p, tuple(blocks))


def kernel_partition(pm: PMorphism) -> EPartition:
    by_target = {}
    for i, t in enumerate(pm.mapping):
        by_target.setdefault(t, []).append(pm.source.elements[i])
    blocks = sorted(
        (frozenset(v) for v in by_target.values()),
        key=lambda b: min(pm.source.index(e) for e in b),
    )
    return EPartition(pm.source, tuple(blocks))


def all_surjective_images(p: Poset, cap=None, meter=None):
    """Quotients of p by each of its E-partitions (poset, partition)."""
    out = []
    for part in epartitions(p, cap=cap):
        q, pm = quotient(p, part)
        out.append((q, part))
    return out
