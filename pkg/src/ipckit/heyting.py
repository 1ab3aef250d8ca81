"""Finite Heyting algebras with explicit operation tables.

Carriers are index ranges with a bitmask order relation; join, meet and
the residual -> are tables.  The residuation law a&b <= c iff a <= b->c
is checked exhaustively whenever an algebra is built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import budget as _budget
from .errors import BudgetExceeded
from .poset import Poset, canonical_code, upset_masks, _bits


@dataclass(frozen=True)
class HeytingAlgebra:
    leq: tuple          # leq[a] = bitmask of b with a <= b
    meet: tuple         # tuples of tuples
    join: tuple
    imp: tuple
    bottom: int
    top: int
    name: str | None = field(default=None, compare=False)

    @property
    def size(self):
        return len(self.leq)

    def le(self, a, b):
        return bool(self.leq[a] >> b & 1)

    def coatoms(self):
        return [a for a in range(self.size) if a != self.top
                and self.leq[a] == (1 << a) | (1 << self.top)]

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<HeytingAlgebra{tag} size={self.size}>"


def _tables_from_order(leq, name=None):
    """Derive meet/join/imp tables from a lattice order and validate."""
    k = len(leq)
    down = [0] * k
    for a in range(k):
        for b in _bits(leq[a]):
            down[b] |= 1 << a
    full = (1 << k) - 1
    bottoms = [a for a in range(k) if leq[a] == full]
    tops = [a for a in range(k) if down[a] == full]
    if len(bottoms) != 1 or len(tops) != 1:
        raise ValueError("order is not bounded")
    bottom, top = bottoms[0], tops[0]

    def unique_min(mask):
        cands = [c for c in _bits(mask) if mask & ~leq[c] == 0]
        return cands[0] if len(cands) == 1 else None

    def unique_max(mask):
        cands = [c for c in _bits(mask) if mask & ~down[c] == 0]
        return cands[0] if len(cands) == 1 else None

    meet = [[0] * k for _ in range(k)]
    join = [[0] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            m = unique_max(down[a] & down[b])
            j = unique_min(leq[a] & leq[b])
            if m is None or j is None:
                raise ValueError("order is not a lattice")
            meet[a][b] = m
            join[a][b] = j
    imp = [[0] * k for _ in range(k)]
    for b in range(k):
        for c in range(k):
            good = [a for a in range(k) if leq[meet[a][b]] >> c & 1]
            mask = 0
            for a in good:
                mask |= 1 << a
            r = unique_max(mask)
            if r is None:
                raise ValueError("meet has no residual")
            imp[b][c] = r
            # residuation: {a : a&b <= c} must be exactly the down-set of r
            if mask != down[r]:
                raise ValueError("residuation law fails")
    return HeytingAlgebra(
        tuple(leq),
        tuple(tuple(r) for r in meet),
        tuple(tuple(r) for r in join),
        tuple(tuple(r) for r in imp),
        bottom,
        top,
        name,
    )


@lru_cache(maxsize=None)
def upset_algebra(p: Poset, cap: int | None = None) -> HeytingAlgebra:
    """The algebra of upsets of p: joins are unions, meets intersections,
    U -> V = the points whose up-set meets U inside V."""
    masks = upset_masks(p, cap=p.n)
    if len(masks) > _budget.DEFAULT_ALGEBRA_CAP:
        raise BudgetExceeded(
            f"{len(masks)} upsets exceeds algebra cap {_budget.DEFAULT_ALGEBRA_CAP}")
    pos = {m: i for i, m in enumerate(masks)}
    k = len(masks)
    leq = [0] * k
    for i, mi in enumerate(masks):
        for j, mj in enumerate(masks):
            if mi & ~mj == 0:
                leq[i] |= 1 << j
    meet = [[pos[masks[i] & masks[j]] for j in range(k)] for i in range(k)]
    join = [[pos[masks[i] | masks[j]] for j in range(k)] for i in range(k)]
    imp = [[0] * k for _ in range(k)]
    for i, u in enumerate(masks):
        for j, v in enumerate(masks):
            w = 0
            for x in range(p.n):
                if p.up[x] & u & ~v == 0:
                    w |= 1 << x
            imp[i][j] = pos[w]
    alg = HeytingAlgebra(
        tuple(leq),
        tuple(tuple(r) for r in meet),
        tuple(tuple(r) for r in join),
        tuple(tuple(r) for r in imp),
        pos[0],
        pos[p.full_mask],
        name=f"Up({p.name})" if p.name else None,
    )
    _check_residuation(alg)
    return alg


def _check_residuation(a):
    k = a.size
    down = [0] * k
    for x in range(k):
        for y in _bits(a.leq[x]):
            down[y] |= 1 << x
    for b in range(k):
        for c in range(k):
            r = a.imp[b][c]
            mask = 0
            for x in range(k):
                if a.leq[a.meet[x][b]] >> c & 1:
                    mask |= 1 << x
            if mask != down[r]:
                raise ValueError("residuation law fails")


def boolean_two():
    """The two-element Boolean algebra."""
    return _tables_from_order([0b11, 0b10], name="B2")


def is_si(a: HeytingAlgebra) -> bool:
    """Subdirect irreducibility: a unique coatom (second largest element)."""
    return len(a.coatoms()) == 1


def algebra_sum(lower: HeytingAlgebra, upper: HeytingAlgebra, name=None):
    """Stack lower below upper, identifying lower's top with upper's bottom."""
    if lower.size == 0 or upper.size == 0:
        raise ValueError("summands must be nonempty")
    kl, ku = lower.size, upper.size
    # lower keeps its indices; upper elements other than its bottom follow
    upmap = {}
    nxt = kl
    for b in range(ku):
        if b == upper.bottom:
            upmap[b] = lower.top
        else:
            upmap[b] = nxt
            nxt += 1
    k = kl + ku - 1
    leq = [0] * k
    for a in range(kl):
        for b in _bits(lower.leq[a]):
            leq[a] |= 1 << b
        for b in range(ku):
            if b != upper.bottom:
                leq[a] |= 1 << upmap[b]
    for a in range(ku):
        ia = upmap[a]
        for b in _bits(upper.leq[a]):
            leq[ia] |= 1 << upmap[b]
    # lower.top == upper.bottom got upper's row merged above; fix reflexivity
    for a in range(k):
        leq[a] |= 1 << a
    return _tables_from_order(leq, name=name)


def dual_poset(a: HeytingAlgebra) -> Poset:
    """Prime filters ordered by inclusion.

    Every filter of a finite lattice is principal, and the filter of a is
    prime exactly when a is join-prime, i.e. a is not the join of the
    elements strictly below it (distributivity holds here).
    """
    k = a.size
    down = [0] * k
    for x in range(k):
        for y in _bits(a.leq[x]):
            down[y] |= 1 << x
    primes = []
    for x in range(k):
        if x == a.bottom:
            continue
        sup = a.bottom
        for y in _bits(down[x] & ~(1 << x)):
            sup = a.join[sup][y]
        if sup != x:
            primes.append(x)
    # filter inclusion reverses the algebra order
    els = tuple(f"f{x}" for x in primes)
    ups = []
    for x in primes:
        m = 0
        for j, y in enumerate(primes):
            if a.leq[y] >> x & 1:
                m |= 1 << j
        ups.append(m)
    return Poset(els, tuple(ups), name=None)


def count_quotients(a: HeytingAlgebra) -> int:
    """Congruences correspond to filters; finite filters are principal."""
    if a.size > _budget.DEFAULT_ALGEBRA_CAP:
        raise BudgetExceeded("algebra too large")
    count = 0
    for x in range(a.size):
        # sanity: the up-set of x is meet-closed, hence a filter
        ups = list(_bits(a.leq[x]))
        assert all(a.leq[x] >> a.meet[u][v] & 1 for u in ups for v in ups)
        count += 1
    return count


def count_subalgebras(a: HeytingAlgebra, cap: int | None = None) -> int:
    """Subsets containing 0 and 1 closed under meet, join and ->."""
    cap = _budget.DEFAULT_SUBALG_CAP if cap is None else cap
    if a.size > cap:
        raise BudgetExceeded(f"carrier {a.size} exceeds subalgebra cap {cap}")

    def closure(mask):
        while True:
            new = mask
            xs = list(_bits(mask))
            for x in xs:
                for y in xs:
                    new |= 1 << a.meet[x][y]
                    new |= 1 << a.join[x][y]
                    new |= 1 << a.imp[x][y]
            if new == mask:
                return mask
            mask = new

    base = closure(1 << a.bottom | 1 << a.top)
    found = {base}
    queue = [base]
    while queue:
        cur = queue.pop()
        for x in range(a.size):
            if cur >> x & 1:
                continue
            nxt = closure(cur | 1 << x)
            if nxt not in found:
                found.add(nxt)
                queue.append(nxt)
    return len(found)


def algebras_isomorphic(a: HeytingAlgebra, b: HeytingAlgebra) -> bool:
    """Decided through the dual posets (finite duality)."""
    if a.size != b.size:
        return False
    return canonical_code(dual_poset(a)) == canonical_code(dual_poset(b))
