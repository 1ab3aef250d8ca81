"""Finite posets: construction, structure queries, sums, canonical forms,
and isomorph-free enumeration.

Elements are named strings; the order is stored as one up-set bitmask per
element (bit j of up[i] means element i <= element j, diagonal included),
which makes comparability and upset arithmetic O(1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from . import budget as _budget
from .errors import (
    BudgetExceeded,
    CycleDetected,
    DuplicateElement,
    NotAPartialOrder,
    UnknownElement,
)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Poset:
    """Immutable finite poset.

    up[i] is the bitmask of elements j with element i <= element j
    (reflexive, so bit i is always set).
    """

    elements: tuple
    up: tuple
    name: str | None = field(default=None, compare=False)

    @property
    def n(self):
        return len(self.elements)

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def index(self, name):
        try:
            return self.elements.index(name)
        except ValueError:
            raise UnknownElement(name) from None

    def leq(self, a, b):
        """a <= b for element names."""
        return bool(self.up[self.index(a)] >> self.index(b) & 1)

    def leq_idx(self, i, j):
        return bool(self.up[i] >> j & 1)

    # derived masks -----------------------------------------------------

    def down(self, i):
        """Bitmask of j with e_j <= e_i."""
        m = 0
        for j in range(self.n):
            if self.up[j] >> i & 1:
                m |= 1 << j
        return m

    def down_masks(self):
        d = [0] * self.n
        for j in range(self.n):
            uj = self.up[j]
            for i in _bits(uj):
                d[i] |= 1 << j
        return d

    def strict_up(self, i):
        return self.up[i] & ~(1 << i)

    def covers(self):
        """List of (i, j) index pairs with e_j covering e_i."""
        out = []
        for i in range(self.n):
            su = self.strict_up(i)
            for j in _bits(su):
                inter = su & ~(1 << j)
                if not any(self.up[k] >> j & 1 for k in _bits(inter)):
                    out.append((i, j))
        return out

    def maximal_mask(self):
        m = 0
        for i in range(self.n):
            if self.strict_up(i) == 0:
                m |= 1 << i
        return m

    def minimal_mask(self):
        down = self.down_masks()
        m = 0
        for i in range(self.n):
            if down[i] == 1 << i:
                m |= 1 << i
        return m

    def heights(self):
        """Longest-chain distance from the top: maximal elements get 0."""
        h = [None] * self.n
        order = sorted(range(self.n), key=lambda i: bin(self.up[i]).count("1"))
        for i in order:
            above = [h[j] for j in _bits(self.strict_up(i))]
            h[i] = 1 + max(above) if above else 0
        return h

    def restrict(self, mask, name=None):
        """Induced subposet on the elements in mask (original order kept)."""
        keep = [i for i in range(self.n) if mask >> i & 1]
        pos = {i: k for k, i in enumerate(keep)}
        ups = []
        for i in keep:
            m = 0
            for j in _bits(self.up[i] & mask):
                m |= 1 << pos[j]
            ups.append(m)
        return Poset(tuple(self.elements[i] for i in keep), tuple(ups), name)

    def relabel(self, names, name=None):
        return Poset(tuple(names), self.up, name)

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<Poset{tag} n={self.n}>"


# construction ----------------------------------------------------------


EMPTY = Poset((), ())


def build_poset(elements, pairs, mode="cover", name=None):
    """Build a poset from element names and ordered pairs.

    mode="cover": pairs are a < b steps, transitively closed here.
    mode="full":  pairs (plus the diagonal) must already be a partial order.
    """
    elements = list(elements)
    seen = set()
    for e in elements:
        if e in seen:
            raise DuplicateElement(e)
        seen.add(e)
    idx = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    up = [1 << i for i in range(n)]
    for a, b in pairs:
        if a not in idx:
            raise UnknownElement(a)
        if b not in idx:
            raise UnknownElement(b)
        up[idx[a]] |= 1 << idx[b]
    # reflexive-transitive closure (small n; repeated squaring not needed)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            m = up[i]
            acc = m
            for j in _bits(m):
                acc |= up[j]
            if acc != m:
                up[i] = acc
                changed = True
    for i in range(n):
        for j in _bits(up[i]):
            if j != i and up[j] >> i & 1:
                raise CycleDetected(f"{elements[i]} and {elements[j]}")
    if mode == "full":
        given = [1 << i for i in range(n)]
        for a, b in pairs:
            given[idx[a]] |= 1 << idx[b]
        if given != up:
            raise NotAPartialOrder("pairs are not transitively closed")
    elif mode != "cover":
        raise ValueError(f"unknown mode {mode!r}")
    return Poset(tuple(elements), tuple(up), name)


def sum_posets(upper, lower, name=None):
    """Ordinal sum: every element of lower below every element of upper."""
    if upper.n == 0:
        return lower if name is None else Poset(lower.elements, lower.up, name)
    if lower.n == 0:
        return upper if name is None else Poset(upper.elements, upper.up, name)
    els = tuple("t." + e for e in upper.elements) + tuple("b." + e for e in lower.elements)
    nu = upper.n
    upper_full = (1 << nu) - 1
    ups = list(upper.up)
    for m in lower.up:
        ups.append(m << nu | upper_full)
    return Poset(els, tuple(ups), name)


def root(p):
    """The unique minimum's name, or None."""
    for i in range(p.n):
        if p.up[i] == p.full_mask:
            return p.elements[i]
    return None


def add_bottom(p, bottom_name="r"):
    nm = bottom_name
    while nm in p.elements:
        nm += "_"
    return sum_posets(p, Poset((nm,), (1,)))


# upsets ----------------------------------------------------------------


def upset_masks(p, cap=None):
    """All upward-closed subsets as bitmasks, sorted by (size, mask)."""
    cap = _budget.DEFAULT_UPSET_CAP if cap is None else cap
    if cap is not None and p.n > cap:
        raise BudgetExceeded(f"{p.n} elements exceeds upset cap {cap}")
    out = []
    # elements with larger strict up-sets go late, so the inclusion check
    # only looks at already-decided elements
    order = sorted(range(p.n), key=lambda i: bin(p.strict_up(i)).count("1"))

    def rec(k, mask):
        if k == len(order):
            out.append(mask)
            return
        i = order[k]
        rec(k + 1, mask)
        if p.strict_up(i) & ~mask == 0:
            rec(k + 1, mask | 1 << i)

    rec(0, 0)
    out.sort(key=lambda m: (bin(m).count("1"), m))
    return out


def upsets(p, cap=None):
    """All upsets as element-name frozensets, deterministic order."""
    return [frozenset(p.elements[i] for i in _bits(m)) for m in upset_masks(p, cap)]


def is_upset(p, mask):
    for i in _bits(mask):
        if p.up[i] & ~mask:
            return False
    return True


# width -----------------------------------------------------------------


def _max_antichain(p, mask):
    """Size of the largest antichain inside mask."""
    elems = sorted(_bits(mask), key=lambda i: -bin(p.up[i] | p.down(i)).count("1"))
    down = p.down_masks()
    comp = [p.up[i] | down[i] for i in range(p.n)]
    best = 0

    def rec(avail, size):
        nonlocal best
        if size + bin(avail).count("1") <= best:
            return
        if not avail:
            best = max(best, size)
            return
        i = (avail & -avail).bit_length() - 1
        rec(avail & ~comp[i], size + 1)
        rec(avail & ~(1 << i), size)

    rec(mask, 0)
    return best


def width(p):
    """Width per principal upsets; the empty poset has width 0."""
    if p.n == 0:
        return 0
    if root(p) is not None:
        return _max_antichain(p, p.full_mask)
    return max(_max_antichain(p, p.up[i]) for i in range(p.n))


# canonical form ---------------------------------------------------------


def _refined_colors(p):
    n = p.n
    down = p.down_masks()
    colors = [(bin(p.up[i]).count("1"), bin(down[i]).count("1")) for i in range(n)]
    rank = {c: k for k, c in enumerate(sorted(set(colors)))}
    colors = [rank[c] for c in colors]
    while True:
        sigs = []
        for i in range(n):
            above = tuple(sorted(colors[j] for j in _bits(p.strict_up(i))))
            below = tuple(sorted(colors[j] for j in _bits(down[i] & ~(1 << i))))
            sigs.append((colors[i], above, below))
        rank = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _perm_rows(p, perm):
    """Adjacency rows of the relabeled poset, row k encodes e_perm[k]
    against the earlier entries (2 bits per pair)."""
    rows = []
    for k, v in enumerate(perm):
        r = 0
        for j in range(k):
            u = perm[j]
            r = r << 2 | (p.leq_idx(v, u) << 1 | p.leq_idx(u, v))
        rows.append(r)
    return tuple(rows)


class _Improved(Exception):
    pass


def _min_rows(p, colors):
    n = p.n
    color_seq = sorted(colors)
    by_color = {}
    for i in sorted(range(n), key=lambda i: (colors[i], i)):
        by_color.setdefault(colors[i], []).append(i)
    down = p.down_masks()

    def row_for(v, order):
        r = 0
        for u in order:
            r = r << 2 | (p.leq_idx(v, u) << 1 | p.leq_idx(u, v))
        return r

    def twins(u, v):
        # the transposition (u v) is an automorphism
        if colors[u] != colors[v] or p.leq_idx(u, v) or p.leq_idx(v, u):
            return False
        pair = 1 << u | 1 << v
        return (
            p.up[u] & ~pair == p.up[v] & ~pair
            and down[u] & ~pair == down[v] & ~pair
        )

    # greedy descent for the initial bound
    order = []
    used = 0
    best = []
    for k in range(n):
        v = next(i for i in by_color[color_seq[k]] if not used >> i & 1)
        best.append(row_for(v, order))
        order.append(v)
        used |= 1 << v

    def rec(k, used, order, rows, tight):
        nonlocal best
        if k == n:
            if not tight:
                best = list(rows)
                raise _Improved
            return
        tried = []
        for v in by_color[color_seq[k]]:
            if used >> v & 1:
                continue
            if any(twins(u, v) for u in tried):
                continue
            tried.append(v)
            r = row_for(v, order)
            if tight:
                if r > best[k]:
                    continue
                nt = r == best[k]
            else:
                nt = False
            order.append(v)
            rows.append(r)
            rec(k + 1, used | 1 << v, order, rows, nt)
            order.pop()
            rows.pop()

    while True:
        try:
            rec(0, 0, [], [], True)
        except _Improved:
            continue
        return color_seq, tuple(best)


@lru_cache(maxsize=None)
def canonical_code(p):
    """Byte string equal for two posets iff they are order-isomorphic."""
    if p.n == 0:
        return b"P0"
    colors = _refined_colors(p)
    seq, rows = _min_rows(p, colors)
    body = ",".join(str(c) for c in seq) + "|" + ",".join(format(r, "x") for r in rows)
    return f"P{p.n}:{body}".encode()


def are_isomorphic(p, q):
    return canonical_code(p) == canonical_code(q)


# enumeration ------------------------------------------------------------


def _downset_masks(p):
    down = p.down_masks()
    out = []
    for mask in range(1 << p.n):
        ok = True
        for i in _bits(mask):
            if down[i] & ~mask:
                ok = False
                break
        if ok:
            out.append(mask)
    return out


@lru_cache(maxsize=None)
def enumerate_posets(n):
    """One representative per isomorphism class, sorted by canonical code."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    if n == 0:
        return (EMPTY,)
    seen = {}
    for q in enumerate_posets(n - 1):
        for dmask in _downset_masks(q):
            # adjoin a new maximal element above exactly dmask
            els = tuple(f"e{i}" for i in range(n))
            ups = []
            for i in range(q.n):
                m = q.up[i]
                if dmask >> i & 1:
                    m |= 1 << (n - 1)
                ups.append(m)
            ups.append(1 << (n - 1))
            cand = Poset(els, tuple(ups))
            code = canonical_code(cand)
            if code not in seen:
                seen[code] = cand
    return tuple(seen[c] for c in sorted(seen))


def enumerate_rooted(size, max_width=None, cap=None):
    """Rooted posets of the given size, one per isomorphism class,
    in canonical-code order."""
    cap = _budget.DEFAULT_ENUM_CAP if cap is None else cap
    if size < 1:
        raise ValueError("size must be >= 1")
    if cap is not None and size > cap:
        raise BudgetExceeded(f"size {size} exceeds enumeration cap {cap}")
    out = []
    for q in enumerate_posets(size - 1):
        p = add_bottom(q)
        p = p.relabel(tuple(f"e{i}" for i in range(p.n)))
        if max_width is not None and width(p) > max_width:
            continue
        out.append(p)
    out.sort(key=canonical_code)
    return out


def automorphism_count(p):
    """Number of order automorphisms (brute force, test-sized posets)."""
    n = p.n
    count = 0
    for perm in itertools.permutations(range(n)):
        if all(
            p.leq_idx(i, j) == p.leq_idx(perm[i], perm[j])
            for i in range(n)
            for j in range(n)
        ):
            count += 1
    return count
