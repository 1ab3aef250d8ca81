"""Satisfaction and validity on posets and algebras.

Intuitionistic truth sets are upsets and evaluation is the standard
recursion; a poset read as a reflexive-transitive frame interprets box
as truth everywhere above.  Validity scans every valuation (upsets per
variable in the intuitionistic case, arbitrary subsets in the modal
case) with a work meter charged one unit per valuation row.
"""

from __future__ import annotations

from . import _kernel
from .budget import WorkMeter
from .errors import BudgetExceeded, NotIntuitionistic, VariableUnassigned
from .formulas import And, Bot, Box, Formula, Imp, Or, Var, is_modal, variables
from .poset import Poset, is_upset, upset_masks
from ._pureval import OP_AND, OP_BOT, OP_BOX, OP_IMP, OP_OR, OP_VAR


def compile_formula(f, slot_of):
    """Postfix opcode/arg arrays; slot_of maps variable index to slot."""
    ops, args = [], []

    def walk(g):
        if isinstance(g, Var):
            ops.append(OP_VAR)
            args.append(slot_of[g.index])
        elif isinstance(g, Bot):
            ops.append(OP_BOT)
            args.append(0)
        elif isinstance(g, Box):
            walk(g.inner)
            ops.append(OP_BOX)
            args.append(0)
        else:
            walk(g.left)
            walk(g.right)
            ops.append({And: OP_AND, Or: OP_OR, Imp: OP_IMP}[type(g)])
            args.append(0)

    walk(f)
    return ops, args


def _mask_of(p, points):
    if isinstance(points, int):
        return points
    m = 0
    for name in points:
        m |= 1 << p.index(name)
    return m


def truth_set(p: Poset, valuation, f: Formula, modal=False):
    """Bitmask of points where f holds; valuation maps var index to
    an element collection (or a bitmask)."""
    masks = {}
    for v in variables(f):
        if v not in valuation:
            raise VariableUnassigned(f"p{v}")
        masks[v] = _mask_of(p, valuation[v])
        if not modal and not is_upset(p, masks[v]):
            raise ValueError(f"valuation of p{v} is not an upset")
    slot_of = {v: i for i, v in enumerate(sorted(masks))}
    ops, args = compile_formula(f, slot_of)
    vals = [masks[v] for v in sorted(masks)]
    return _kernel.eval_program(p.n, p.up, ops, args, vals)


def eval_at(p: Poset, valuation, x, f: Formula) -> bool:
    """Does f hold at point x under the given upset valuation?"""
    if is_modal(f):
        raise NotIntuitionistic(str(f))
    return bool(truth_set(p, valuation, f) >> p.index(x) & 1)


def _scan(p, f, domain, meter):
    vs = sorted(variables(f))
    slot_of = {v: i for i, v in enumerate(vs)}
    ops, args = compile_formula(f, slot_of)
    limit = None if meter is None else meter.remaining()
    # the compiled kernel works on 64-bit masks; wider posets take the
    # pure scanner, which uses unbounded ints
    scan = (_kernel.scan_validity if p.n <= 64
            else _kernel.pure_scan_validity)
    status, witness, work = scan(
        p.n, list(p.up), p.full_mask, ops, args, len(vs), list(domain), limit)
    if meter is not None:
        meter.spent += work
    if status == "budget":
        raise BudgetExceeded(spent=None if meter is None else meter.spent)
    return status == "valid", witness


def is_valid(p: Poset, f: Formula, meter: WorkMeter | None = None) -> bool:
    """Intuitionistic validity: true at every point under every
    upset valuation."""
    if is_modal(f):
        raise NotIntuitionistic(str(f))
    if p.n == 0:
        return True
    domain = upset_masks(p, cap=p.n)
    ok, _ = _scan(p, f, domain, meter)
    return ok


def is_valid_modal(p: Poset, f: Formula, meter: WorkMeter | None = None) -> bool:
    """Validity over the poset read as a reflexive-transitive frame;
    valuations range over arbitrary subsets."""
    if p.n == 0:
        return True
    if p.n > 22:
        raise BudgetExceeded(f"2^{p.n} modal valuations per variable")
    domain = list(range(1 << p.n))
    ok, _ = _scan(p, f, domain, meter)
    return ok


def is_valid_algebra(a, f: Formula, meter: WorkMeter | None = None) -> bool:
    """Validity in a finite Heyting algebra: every assignment gives 1."""
    if is_modal(f):
        raise NotIntuitionistic(str(f))
    vs = sorted(variables(f))
    assign = {}

    def ev(g):
        if isinstance(g, Var):
            return assign[g.index]
        if isinstance(g, Bot):
            return a.bottom
        l, r = ev(g.left), ev(g.right)
        if isinstance(g, And):
            return a.meet[l][r]
        if isinstance(g, Or):
            return a.join[l][r]
        return a.imp[l][r]

    def rec(k):
        if meter is not None and k == len(vs):
            meter.charge()
        if k == len(vs):
            return ev(f) == a.top
        for val in range(a.size):
            assign[vs[k]] = val
            if not rec(k + 1):
                return False
        return True

    return rec(0)
