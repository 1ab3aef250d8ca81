"""Shared test helpers."""

from ipckit.formulas import BOT, And, Box, Imp, Or, Var


def random_formula(rng, d, modal=False):
    """Random AST over p0..p2 with depth at most d."""
    if d == 0:
        return rng.choice([Var(0), Var(1), Var(2), BOT])
    k = rng.randrange(5 if modal else 4)
    if k == 0:
        return rng.choice([Var(0), Var(1), Var(2), BOT])
    if k == 4:
        return Box(random_formula(rng, d - 1, modal))
    left = random_formula(rng, d - 1, modal)
    right = random_formula(rng, d - 1, modal)
    return [And, Or, Imp][k - 1](left, right)
