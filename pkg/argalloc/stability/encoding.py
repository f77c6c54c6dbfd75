from ..logic import (
    FALSE,
    TRUE,
    Conjunction,
    Constant,
    Disjunction,
    Negation,
    TriValue,
    Variable,
    conj,
    disj,
    neg,
)
from ..logic.simplify import simplify


def s_true(p):
    """
    Two-valued formula satisfied exactly by the valuations (without U) under
    which `p` evaluates to T
    """
    if isinstance(p, Constant):
        return TRUE if p.value == TriValue.T else FALSE
    elif isinstance(p, Variable):
        return p
    elif isinstance(p, Negation):
        return s_false(p.child)
    elif isinstance(p, Conjunction):
        return conj(*(s_true(c) for c in p.children))
    elif isinstance(p, Disjunction):
        return disj(*(s_true(c) for c in p.children))
    raise TypeError(f"Can't encode `{p!r}`")


def s_false(p):
    if isinstance(p, Constant):
        return TRUE if p.value == TriValue.F else FALSE
    elif isinstance(p, Variable):
        return neg(p)
    elif isinstance(p, Negation):
        return s_true(p.child)
    elif isinstance(p, Conjunction):
        return disj(*(s_false(c) for c in p.children))
    elif isinstance(p, Disjunction):
        return conj(*(s_false(c) for c in p.children))
    raise TypeError(f"Can't encode `{p!r}`")


def stable_condition(allocator):
    """
    Satisfied by the valuations for which no argument is allocated U
    """
    return simplify(
        conj(*(disj(s_true(p), s_false(p)) for p in allocator.values()))
    )
