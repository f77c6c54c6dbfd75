"""
Sound rewriting of expressions into a canonical form.

The canonical form folds constants, removes double negations, flattens nested
conjunctions/disjunctions, drops duplicate siblings and sorts children by
their printed form. The undecided constant is removed or made absorbing only
when the value range of its siblings allows it. `a & !a` is never rewritten
to F (nor `a | !a` to T), these are not equivalences in three-valued logic.
"""
import itertools

from . import (
    UNDECIDED,
    Conjunction,
    Constant,
    Disjunction,
    Negation,
    TriValue,
    Variable,
)
from .evaluation import value_range
from .syntax import to_string

_AT_MOST_UNDECIDED = {
    Conjunction: frozenset([TriValue.F, TriValue.U]),
    Disjunction: frozenset([TriValue.T, TriValue.U]),
}


def _sort_key(p):
    s = to_string(p)
    # keep `a` and `!a` next to each other
    return (s.lstrip("!("), len(s), s)


def _simplify_connective(p):
    kind = type(p)
    if kind is Conjunction:
        identity, absorbing = TriValue.T, TriValue.F
        dual = Disjunction
    else:
        identity, absorbing = TriValue.F, TriValue.T
        dual = Conjunction

    children = []
    has_undecided = False
    for child in (simplify(c) for c in p.children):
        flattened = child.children if isinstance(child, kind) else (child,)
        for c in flattened:
            if isinstance(c, Constant):
                if c.value == absorbing:
                    return Constant(absorbing)
                elif c.value == TriValue.U:
                    has_undecided = True
                continue
            children.append(c)

    if has_undecided:
        # U & p is U when p can't be F, U | p is U when p can't be T
        children = [
            c for c in children if not value_range(c) <= _AT_MOST_UNDECIDED[dual]
        ]
        if len(children) == 0:
            return UNDECIDED
        rest = children[0] if len(children) == 1 else kind(tuple(children))
        # ...and U disappears when the rest can't reach the identity
        if not value_range(rest) <= _AT_MOST_UNDECIDED[kind]:
            children.append(UNDECIDED)

    children = sorted(set(children), key=_sort_key)
    if len(children) == 0:
        return Constant(identity)
    elif len(children) == 1:
        return children[0]
    return kind(tuple(children))


def simplify(p):
    if isinstance(p, (Constant, Variable)):
        return p
    elif isinstance(p, Negation):
        child = simplify(p.child)
        if isinstance(child, Constant):
            return Constant(~child.value)
        elif isinstance(child, Negation):
            return child.child
        return Negation(child)
    return _simplify_connective(p)


def distribute(p):
    """
    Distribute conjunction over disjunction everywhere outside of negations.
    The result can be exponentially larger than `p` and is not simplified
    """
    if isinstance(p, (Constant, Variable)):
        return p
    elif isinstance(p, Negation):
        return Negation(distribute(p.child))
    elif isinstance(p, Disjunction):
        return Disjunction(tuple(distribute(c) for c in p.children))

    alternatives = []
    for child in (distribute(c) for c in p.children):
        if isinstance(child, Disjunction):
            alternatives.append(child.children)
        else:
            alternatives.append((child,))
    terms = [
        Conjunction(combination) for combination in itertools.product(*alternatives)
    ]
    if len(terms) == 1:
        return terms[0]
    return Disjunction(tuple(terms))
