"""
Reduced disjunctive normal forms of three-valued expressions.

A term is a set of literals (`a`, `!a` or the undecided constant) standing for
their conjunction, a normal form is a set of terms standing for their
disjunction. Negations are pushed down to the variables with De Morgan's laws
and conjunctions distributed over disjunctions, both hold in three-valued
logic. After every step the terms are reduced with absorption: a term is
dropped when another term has a subset of its literals, where a term holding
both `a` and `!a` counts as also holding U (`a & !a` is never T).

`compact` uses these normal forms to keep the expressions built while solving
from growing with every substitution.
"""
import logging

from .. import DEFAULT_MAX_NORMAL_FORM_TERMS
from . import (
    UNDECIDED,
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
from .evaluation import node_count
from .simplify import simplify

logger = logging.getLogger(__name__)

# stands for the undecided constant inside a term
UNDECIDED_LITERAL = ("", True)

_TRUE_TERMS = frozenset([frozenset()])
_FALSE_TERMS = frozenset()
_UNDECIDED_TERMS = frozenset([frozenset([UNDECIDED_LITERAL])])

# conjunctions of two normal forms multiply their terms, larger products
# aren't attempted
_MAX_PRODUCT_FACTOR = 64


class NormalFormTooLarge(Exception):
    pass


def _negated_literal(literal):
    if literal == UNDECIDED_LITERAL:
        return literal
    name, positive = literal
    return (name, not positive)


def _has_complementary_literals(term):
    return any(
        (name, not positive) in term
        for name, positive in term
        if (name, positive) != UNDECIDED_LITERAL
    )


def _normalized_term(term):
    # a & !a & U is a & !a
    if UNDECIDED_LITERAL in term and _has_complementary_literals(term):
        return term.difference([UNDECIDED_LITERAL])
    return term


def _implied_literals(term):
    if _has_complementary_literals(term):
        return term | {UNDECIDED_LITERAL}
    return term


def _reduce(terms, max_terms):
    """
    Drop every term absorbed by another one. Absorbing terms are never larger
    than the terms they absorb, and of two terms of the same size only one
    holding U can absorb the other, so one pass in that order is enough
    """
    ordered = sorted(
        (_normalized_term(t) for t in terms),
        key=lambda t: (len(t), UNDECIDED_LITERAL not in t),
    )
    kept = []
    for term in ordered:
        implied = _implied_literals(term)
        if any(k <= implied for k in kept):
            continue
        kept.append(term)
        if len(kept) > max_terms:
            raise NormalFormTooLarge(
                f"The normal form has more than {max_terms} terms"
            )
    return frozenset(kept)


def _conjunction(first, second, max_terms):
    if len(first) * len(second) > max_terms * _MAX_PRODUCT_FACTOR:
        raise NormalFormTooLarge(
            f"Distributing {len(first)} over {len(second)} terms"
        )
    return _reduce({a | b for a in first for b in second}, max_terms)


def _negation(terms, max_terms):
    # !(t1 | t2 | ...) is the conjunction of the negated literals of every term
    result = _TRUE_TERMS
    for term in terms:
        clause = frozenset(frozenset([_negated_literal(lit)]) for lit in term)
        result = _conjunction(result, clause, max_terms)
        if not result:
            break
    return result


def normal_form_terms(p, max_terms=DEFAULT_MAX_NORMAL_FORM_TERMS):
    """
    The terms of the reduced disjunctive normal form of `p`, raises
    NormalFormTooLarge when it would hold more than `max_terms` terms
    """
    if isinstance(p, Constant):
        if p.value == TriValue.T:
            return _TRUE_TERMS
        elif p.value == TriValue.F:
            return _FALSE_TERMS
        return _UNDECIDED_TERMS
    elif isinstance(p, Variable):
        return frozenset([frozenset([(p.name, True)])])
    elif isinstance(p, Negation):
        return _negation(normal_form_terms(p.child, max_terms), max_terms)
    elif isinstance(p, Disjunction):
        terms = set()
        for c in p.children:
            terms |= normal_form_terms(c, max_terms)
        return _reduce(terms, max_terms)
    elif isinstance(p, Conjunction):
        result = _TRUE_TERMS
        for c in p.children:
            result = _conjunction(result, normal_form_terms(c, max_terms), max_terms)
        return result
    raise TypeError(f"Can't normalize `{p!r}`")


def _literal_expression(literal):
    if literal == UNDECIDED_LITERAL:
        return UNDECIDED
    name, positive = literal
    return Variable(name) if positive else neg(Variable(name))


def from_terms(terms):
    return disj(
        *(
            conj(*(_literal_expression(lit) for lit in sorted(term)))
            for term in sorted(terms, key=sorted)
        )
    )


def normal_form(p, max_terms=DEFAULT_MAX_NORMAL_FORM_TERMS):
    return simplify(from_terms(normal_form_terms(p, max_terms=max_terms)))


def compact(p, max_terms=DEFAULT_MAX_NORMAL_FORM_TERMS):
    """
    `simplify(p)`, or the reduced normal form of `p` when that is less than
    half its size. Small expressions keep their simplified shape
    """
    simplified = simplify(p)
    if isinstance(simplified, (Constant, Variable)):
        return simplified
    try:
        reduced = normal_form(simplified, max_terms=max_terms)
    except NormalFormTooLarge as ex:
        logger.debug(f"Keeping the simplified expression: {ex}")
        return simplified
    if 2 * node_count(reduced) < node_count(simplified):
        return reduced
    return simplified
