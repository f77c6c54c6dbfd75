"""
Decomposition of an expression G around a variable X into (P, N, C, M) with

    G ≡ P&X | N&!X | C&X&!X | M

and X occurring in none of the four components. `_positive` decomposes G,
`_negative` decomposes !G, the two call each other through negations.

Unsimplified, the components together mention exactly the variables of G
other than X. Simplified components (the default) can mention fewer: a
variable G doesn't depend on, like `b` in `!(a | a & b)`, may disappear from
them and from the refined equations built from them.
"""
from ..logic import (
    FALSE,
    TRUE,
    Conjunction,
    Constant,
    Disjunction,
    Negation,
    Variable,
    conj,
    disj,
    neg,
)
from ..logic.normal_form import compact
from . import QuadDecomposition

_X_ONLY = QuadDecomposition(TRUE, FALSE, FALSE, FALSE)
_NOT_X_ONLY = QuadDecomposition(FALSE, TRUE, FALSE, FALSE)


def _componentwise_or(quads):
    return QuadDecomposition(*(disj(*parts) for parts in zip(*quads)))


def _product(first, second):
    P1, N1, C1, M1 = first
    P2, N2, C2, M2 = second
    return QuadDecomposition(
        P=disj(conj(P1, P2), conj(P1, M2), conj(P2, M1)),
        N=disj(conj(N1, N2), conj(N1, M2), conj(N2, M1)),
        C=disj(
            conj(disj(P1, N1, M1), C2),
            conj(disj(P2, N2, M2), C1),
            conj(C1, C2),
            conj(P1, N2),
            conj(N1, P2),
        ),
        M=conj(M1, M2),
    )


def _fold_product(quads):
    result = quads[0]
    for quad in quads[1:]:
        result = _product(result, quad)
    return result


class _Decomposer:
    def __init__(self, name, simplify_components):
        self.name = name
        self.simplify_components = simplify_components

    def _finish(self, quad):
        if self.simplify_components:
            return QuadDecomposition(*(compact(p) for p in quad))
        return quad

    def positive(self, p):
        if isinstance(p, Constant):
            return QuadDecomposition(FALSE, FALSE, FALSE, p)
        elif isinstance(p, Variable):
            if p.name == self.name:
                return _X_ONLY
            return QuadDecomposition(FALSE, FALSE, FALSE, p)
        elif isinstance(p, Negation):
            return self.negative(p.child)
        elif isinstance(p, Disjunction):
            quads = [self.positive(c) for c in p.children]
            return self._finish(_componentwise_or(quads))
        elif isinstance(p, Conjunction):
            quads = [self.positive(c) for c in p.children]
            return self._finish(_fold_product(quads))
        raise TypeError(f"Can't decompose `{p!r}`")

    def negative(self, p):
        if isinstance(p, Constant):
            return QuadDecomposition(FALSE, FALSE, FALSE, Constant(~p.value))
        elif isinstance(p, Variable):
            if p.name == self.name:
                return _NOT_X_ONLY
            return QuadDecomposition(FALSE, FALSE, FALSE, neg(p))
        elif isinstance(p, Negation):
            return self.positive(p.child)
        elif isinstance(p, Conjunction):
            # !(a & b) = !a | !b
            quads = [self.negative(c) for c in p.children]
            return self._finish(_componentwise_or(quads))
        elif isinstance(p, Disjunction):
            quads = [self.negative(c) for c in p.children]
            return self._finish(_fold_product(quads))
        raise TypeError(f"Can't decompose `{p!r}`")


def decompose(expression, name, simplify_components=True):
    """
    Split `expression` into the coefficients of `name`, `!name`,
    `name & !name` and the remainder free of `name`
    """
    return _Decomposer(name, simplify_components).positive(expression)


def recompose(quad, name):
    """
    P&X | N&!X | C&X&!X | M, the expression a decomposition stands for
    """
    x = Variable(name)
    return disj(
        conj(quad.P, x), conj(quad.N, neg(x)), conj(quad.C, x, neg(x)), quad.M
    )
