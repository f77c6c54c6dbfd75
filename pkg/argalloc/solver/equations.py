import json
import logging

from .. import UsageError
from ..logic import UNDECIDED, Variable, conj, disj
from ..logic.evaluation import (
    Constancy,
    classify_constant,
    evaluate,
    substitute,
    variables,
)
from ..logic.normal_form import compact
from . import EquationSet, VariableEquation
from .decompose import decompose

logger = logging.getLogger(__name__)


def refined_expression(quad, fresh_name=None):
    """
    P&x | U&(N | C&x) | M for the fresh variable `x`, or U&N | M when no
    fresh variable is given (only valid when P and C are both equivalent to F)
    """
    P, N, C, M = quad
    if fresh_name is None:
        return disj(conj(UNDECIDED, N), M)
    x = Variable(fresh_name)
    return disj(conj(P, x), conj(UNDECIDED, disj(N, conj(C, x))), M)


def refine(equation, supply, elide=True):
    """
    Replace `X ≡ G` by an equation without X on the right-hand side that has
    the same solutions for X, drawing one fresh variable from `supply` when
    needed
    """
    lhs, rhs = equation
    if lhs not in variables(rhs):
        return equation
    quad = decompose(rhs, lhs)
    if (
        elide
        and classify_constant(quad.P) == Constancy.EQUIV_F
        and classify_constant(quad.C) == Constancy.EQUIV_F
    ):
        return VariableEquation(lhs, compact(refined_expression(quad)))
    fresh = supply.draw()
    return VariableEquation(lhs, compact(refined_expression(quad, fresh)))


def substitute_set(equations, equation):
    """
    Put `equation` in place of the equation for its left-hand side and
    substitute its right-hand side into every other equation
    """
    lhs, rhs = equation
    if lhs not in equations:
        raise UsageError(f"`{lhs}` isn't the left-hand side of any equation")
    if lhs in variables(rhs):
        raise UsageError(
            f"The equation for `{lhs}` must be refined before it is substituted"
        )
    updated = {}
    for other in equations:
        if other.lhs == lhs:
            updated[lhs] = rhs
        elif lhs in variables(other.rhs):
            updated[other.lhs] = compact(substitute(other.rhs, lhs, rhs))
        else:
            updated[other.lhs] = other.rhs
    return EquationSet(updated.items())


def _log_step(name, equations):
    if logger.isEnabledFor(logging.DEBUG):
        step = dict(
            solved=name,
            equations={eq.lhs: str(eq.rhs) for eq in equations},
        )
        logger.debug(json.dumps(step))


def solve_equations(equations, order, supply, elide=True):
    """
    Refine and substitute the equations for the left-hand sides in `order`,
    one at a time. Afterwards none of these left-hand sides occurs on any
    right-hand side
    """
    unknown = [name for name in order if name not in equations]
    if unknown:
        raise UsageError(f"No equations for {', '.join(unknown)}")
    if len(set(order)) != len(order):
        raise UsageError("Every left-hand side can only be solved once")
    supply.reserve(equations.lhs_set | equations.rhs_variables())
    for name in order:
        refined = refine(VariableEquation(name, equations[name]), supply, elide=elide)
        equations = substitute_set(equations, refined)
        _log_step(name, equations)
    return equations


def extend_solution(equations, valuation):
    """
    Extend `valuation` with the values the solved equations give their
    left-hand sides
    """
    overlap = equations.lhs_set & equations.rhs_variables()
    if overlap:
        raise UsageError(
            f"{', '.join(sorted(overlap))} still occur on a right-hand side,"
            " the equations aren't solved"
        )
    missing = equations.rhs_variables().difference(valuation)
    if missing:
        raise UsageError(
            f"The valuation doesn't give a value to {', '.join(sorted(missing))}"
        )
    extended = dict(valuation)
    for lhs, rhs in equations:
        extended[lhs] = evaluate(rhs, valuation)
    return extended
