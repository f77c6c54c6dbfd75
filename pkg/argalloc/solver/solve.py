import logging

from .. import UsageError
from ..framework import Allocator
from ..framework.labelings import as_network
from ..logic.evaluation import variables
from ..logic.simplify import simplify
from . import EquationSet, FreshSupply
from .equations import solve_equations

logger = logging.getLogger(__name__)


def check_order(network, order):
    if sorted(order) != sorted(network.arguments):
        raise UsageError(
            f"The order `{', '.join(order)}` isn't a permutation of the"
            f" arguments `{', '.join(network.arguments)}`"
        )


def solve(network, order=None, supply=None, elide=True):
    """
    Compile a general allocator by solving the equations `A ≡ condition(A)`
    for the arguments in `order` (declaration order by default)
    """
    network = as_network(network)
    order = list(network.arguments) if order is None else list(order)
    check_order(network, order)
    supply = FreshSupply() if supply is None else supply

    equations = EquationSet.from_network(network)
    solved = solve_equations(equations, order, supply, elide=elide)
    allocator = Allocator({a: solved[a] for a in network.arguments})
    logger.info(
        f"Solved {len(order)} equations with {arity(allocator)} allocation"
        " variables"
    )
    return allocator


def arity(allocator):
    return len(
        frozenset().union(*(variables(simplify(p)) for p in allocator.values()))
    )
