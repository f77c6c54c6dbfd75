"""
Local allocators: allocators of a block where every variable argument is
allocated its own name as a bare variable. Solving blocks separately and
composing the results gives a general allocator of the whole framework.
"""
import logging

import numpy as np

from .. import (
    DEFAULT_MAX_EQUIV_VARS,
    DEFAULT_MAX_ORACLE_ARGS,
    CapacityError,
    NamespaceCollision,
    UsageError,
)
from ..framework import Allocator, Label, Labeling
from ..framework.allocators import instantiation_set
from ..framework.labelings import as_network
from ..logic import TriValue, Variable
from ..logic.evaluation import (
    equivalent,
    evaluate_grid,
    substitute_many,
    valuation_grid,
)
from ..logic.normal_form import compact
from ..solver import EquationSet, FreshSupply, VariableEquation
from ..solver.equations import refine, solve_equations
from . import Block
from .splitter import check_splitter, compose_blocks

logger = logging.getLogger(__name__)


def solve_block(block, supply=None, elide=True):
    """
    General local allocator of `block`, the equations of the actual arguments
    are solved with the variable arguments left free
    """
    reserved = block.reserved_names()
    if reserved:
        raise NamespaceCollision(
            f"Block {block.block_id}: {', '.join(reserved)} use a prefix reserved"
            " for allocation variables"
        )
    if supply is None:
        supply = FreshSupply.for_block(block.block_id)
    equations = EquationSet(
        VariableEquation(a, block.condition(a)) for a in block.actual
    )
    solved = solve_equations(equations, list(block.actual), supply, elide=elide)
    allocation = {a: solved[a] for a in block.actual}
    allocation.update({v: Variable(v) for v in block.variable})
    return Allocator(allocation)


def _extra_variables(block, allocator):
    return allocator.allocation_variables.difference(block.variable)


def compose_allocators(
    first, first_allocator, second, second_allocator, supply=None, elide=True
):
    """
    Compose the local allocators of two blocks into a local allocator of the
    composed block. Variable arguments of one block that are actual in the
    other are tied to their allocation there, these equations are solved and
    the solutions substituted into both allocators
    """
    composed = compose_blocks(first, second)
    for v in set(first.variable) & set(second.variable):
        if first_allocator[v] != second_allocator[v]:
            raise UsageError(
                f"Variable argument `{v}` is allocated `{first_allocator[v]}` and"
                f" `{second_allocator[v]}` by the two local allocators"
            )
    extra_first = _extra_variables(first, first_allocator)
    extra_second = _extra_variables(second, second_allocator)
    shared = extra_first & extra_second
    if shared:
        raise UsageError(
            f"The local allocators of blocks {first.block_id} and"
            f" {second.block_id} share allocation variables"
            f" {', '.join(sorted(shared))}"
        )

    equations = [
        VariableEquation(v, second_allocator[v])
        for v in first.variable
        if v in second.actual
    ]
    equations += [
        VariableEquation(v, first_allocator[v])
        for v in second.variable
        if v in first.actual
    ]
    if supply is None:
        supply = FreshSupply.for_block(composed.block_id)
    supply.reserve(
        first_allocator.allocation_variables | second_allocator.allocation_variables
    )
    solved = solve_equations(
        EquationSet(equations), [eq.lhs for eq in equations], supply, elide=elide
    )
    mapping = solved.as_dict()
    logger.debug(
        f"Composed blocks {first.block_id} and {second.block_id} through"
        f" {len(mapping)} equations"
    )

    allocation = {}
    for block, allocator in ((first, first_allocator), (second, second_allocator)):
        for a in block.actual:
            allocation[a] = compact(substitute_many(allocator[a], mapping))
    allocation.update({v: Variable(v) for v in composed.variable})
    return composed, Allocator(allocation)


def compose_splitter(framework, splitter, elide=True):
    """
    General allocator of `framework` from the general local allocators of the
    blocks of `splitter`, composed in ascending block id order
    """
    check_splitter(framework, splitter)
    blocks = sorted(splitter.blocks, key=lambda b: b.block_id)
    solved = [(b, solve_block(b, elide=elide)) for b in blocks]
    if len(solved) == 0:
        return Allocator({})

    block, allocator = solved[0]
    for next_block, next_allocator in solved[1:]:
        block, allocator = compose_allocators(
            block, allocator, next_block, next_allocator, elide=elide
        )
    if block.variable:
        raise UsageError(
            f"The composed blocks still depend on {', '.join(block.variable)}"
        )
    return Allocator({a: allocator[a] for a in framework.arguments})


def pairwise_influence(framework, a, b, supply=None, elide=True):
    """
    How `a` and `b` determine each other through the rest of the framework.
    The block of all other arguments is solved with `a` and `b` as variable
    arguments, then the equations of `a` and `b` are refined. The first
    expression gives `a` without mentioning `a`, the second gives `b` without
    mentioning `b`
    """
    network = as_network(framework)
    for name in (a, b):
        if name not in network.arguments:
            raise UsageError(f"`{name}` isn't an argument of the framework")
    if a == b:
        raise UsageError("The influence of an argument on itself isn't defined")

    rest = [x for x in network.arguments if x not in (a, b)]
    block = Block(
        "pair",
        rest,
        [a, b],
        conditions={x: network.condition(x) for x in rest},
    )
    supply = FreshSupply.for_block(block.block_id) if supply is None else supply
    local = solve_block(block, supply=supply, elide=elide)
    mapping = {x: local[x] for x in rest}

    influences = []
    for name in (a, b):
        rhs = compact(substitute_many(network.condition(name), mapping))
        refined = refine(VariableEquation(name, rhs), supply, elide=elide)
        influences.append(refined.rhs)
    return tuple(influences)


def is_complete_local_allocator(block, allocator, max_vars=DEFAULT_MAX_EQUIV_VARS):
    assigned = [allocator.get(v) for v in block.variable]
    if not all(isinstance(p, Variable) for p in assigned):
        return False
    if len(set(assigned)) != len(assigned):
        return False
    return all(
        equivalent(
            allocator[x],
            substitute_many(block.condition(x), dict(allocator)),
            max_vars=max_vars,
        )
        for x in block.actual
    )


def constant_local_allocators(block, max_arguments=DEFAULT_MAX_ORACLE_ARGS):
    """
    All constant local allocators of `block` as labelings over its actual and
    variable arguments: any labeling of the variable arguments together with
    a labeling of the actual ones solving their conditions
    """
    names = block.arguments
    if len(names) > max_arguments:
        raise CapacityError(
            f"Enumerating the constant local allocators of {len(names)} arguments"
            f" exceeds the configured bound of {max_arguments} arguments"
        )
    grid = valuation_grid(len(names))
    solves = np.ones(grid.shape[0], dtype=bool)
    for i, x in enumerate(block.actual):
        solves &= evaluate_grid(block.condition(x), names, grid) == grid[:, i]
    return [
        Labeling(
            {
                x: Label.from_truth_value(TriValue.from_level(level))
                for x, level in zip(names, row)
            }
        )
        for row in grid[solves]
    ]


def is_general_local_allocator(
    block,
    allocator,
    max_vars=DEFAULT_MAX_EQUIV_VARS,
    max_arguments=DEFAULT_MAX_ORACLE_ARGS,
):
    if not is_complete_local_allocator(block, allocator, max_vars=max_vars):
        return False
    expected = frozenset(constant_local_allocators(block, max_arguments=max_arguments))
    ordered = Allocator({x: allocator[x] for x in block.arguments})
    return instantiation_set(ordered, max_vars=max_vars) == expected
