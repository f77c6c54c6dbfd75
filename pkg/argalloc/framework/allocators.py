import numpy as np

from .. import DEFAULT_MAX_EQUIV_VARS, DEFAULT_MAX_ORACLE_ARGS, CapacityError
from ..logic import Constant, TriValue, const
from ..logic.evaluation import (
    equivalent,
    evaluate,
    evaluate_grid,
    substitute_many,
    valuation_grid,
)
from . import Allocator, Label, Labeling, NonConstantAllocation, check_covers
from .labelings import as_network, enumerate_complete_labelings


def labeling_to_allocator(labeling):
    return Allocator({a: const(label.truth_value) for a, label in labeling.items()})


def allocator_to_labeling(allocator):
    labels = {}
    for argument, p in allocator.items():
        if not isinstance(p, Constant):
            raise NonConstantAllocation(
                f"`{argument}` is allocated `{p}`, which isn't a constant"
            )
        labels[argument] = Label.from_truth_value(p.value)
    return Labeling(labels)


def completeness_rhs(network, allocator, argument):
    """
    The condition of `argument` with every argument replaced by its allocation
    """
    return substitute_many(network.condition(argument), dict(allocator))


def is_complete_allocator(network, allocator, max_vars=DEFAULT_MAX_EQUIV_VARS):
    network = as_network(network)
    check_covers(network, allocator)
    return all(
        equivalent(
            allocator[a], completeness_rhs(network, allocator, a), max_vars=max_vars
        )
        for a in network.arguments
    )


def instantiate(allocator, valuation):
    return Allocator({a: const(evaluate(p, valuation)) for a, p in allocator.items()})


def instantiation_set(allocator, max_vars=DEFAULT_MAX_EQUIV_VARS):
    """
    The labelings obtained by instantiating the allocator with every valuation
    of its allocation variables
    """
    names = sorted(allocator.allocation_variables)
    if len(names) > max_vars:
        raise CapacityError(
            f"Instantiating {len(names)} allocation variables exceeds the"
            f" configured bound of {max_vars}"
        )
    arguments = list(allocator)
    if len(arguments) == 0:
        return frozenset([Labeling({})])
    grid = valuation_grid(len(names))
    values = np.stack([evaluate_grid(allocator[a], names, grid) for a in arguments])
    rows = np.unique(values.T, axis=0)
    return frozenset(
        Labeling(
            {
                a: Label.from_truth_value(TriValue.from_level(level))
                for a, level in zip(arguments, row)
            }
        )
        for row in rows
    )


def is_general(
    network,
    allocator,
    max_vars=DEFAULT_MAX_EQUIV_VARS,
    max_arguments=DEFAULT_MAX_ORACLE_ARGS,
):
    """
    A general allocator is complete and every complete labeling is one of its
    instantiations
    """
    network = as_network(network)
    if not is_complete_allocator(network, allocator, max_vars=max_vars):
        return False
    labelings = enumerate_complete_labelings(network, max_arguments=max_arguments)
    return instantiation_set(allocator, max_vars=max_vars) == frozenset(labelings)
