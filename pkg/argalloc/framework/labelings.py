import logging

import numpy as np

from .. import DEFAULT_MAX_ORACLE_ARGS, CapacityError
from ..logic import Conjunction, Constant, Negation, TriValue, Variable
from ..logic.evaluation import evaluate, evaluate_grid, valuation_grid
from . import (
    AmbiguousGroundedLabeling,
    ArgumentationFramework,
    Label,
    Labeling,
    Network,
    attack_condition,
    check_covers,
)

logger = logging.getLogger(__name__)


def af_to_network(framework):
    """
    Every argument is accepted iff none of its attackers is, i.e. its
    condition is the conjunction of the negated attackers (T if unattacked)
    """
    conditions = {
        a: attack_condition(framework.attackers(a)) for a in framework.arguments
    }
    return Network(framework.arguments, conditions)


def as_network(framework_or_network):
    if isinstance(framework_or_network, ArgumentationFramework):
        return af_to_network(framework_or_network)
    return framework_or_network


def _negated_argument(p):
    if isinstance(p, Negation) and isinstance(p.child, Variable):
        return p.child.name
    return None


def attackers_of(network):
    """
    Recover the attack relation from conditions shaped like those produced by
    `af_to_network`, returns None if any condition has another shape
    """
    attackers = {}
    for argument, condition in network.conditions.items():
        if condition == Constant(TriValue.T):
            attackers[argument] = ()
            continue
        parts = condition.children if isinstance(condition, Conjunction) else (condition,)
        names = [_negated_argument(c) for c in parts]
        if None in names:
            return None
        attackers[argument] = tuple(dict.fromkeys(names))
    return attackers


def is_complete_labeling(network, labeling):
    """
    A labeling is complete iff, reading in/out/undec as T/F/U, every argument
    takes the value of its own condition
    """
    network = as_network(network)
    check_covers(network, labeling, what="labeling")
    valuation = labeling.valuation()
    return all(
        evaluate(network.condition(a), valuation) == valuation[a]
        for a in network.arguments
    )


def _check_oracle_bound(network, max_arguments):
    if len(network.arguments) > max_arguments:
        raise CapacityError(
            f"Enumerating the labelings of {len(network.arguments)} arguments"
            f" exceeds the configured bound of {max_arguments} arguments"
        )


def enumerate_complete_labelings(network, max_arguments=DEFAULT_MAX_ORACLE_ARGS):
    """
    Brute-force all 3^n candidate labelings and keep the complete ones, in
    lexicographic argument order with in < undec < out
    """
    network = as_network(network)
    _check_oracle_bound(network, max_arguments)
    names = network.arguments
    grid = valuation_grid(len(names))
    complete = np.ones(grid.shape[0], dtype=bool)
    for i, argument in enumerate(names):
        values = evaluate_grid(network.condition(argument), names, grid)
        complete &= values == grid[:, i]

    labelings = []
    for row in grid[complete]:
        labelings.append(
            Labeling(
                {
                    a: Label.from_truth_value(TriValue.from_level(level))
                    for a, level in zip(names, row)
                }
            )
        )
    logger.debug(f"{len(labelings)} complete labelings of {len(names)} arguments")
    return labelings


def _grounded_by_fixpoint(arguments, attackers):
    labels = {}
    changed = True
    while changed:
        changed = False
        for a in arguments:
            if a in labels:
                continue
            if all(labels.get(b) == Label.OUT for b in attackers[a]):
                labels[a] = Label.IN
                changed = True
            elif any(labels.get(b) == Label.IN for b in attackers[a]):
                labels[a] = Label.OUT
                changed = True
    return Labeling({a: labels.get(a, Label.UNDEC) for a in arguments})


def grounded_labeling(network, max_arguments=DEFAULT_MAX_ORACLE_ARGS):
    """
    The complete labeling with the smallest set of accepted arguments. For
    attack-shaped conditions this is the least fixpoint of labelling in the
    arguments whose attackers are all out and out those with an attacker in.
    Otherwise it is picked from the brute-force enumeration
    """
    network = as_network(network)
    attackers = attackers_of(network)
    if attackers is not None:
        return _grounded_by_fixpoint(network.arguments, attackers)

    labelings = enumerate_complete_labelings(network, max_arguments=max_arguments)
    minimal = [
        L
        for L in labelings
        if not any(other.in_set() < L.in_set() for other in labelings)
    ]
    if len(minimal) != 1:
        raise AmbiguousGroundedLabeling(
            f"{len(minimal)} complete labelings have a minimal set of accepted"
            " arguments, the grounded labeling isn't unique"
        )
    return minimal[0]
