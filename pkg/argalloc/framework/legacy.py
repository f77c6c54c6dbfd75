"""
General allocators by composing constant allocators pairwise. Every
composition adds one allocation variable, so a framework with n complete
labelings needs n - 2 variables this way (one for exactly two labelings).
Kept as a baseline for the equation solver.
"""
from .. import DEFAULT_MAX_ORACLE_ARGS, NamespaceCollision
from ..logic import conj, disj, neg, var
from ..solver import FreshSupply
from . import Allocator, Label
from .allocators import labeling_to_allocator
from .labelings import as_network, enumerate_complete_labelings, grounded_labeling


def compose_pair_legacy(first, second, grounded, name):
    """
    E(A) = a&E1(A) | !a&E2(A) | a&!a where A is undecided in the grounded
    labeling, E1(A) elsewhere
    """
    used = first.allocation_variables | second.allocation_variables | set(first)
    if name in used:
        raise NamespaceCollision(
            f"`{name}` is already used by the allocators and can't be the"
            " composing variable"
        )
    a = var(name)
    composed = {}
    for argument, p in first.items():
        if grounded[argument] == Label.UNDEC:
            composed[argument] = disj(
                conj(a, p), conj(neg(a), second[argument]), conj(a, neg(a))
            )
        else:
            composed[argument] = p
    return Allocator(composed)


def build_general_legacy(network, supply=None, max_arguments=DEFAULT_MAX_ORACLE_ARGS):
    network = as_network(network)
    supply = FreshSupply() if supply is None else supply
    grounded = grounded_labeling(network, max_arguments=max_arguments)
    others = [
        L
        for L in enumerate_complete_labelings(network, max_arguments=max_arguments)
        if L != grounded
    ]
    if len(others) == 0:
        return labeling_to_allocator(grounded)

    allocator = labeling_to_allocator(others[0])
    if len(others) == 1:
        # a single composition with itself brings in the grounded labeling
        return compose_pair_legacy(allocator, allocator, grounded, supply.draw())
    for labeling in others[1:]:
        allocator = compose_pair_legacy(
            allocator, labeling_to_allocator(labeling), grounded, supply.draw()
        )
    return allocator
