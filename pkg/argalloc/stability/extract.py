from .. import DEFAULT_MAX_BRUTE_FORCE_SAT_VARS, DEFAULT_MAX_SAT_VARS
from ..framework import sorted_labelings
from ..framework.allocators import allocator_to_labeling, instantiate
from ..framework.labelings import as_network
from ..logic import TriValue
from .encoding import stable_condition
from .models import enumerate_models


def enumerate_stable(
    network,
    allocator,
    max_brute_force=DEFAULT_MAX_BRUTE_FORCE_SAT_VARS,
    max_vars=DEFAULT_MAX_SAT_VARS,
):
    """
    Stable labelings of `network` (complete labelings without undec) as the
    instantiations of the general allocator `allocator` at the models of its
    stable condition
    """
    network = as_network(network)
    names = sorted(allocator.allocation_variables)
    models = enumerate_models(
        stable_condition(allocator),
        names=names,
        max_brute_force=max_brute_force,
        max_vars=max_vars,
    )
    labelings = set()
    for model in models:
        valuation = {k: TriValue.T if v else TriValue.F for k, v in model.items()}
        labelings.add(allocator_to_labeling(instantiate(allocator, valuation)))
    return sorted_labelings(labelings, network.arguments)
