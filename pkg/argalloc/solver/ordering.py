import itertools
import logging
import math

import networkx as nx
from tqdm import tqdm

from .. import DEFAULT_MAX_EXHAUSTIVE_ORDER_ARGS, CapacityError, UsageError
from ..framework.labelings import as_network
from ..logic.evaluation import variables
from .solve import arity, solve

logger = logging.getLogger(__name__)

ORDER_KINDS = ("input", "min_arity_exhaustive", "fvs_heuristic")

# short names used on the command line
ORDER_ALIASES = dict(
    input="input", exhaustive="min_arity_exhaustive", fvs="fvs_heuristic"
)


def dependency_graph(network):
    """
    Edge B -> A whenever B occurs in the condition of A
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(network.arguments)
    for argument in network.arguments:
        for name in variables(network.condition(argument)):
            graph.add_edge(name, argument)
    return graph


def _cyclic_components(graph):
    for component in nx.strongly_connected_components(graph):
        if len(component) > 1:
            yield component
        else:
            (node,) = component
            if graph.has_edge(node, node):
                yield component


def greedy_feedback_vertex_set(graph):
    """
    Repeatedly remove the node on a cycle with the largest in-degree x
    out-degree until the graph is acyclic. Returns the removed nodes in
    removal order
    """
    graph = graph.copy()
    position = {node: i for i, node in enumerate(graph.nodes)}
    removed = []
    while True:
        candidates = [node for c in _cyclic_components(graph) for node in c]
        if len(candidates) == 0:
            return removed
        # self-loops can only be broken by removing the node itself
        node = max(
            candidates,
            key=lambda n: (
                graph.has_edge(n, n),
                graph.in_degree(n) * graph.out_degree(n),
                -position[n],
            ),
        )
        graph.remove_node(node)
        removed.append(node)


def _min_arity_order(network, max_arguments, progress):
    n = len(network.arguments)
    if n > max_arguments:
        raise CapacityError(
            f"Exhaustive order search over {n} arguments exceeds the configured"
            f" bound of {max_arguments}"
        )
    best_order, best_arity = None, None
    permutations = itertools.permutations(network.arguments)
    for order in tqdm(permutations, total=math.factorial(n), disable=not progress):
        order_arity = arity(solve(network, order=order))
        if best_arity is None or order_arity < best_arity:
            best_order, best_arity = list(order), order_arity
            if best_arity == 0:
                break
    logger.info(f"Smallest arity over all orders: {best_arity}")
    return best_order


def order_strategy(
    network,
    kind="input",
    max_arguments=DEFAULT_MAX_EXHAUSTIVE_ORDER_ARGS,
    progress=False,
):
    """
    Order in which the argument equations are solved:

    - `input`: declaration order
    - `min_arity_exhaustive`: first order with the smallest arity over all
      permutations
    - `fvs_heuristic`: arguments outside a greedy feedback vertex set of the
      dependency graph first, then the feedback vertices in removal order
    """
    network = as_network(network)
    kind = ORDER_ALIASES.get(kind, kind)
    if kind == "input":
        return list(network.arguments)
    elif kind == "min_arity_exhaustive":
        return _min_arity_order(network, max_arguments=max_arguments, progress=progress)
    elif kind == "fvs_heuristic":
        feedback = greedy_feedback_vertex_set(dependency_graph(network))
        rest = [a for a in network.arguments if a not in feedback]
        return rest + feedback
    raise UsageError(f"`{kind}` order strategy not available")
