import numpy as np

from . import ArgumentationFramework


def random_framework(rng, n_arguments, edge_probability):
    """
    Arguments `1`..`n`, every ordered pair (self-attacks included) is an
    attack with probability `edge_probability`
    """
    arguments = [str(i + 1) for i in range(n_arguments)]
    draws = rng.random((n_arguments, n_arguments)) < edge_probability
    attacks = [
        (arguments[i], arguments[j])
        for i in range(n_arguments)
        for j in range(n_arguments)
        if draws[i, j]
    ]
    return ArgumentationFramework(arguments, attacks)


def random_corpus(
    seed=0, size=200, min_arguments=3, max_arguments=7, edge_probability=0.3
):
    rng = np.random.default_rng(seed)
    return [
        random_framework(
            rng,
            n_arguments=int(rng.integers(min_arguments, max_arguments + 1)),
            edge_probability=edge_probability,
        )
        for _ in range(size)
    ]


def random_order(rng, arguments):
    return [arguments[i] for i in rng.permutation(len(arguments))]


def random_partition(rng, arguments, n_parts):
    """
    Split `arguments` into `n_parts` non-empty parts (fewer if there aren't
    enough arguments), keeping declaration order within each part
    """
    n_parts = min(n_parts, len(arguments))
    # every part gets one argument first so that none is empty
    shuffled = rng.permutation(len(arguments))
    assignment = np.empty(len(arguments), dtype=int)
    assignment[shuffled[:n_parts]] = np.arange(n_parts)
    assignment[shuffled[n_parts:]] = rng.integers(0, n_parts, len(arguments) - n_parts)
    return [
        [a for a, part in zip(arguments, assignment) if part == k]
        for k in range(n_parts)
    ]
