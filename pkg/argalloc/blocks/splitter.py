import logging

from .. import UsageError
from ..framework import ArgumentationFramework
from ..framework.labelings import as_network
from ..logic.evaluation import variables
from . import Block, InvalidSplitter, Splitter

logger = logging.getLogger(__name__)


def _block_violations(framework, block):
    violations = []
    declared = set(framework.arguments)
    prefix = f"block {block.block_id}"
    for name in block.arguments:
        if name not in declared:
            violations.append(f"{prefix}: `{name}` isn't an argument of the framework")
    scope = set(block.arguments)
    if block.attacks is not None:
        for attacker, target in block.attacks:
            if target not in block.actual:
                violations.append(
                    f"{prefix}: attack ({attacker}, {target}) targets a"
                    " non-actual argument"
                )
            if attacker not in scope:
                violations.append(
                    f"{prefix}: attacker `{attacker}` is neither actual nor"
                    " variable"
                )
    outside = block.referenced().difference(scope)
    if outside:
        violations.append(
            f"{prefix}: conditions refer to {', '.join(sorted(outside))}, which"
            " are neither actual nor variable"
        )
    return violations


def find_splitter_violations(framework, splitter):
    """
    Everything preventing `splitter` from being a splitter of `framework`, as
    a list of human readable descriptions (empty for a valid splitter)
    """
    violations = []
    ids = [b.block_id for b in splitter.blocks]
    if len(set(ids)) != len(ids):
        violations.append("block ids aren't unique")

    owner = {}
    for block in splitter.blocks:
        violations += _block_violations(framework, block)
        for name in block.actual:
            if name in owner:
                violations.append(
                    f"`{name}` is actual in both block {owner[name]} and block"
                    f" {block.block_id}"
                )
            else:
                owner[name] = block.block_id

    uncovered = [a for a in framework.arguments if a not in owner]
    if uncovered:
        violations.append(f"{', '.join(uncovered)} aren't actual in any block")

    if isinstance(framework, ArgumentationFramework) and all(
        b.attacks is not None for b in splitter.blocks
    ):
        covered = set().union(*(set(b.attacks) for b in splitter.blocks))
        for attack in framework.attacks:
            if attack not in covered:
                violations.append(f"attack {attack} isn't part of any block")
        for attack in sorted(covered.difference(framework.attacks)):
            violations.append(f"attack {attack} isn't an attack of the framework")
    else:
        network = as_network(framework)
        for block in splitter.blocks:
            for name in block.actual:
                if name in network.conditions and block.condition(
                    name
                ) != network.condition(name):
                    violations.append(
                        f"block {block.block_id}: the condition of `{name}`"
                        " differs from the framework's"
                    )
    return violations


def validate_splitter(framework, splitter):
    violations = find_splitter_violations(framework, splitter)
    for violation in violations:
        logger.info(f"invalid splitter: {violation}")
    return len(violations) == 0


def check_splitter(framework, splitter):
    violations = find_splitter_violations(framework, splitter)
    if violations:
        raise InvalidSplitter(
            "Not a splitter of the framework:\n  " + "\n  ".join(violations)
        )


def splitter_from_partition(framework, parts):
    """
    One block per part, its variable arguments are the arguments outside the
    part its conditions depend on
    """
    blocks = []
    network = as_network(framework)
    for block_id, part in enumerate(parts):
        part = set(part)
        actual = [a for a in framework.arguments if a in part]
        if isinstance(framework, ArgumentationFramework):
            attacks = [(s, t) for (s, t) in framework.attacks if t in part]
            external = {s for (s, _) in attacks}.difference(part)
            variable = [a for a in framework.arguments if a in external]
            blocks.append(Block.from_attacks(block_id, actual, variable, attacks))
        else:
            conditions = {a: network.condition(a) for a in actual}
            external = set().union(*(variables(c) for c in conditions.values()))
            variable = [
                a for a in framework.arguments if a in external.difference(part)
            ]
            blocks.append(Block(block_id, actual, variable, conditions=conditions))
    return Splitter(tuple(blocks))


def compose_blocks(first, second, block_id=None):
    """
    Union of two blocks with disjoint actual arguments, variable arguments
    that became actual are dropped
    """
    overlap = set(first.actual) & set(second.actual)
    if overlap:
        raise UsageError(
            f"Blocks {first.block_id} and {second.block_id} share actual"
            f" arguments {', '.join(sorted(overlap))}"
        )
    if block_id is None:
        block_id = f"{first.block_id}_{second.block_id}"
    actual = first.actual + second.actual
    variable = [
        v for v in dict.fromkeys(first.variable + second.variable) if v not in actual
    ]
    conditions = {**first.conditions, **second.conditions}
    attacks = None
    if first.attacks is not None and second.attacks is not None:
        attacks = first.attacks + second.attacks
    return Block(block_id, actual, variable, conditions=conditions, attacks=attacks)
