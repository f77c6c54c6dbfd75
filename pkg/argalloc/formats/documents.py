"""
JSON forms of labelings, allocators and splitters
"""
import json

from ..blocks import Block, Splitter
from ..blocks.splitter import splitter_from_partition
from ..framework import Allocator, InvalidFramework, Label, Labeling
from ..logic import ExpressionSyntaxError, InvalidIdentifier
from ..logic.syntax import parse_expression, to_string
from . import InvalidInputFile

ALLOCATION_VARIABLES_KEY = "allocation_variables"


def labeling_to_json(labeling):
    return {a: label.value for a, label in labeling.items()}


def labeling_from_json(document):
    try:
        return Labeling({a: Label(v) for a, v in document.items()})
    except ValueError as ex:
        raise InvalidInputFile(f"Invalid labeling: {ex}")


def allocator_to_json(allocator):
    document = {a: to_string(p) for a, p in allocator.items()}
    document[ALLOCATION_VARIABLES_KEY] = sorted(allocator.allocation_variables)
    return document


def _parse(text, what):
    try:
        return parse_expression(text)
    except (ExpressionSyntaxError, InvalidIdentifier) as ex:
        raise InvalidInputFile(f"Invalid expression for {what}: {ex}")


def allocator_from_json(document):
    document = dict(document)
    declared = document.pop(ALLOCATION_VARIABLES_KEY, None)
    allocator = Allocator(
        {a: _parse(text, f"`{a}`") for a, text in document.items()}
    )
    if declared is not None and set(declared) != allocator.allocation_variables:
        raise InvalidInputFile(
            f"The listed allocation variables {sorted(declared)} don't match the"
            f" variables of the expressions {sorted(allocator.allocation_variables)}"
        )
    return allocator


def _block_from_json(index, document):
    block_id = document.get("id", index)
    actual = document.get("actual")
    if actual is None:
        raise InvalidInputFile(f"Block {block_id} has no `actual` arguments")
    variable = document.get("variable", [])
    try:
        if "attacks" in document:
            return Block.from_attacks(
                block_id, actual, variable, [tuple(a) for a in document["attacks"]]
            )
        conditions = {
            a: _parse(text, f"`{a}` in block {block_id}")
            for a, text in document["conditions"].items()
        }
        return Block(block_id, actual, variable, conditions=conditions)
    except InvalidFramework as ex:
        raise InvalidInputFile(str(ex))


def parse_splitter(text, framework):
    """
    `{"blocks": [{"id": .., "actual": [..], "variable": [..], "attacks":
    [[a, b], ..]}, ..]}`, with `conditions` (argument to expression) in place
    of `attacks` for networks. Blocks listing only their actual arguments are
    completed from the framework
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as ex:
        raise InvalidInputFile(f"Invalid JSON: {ex.msg}", ex.lineno)
    if not isinstance(document, dict) or not isinstance(document.get("blocks"), list):
        raise InvalidInputFile("A splitter should be an object with a `blocks` list")

    blocks = document["blocks"]
    only_actual = [
        "attacks" not in b and "conditions" not in b and "variable" not in b
        for b in blocks
    ]
    if blocks and all(only_actual):
        return splitter_from_partition(framework, [b["actual"] for b in blocks])
    if any(only_actual):
        raise InvalidInputFile(
            "Either every block lists its attacks (or conditions) or none does"
        )
    return Splitter(
        tuple(_block_from_json(i, b) for i, b in enumerate(blocks))
    )


def splitter_to_json(splitter):
    blocks = []
    for block in splitter.blocks:
        document = dict(
            id=block.block_id, actual=list(block.actual), variable=list(block.variable)
        )
        if block.attacks is not None:
            document["attacks"] = [list(a) for a in block.attacks]
        else:
            document["conditions"] = {
                a: to_string(c) for a, c in block.conditions.items()
            }
        blocks.append(document)
    return dict(blocks=blocks)
