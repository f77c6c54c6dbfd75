from collections import namedtuple
from types import MappingProxyType

from .. import UsageError, is_reserved_name
from ..framework import InvalidFramework, attack_condition
from ..logic import TRUE, Expression
from ..logic.evaluation import variables


class InvalidSplitter(UsageError):
    pass


class Block(
    namedtuple("Block", ["block_id", "actual", "variable", "conditions", "attacks"])
):
    """
    Part of a framework. The `actual` arguments are defined in the block,
    `variable` arguments are outside arguments the actual ones depend on.
    `attacks` is None for blocks given by acceptance conditions
    """

    __slots__ = ()

    def __new__(cls, block_id, actual, variable=(), conditions=None, attacks=None):
        actual = tuple(actual)
        variable = tuple(variable)
        overlap = set(actual) & set(variable)
        if overlap:
            raise InvalidFramework(
                f"Block {block_id}: {', '.join(sorted(overlap))} can't be both"
                " actual and variable"
            )
        if attacks is not None:
            attacks = tuple(tuple(a) for a in attacks)
            if conditions is None:
                conditions = {
                    a: attack_condition([s for (s, t) in attacks if t == a])
                    for a in actual
                }
        conditions = dict(conditions or {})
        extra = set(conditions).difference(actual)
        if extra:
            raise InvalidFramework(
                f"Block {block_id}: conditions can only be given for actual"
                f" arguments, not for {', '.join(sorted(extra))}"
            )
        conditions = {a: conditions.get(a, TRUE) for a in actual}
        for name, condition in conditions.items():
            if not isinstance(condition, Expression):
                raise InvalidFramework(
                    f"Block {block_id}: the condition of `{name}` should be an"
                    " expression"
                )
        return super().__new__(
            cls, block_id, actual, variable, MappingProxyType(conditions), attacks
        )

    @classmethod
    def from_attacks(cls, block_id, actual, variable, attacks):
        return cls(block_id, actual, variable, attacks=attacks)

    @property
    def arguments(self):
        return self.actual + self.variable

    def condition(self, argument):
        return self.conditions[argument]

    def referenced(self):
        return frozenset().union(*(variables(c) for c in self.conditions.values()))

    def reserved_names(self):
        return [a for a in self.arguments if is_reserved_name(a)]


# blocks ordered by id
Splitter = namedtuple("Splitter", ["blocks"])
