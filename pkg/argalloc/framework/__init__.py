import enum
from collections import namedtuple
from collections.abc import Mapping
from types import MappingProxyType

from .. import NamespaceCollision, UsageError, is_reserved_name
from ..logic import TRUE, Expression, TriValue, conj, is_identifier, neg, var
from ..logic.evaluation import variables


class InvalidFramework(Exception):
    pass


class NonConstantAllocation(Exception):
    pass


class AmbiguousGroundedLabeling(Exception):
    pass


def _check_argument_names(arguments):
    seen = set()
    for name in arguments:
        if not is_identifier(name):
            raise InvalidFramework(f"`{name}` is not a valid argument name")
        if is_reserved_name(name):
            raise NamespaceCollision(
                f"Argument name `{name}` uses a prefix reserved for allocation"
                " variables"
            )
        if name in seen:
            raise InvalidFramework(f"Argument `{name}` is declared twice")
        seen.add(name)


class ArgumentationFramework(
    namedtuple("ArgumentationFramework", ["arguments", "attacks"])
):
    """
    Arguments (in declaration order) and attacks as (attacker, target) pairs
    """

    __slots__ = ()

    def __new__(cls, arguments, attacks=()):
        arguments = tuple(arguments)
        _check_argument_names(arguments)
        declared = set(arguments)
        unique_attacks = []
        for attack in attacks:
            attacker, target = attack
            for name in (attacker, target):
                if name not in declared:
                    raise InvalidFramework(
                        f"Attack ({attacker}, {target}) refers to undeclared"
                        f" argument `{name}`"
                    )
            if (attacker, target) not in unique_attacks:
                unique_attacks.append((attacker, target))
        return super().__new__(cls, arguments, tuple(unique_attacks))

    def attackers(self, argument):
        return tuple(a for (a, t) in self.attacks if t == argument)


class Network(namedtuple("Network", ["arguments", "conditions"])):
    """
    Generalised framework: every argument has an acceptance condition, a
    three-valued expression over argument names
    """

    __slots__ = ()

    def __new__(cls, arguments, conditions=None):
        arguments = tuple(arguments)
        _check_argument_names(arguments)
        conditions = dict(conditions or {})
        unknown = set(conditions).difference(arguments)
        if unknown:
            raise InvalidFramework(
                f"Conditions given for undeclared arguments: {', '.join(sorted(unknown))}"
            )
        for name, condition in conditions.items():
            if not isinstance(condition, Expression):
                raise InvalidFramework(
                    f"The condition of `{name}` should be an expression, got"
                    f" `{condition!r}`"
                )
            undeclared = variables(condition).difference(arguments)
            if undeclared:
                raise InvalidFramework(
                    f"The condition of `{name}` refers to undeclared arguments:"
                    f" {', '.join(sorted(undeclared))}"
                )
        # unconditioned arguments are unattacked
        ordered = {name: conditions.get(name, TRUE) for name in arguments}
        return super().__new__(cls, arguments, MappingProxyType(ordered))

    def condition(self, argument):
        return self.conditions[argument]


class Label(enum.Enum):
    IN = "in"
    OUT = "out"
    UNDEC = "undec"

    @property
    def truth_value(self):
        return _TRUTH_VALUE_OF_LABEL[self]

    @classmethod
    def from_truth_value(cls, value):
        return _LABEL_OF_TRUTH_VALUE[value]


_TRUTH_VALUE_OF_LABEL = {
    Label.IN: TriValue.T,
    Label.OUT: TriValue.F,
    Label.UNDEC: TriValue.U,
}
_LABEL_OF_TRUTH_VALUE = {v: k for k, v in _TRUTH_VALUE_OF_LABEL.items()}


class _FrozenMapping(Mapping):
    __slots__ = ("_items", "_lookup")

    def __init__(self, items):
        self._items = tuple(dict(items).items())
        self._lookup = dict(self._items)

    def __getitem__(self, key):
        return self._lookup[key]

    def __iter__(self):
        return (k for k, _ in self._items)

    def __len__(self):
        return len(self._items)

    def __hash__(self):
        return hash(frozenset(self._items))

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self._lookup == other._lookup
        return NotImplemented

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self._items)
        return f"{type(self).__name__}({{{body}}})"


class Labeling(_FrozenMapping):
    """
    Total mapping from arguments to `Label`
    """

    __slots__ = ()

    def __init__(self, labels):
        labels = {k: Label(v) for k, v in dict(labels).items()}
        super().__init__(labels)

    def in_set(self):
        return frozenset(k for k, v in self.items() if v == Label.IN)

    def undecided(self):
        return frozenset(k for k, v in self.items() if v == Label.UNDEC)

    def valuation(self):
        return {k: v.truth_value for k, v in self.items()}

    def sort_key(self, arguments=None):
        arguments = self if arguments is None else arguments
        return tuple(self[a].truth_value.sort_key for a in arguments)

    def restrict(self, arguments):
        return Labeling({a: self[a] for a in arguments})


class Allocator(_FrozenMapping):
    """
    Mapping from arguments to expressions, the variables occurring in the
    expressions are the allocation variables
    """

    __slots__ = ()

    def __init__(self, expressions):
        super().__init__(expressions)

    @property
    def allocation_variables(self):
        return frozenset().union(*(variables(p) for p in self.values()))

    def restrict(self, arguments):
        return Allocator({a: self[a] for a in arguments})


def sorted_labelings(labelings, arguments):
    return sorted(labelings, key=lambda L: L.sort_key(arguments))


def check_covers(network, mapping, what="allocator"):
    missing = set(network.arguments).difference(mapping)
    extra = set(mapping).difference(network.arguments)
    if missing or extra:
        raise UsageError(
            f"The {what} doesn't match the framework arguments"
            f" (missing: {sorted(missing)}, extra: {sorted(extra)})"
        )


def attack_condition(attackers):
    if len(attackers) == 0:
        return TRUE
    return conj(*(neg(var(a)) for a in attackers))
