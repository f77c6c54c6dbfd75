from collections import namedtuple

from .. import BLOCK_PREFIX, FRESH_PREFIX, NamespaceCollision, UsageError
from ..logic import is_identifier
from ..logic.evaluation import variables

# `lhs ≡ rhs`, the left-hand side may still occur on the right before the
# equation has been refined
VariableEquation = namedtuple("VariableEquation", ["lhs", "rhs"])

# G ≡ P&X | N&!X | C&X&!X | M for an expression G and a variable X
QuadDecomposition = namedtuple("QuadDecomposition", ["P", "N", "C", "M"])


class EquationSet:
    """
    Ordered variable equations with pairwise distinct left-hand sides
    """

    def __init__(self, equations=()):
        self._rhs = {}
        for equation in equations:
            lhs, rhs = equation
            if lhs in self._rhs:
                raise UsageError(f"`{lhs}` is the left-hand side of two equations")
            self._rhs[lhs] = rhs

    @classmethod
    def from_network(cls, network, arguments=None):
        arguments = network.arguments if arguments is None else arguments
        return cls(VariableEquation(a, network.condition(a)) for a in arguments)

    def __getitem__(self, lhs):
        return self._rhs[lhs]

    def __contains__(self, lhs):
        return lhs in self._rhs

    def __iter__(self):
        return (VariableEquation(lhs, rhs) for lhs, rhs in self._rhs.items())

    def __len__(self):
        return len(self._rhs)

    def __eq__(self, other):
        if isinstance(other, EquationSet):
            return list(self._rhs.items()) == list(other._rhs.items())
        return NotImplemented

    def __repr__(self):
        body = ", ".join(f"{lhs} ≡ {rhs}" for lhs, rhs in self._rhs.items())
        return f"EquationSet({body})"

    @property
    def lhs_set(self):
        return frozenset(self._rhs)

    def rhs_variables(self):
        return frozenset().union(*(variables(rhs) for rhs in self._rhs.values()))

    def replace(self, rhs_by_lhs):
        equations = dict(self._rhs)
        equations.update(rhs_by_lhs)
        return EquationSet(equations.items())

    def as_dict(self):
        return dict(self._rhs)


class FreshSupply:
    """
    Deterministic source of allocation-variable names `<prefix><k>`. Names in
    `reserved` are skipped
    """

    def __init__(self, prefix=FRESH_PREFIX, start=0, reserved=()):
        if not prefix.startswith((FRESH_PREFIX, BLOCK_PREFIX)):
            raise NamespaceCollision(
                f"Fresh variables must use the `{FRESH_PREFIX}` or"
                f" `{BLOCK_PREFIX}` prefix, got `{prefix}`"
            )
        self.prefix = prefix
        self.counter = start
        self.reserved = set(reserved)
        self.drawn = []

    @classmethod
    def for_block(cls, block_id, reserved=()):
        return cls(prefix=f"{BLOCK_PREFIX}{block_id}{FRESH_PREFIX}", reserved=reserved)

    def reserve(self, names):
        self.reserved.update(names)

    def draw(self):
        while True:
            name = f"{self.prefix}{self.counter}"
            self.counter += 1
            if name not in self.reserved:
                break
        assert is_identifier(name)
        self.reserved.add(name)
        self.drawn.append(name)
        return name

    def owns(self, name):
        return name.startswith(self.prefix)
