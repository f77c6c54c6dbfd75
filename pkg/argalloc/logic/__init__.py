"""
Three-valued (Kleene) expressions.

Truth values are stored as levels F=0, U=1, T=2 so that conjunction is `min`,
disjunction is `max` and negation is `2 - level`. Expressions are immutable
trees of frozen dataclasses and can be combined with `&`, `|` and `~`.
"""
import enum
import re
from dataclasses import dataclass
from typing import Tuple


class TriValue(enum.Enum):
    F = 0
    U = 1
    T = 2

    @property
    def level(self):
        return self.value

    @classmethod
    def from_level(cls, level):
        return _VALUES_BY_LEVEL[int(level)]

    @property
    def sort_key(self):
        # canonical serialization order is T < U < F
        return 2 - self.value

    def __invert__(self):
        return TriValue.from_level(2 - self.value)

    def __and__(self, other):
        return TriValue.from_level(min(self.value, other.value))

    def __or__(self, other):
        return TriValue.from_level(max(self.value, other.value))

    def __str__(self):
        return self.name


_VALUES_BY_LEVEL = {v.value: v for v in TriValue}

# printed order of the values, used wherever valuations are enumerated
TRI_VALUES = (TriValue.T, TriValue.U, TriValue.F)


class UndeclaredVariable(Exception):
    def __init__(self, name):
        super().__init__(f"Variable `{name}` has no value in the valuation")
        self.name = name


class InvalidIdentifier(ValueError):
    pass


class ExpressionSyntaxError(Exception):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


IDENTIFIER_PATTERN = re.compile(r"[A-Za-z0-9_]+")
RESERVED_NAMES = frozenset(v.name for v in TriValue)


def is_identifier(name):
    return (
        isinstance(name, str)
        and IDENTIFIER_PATTERN.fullmatch(name) is not None
        and name not in RESERVED_NAMES
    )


class Expression:
    __slots__ = ()

    def __and__(self, other):
        return Conjunction((self, other))

    def __or__(self, other):
        return Disjunction((self, other))

    def __invert__(self):
        return Negation(self)

    def __str__(self):
        from .syntax import to_string

        return to_string(self)


@dataclass(frozen=True)
class Constant(Expression):
    value: TriValue


@dataclass(frozen=True)
class Variable(Expression):
    name: str

    def __post_init__(self):
        if not is_identifier(self.name):
            raise InvalidIdentifier(f"`{self.name}` is not a valid variable name")


@dataclass(frozen=True)
class Negation(Expression):
    child: Expression


def _check_children(node):
    if len(node.children) < 2:
        raise ValueError(
            f"{type(node).__name__} needs at least two children, got"
            f" {len(node.children)}"
        )


@dataclass(frozen=True)
class Conjunction(Expression):
    children: Tuple[Expression, ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        _check_children(self)


@dataclass(frozen=True)
class Disjunction(Expression):
    children: Tuple[Expression, ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        _check_children(self)


TRUE = Constant(TriValue.T)
FALSE = Constant(TriValue.F)
UNDECIDED = Constant(TriValue.U)

CONSTANTS = {TriValue.T: TRUE, TriValue.U: UNDECIDED, TriValue.F: FALSE}


def const(value):
    return CONSTANTS[value]


def var(name):
    return Variable(name)


def neg(p):
    return Negation(p)


def conj(*children):
    """
    Conjunction of any number of expressions, the empty conjunction is T and a
    single child is returned as is
    """
    if len(children) == 0:
        return TRUE
    if len(children) == 1:
        return children[0]
    return Conjunction(children)


def disj(*children):
    if len(children) == 0:
        return FALSE
    if len(children) == 1:
        return children[0]
    return Disjunction(children)
