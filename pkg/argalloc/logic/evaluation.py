"""
Evaluation of three-valued expressions, both for a single valuation and
vectorised over the grid of all valuations with numpy
"""
import enum
import logging

import numpy as np

from .. import DEFAULT_MAX_EQUIV_VARS, CapacityError
from . import (
    TRI_VALUES,
    Conjunction,
    Constant,
    Disjunction,
    Negation,
    TriValue,
    UndeclaredVariable,
    Variable,
)

logger = logging.getLogger(__name__)


class Constancy(enum.Enum):
    EQUIV_T = "EquivT"
    EQUIV_F = "EquivF"
    NON_CONSTANT = "NonConstant"


def evaluate(p, valuation):
    """
    Evaluate `p` under `valuation` (a mapping from variable name to TriValue)
    """
    if isinstance(p, Constant):
        return p.value
    elif isinstance(p, Variable):
        try:
            return valuation[p.name]
        except KeyError:
            raise UndeclaredVariable(p.name)
    elif isinstance(p, Negation):
        return ~evaluate(p.child, valuation)
    elif isinstance(p, Conjunction):
        level = min(evaluate(c, valuation).level for c in p.children)
        return TriValue.from_level(level)
    elif isinstance(p, Disjunction):
        level = max(evaluate(c, valuation).level for c in p.children)
        return TriValue.from_level(level)
    raise TypeError(f"Can't evaluate `{p!r}`")


def variables(p):
    if isinstance(p, Constant):
        return frozenset()
    elif isinstance(p, Variable):
        return frozenset([p.name])
    elif isinstance(p, Negation):
        return variables(p.child)
    return frozenset().union(*(variables(c) for c in p.children))


def node_count(p):
    if isinstance(p, (Constant, Variable)):
        return 1
    elif isinstance(p, Negation):
        return 1 + node_count(p.child)
    return 1 + sum(node_count(c) for c in p.children)


def substitute(p, name, q):
    """
    Replace every occurrence of the variable `name` in `p` by `q`
    """
    return substitute_many(p, {name: q})


def substitute_many(p, mapping):
    """
    Simultaneous substitution, variables in the replacement expressions are
    not substituted again
    """
    if isinstance(p, Constant):
        return p
    elif isinstance(p, Variable):
        return mapping.get(p.name, p)
    elif isinstance(p, Negation):
        return Negation(substitute_many(p.child, mapping))
    return type(p)(tuple(substitute_many(c, mapping) for c in p.children))


def valuation_grid(n_variables):
    """
    All 3^n valuations as an (3^n, n) array of levels. Rows are lexicographic
    in the column order with T < U < F in every position
    """
    if n_variables == 0:
        return np.zeros((1, 0), dtype=np.int8)
    indices = np.indices((3,) * n_variables, dtype=np.int8)
    return (2 - indices.reshape(n_variables, -1).T).astype(np.int8)


def evaluate_grid(p, names, grid):
    """
    Evaluate `p` for every row of `grid`, where column `i` holds the level of
    variable `names[i]`. Returns a 1D array of levels
    """
    columns = {name: i for i, name in enumerate(names)}

    def _evaluate(node):
        if isinstance(node, Constant):
            return np.full(grid.shape[0], node.value.level, dtype=np.int8)
        elif isinstance(node, Variable):
            if node.name not in columns:
                raise UndeclaredVariable(node.name)
            return grid[:, columns[node.name]]
        elif isinstance(node, Negation):
            return 2 - _evaluate(node.child)
        elif isinstance(node, Conjunction):
            return np.minimum.reduce([_evaluate(c) for c in node.children])
        elif isinstance(node, Disjunction):
            return np.maximum.reduce([_evaluate(c) for c in node.children])
        raise TypeError(f"Can't evaluate `{node!r}`")

    return np.asarray(_evaluate(p), dtype=np.int8)


def _shared_names(expressions, max_vars):
    names = sorted(frozenset().union(*(variables(p) for p in expressions)))
    if len(names) > max_vars:
        raise CapacityError(
            f"Exhaustive check over {len(names)} variables exceeds the"
            f" configured bound of {max_vars} ({', '.join(names)})"
        )
    return names


def equivalent(p, q, max_vars=DEFAULT_MAX_EQUIV_VARS):
    """
    Decide p ≡ q by evaluating both under all 3^k valuations of their joint
    variables
    """
    if p == q:
        return True
    names = _shared_names([p, q], max_vars=max_vars)
    grid = valuation_grid(len(names))
    return bool(
        np.array_equal(evaluate_grid(p, names, grid), evaluate_grid(q, names, grid))
    )


def refute_randomly(p, q, samples=1000, seed=0):
    """
    Look for a valuation distinguishing `p` and `q` among `samples` random
    valuations. Returns the valuation found, or None when the expressions
    could not be told apart (which does *not* make them equivalent)
    """
    names = sorted(variables(p) | variables(q))
    rng = np.random.default_rng(seed)
    grid = rng.integers(0, 3, size=(samples, len(names))).astype(np.int8)
    differs = evaluate_grid(p, names, grid) != evaluate_grid(q, names, grid)
    if not differs.any():
        return None
    row = grid[np.argmax(differs)]
    return {name: TriValue.from_level(level) for name, level in zip(names, row)}


def valuation_all_undecided(names):
    return {name: TriValue.U for name in names}


def classify_constant(p):
    """
    An expression is equivalent to T (or F) exactly when it already evaluates
    to T (or F) with every variable set to U
    """
    value = evaluate(p, valuation_all_undecided(variables(p)))
    if value == TriValue.T:
        return Constancy.EQUIV_T
    elif value == TriValue.F:
        return Constancy.EQUIV_F
    return Constancy.NON_CONSTANT


ALL_VALUES = frozenset(TRI_VALUES)


def value_range(p):
    """
    Over-approximation of the values `p` can take, computed bottom-up
    """
    if isinstance(p, Constant):
        return frozenset([p.value])
    elif isinstance(p, Variable):
        return ALL_VALUES
    elif isinstance(p, Negation):
        return frozenset(~v for v in value_range(p.child))

    if isinstance(p, Conjunction):

        def op(a, b):
            return a & b

    else:

        def op(a, b):
            return a | b

    child_ranges = [value_range(c) for c in p.children]
    result = child_ranges[0]
    for child_range in child_ranges[1:]:
        result = frozenset(op(a, b) for a in result for b in child_range)
    if _has_complementary_children(p.children):
        # p & !p can't be T and p | !p can't be F
        excluded = TriValue.T if isinstance(p, Conjunction) else TriValue.F
        result = result.difference([excluded])
    return result


def _has_complementary_children(children):
    children = set(children)
    return any(isinstance(c, Negation) and c.child in children for c in children)
