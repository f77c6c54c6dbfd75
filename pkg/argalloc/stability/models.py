"""
Model enumeration for two-valued formulas. Small variable counts are
enumerated exhaustively with numpy, larger ones with a DPLL search (unit
propagation, branching on the requested variables only) over a structural
CNF of the formula.
"""
import logging
from collections import namedtuple

import numpy as np

from .. import (
    DEFAULT_MAX_BRUTE_FORCE_SAT_VARS,
    DEFAULT_MAX_SAT_VARS,
    CapacityError,
    UsageError,
)
from ..logic import Conjunction, Constant, Disjunction, Negation, TriValue, Variable
from ..logic.evaluation import evaluate_grid, variables

logger = logging.getLogger(__name__)

# clauses of signed 1-based variable indices, `names[i - 1]` is the formula
# variable with index i (gate variables have no name)
CNF = namedtuple("CNF", ["clauses", "names", "n_variables"])


def to_cnf(formula, names=None):
    """
    Equisatisfiable CNF with one gate variable per connective, the models
    projected on the formula variables are preserved
    """
    names = sorted(variables(formula)) if names is None else list(names)
    index = {name: i + 1 for i, name in enumerate(names)}
    clauses = []
    counter = [len(names)]

    def _gate():
        counter[0] += 1
        return counter[0]

    def _literal(node):
        if isinstance(node, Variable):
            return index[node.name]
        elif isinstance(node, Negation):
            return -_literal(node.child)
        elif isinstance(node, Constant):
            if node.value == TriValue.U:
                raise UsageError("Two-valued formulas can't contain U")
            g = _gate()
            clauses.append([g] if node.value == TriValue.T else [-g])
            return g

        literals = [_literal(c) for c in node.children]
        g = _gate()
        if isinstance(node, Conjunction):
            clauses.extend([-g, lit] for lit in literals)
            clauses.append([g] + [-lit for lit in literals])
        elif isinstance(node, Disjunction):
            clauses.extend([g, -lit] for lit in literals)
            clauses.append([-g] + literals)
        return g

    clauses.append([_literal(formula)])
    return CNF(clauses=clauses, names=names, n_variables=counter[0])


def to_dimacs(formula, names=None):
    cnf = to_cnf(formula, names=names)
    lines = [f"c {i} {name}" for i, name in enumerate(cnf.names, start=1)]
    lines.append(f"p cnf {cnf.n_variables} {len(cnf.clauses)}")
    lines += [" ".join(str(lit) for lit in clause + [0]) for clause in cnf.clauses]
    return "\n".join(lines) + "\n"


def _force_literal(clauses, lit):
    # satisfied clauses disappear, the opposite literal is removed elsewhere
    return [[x for x in clause if x != -lit] for clause in clauses if lit not in clause]


def _unit_propagation(clauses, assigned):
    while True:
        if any(len(clause) == 0 for clause in clauses):
            return None, assigned
        unit = next((clause[0] for clause in clauses if len(clause) == 1), None)
        if unit is None:
            return clauses, assigned
        clauses = _force_literal(clauses, unit)
        assigned = assigned | {unit}


def _satisfiable(clauses):
    clauses, _ = _unit_propagation(clauses, frozenset())
    if clauses is None:
        return False
    if len(clauses) == 0:
        return True
    v = min(abs(lit) for clause in clauses for lit in clause)
    return _satisfiable(_force_literal(clauses, v)) or _satisfiable(
        _force_literal(clauses, -v)
    )


def _all_models(clauses, projected, assigned):
    clauses, assigned = _unit_propagation(clauses, assigned)
    if clauses is None:
        return
    free = [v for v in projected if v not in assigned and -v not in assigned]
    if len(free) == 0:
        if _satisfiable(clauses):
            yield assigned
        return
    v = free[0]
    for lit in (v, -v):
        yield from _all_models(_force_literal(clauses, lit), projected, assigned | {lit})


def _models_by_search(formula, names):
    cnf = to_cnf(formula, names=names)
    projected = list(range(1, len(names) + 1))
    for assigned in _all_models(cnf.clauses, projected, frozenset()):
        yield {name: (i + 1) in assigned for i, name in enumerate(names)}


def _models_by_enumeration(formula, names):
    k = len(names)
    if k == 0:
        grid = np.zeros((1, 0), dtype=np.int8)
    else:
        indices = np.indices((2,) * k, dtype=np.int8).reshape(k, -1).T
        # index 0 is true so that true comes first
        grid = (2 * (1 - indices)).astype(np.int8)
    satisfied = evaluate_grid(formula, names, grid) == TriValue.T.level
    for row in grid[satisfied]:
        yield {name: bool(level) for name, level in zip(names, row)}


def enumerate_models(
    formula,
    names=None,
    max_brute_force=DEFAULT_MAX_BRUTE_FORCE_SAT_VARS,
    max_vars=DEFAULT_MAX_SAT_VARS,
):
    """
    All assignments of `names` (default: the formula variables) satisfying
    `formula`, lexicographic with true before false
    """
    names = sorted(variables(formula)) if names is None else list(names)
    missing = variables(formula).difference(names)
    if missing:
        raise UsageError(
            f"The formula mentions {', '.join(sorted(missing))}, which aren't"
            " being enumerated"
        )
    if len(names) <= max_brute_force:
        return list(_models_by_enumeration(formula, names))
    if len(names) > max_vars:
        raise CapacityError(
            f"Enumerating the models over {len(names)} variables exceeds the"
            f" configured bound of {max_vars}"
        )
    logger.info(f"Searching models over {len(names)} variables")
    return list(_models_by_search(formula, names))
