"""
hypothesis strategies for three-valued expressions over a handful of variables
"""
import hypothesis.strategies as st

from argalloc.logic import (
    CONSTANTS,
    TRI_VALUES,
    Conjunction,
    Disjunction,
    Negation,
    Variable,
)

VARIABLE_NAMES = ("a", "b", "c", "d", "e", "f")

tri_values = st.sampled_from(TRI_VALUES)

leaves = st.one_of(
    st.sampled_from(VARIABLE_NAMES).map(Variable),
    tri_values.map(lambda v: CONSTANTS[v]),
)


def _extend(children):
    return st.one_of(
        children.map(Negation),
        st.lists(children, min_size=2, max_size=3).map(
            lambda cs: Conjunction(tuple(cs))
        ),
        st.lists(children, min_size=2, max_size=3).map(
            lambda cs: Disjunction(tuple(cs))
        ),
    )


expressions = st.recursive(leaves, _extend, max_leaves=12)

valuations = st.fixed_dictionaries({name: tri_values for name in VARIABLE_NAMES})
