import pytest
from expression_strategies import VARIABLE_NAMES, expressions
from hypothesis import given, settings
from hypothesis import strategies as st

from argalloc.logic import FALSE, TRUE, var
from argalloc.logic.evaluation import equivalent, variables
from argalloc.logic.syntax import parse_expression
from argalloc.solver import QuadDecomposition
from argalloc.solver.decompose import decompose, recompose


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x", (TRUE, FALSE, FALSE, FALSE)),
        ("!x", (FALSE, TRUE, FALSE, FALSE)),
        ("x & !x", (FALSE, FALSE, TRUE, FALSE)),
        ("a", (FALSE, FALSE, FALSE, var("a"))),
        ("!x & a", (FALSE, var("a"), FALSE, FALSE)),
        ("x | a", (TRUE, FALSE, FALSE, var("a"))),
    ],
)
def test_decompose_examples(text, expected):
    assert decompose(parse_expression(text), "x") == QuadDecomposition(*expected)


def test_decompose_attack_condition():
    quad = decompose(parse_expression("!1 & !2"), "1")
    assert quad.N == parse_expression("!2")
    assert (quad.P, quad.C, quad.M) == (FALSE, FALSE, FALSE)


@settings(max_examples=300, deadline=None)
@given(expressions, st.sampled_from(VARIABLE_NAMES), st.booleans())
def test_recompose_is_equivalent(p, name, simplify_components):
    quad = decompose(p, name, simplify_components=simplify_components)
    assert all(name not in variables(component) for component in quad)
    assert equivalent(recompose(quad, name), p)


@settings(max_examples=300, deadline=None)
@given(expressions, st.sampled_from(VARIABLE_NAMES))
def test_unsimplified_components_keep_every_other_variable(p, name):
    quad = decompose(p, name, simplify_components=False)
    mentioned = set().union(*(variables(component) for component in quad))
    assert mentioned == variables(p) - {name}


def test_simplified_components_can_drop_variables():
    # `b` is absorbed by `a` in `a | a & b`
    p = parse_expression("!(a | a & b) & !(x | d)")
    raw = decompose(p, "x", simplify_components=False)
    simplified = decompose(p, "x")
    assert set().union(*(variables(c) for c in raw)) == {"a", "b", "d"}
    assert set().union(*(variables(c) for c in simplified)) == {"a", "d"}
