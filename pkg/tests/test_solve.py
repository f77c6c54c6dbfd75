import pytest
from make_test_corpus import NAMED_FRAMEWORKS, allocator, equivalent_up_to_renaming

from argalloc import UsageError
from argalloc.framework.allocators import instantiation_set, is_general
from argalloc.framework.labelings import enumerate_complete_labelings
from argalloc.logic import UNDECIDED
from argalloc.logic.evaluation import equivalent
from argalloc.solver import FreshSupply
from argalloc.solver.solve import arity, check_order, solve


def test_mutual_attack_chain():
    f = NAMED_FRAMEWORKS["mutual_attack_chain"]
    result = solve(f)
    expected = allocator({1: "!_v0", 2: "_v0", 3: "_v0 & !_v0", 4: "_v0 | !_v0"})
    assert all(equivalent(result[a], expected[a]) for a in f.arguments)
    assert arity(result) == 1
    assert equivalent_up_to_renaming(
        result, allocator({1: "!a", 2: "a", 3: "a & !a", 4: "a | !a"})
    )
    assert equivalent_up_to_renaming(
        result, allocator({1: "a", 2: "!a", 3: "a & !a", 4: "a | !a"})
    )
    assert instantiation_set(result) == set(enumerate_complete_labelings(f))


def test_two_mutual_pairs():
    f = NAMED_FRAMEWORKS["two_mutual_pairs"]
    result = solve(f)
    expected = allocator(
        {1: "!_v0", 2: "_v0", 3: "!_v1", 4: "_v1", 5: "!_v0 & !_v1"}
    )
    assert all(equivalent(result[a], expected[a]) for a in f.arguments)
    assert arity(result) == 2
    assert len(instantiation_set(result)) == 9
    assert equivalent_up_to_renaming(
        result, allocator({1: "a", 2: "!a", 3: "b", 4: "!b", 5: "a & b"})
    )


@pytest.mark.parametrize(
    "order, expected_arity",
    [(["1", "2", "3"], 2), (["2", "3", "1"], 1)],
)
def test_hub_arity_depends_on_the_order(order, expected_arity):
    f = NAMED_FRAMEWORKS["hub_mutual"]
    result = solve(f, order=order)
    assert arity(result) == expected_arity
    assert is_general(f, result)


def test_hub_orders_reach_the_same_labelings():
    f = NAMED_FRAMEWORKS["hub_mutual"]
    first = solve(f, order=["1", "2", "3"])
    # E(1) ≡ !(x | y) isn't a signed renaming of the usual !x | y, the two
    # allocators instantiate the same labelings
    printed = allocator({1: "!x | y", 2: "x & !y", 3: "x & !y"})
    assert equivalent_up_to_renaming(
        first, allocator({1: "!x & !y", 2: "x | y", 3: "x | y"})
    )
    assert instantiation_set(first) == instantiation_set(printed)

    second = solve(f, order=["2", "3", "1"])
    assert equivalent_up_to_renaming(second, allocator({1: "x", 2: "!x", 3: "!x"}))


def test_three_cycle_is_undecided():
    f = NAMED_FRAMEWORKS["three_cycle"]
    result = solve(f)
    assert all(p == UNDECIDED for p in result.values())
    assert arity(result) == 0


def test_without_elision_variables_cancel_out():
    f = NAMED_FRAMEWORKS["three_cycle"]
    supply = FreshSupply()
    result = solve(f, supply=supply, elide=False)
    assert arity(result) == 0
    assert len(supply.drawn) > 0
    assert is_general(f, result)


def test_unique_labeling_gives_constants():
    f = NAMED_FRAMEWORKS["chain"]
    result = solve(f)
    assert arity(result) == 0
    assert [str(result[a]) for a in f.arguments] == ["T", "F", "T", "F", "T"]


@pytest.mark.parametrize("name", list(NAMED_FRAMEWORKS))
@pytest.mark.parametrize("elide", [True, False])
def test_solved_allocators_are_general(name, elide):
    f = NAMED_FRAMEWORKS[name]
    assert is_general(f, solve(f, elide=elide))


def test_arity_is_bounded_by_the_order_length():
    f = NAMED_FRAMEWORKS["isomorphic_halves"]
    supply = FreshSupply()
    result = solve(f, supply=supply)
    assert arity(result) <= len(supply.drawn) <= len(f.arguments)


def test_fresh_names_avoid_reserved_ones():
    f = NAMED_FRAMEWORKS["mutual_attack_chain"]
    supply = FreshSupply(reserved=["_v0"])
    result = solve(f, supply=supply)
    assert supply.drawn == ["_v1"]
    assert result.allocation_variables == {"_v1"}


def test_order_must_be_a_permutation():
    f = NAMED_FRAMEWORKS["mutual_attack_chain"]
    with pytest.raises(UsageError):
        solve(f, order=["1", "2"])
    with pytest.raises(UsageError):
        check_order(f, ["1", "2", "3", "3"])
    check_order(f, ["4", "3", "2", "1"])
