import itertools

import pytest
from make_test_corpus import (
    NAMED_FRAMEWORKS,
    SUPPORT_NETWORKS,
    allocator,
    equivalent_up_to_renaming,
)

from argalloc import NamespaceCollision, UsageError
from argalloc.blocks import Block, InvalidSplitter, Splitter
from argalloc.blocks.local import (
    compose_allocators,
    compose_splitter,
    constant_local_allocators,
    is_complete_local_allocator,
    is_general_local_allocator,
    pairwise_influence,
    solve_block,
)
from argalloc.blocks.splitter import (
    check_splitter,
    compose_blocks,
    find_splitter_violations,
    splitter_from_partition,
    validate_splitter,
)
from argalloc.framework import InvalidFramework
from argalloc.framework.allocators import is_general
from argalloc.framework.labelings import enumerate_complete_labelings
from argalloc.formats.documents import parse_splitter
from argalloc.input_definitions.examples import attempt_read
from argalloc.logic import TRI_VALUES, disj, var
from argalloc.logic.evaluation import equivalent, evaluate, variables
from argalloc.logic.syntax import parse_expression
from argalloc.solver import FreshSupply
from argalloc.solver.solve import arity, solve

# three arguments, two of them attacking each other, and one outside argument
# `a` attacking the second
ATTACKED_PAIR = Block.from_attacks(
    0,
    ["1", "2", "3"],
    ["a"],
    [("1", "2"), ("2", "1"), ("a", "2"), ("1", "3"), ("2", "3")],
)


def bundled_splitter(name, framework):
    return parse_splitter(attempt_read(f"argalloc://{name}", "splitter"), framework)


def test_block_conditions_from_attacks():
    assert str(ATTACKED_PAIR.condition("2")) == "!1 & !a"
    assert ATTACKED_PAIR.arguments == ("1", "2", "3", "a")
    assert ATTACKED_PAIR.referenced() == {"1", "2", "a"}


def test_block_conditions_are_read_only():
    with pytest.raises(TypeError):
        ATTACKED_PAIR.conditions["3"] = var("a")
    assert str(ATTACKED_PAIR.condition("3")) == "!1 & !2"


def test_block_rejects_overlap():
    with pytest.raises(InvalidFramework):
        Block(0, ["1"], ["1"])


def test_solve_attacked_pair():
    local = solve_block(ATTACKED_PAIR)
    assert str(local["2"]) == "_b0_v0 & !a"
    assert local["a"] == var("a")
    assert is_complete_local_allocator(ATTACKED_PAIR, local)
    assert is_general_local_allocator(ATTACKED_PAIR, local)


def test_constant_local_allocators():
    # one labeling with `a` in, two with `a` undecided, three with `a` out
    assert len(constant_local_allocators(ATTACKED_PAIR)) == 6


def test_complete_but_not_general_local_allocator():
    local = allocator({"a": "a", 1: "a", 2: "!a", 3: "a & !a"})
    assert is_complete_local_allocator(ATTACKED_PAIR, local)
    assert not is_general_local_allocator(ATTACKED_PAIR, local)


def test_variable_arguments_must_stay_free():
    local = allocator({"a": "T", 1: "T", 2: "F", 3: "F"})
    assert not is_complete_local_allocator(ATTACKED_PAIR, local)


def test_reserved_names_in_blocks():
    block = Block(0, ["1"], ["_v0"], attacks=[("_v0", "1")])
    with pytest.raises(NamespaceCollision):
        solve_block(block)


def test_block_without_variables_is_solved_like_the_framework():
    f = NAMED_FRAMEWORKS["mutual_attack_chain"]
    (block,) = splitter_from_partition(f, [f.arguments]).blocks
    assert block.variable == ()
    local = solve_block(block)
    assert local.allocation_variables == {"_b0_v0"}
    assert equivalent_up_to_renaming(local, solve(f))


def test_bundled_splitter_is_valid():
    f = NAMED_FRAMEWORKS["two_mutual_pairs"]
    splitter = bundled_splitter("two_mutual_pairs_three_blocks", f)
    assert [b.block_id for b in splitter.blocks] == [0, 1, 2]
    assert splitter.blocks[2].variable == ("2", "4")
    assert validate_splitter(f, splitter)
    check_splitter(f, splitter)


def test_splitter_violations():
    f = NAMED_FRAMEWORKS["two_mutual_pairs"]
    valid = bundled_splitter("two_mutual_pairs_three_blocks", f)

    missing_block = Splitter(valid.blocks[:2])
    violations = find_splitter_violations(f, missing_block)
    assert any("aren't actual in any block" in v for v in violations)
    assert any("isn't part of any block" in v for v in violations)

    doubled = Splitter(valid.blocks + (Block.from_attacks(3, ["5"], [], []),))
    assert any("actual in both" in v for v in find_splitter_violations(f, doubled))

    # the attack from 2 can't be seen without 2 as a variable argument
    hidden = Block.from_attacks(2, ["5"], ["4"], [("2", "5"), ("4", "5")])
    broken = Splitter(valid.blocks[:2] + (hidden,))
    assert not validate_splitter(f, broken)
    with pytest.raises(InvalidSplitter):
        check_splitter(f, broken)


def test_invalid_splitter_is_a_usage_error():
    assert issubclass(InvalidSplitter, UsageError)


def test_splitter_from_partition():
    f = NAMED_FRAMEWORKS["chain"]
    splitter = bundled_splitter("chain_halves", f)
    first, second = splitter.blocks
    assert first.actual == ("a", "b")
    assert second.actual == ("c", "d", "e")
    assert second.variable == ("b",)
    assert validate_splitter(f, splitter)


def test_splitter_from_partition_of_a_network():
    network = SUPPORT_NETWORKS["attack_and_support"]
    splitter = splitter_from_partition(network, [["a"], ["b", "c"]])
    assert splitter.blocks[0].variable == ("b", "c")
    assert splitter.blocks[0].attacks is None
    assert validate_splitter(network, splitter)
    assert is_general(network, compose_splitter(network, splitter))


def test_compose_blocks():
    f = NAMED_FRAMEWORKS["chain"]
    first, second = splitter_from_partition(f, [["a", "b"], ["c", "d", "e"]]).blocks
    composed = compose_blocks(first, second)
    assert composed.block_id == "0_1"
    assert composed.actual == ("a", "b", "c", "d", "e")
    assert composed.variable == ()
    with pytest.raises(UsageError):
        compose_blocks(first, first)


@pytest.mark.parametrize(
    "name, splitter_name",
    [
        ("two_mutual_pairs", "two_mutual_pairs_three_blocks"),
        ("isomorphic_halves", "isomorphic_halves_two_blocks"),
        ("chain", "chain_halves"),
    ],
)
def test_compose_splitter_is_general(name, splitter_name):
    f = NAMED_FRAMEWORKS[name]
    result = compose_splitter(f, bundled_splitter(splitter_name, f))
    assert list(result) == list(f.arguments)
    assert is_general(f, result)


def test_compose_splitter_two_mutual_pairs():
    f = NAMED_FRAMEWORKS["two_mutual_pairs"]
    result = compose_splitter(f, bundled_splitter("two_mutual_pairs_three_blocks", f))
    assert arity(result) == 2
    assert result.allocation_variables == {"_b0_v0", "_b1_v0"}
    assert equivalent(result["2"], var("_b0_v0"))


@pytest.mark.parametrize("elide", [True, False])
def test_compose_splitter_on_partitions(elide):
    f = NAMED_FRAMEWORKS["five_labelings"]
    splitter = splitter_from_partition(f, [["1", "2"], ["3"], ["4", "5"]])
    assert is_general(f, compose_splitter(f, splitter, elide=elide))


def test_compose_allocators_rejects_shared_variables():
    f = NAMED_FRAMEWORKS["chain"]
    first, second = splitter_from_partition(f, [["a", "b"], ["c", "d", "e"]]).blocks
    first_allocator = allocator({"a": "_v0", "b": "!_v0"})
    second_allocator = allocator({"b": "b", "c": "!b & _v0", "d": "!c", "e": "!d"})
    with pytest.raises(UsageError):
        compose_allocators(first, first_allocator, second, second_allocator)


def test_pairwise_influence_of_independent_pairs():
    f = NAMED_FRAMEWORKS["two_mutual_pairs"]
    supply = FreshSupply.for_block("pair")
    of_2, of_4 = pairwise_influence(f, "2", "4", supply=supply)
    assert supply.drawn == ["_bpair_v0", "_bpair_v1"]
    assert of_2 == var("_bpair_v0")
    assert of_4 == var("_bpair_v1")


def test_pairwise_influence_through_a_hub():
    f = NAMED_FRAMEWORKS["hub_mutual"]
    of_2, of_3 = pairwise_influence(f, "2", "3")
    assert "2" not in variables(of_2)
    assert "3" not in variables(of_3)
    assert equivalent(of_2, disj(var("3"), var("_bpair_v0")))
    assert equivalent(of_3, disj(var("2"), var("_bpair_v1")))


def test_pairwise_influence_errors():
    f = NAMED_FRAMEWORKS["hub_mutual"]
    with pytest.raises(UsageError):
        pairwise_influence(f, "2", "2")
    with pytest.raises(UsageError):
        pairwise_influence(f, "2", "9")


def test_solve_attacked_pair_up_to_renaming():
    local = solve_block(ATTACKED_PAIR)
    expected = allocator({"a": "a", 1: "a | b", 2: "!a & !b", 3: "(a | b) & !a & !b"})
    assert equivalent_up_to_renaming(local, expected)


# `a` and `b` attacking each other, the outside argument of ATTACKED_PAIR
OUTSIDE_PAIR = Block.from_attacks(1, ["a", "b"], [], [("a", "b"), ("b", "a")])


def test_composing_complete_local_allocators_is_complete():
    first = allocator({"a": "a", 1: "a", 2: "!a", 3: "a & !a"})
    second = allocator({"a": "y", "b": "!y"})
    assert is_complete_local_allocator(ATTACKED_PAIR, first)
    assert is_complete_local_allocator(OUTSIDE_PAIR, second)

    block, composed = compose_allocators(ATTACKED_PAIR, first, OUTSIDE_PAIR, second)
    assert block.variable == ()
    assert equivalent(composed["2"], parse_expression("!y"))
    assert is_complete_local_allocator(block, composed)
    assert not is_general_local_allocator(block, composed)


@pytest.mark.parametrize(
    "first, second",
    [
        (ATTACKED_PAIR, OUTSIDE_PAIR),
        tuple(
            splitter_from_partition(
                NAMED_FRAMEWORKS["chain"], [["a", "b"], ["c", "d", "e"]]
            ).blocks
        ),
        tuple(
            splitter_from_partition(
                NAMED_FRAMEWORKS["five_labelings"], [["1", "2", "3"], ["4", "5"]]
            ).blocks
        ),
    ],
)
def test_constant_local_allocators_of_composed_blocks(first, second):
    composed = compose_blocks(first, second)
    first_constants = set(constant_local_allocators(first))
    second_constants = set(constant_local_allocators(second))
    for labeling in constant_local_allocators(composed):
        assert labeling.restrict(first.arguments) in first_constants
        assert labeling.restrict(second.arguments) in second_constants


@pytest.mark.parametrize(
    "name, splitter_name",
    [
        ("two_mutual_pairs", "two_mutual_pairs_three_blocks"),
        ("isomorphic_halves", "isomorphic_halves_two_blocks"),
    ],
)
def test_blocks_share_no_allocation_variables(name, splitter_name):
    f = NAMED_FRAMEWORKS[name]
    blocks = bundled_splitter(splitter_name, f).blocks
    seen = set()
    for block in blocks:
        local = solve_block(block)
        own = local.allocation_variables - set(block.variable)
        assert seen.isdisjoint(own)
        seen |= own


def test_pairwise_influence_matches_the_labelings():
    f = NAMED_FRAMEWORKS["mutual_attack_chain"]
    of_1, of_2 = pairwise_influence(f, "1", "2")
    assert equivalent(of_1, parse_expression("!2"))
    assert equivalent(of_2, parse_expression("!1"))

    joint = {
        (v1, v2)
        for v1, v2 in itertools.product(TRI_VALUES, repeat=2)
        if evaluate(of_1, {"2": v2}) == v1 and evaluate(of_2, {"1": v1}) == v2
    }
    expected = {
        (L["1"].truth_value, L["2"].truth_value)
        for L in enumerate_complete_labelings(f)
    }
    assert joint == expected
