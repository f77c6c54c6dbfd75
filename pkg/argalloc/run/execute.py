"""
The `python -m argalloc` command line: one command per invocation on one
framework, with the result printed as text or as a single JSON object
"""
import json
import logging
import sys
import time
import warnings

import numpy as np

from .. import CapacityError, UsageError
from ..blocks import InvalidSplitter
from ..blocks.local import compose_splitter, pairwise_influence
from ..blocks.splitter import splitter_from_partition
from ..formats import InvalidInputFile
from ..formats.documents import (
    allocator_to_json,
    labeling_to_json,
    parse_splitter,
    splitter_to_json,
)
from ..formats.frameworks import (
    format_adfx,
    format_apx,
    format_dot,
    format_tgf,
    load_input,
)
from ..framework import (
    AmbiguousGroundedLabeling,
    ArgumentationFramework,
    InvalidFramework,
)
from ..framework.allocators import (
    allocator_to_labeling,
    instantiate,
    instantiation_set,
    is_complete_allocator,
)
from ..framework.generate import random_order, random_partition
from ..framework.labelings import (
    as_network,
    enumerate_complete_labelings,
    grounded_labeling,
)
from ..framework.legacy import build_general_legacy
from ..input_definitions import InvalidInputDefinition
from ..input_definitions.examples import ExampleDoesNotExist, resolve_path
from ..logic import ExpressionSyntaxError, InvalidIdentifier
from ..logic.evaluation import node_count, valuation_all_undecided
from ..logic.syntax import to_string
from ..solver.ordering import order_strategy
from ..solver.solve import arity, solve
from ..stability.encoding import stable_condition
from ..stability.extract import enumerate_stable
from ..stability.models import to_dimacs
from ..utils import optional_debugging
from . import COMMANDS, EXPORT_FORMATS, ORDER_CHOICES, OUTPUT_FORMATS, build_config
from .load import load_run_definition

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_CAPACITY = 3
EXIT_VERIFICATION_FAILED = 4

INVALID_INPUT_ERRORS = (
    InvalidInputFile,
    InvalidInputDefinition,
    ExampleDoesNotExist,
    FileNotFoundError,
    UsageError,
    InvalidFramework,
    InvalidSplitter,
    AmbiguousGroundedLabeling,
    ExpressionSyntaxError,
    InvalidIdentifier,
)

# random orders tried by `arity-search` next to the named strategies
RANDOM_ORDER_SAMPLES = 20


class VerificationFailed(Exception):
    def __init__(self, result, stats):
        super().__init__("The compiled allocator isn't general")
        self.result = result
        self.stats = stats


def _allocator_stats(allocator):
    node_counts = {a: node_count(p) for a, p in allocator.items()}
    return dict(
        arity=arity(allocator),
        node_counts=node_counts,
        total_nodes=sum(node_counts.values()),
    )


def _compile(config, framework):
    order = order_strategy(framework, kind=config.order, progress=config.verbose)
    return solve(framework, order=order, elide=config.elide), order


def _labelings_result(labelings):
    return dict(count=len(labelings), labelings=[labeling_to_json(L) for L in labelings])


def run_compile(config, framework):
    allocator, order = _compile(config, framework)
    result = dict(
        order=order, allocator=allocator_to_json(allocator), arity=arity(allocator)
    )
    return result, _allocator_stats(allocator)


def run_labelings(config, framework):
    labelings = enumerate_complete_labelings(
        framework, max_arguments=config.max_oracle_args
    )
    return _labelings_result(labelings), {}


def run_grounded(config, framework):
    grounded = grounded_labeling(framework, max_arguments=config.max_oracle_args)
    allocator, _ = _compile(config, framework)
    valuation = valuation_all_undecided(allocator.allocation_variables)
    at_undecided = allocator_to_labeling(instantiate(allocator, valuation))
    matches = at_undecided == grounded
    if not matches:
        warnings.warn(
            "Instantiating the compiled allocator with every variable undecided"
            f" gives {dict(labeling_to_json(at_undecided))} rather than the"
            f" grounded labeling {dict(labeling_to_json(grounded))}"
        )
    result = dict(labeling=labeling_to_json(grounded), allocator_agrees=matches)
    return result, _allocator_stats(allocator)


def run_stable(config, framework):
    allocator, _ = _compile(config, framework)
    labelings = enumerate_stable(framework, allocator, max_vars=config.max_sat_vars)
    return _labelings_result(labelings), _allocator_stats(allocator)


def run_verify(config, framework):
    """
    Compares the instantiations of the compiled allocator with the complete
    labelings found by brute force
    """
    allocator, _ = _compile(config, framework)
    complete = is_complete_allocator(
        framework, allocator, max_vars=config.max_equiv_vars
    )
    labelings = frozenset(
        enumerate_complete_labelings(framework, max_arguments=config.max_oracle_args)
    )
    instantiations = instantiation_set(allocator, max_vars=config.max_equiv_vars)
    result = dict(
        complete=complete,
        general=complete and instantiations == labelings,
        labelings=len(labelings),
        instantiations=len(instantiations),
    )
    stats = _allocator_stats(allocator)
    if not result["general"]:
        raise VerificationFailed(result, stats)
    return result, stats


def _splitter(config, framework):
    if config.splitter is not None:
        path = resolve_path(config.splitter, "splitter")
        return parse_splitter(path.read_text(), framework)
    rng = np.random.default_rng(config.seed)
    parts = random_partition(rng, list(framework.arguments), 2)
    return splitter_from_partition(framework, parts)


def run_split_solve(config, framework):
    splitter = _splitter(config, framework)
    allocator = compose_splitter(framework, splitter, elide=config.elide)
    result = dict(
        splitter=splitter_to_json(splitter),
        allocator=allocator_to_json(allocator),
        arity=arity(allocator),
    )
    return result, _allocator_stats(allocator)


def run_compose(config, framework):
    allocator = build_general_legacy(framework, max_arguments=config.max_oracle_args)
    result = dict(allocator=allocator_to_json(allocator), arity=arity(allocator))
    return result, _allocator_stats(allocator)


def _parse_pair(pair):
    if pair is None or pair.count(",") != 1:
        raise UsageError(f"The influence pair should be given as `a,b`, got `{pair}`")
    return tuple(name.strip() for name in pair.split(","))


def run_influence(config, framework):
    a, b = _parse_pair(config.pair)
    influence_a, influence_b = pairwise_influence(
        framework, a, b, elide=config.elide
    )
    result = {a: to_string(influence_a), b: to_string(influence_b)}
    stats = dict(node_counts={a: node_count(influence_a), b: node_count(influence_b)})
    return result, stats


def _order_arity(framework, order, elide):
    return dict(order=list(order), arity=arity(solve(framework, order, elide=elide)))


def run_arity_search(config, framework):
    strategies = {}
    for kind in ORDER_CHOICES:
        try:
            order = order_strategy(framework, kind=kind, progress=config.verbose)
        except CapacityError as ex:
            strategies[kind] = dict(skipped=str(ex))
            continue
        strategies[kind] = _order_arity(framework, order, config.elide)

    rng = np.random.default_rng(config.seed)
    sampled = [
        _order_arity(framework, random_order(rng, list(framework.arguments)), config.elide)
        for _ in range(RANDOM_ORDER_SAMPLES)
    ]
    strategies["random"] = min(sampled, key=lambda s: s["arity"])
    return dict(strategies=strategies), {}


def run_export(config, framework):
    kind = config.export
    if kind == "dot":
        text = format_dot(framework)
    elif kind == "dimacs":
        allocator, _ = _compile(config, framework)
        text = to_dimacs(
            stable_condition(allocator), names=sorted(allocator.allocation_variables)
        )
    elif kind == "adfx":
        text = format_adfx(as_network(framework))
    elif not isinstance(framework, ArgumentationFramework):
        raise UsageError(f"Networks with acceptance conditions can't be saved as {kind}")
    elif kind == "tgf":
        text = format_tgf(framework)
    else:
        text = format_apx(framework)
    return dict(format=kind, text=text), {}


COMMAND_HANDLERS = {
    "compile": run_compile,
    "labelings": run_labelings,
    "grounded": run_grounded,
    "stable": run_stable,
    "verify": run_verify,
    "split-solve": run_split_solve,
    "compose": run_compose,
    "influence": run_influence,
    "arity-search": run_arity_search,
    "export": run_export,
}


def _error(ex, exit_code):
    return dict(type=type(ex).__name__, message=str(ex), exit_code=exit_code)


def run(config):
    """
    Run the command of `config`, returning the exit status and the document
    describing the result (or the error)
    """
    document = dict(command=config.command, input=str(config.input))
    t_start = time.perf_counter()
    try:
        path = resolve_path(config.input, "framework")
        framework = load_input(path, input_format=config.input_format).framework
        result, stats = COMMAND_HANDLERS[config.command](config, framework)
    except VerificationFailed as ex:
        document.update(result=ex.result, stats=ex.stats)
        document["error"] = _error(ex, EXIT_VERIFICATION_FAILED)
        return EXIT_VERIFICATION_FAILED, document
    except CapacityError as ex:
        if config.debug:
            raise
        document["error"] = _error(ex, EXIT_CAPACITY)
        return EXIT_CAPACITY, document
    except INVALID_INPUT_ERRORS as ex:
        if config.debug:
            raise
        document["error"] = _error(ex, EXIT_INVALID_INPUT)
        return EXIT_INVALID_INPUT, document

    stats["wall_time"] = time.perf_counter() - t_start
    document.update(result=result, stats=stats)
    return EXIT_OK, document


def _format_labeling(labeling):
    return " ".join(f"{a}={label}" for a, label in labeling.items())


def _format_allocator(allocator):
    return [
        f"{a}: {p}" for a, p in allocator.items() if a != "allocation_variables"
    ]


def format_text(document):
    """
    Human readable version of the document produced by `run`
    """
    if "error" in document and "result" not in document:
        return f"error: {document['error']['message']}"

    command, result = document["command"], document["result"]
    lines = []
    if command in ("compile", "split-solve", "compose"):
        lines += _format_allocator(result["allocator"])
        lines.append(f"arity: {result['arity']}")
    elif command in ("labelings", "stable"):
        lines.append(f"{result['count']} labelings")
        lines += [_format_labeling(L) for L in result["labelings"]]
    elif command == "grounded":
        lines.append(_format_labeling(result["labeling"]))
        lines.append(f"allocator agrees: {json.dumps(result['allocator_agrees'])}")
    elif command == "verify":
        lines.append(
            f"complete: {json.dumps(result['complete'])},"
            f" general: {json.dumps(result['general'])},"
            f" labelings: {result['labelings']}"
        )
    elif command == "influence":
        lines += [f"{a}: {p}" for a, p in result.items()]
    elif command == "arity-search":
        for kind, found in result["strategies"].items():
            if "skipped" in found:
                lines.append(f"{kind}: skipped ({found['skipped']})")
            else:
                lines.append(f"{kind}: {found['arity']} ({' '.join(found['order'])})")
    elif command == "export":
        return result["text"].rstrip("\n")

    if "error" in document:
        lines.append(f"error: {document['error']['message']}")
    return "\n".join(lines)


def emit(config, document):
    if config.output_format == "json":
        print(json.dumps(document, indent=2))
    elif "error" in document and "result" not in document:
        print(format_text(document), file=sys.stderr)
    else:
        print(format_text(document))


def _make_cli_argparser():
    import argparse

    argparser = argparse.ArgumentParser(
        prog="python -m argalloc",
        description="Compile argumentation frameworks into general allocators",
    )
    argparser.add_argument("command", nargs="?", choices=COMMANDS)
    argparser.add_argument(
        "input", nargs="?", help="framework file or `argalloc://<name>`"
    )
    argparser.add_argument(
        "--definition", help="yaml run definition (or `argalloc://<name>`)"
    )
    argparser.add_argument("--input-format", choices=("tgf", "apx", "adfx"))
    argparser.add_argument("--order", choices=ORDER_CHOICES)
    argparser.add_argument(
        "--no-elide", dest="elide", action="store_const", const=False, default=None
    )
    argparser.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS)
    argparser.add_argument("--max-equiv-vars", type=int)
    argparser.add_argument("--max-oracle-args", type=int)
    argparser.add_argument("--max-sat-vars", type=int)
    argparser.add_argument("--seed", type=int)
    argparser.add_argument("--splitter", help="blocks-json splitter file")
    argparser.add_argument("--pair", help="the two arguments `a,b` for `influence`")
    argparser.add_argument("--export", choices=EXPORT_FORMATS)
    argparser.add_argument(
        "-v", "--verbose", action="store_const", const=True, default=None
    )
    argparser.add_argument("--debug", action="store_const", const=True, default=None)
    return argparser


def _config_from_args(argparser, args):
    overrides = {k: v for k, v in vars(args).items() if k != "definition"}
    if args.definition is not None:
        return load_run_definition(args.definition, overrides=overrides)
    if args.command is None or args.input is None:
        argparser.error("a command and an input are required without --definition")
    return build_config(**overrides)


def cli(args=None):
    """
    Function called with arguments passed from the command line. When
    `args==None` they will be taken from `sys.argv`. Returns the exit status
    """
    argparser = _make_cli_argparser()
    args = argparser.parse_args(args=args)
    try:
        config = _config_from_args(argparser, args)
    except (InvalidInputDefinition, ExampleDoesNotExist) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    if config.verbose:
        logging.basicConfig(level=logging.DEBUG)

    with optional_debugging(config.debug):
        exit_code, document = run(config)
    emit(config, document)
    return exit_code
