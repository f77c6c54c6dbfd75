from collections import namedtuple

from .. import (
    DEFAULT_MAX_EQUIV_VARS,
    DEFAULT_MAX_ORACLE_ARGS,
    DEFAULT_MAX_SAT_VARS,
)
from ..input_definitions import InvalidInputDefinition, positive_int

COMMANDS = (
    "compile",
    "labelings",
    "grounded",
    "stable",
    "verify",
    "split-solve",
    "compose",
    "influence",
    "arity-search",
    "export",
)

ORDER_CHOICES = ("input", "fvs", "exhaustive")
OUTPUT_FORMATS = ("text", "json")
EXPORT_FORMATS = ("dot", "dimacs", "tgf", "apx", "adfx")

RunConfig = namedtuple(
    "RunConfig",
    [
        "command",
        "input",
        "input_format",
        "order",
        "elide",
        "max_equiv_vars",
        "max_oracle_args",
        "max_sat_vars",
        "output_format",
        "seed",
        "splitter",
        "pair",
        "export",
        "verbose",
        "debug",
    ],
)

RUN_DEFAULTS = dict(
    input_format=None,
    order="input",
    elide=True,
    max_equiv_vars=DEFAULT_MAX_EQUIV_VARS,
    max_oracle_args=DEFAULT_MAX_ORACLE_ARGS,
    max_sat_vars=DEFAULT_MAX_SAT_VARS,
    output_format="text",
    seed=0,
    splitter=None,
    pair=None,
    export="dot",
    verbose=False,
    debug=False,
)


INPUT_REQUIRED_FIELDS = {
    "command": list(COMMANDS),
    # path to a framework file or the name of a bundled one (`argalloc://...`)
    "input": str,
    "input_format": [None, "tgf", "apx", "adfx"],
    "order": [None, *ORDER_CHOICES],
    "elide": [None, bool],
    "max_equiv_vars": [None, positive_int],
    "max_oracle_args": [None, positive_int],
    "max_sat_vars": [None, positive_int],
    "output_format": [None, *OUTPUT_FORMATS],
    "seed": [None, int],
    # without a splitter `split-solve` uses a random two-block partition
    "splitter": [None, dict(requires=dict(command="split-solve"), choices=str)],
    # the influence pair is given as `a,b`
    "pair": dict(requires=dict(command="influence"), choices=str),
    "export": [None, dict(requires=dict(command="export"), choices=list(EXPORT_FORMATS))],
}


def build_config(**kwargs):
    """
    RunConfig with defaults for everything not given (or given as None)
    """
    values = dict(RUN_DEFAULTS)
    values.update({k: v for k, v in kwargs.items() if v is not None})
    config = RunConfig(**values)
    for bound in ("max_equiv_vars", "max_oracle_args", "max_sat_vars"):
        positive_int(getattr(config, bound))
    if config.order not in ORDER_CHOICES:
        raise InvalidInputDefinition(
            f"`{config.order}` isn't one of {', '.join(ORDER_CHOICES)}"
        )
    return config
