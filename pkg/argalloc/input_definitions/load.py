from pathlib import Path

import yaml

from .. import DATA_TYPE_PLURAL
from . import InvalidInputDefinition, MissingInputDefinition, validate_input
from . import examples as input_examples
from .examples import ARGALLOC_EXAMPLES_PATH_PREFIX


def load_definition(input_name, required_fields, input_type="run"):
    """
    Load and validate the YAML definition `input_name` of `input_type`. Names
    with the `argalloc://`-prefix refer to the definitions bundled with
    argalloc, anything else is a path to a yaml-file. The returned dictionary
    has the validated fields plus `name` and `version` (`unversioned` unless
    given)
    """
    if input_name.startswith(ARGALLOC_EXAMPLES_PATH_PREFIX):
        try:
            input_path = input_examples.get_path(
                input_name=input_name, input_type=input_type
            )
        except input_examples.ExampleDoesNotExist:
            print(
                f"The requested {input_type} ({input_name}) isn't currently"
                f" available in argalloc\n\nThe {DATA_TYPE_PLURAL[input_type]}"
                " currently included are:"
            )
            print()
            input_examples.print_available(input_types=[DATA_TYPE_PLURAL[input_type]])
            raise
    else:
        input_path = Path(input_name)
        if input_path.suffix not in (".yaml", ".yml"):
            raise InvalidInputDefinition(
                f"`{input_name}` should be a yaml-file or the name of a bundled"
                f" {input_type} definition (starting with"
                f" `{ARGALLOC_EXAMPLES_PATH_PREFIX}`, see all available with"
                " `python -m argalloc.input_definitions.examples`)"
            )
        if not input_path.exists():
            raise MissingInputDefinition(
                f"The {input_type} definition `{input_path}` doesn't exist"
            )

    with open(input_path) as fh:
        params = yaml.load(fh, Loader=yaml.FullLoader)
    if not isinstance(params, dict):
        raise InvalidInputDefinition(
            f"The {input_type} definition in `{input_path}` isn't a mapping"
        )

    try:
        validate_input(input_params=params, required_fields=required_fields)
    except InvalidInputDefinition as ex:
        raise InvalidInputDefinition(
            "There was a problem parsing the input-definition stored in"
            f" `{input_path}`: {ex}"
        )
    params["name"] = input_name
    if "version" not in params:
        params["version"] = "unversioned"
    return params
