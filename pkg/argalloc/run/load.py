from ..input_definitions.load import load_definition
from . import INPUT_REQUIRED_FIELDS, build_config


def load_run_definition(name, overrides=None):
    """
    RunConfig from the YAML run definition `name` (a yaml-file or a bundled
    `argalloc://` run), values in `overrides` that aren't None take
    precedence
    """
    params = load_definition(
        input_name=name, required_fields=INPUT_REQUIRED_FIELDS, input_type="run"
    )
    params.pop("name")
    params.pop("version")
    params.update({k: v for k, v in (overrides or {}).items() if v is not None})
    return build_config(**params)
