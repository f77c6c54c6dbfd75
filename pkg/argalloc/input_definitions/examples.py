from collections import OrderedDict as OD
from pathlib import Path

import yaml
from asciitree import LeftAligned, drawing

from .. import DATA_TYPE_PLURAL

EXAMPLES_ROOT_PATH = Path(__file__).parent / "examples_files"
ARGALLOC_EXAMPLES_PATH_PREFIX = "argalloc://"

EXAMPLE_EXTENSIONS = dict(
    frameworks=(".tgf", ".apx", ".adfx"),
    splitters=(".json",),
    runs=(".yaml",),
)


class ExampleDoesNotExist(Exception):
    pass


def _extensions(input_type_plural):
    return EXAMPLE_EXTENSIONS.get(input_type_plural, (".yaml",))


def get_path(input_name, input_type):
    """
    Path of the bundled example `argalloc://<name>` of `input_type`. The name
    may carry its extension (`argalloc://two_mutual_pairs.apx`), without one the first
    existing file among the extensions of this input type is used
    """
    if not input_name.startswith(ARGALLOC_EXAMPLES_PATH_PREFIX):
        raise Exception(
            "All bundled example inputs should start with "
            f"`{ARGALLOC_EXAMPLES_PATH_PREFIX}`"
        )

    input_name = input_name[len(ARGALLOC_EXAMPLES_PATH_PREFIX) :]
    input_type = DATA_TYPE_PLURAL.get(input_type, input_type)
    extensions = _extensions(input_type)

    candidates = [EXAMPLES_ROOT_PATH / input_type / input_name]
    candidates += [
        EXAMPLES_ROOT_PATH / input_type / (input_name + ext) for ext in extensions
    ]
    for file_path in candidates:
        if file_path.is_file() and file_path.suffix in extensions:
            return file_path
    raise ExampleDoesNotExist(
        f"`{ARGALLOC_EXAMPLES_PATH_PREFIX}{input_name}` isn't one of the bundled"
        f" {input_type}"
    )


def resolve_path(path_or_name, input_type):
    """
    Bundled examples are looked up by name, anything else is a local path
    """
    if str(path_or_name).startswith(ARGALLOC_EXAMPLES_PATH_PREFIX):
        return get_path(str(path_or_name), input_type)
    return Path(path_or_name)


def attempt_read(input_name, input_type):
    file_path = get_path(input_name=input_name, input_type=input_type)
    if file_path.suffix == ".yaml":
        with open(file_path) as fh:
            return yaml.load(fh, Loader=yaml.FullLoader)
    return file_path.read_text()


def get_available(input_types="all"):
    def _visit_path(p_current, extensions=()):
        subpaths = sorted(p_current.glob("*"))
        if p_current == EXAMPLES_ROOT_PATH and input_types != "all":
            subpaths = filter(lambda p_: p_.name in input_types, subpaths)

        valid_paths = []
        for p_sub in subpaths:
            if p_sub.is_file():
                if p_sub.suffix in extensions:
                    valid_paths.append((p_sub.name, OD()))
            else:
                valid_paths.append(
                    (p_sub.name, OD(_visit_path(p_sub, _extensions(p_sub.name))))
                )

        return OD(valid_paths)

    return _visit_path(EXAMPLES_ROOT_PATH)


def print_available(input_types="all"):
    examples_tree = {ARGALLOC_EXAMPLES_PATH_PREFIX: get_available(input_types)}

    box_tr = LeftAligned(draw=drawing.BoxStyle(gfx=drawing.BOX_LIGHT))
    print(box_tr(examples_tree))


def cli(args=None):
    print(
        "The following frameworks, splitters and run definitions are currently"
        " included with argalloc:"
    )
    print("")

    print_available()

    first_framework = list(get_available(input_types=["frameworks"])["frameworks"])[0]

    print("\n")
    print(
        f"To compile for example the `{first_framework}` framework into a general"
        " allocator run:\n"
        "\n"
        f"    $> python -m argalloc compile argalloc://{first_framework}"
    )


if __name__ == "__main__":
    cli()
