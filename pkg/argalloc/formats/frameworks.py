"""
Readers and writers for frameworks:

- tgf: one argument per line, `#`, then one `attacker target` pair per line
- apx: `arg(a).` and `att(a,b).` statements
- adfx: `arg(a).` and `cond(a, <expression>).` statements, the condition of an
  argument without a `cond` statement is T
"""
import re
from pathlib import Path

from .. import NamespaceCollision, is_reserved_name
from ..framework import ArgumentationFramework, InvalidFramework, Network
from ..logic import ExpressionSyntaxError, InvalidIdentifier, is_identifier
from ..logic.evaluation import variables
from ..logic.syntax import parse_expression, to_string
from . import FORMAT_OF_EXTENSION, INPUT_FORMATS, InputDocument, InvalidInputFile

_STATEMENT = re.compile(r"^(?P<directive>\w+)\s*\((?P<body>.*)\)$", re.DOTALL)


def _check_name(name, line):
    if not is_identifier(name):
        raise InvalidInputFile(f"`{name}` is not a valid argument name", line)
    if is_reserved_name(name):
        raise InvalidInputFile(
            f"Argument name `{name}` uses a prefix reserved for allocation"
            " variables",
            line,
        )


def _declare(arguments, name, line):
    _check_name(name, line)
    if name in arguments:
        raise InvalidInputFile(f"Argument `{name}` is declared twice", line)
    arguments[name] = line


def _build(factory, *args):
    try:
        return factory(*args)
    except (InvalidFramework, NamespaceCollision, InvalidIdentifier) as ex:
        raise InvalidInputFile(str(ex))


def parse_tgf(text):
    arguments = {}
    attacks = []
    in_edges = False
    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if len(line) == 0:
            continue
        if line == "#":
            if in_edges:
                raise InvalidInputFile("Second `#` separator", line_number)
            in_edges = True
            continue
        tokens = line.split()
        if not in_edges:
            # anything after the node id is a label
            _declare(arguments, tokens[0], line_number)
            continue
        if len(tokens) < 2:
            raise InvalidInputFile(
                f"Expected `attacker target` but got `{line}`", line_number
            )
        attacker, target = tokens[:2]
        for name in (attacker, target):
            if name not in arguments:
                raise InvalidInputFile(
                    f"Attack refers to undeclared argument `{name}`", line_number
                )
        attacks.append((attacker, target))
    return _build(ArgumentationFramework, list(arguments), attacks)


def _statements(text):
    """
    Split into `.`-terminated statements, yielding (line number, statement).
    `%` starts a comment that runs to the end of the line
    """
    cleaned = "\n".join(line.split("%", 1)[0] for line in text.splitlines())
    position = 0
    for chunk in cleaned.split("."):
        line_number = cleaned.count("\n", 0, position) + 1
        stripped = chunk.strip()
        if stripped:
            line_number += chunk[: len(chunk) - len(chunk.lstrip())].count("\n")
            yield line_number, stripped
        position += len(chunk) + 1


def _parse_statement(statement, line_number, allowed):
    match = _STATEMENT.match(statement)
    if match is None or match.group("directive") not in allowed:
        raise InvalidInputFile(f"Unknown directive `{statement}`", line_number)
    return match.group("directive"), match.group("body")


def _check_terminated(text):
    cleaned = "\n".join(line.split("%", 1)[0] for line in text.splitlines())
    tail = cleaned.rstrip()
    if tail and not tail.endswith("."):
        line_number = tail.count("\n") + 1
        raise InvalidInputFile("Statement isn't terminated with `.`", line_number)


def parse_apx(text):
    _check_terminated(text)
    arguments = {}
    attacks = []
    for line_number, statement in _statements(text):
        directive, body = _parse_statement(statement, line_number, ("arg", "att"))
        if directive == "arg":
            _declare(arguments, body.strip(), line_number)
        else:
            parts = [p.strip() for p in body.split(",")]
            if len(parts) != 2:
                raise InvalidInputFile(
                    f"`att` expects two arguments, got `{body}`", line_number
                )
            attacks.append((line_number, tuple(parts)))

    for line_number, (attacker, target) in attacks:
        for name in (attacker, target):
            if name not in arguments:
                raise InvalidInputFile(
                    f"Attack refers to undeclared argument `{name}`", line_number
                )
    return _build(ArgumentationFramework, list(arguments), [a for _, a in attacks])


def parse_adfx(text):
    _check_terminated(text)
    arguments = {}
    conditions = {}
    for line_number, statement in _statements(text):
        directive, body = _parse_statement(statement, line_number, ("arg", "cond"))
        if directive == "arg":
            _declare(arguments, body.strip(), line_number)
            continue
        if "," not in body:
            raise InvalidInputFile(
                f"`cond` expects an argument and an expression, got `{body}`",
                line_number,
            )
        name, expression = (p.strip() for p in body.split(",", 1))
        if name in conditions:
            raise InvalidInputFile(
                f"Argument `{name}` has more than one condition", line_number
            )
        try:
            conditions[name] = (line_number, parse_expression(expression))
        except (ExpressionSyntaxError, InvalidIdentifier) as ex:
            raise InvalidInputFile(f"Invalid condition for `{name}`: {ex}", line_number)

    for name, (line_number, condition) in conditions.items():
        if name not in arguments:
            raise InvalidInputFile(
                f"Condition given for undeclared argument `{name}`", line_number
            )
        undeclared = sorted(variables(condition).difference(arguments))
        if undeclared:
            raise InvalidInputFile(
                f"The condition of `{name}` refers to undeclared arguments"
                f" {', '.join(undeclared)}",
                line_number,
            )
    return _build(
        Network, list(arguments), {k: c for k, (_, c) in conditions.items()}
    )


PARSERS = dict(tgf=parse_tgf, apx=parse_apx, adfx=parse_adfx)


def format_tgf(framework):
    lines = list(framework.arguments) + ["#"]
    lines += [f"{a} {t}" for a, t in framework.attacks]
    return "\n".join(lines) + "\n"


def format_apx(framework):
    lines = [f"arg({a})." for a in framework.arguments]
    lines += [f"att({a},{t})." for a, t in framework.attacks]
    return "\n".join(lines) + "\n"


def format_adfx(network):
    lines = [f"arg({a})." for a in network.arguments]
    lines += [f"cond({a}, {to_string(c)})." for a, c in network.conditions.items()]
    return "\n".join(lines) + "\n"


def format_dot(framework):
    """
    Graphviz digraph of the attacks, or of the dependencies between
    acceptance conditions for a network
    """
    lines = ["digraph framework {"]
    lines += [f'  "{a}";' for a in framework.arguments]
    if isinstance(framework, ArgumentationFramework):
        lines += [f'  "{a}" -> "{t}";' for a, t in framework.attacks]
    else:
        for a, condition in framework.conditions.items():
            lines.append(f'  "{a}" [label="{a}: {to_string(condition)}"];')
            lines += [f'  "{b}" -> "{a}";' for b in sorted(variables(condition))]
    lines.append("}")
    return "\n".join(lines) + "\n"


def detect_format(path, input_format=None):
    if input_format is not None:
        return input_format
    source_format = FORMAT_OF_EXTENSION.get(Path(path).suffix)
    if source_format not in INPUT_FORMATS:
        raise InvalidInputFile(
            f"Can't tell the format of `{path}` from its extension, use one of"
            f" {', '.join(INPUT_FORMATS)}"
        )
    return source_format


def load_input(path, input_format=None):
    path = Path(path)
    source_format = detect_format(path, input_format)
    if not path.exists():
        raise FileNotFoundError(f"Input file `{path}` doesn't exist")
    framework = PARSERS[source_format](path.read_text())
    return InputDocument(framework=framework, source_format=source_format, path=path)
