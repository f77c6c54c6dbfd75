import importlib
import json
import re
from pathlib import Path

import pytest

import argalloc.run.execute
from argalloc.framework.allocators import labeling_to_allocator
from argalloc.framework.labelings import grounded_labeling
from argalloc.run import build_config
from argalloc.run.execute import (
    EXIT_CAPACITY,
    EXIT_INVALID_INPUT,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    cli,
    run,
)


def _run_json(capsys, args):
    exit_code = cli(args + ["--format", "json"])
    document = json.loads(capsys.readouterr().out)
    return exit_code, document


def test_compile_json(capsys):
    exit_code, document = _run_json(
        capsys, ["compile", "argalloc://mutual_attack_chain"]
    )
    assert exit_code == EXIT_OK
    assert document["command"] == "compile"
    assert document["input"] == "argalloc://mutual_attack_chain"
    result = document["result"]
    assert result["arity"] == 1
    assert result["order"] == ["1", "2", "3", "4"]
    assert result["allocator"]["allocation_variables"] == ["_v0"]
    assert result["allocator"]["2"] == "_v0"
    stats = document["stats"]
    assert stats["arity"] == 1
    assert set(stats["node_counts"]) == {"1", "2", "3", "4"}
    assert stats["wall_time"] >= 0


def test_compile_is_deterministic(capsys):
    _, first = _run_json(capsys, ["compile", "argalloc://isomorphic_halves"])
    _, second = _run_json(capsys, ["compile", "argalloc://isomorphic_halves"])
    assert first["result"] == second["result"]


def test_tgf_and_apx_compile_alike():
    documents = [
        run(build_config(command="compile", input=f"argalloc://two_mutual_pairs.{ext}"))
        for ext in ("tgf", "apx")
    ]
    (tgf_code, tgf), (apx_code, apx) = documents
    assert tgf_code == apx_code == EXIT_OK
    assert tgf["result"] == apx["result"]


def test_stable(capsys):
    exit_code, document = _run_json(
        capsys, ["stable", "argalloc://mutual_attack_chain"]
    )
    assert exit_code == EXIT_OK
    assert document["result"]["count"] == 2
    assert document["result"]["labelings"][0] == {
        "1": "in",
        "2": "out",
        "3": "out",
        "4": "in",
    }


def test_verify_text(capsys):
    assert cli(["verify", "argalloc://two_mutual_pairs"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "complete: true, general: true, labelings: 9" in out


def test_labelings_and_grounded(capsys):
    _, document = _run_json(capsys, ["labelings", "argalloc://two_mutual_pairs"])
    assert document["result"]["count"] == 9

    _, document = _run_json(capsys, ["grounded", "argalloc://chain"])
    assert document["result"]["labeling"] == dict(
        a="in", b="out", c="in", d="out", e="in"
    )
    assert document["result"]["allocator_agrees"]


def test_compose(capsys):
    _, document = _run_json(capsys, ["compose", "argalloc://mutual_attack_chain"])
    assert document["result"]["arity"] == 1


def test_split_solve(capsys):
    exit_code, document = _run_json(
        capsys,
        [
            "split-solve",
            "argalloc://two_mutual_pairs",
            "--splitter",
            "argalloc://two_mutual_pairs_three_blocks",
        ],
    )
    assert exit_code == EXIT_OK
    assert document["result"]["arity"] == 2
    assert len(document["result"]["splitter"]["blocks"]) == 3


def test_split_solve_with_random_partition(capsys):
    exit_code, document = _run_json(
        capsys, ["split-solve", "argalloc://five_labelings", "--seed", "3"]
    )
    assert exit_code == EXIT_OK
    assert len(document["result"]["splitter"]["blocks"]) == 2


def test_influence(capsys):
    exit_code, document = _run_json(
        capsys, ["influence", "argalloc://hub_mutual", "--pair", "2,3"]
    )
    assert exit_code == EXIT_OK
    assert set(document["result"]) == {"2", "3"}


def test_arity_search(capsys):
    _, document = _run_json(capsys, ["arity-search", "argalloc://hub_mutual"])
    strategies = document["result"]["strategies"]
    assert strategies["input"]["arity"] == 2
    assert strategies["fvs"]["arity"] == 1
    assert strategies["exhaustive"]["arity"] == 1
    assert strategies["random"]["arity"] >= 1


def test_export(capsys):
    assert cli(["export", "argalloc://mutual_attack_chain", "--export", "dimacs"]) == 0
    out = capsys.readouterr().out
    assert "c 1 _v0" in out
    assert "p cnf" in out

    assert cli(["export", "argalloc://chain", "--export", "apx"]) == 0
    assert "att(a,b)." in capsys.readouterr().out


def test_invalid_input_exit_codes(capsys, tmp_path):
    exit_code, document = _run_json(capsys, ["compile", str(tmp_path / "none.tgf")])
    assert exit_code == EXIT_INVALID_INPUT
    assert document["error"]["exit_code"] == EXIT_INVALID_INPUT
    assert "result" not in document

    path = tmp_path / "broken.tgf"
    path.write_text("1\n#\n1 2\n")
    exit_code, document = _run_json(capsys, ["compile", str(path)])
    assert exit_code == EXIT_INVALID_INPUT
    assert document["error"]["type"] == "InvalidInputFile"
    assert document["error"]["message"].startswith("line 3:")

    exit_code, _ = _run_json(capsys, ["influence", "argalloc://hub_mutual"])
    assert exit_code == EXIT_INVALID_INPUT

    # networks with acceptance conditions have no tgf form
    exit_code, _ = _run_json(
        capsys, ["export", "argalloc://support", "--export", "tgf"]
    )
    assert exit_code == EXIT_INVALID_INPUT


def test_text_errors_go_to_stderr(capsys, tmp_path):
    assert cli(["compile", str(tmp_path / "none.tgf")]) == EXIT_INVALID_INPUT
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err.startswith("error: ")


def test_capacity_exit_code(capsys):
    exit_code, document = _run_json(
        capsys,
        ["labelings", "argalloc://two_mutual_pairs", "--max-oracle-args", "3"],
    )
    assert exit_code == EXIT_CAPACITY
    assert document["error"]["type"] == "CapacityError"


def test_verification_failure_exit_code(capsys, monkeypatch):
    # a complete allocator with only the grounded labeling isn't general
    def solve_grounded_only(framework, order=None, elide=True):
        return labeling_to_allocator(grounded_labeling(framework))

    monkeypatch.setattr(argalloc.run.execute, "solve", solve_grounded_only)
    exit_code, document = _run_json(capsys, ["verify", "argalloc://two_mutual_pairs"])
    assert exit_code == EXIT_VERIFICATION_FAILED
    assert document["result"]["complete"]
    assert not document["result"]["general"]
    assert document["result"]["instantiations"] == 1


def test_run_definition(capsys):
    exit_code = cli(["--definition", "argalloc://two_mutual_pairs_verify"])
    assert exit_code == EXIT_OK
    assert "labelings: 9" in capsys.readouterr().out

    # the command line takes precedence over the json output of the definition
    exit_code = cli(
        ["--definition", "argalloc://mutual_attack_chain_compile", "--format", "text"]
    )
    assert exit_code == EXIT_OK
    assert "arity: 1" in capsys.readouterr().out.splitlines()

    assert cli(["--definition", "argalloc://no_such_run"]) == EXIT_INVALID_INPUT


def test_missing_arguments():
    with pytest.raises(SystemExit):
        cli(["compile"])


def _parse_readme_cli_commands():
    lines = open(Path(__file__).parent.parent / "README.md").read().splitlines()

    lines = [line.replace("$>", "").strip() for line in lines]

    cli_commands = list(filter(lambda l: l.startswith("python -m argalloc"), lines))

    return cli_commands


def _set_placeholder_args(cmd):
    """
    fill out placeholder args in README commands, replacing <required_arg> with
    sensible defaults and removing [--optional-arg], turning e.g.

        python -m argalloc <command> <input> [--order <order>]

    into

        python -m argalloc compile argalloc://mutual_attack_chain
    """
    default_args = [
        ("<command>", "compile"),
        ("<input>", "argalloc://mutual_attack_chain"),
    ]
    for k, v in default_args:
        cmd = cmd.replace(k, v)

    for optional_arg in re.findall(r"\[.*\]", cmd):
        cmd = cmd.replace(optional_arg, "")

    return cmd


def test_readme_has_commands():
    assert len(_parse_readme_cli_commands()) > 10


@pytest.mark.parametrize("cli_command", _parse_readme_cli_commands())
def test_readme_cli_commands(cli_command):
    cli_command = _set_placeholder_args(cli_command)

    module_name, *args = cli_command.replace("python -m", "").split()
    if module_name == "argalloc":
        module_name = "argalloc.__main__"

    try:
        module = importlib.import_module(module_name)
        cli_fn = module.cli
    except ImportError:
        raise NotImplementedError(
            f"Can't test for CLI command `{cli_command}` in README because it"
            " isn't clear what entrypoint function this command uses"
        )

    print(f"running {module.__name__}.cli with args {args}")
    assert cli_fn(args) in (None, EXIT_OK)
