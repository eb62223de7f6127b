import io
import json
from importlib.resources import files

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

from stablecovers.cli import run

SCHEMA_NAMES = ("field", "graph", "map", "classify", "hurwitz", "legendre", "curve", "graph_check")


def _registry():
    base = files("stablecovers").joinpath("schemas")
    docs = {n: json.loads(base.joinpath(f"{n}.json").read_text("utf-8")) for n in SCHEMA_NAMES}
    reg = Registry().with_resources(
        (doc["$id"], Resource.from_contents(doc)) for doc in docs.values()
    )
    return docs, reg


SCHEMAS, REGISTRY = _registry()


def schema_errors(doc, name):
    v = Draft202012Validator(SCHEMAS[name], registry=REGISTRY)
    return [e.message for e in v.iter_errors(doc)]


def cli(*argv, stdin=None):
    """Run the CLI in-process; return (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        import sys

        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
        try:
            code = run(list(argv), out, err)
        finally:
            sys.stdin = old
    else:
        code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def run_cli():
    return cli


# acceptance lines, printed again in the terminal summary so they survive capture
ACCEPTANCE = []


def record_acceptance(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE.append((number, line))
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
