from pathlib import Path

import pytest

from curvecounts import rational_counts
from curvecounts.cli import main as cli_main

ORACLE_SCRIPT = Path(__file__).resolve().parent.parent / "scripts" / "oracle_counts.py"


@pytest.fixture(scope="session")
def counts():
    """Shared table of rational counts, large enough for every range test."""
    return rational_counts(30)


@pytest.fixture
def run_cli(capsys):
    def invoke(*args: str):
        code = cli_main(list(args))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke
