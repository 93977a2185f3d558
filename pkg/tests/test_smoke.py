"""Test that the project structure works correctly.

Module Information:
    - Filename: test_smoke.py
    - Module: test_smoke
    - Location: tests/

This smoke test verifies that:
    - All modules can be imported
    - The console entry point answers --help
"""

import rogers_ramanujan
from rogers_ramanujan import (
    cli,
    closed_forms,
    cubic,
    elliptic,
    errors,
    main,
    modular5,
    numerics,
    parsing,
    qseries,
    report,
    rrcf,
    suites,
    utils_logger,
)


def test_imports_work():
    """Verify all modules can be imported."""
    # If we get here without ImportError, imports work
    for module in (cli, closed_forms, cubic, elliptic, errors, main, modular5, numerics,
                   parsing, qseries, report, rrcf, suites, utils_logger):
        assert module is not None
    assert rogers_ramanujan.__version__


def test_entry_point_help(capsys):
    """Verify the rrcf entry point runs and exits cleanly."""
    assert main.main(["--help"]) == 0
    assert "eval-r" in capsys.readouterr().out
