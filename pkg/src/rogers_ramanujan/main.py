"""Process entry point for the ``rrcf`` command.

Module Information:
    - Filename: main.py
    - Module: main
    - Location: src/rogers_ramanujan/

Runs the click group without letting click call sys.exit, so the exit
status is returned to the caller (and to the OS through SystemExit below).
"""

from collections.abc import Sequence

import click

from .cli import EXIT_OK, EXIT_SUITE_FAILURE, cli


def main(argv: Sequence[str] | None = None) -> int:
    """Run ``rrcf`` with argv (default: sys.argv[1:]) and return its exit status.

    Returns:
        int: 0 ok, 1 suite failure, 2 bad input or usage, 3 numeric failure.
    """
    try:
        result = cli.main(args=list(argv) if argv is not None else None, prog_name="rrcf", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_SUITE_FAILURE
    return result if isinstance(result, int) else EXIT_OK


# ---------------- Entry Point ----------------
if __name__ == "__main__":
    raise SystemExit(main())


__all__ = ["main"]
