"""The Report record printed by every command, and its JSON and plain renderers.

Numbers enter a Report already rendered as decimal strings with
digits_believed significant digits; binary floats never appear in output.
"""

from collections.abc import Mapping
from dataclasses import asdict, dataclass, field
from enum import StrEnum
import json

import pandas as pd

from .numerics import NumericContext, Real


class Status(StrEnum):
    """Outcome of one command."""

    OK = "ok"
    RESIDUAL_WARNING = "residual_warning"
    ERROR = "error"


@dataclass(frozen=True)
class Report:
    """One structured result per invocation."""

    command: str
    inputs: dict[str, str] = field(default_factory=dict)
    outputs: dict[str, str] = field(default_factory=dict)
    residuals: dict[str, str] = field(default_factory=dict)
    digits_requested: int = 0
    digits_believed: int = 0
    status: Status = Status.OK

    def to_dict(self) -> dict[str, object]:
        """Return the report as plain JSON-ready data."""
        data = asdict(self)
        data["status"] = self.status.value
        return data

    def to_json(self) -> str:
        """Render the report as indented JSON."""
        return json.dumps(self.to_dict(), indent=2)

    def to_frame(self) -> pd.DataFrame:
        """Return one row per input, output and residual."""
        rows = [
            {"section": section, "name": name, "value": value}
            for section, values in (
                ("input", self.inputs),
                ("output", self.outputs),
                ("residual", self.residuals),
            )
            for name, value in values.items()
        ]
        return pd.DataFrame(rows, columns=["section", "name", "value"])

    def to_plain(self) -> str:
        """Render the report as aligned text."""
        header = (
            f"command: {self.command}\n"
            f"status: {self.status.value}\n"
            f"digits: {self.digits_believed} believed of {self.digits_requested} requested\n"
        )
        frame = self.to_frame()
        if frame.empty:
            return header
        return header + frame.to_string(index=False) + "\n"

    def render(self, fmt: str) -> str:
        """Render as ``json`` or ``plain``."""
        return self.to_plain() if fmt == "plain" else self.to_json()


def digits_believed(ctx: NumericContext, residuals: Mapping[str, Real]) -> int:
    """Return min(target_digits, floor(-log10(worst residual)))."""
    mp = ctx.mp
    if not residuals:
        return ctx.target_digits
    worst = max(abs(ctx.real(value)) for value in residuals.values())
    if worst == 0:
        return ctx.target_digits
    return max(0, min(ctx.target_digits, int(mp.floor(-mp.log10(worst)))))


def render_value(ctx: NumericContext, value: object, digits: int) -> str:
    """Render a number with the given significant digits; other values are passed through str()."""
    if isinstance(value, str):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    return ctx.mp.nstr(ctx.real(value), max(1, digits))


def build_report(
    ctx: NumericContext,
    command: str,
    inputs: Mapping[str, str],
    outputs: Mapping[str, object],
    residuals: Mapping[str, Real],
    *,
    tolerance: Real | None = None,
    believed: int | None = None,
) -> Report:
    """Assemble a successful Report; any residual at or above tolerance downgrades the status.

    believed overrides the digits derived from the worst residual.
    """
    believed = digits_believed(ctx, residuals) if believed is None else min(believed, ctx.target_digits)
    limit = ctx.tolerance() if tolerance is None else tolerance
    within = all(abs(value) < limit for value in residuals.values())
    return Report(
        command=command,
        inputs=dict(inputs),
        outputs={name: render_value(ctx, value, believed) for name, value in outputs.items()},
        residuals={name: render_value(ctx, value, believed) for name, value in residuals.items()},
        digits_requested=ctx.target_digits,
        digits_believed=believed,
        status=Status.OK if within else Status.RESIDUAL_WARNING,
    )


def error_report(command: str, inputs: Mapping[str, str], message: str, digits_requested: int) -> Report:
    """Return a Report with status=error and the message under outputs["error"]."""
    return Report(
        command=command,
        inputs=dict(inputs),
        outputs={"error": message},
        digits_requested=digits_requested,
        digits_believed=0,
        status=Status.ERROR,
    )


__all__ = [
    "Report",
    "Status",
    "build_report",
    "digits_believed",
    "error_report",
    "render_value",
]
