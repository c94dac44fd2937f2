"""Structured pass/fail records with exact residual payloads."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator

from .algebra import AntisymTensor
from .fields import ExpField
from .scalars import ComplexRational
from .serialize import field_to_json, tensor_to_json

__all__ = ["VerificationReport", "encode_residual", "timed"]

PASS, FAIL, ERROR = "pass", "fail", "error"


def encode_residual(value: Any) -> Any:
    """JSON-ready form of a residual; exact values become strings."""
    if isinstance(value, ExpField):
        return field_to_json(value)
    if isinstance(value, AntisymTensor):
        return tensor_to_json(value)
    if isinstance(value, (ComplexRational, Fraction)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [encode_residual(v) for v in value]
    if isinstance(value, dict):
        return {str(k): encode_residual(v) for k, v in value.items()}
    return value


@dataclass
class VerificationReport:
    """Outcome of one named check.

    ``status`` is ``"pass"`` exactly when ``residuals`` is empty, unless the
    check raised, in which case it is ``"error"`` and ``error`` holds the message.
    """

    name: str
    anchor: str
    residuals: dict[str, Any] = field(default_factory=dict)
    details: dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0
    error: str | None = None

    @property
    def status(self) -> str:
        if self.error is not None:
            return ERROR
        return FAIL if self.residuals else PASS

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def add_residual(self, key: str, value: Any) -> None:
        """Record a nonzero residual; zero fields/tensors/scalars are ignored."""
        if isinstance(value, (ExpField, AntisymTensor)) and value.is_zero():
            return
        if isinstance(value, ComplexRational) and not value:
            return
        self.residuals[key] = encode_residual(value)

    def fail(self, key: str, message: Any) -> None:
        self.residuals[key] = encode_residual(message)

    def to_dict(self) -> dict[str, Any]:
        out = {
            "name": self.name,
            "status": self.status,
            "anchor": self.anchor,
            "residuals": self.residuals,
            "details": encode_residual(self.details),
            "wall_time": round(self.wall_time, 6),
        }
        if self.error is not None:
            out["error"] = self.error
        return out

    def summary_line(self) -> str:
        return f"[{self.status.upper():5}] {self.name}"


@contextmanager
def timed(report: VerificationReport) -> Iterator[VerificationReport]:
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.wall_time = time.perf_counter() - start
