"""Structured validation diagnostics shared by the circuit layer and the file formats."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["Diagnostic", "ValidationError"]


@dataclass(frozen=True)
class Diagnostic:
    """One validation failure: a stable machine-readable code, a human message,
    and the JSON-path-like location of the offending piece of input."""

    code: str
    message: str
    location: str = "$"

    def as_dict(self) -> dict:
        return {"code": self.code, "location": self.location, "message": self.message}

    def __str__(self) -> str:
        return f"{self.code} at {self.location}: {self.message}"


class ValidationError(Exception):
    """Raised when validation fails; carries one primary Diagnostic per failure."""

    def __init__(self, diagnostics):
        self.diagnostics = tuple(diagnostics)
        if not self.diagnostics:
            raise ValueError("ValidationError needs at least one diagnostic")
        super().__init__("; ".join(str(d) for d in self.diagnostics))
