"""Error types and validation reports shared across the package."""
from __future__ import annotations

from dataclasses import dataclass


class TilingError(Exception):
    """Base class; carries a machine-readable code and detail mapping."""

    code = "error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def as_json(self) -> dict:
        return {"error": self.code, "message": self.message,
                "details": {k: str(v) for k, v in self.details.items()}}


class VertexNotInFragment(TilingError):
    code = "VertexNotInFragment"


class NotFullyTriangulated(TilingError):
    code = "NotFullyTriangulated"


class NoClosingArc(TilingError):
    code = "NoClosingArc"


class NotCrossing(TilingError):
    code = "NotCrossing"


class NonPositiveEntry(TilingError):
    code = "NonPositiveEntry"


class NotAFundamentalDomain(TilingError):
    code = "NotAFundamentalDomain"


class NonIntegral(TilingError):
    code = "NonIntegral"


class NonPositive(TilingError):
    code = "NonPositive"


class WindowTooSmall(TilingError):
    code = "WindowTooSmall"


class InvalidWindow(TilingError):
    code = "InvalidWindow"


class ShapeViolation(TilingError):
    code = "ShapeViolation"


class MinIsOne(TilingError):
    code = "MinIsOne"


class NotLocalMax(TilingError):
    code = "NotLocalMax"


class CrossingDetected(TilingError):
    code = "CrossingDetected"


class OutOfScope(TilingError):
    code = "OutOfScope"


class InsufficientMargin(TilingError):
    code = "InsufficientMargin"


class InconsistentCertificate(TilingError):
    code = "InconsistentCertificate"


class AgreementFailure(TilingError):
    code = "AgreementFailure"


class NotCoprime(TilingError):
    code = "NotCoprime"


class OutOfRange(TilingError):
    code = "OutOfRange"


class InvalidManifest(TilingError):
    code = "InvalidManifest"


@dataclass(frozen=True)
class ValidationReport:
    """Accumulated invariant violations; empty means the object is valid."""

    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations
