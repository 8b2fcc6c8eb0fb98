"""Service package exports modules (functions only)."""

from . import (
    appendix_service,
    construction_service,
    families_service,
    nutcheck_service,
    report_service,
)

__all__ = [
    "appendix_service",
    "construction_service",
    "families_service",
    "nutcheck_service",
    "report_service",
]
