"""DTOs."""

from nutforge.dtos.dto import (
    AppendixReport,
    CommandOutcome,
    Construction,
    ConstructionCase,
    KernelBasis,
    NutCertificate,
    NutFailure,
)

__all__ = [
    "AppendixReport",
    "CommandOutcome",
    "Construction",
    "ConstructionCase",
    "KernelBasis",
    "NutCertificate",
    "NutFailure",
]
