"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from nutforge.dtos.dto import NutCertificate


class NutforgeError(Exception):
    """Base class for every error raised on purpose by nutforge."""


class ValidationError(NutforgeError, ValueError):
    """Malformed input: polynomial text, generator sets, indices, divisors."""


class PreconditionError(ValidationError):
    """A construction was asked for outside the range its theorem covers."""


class UnsupportedSpecError(ValidationError):
    """The circulant lies outside the hypothesis of the spectral criterion."""


class EnumerationCapError(ValidationError):
    """An exhaustive search would exceed the configured candidate cap."""


class DispatchError(NutforgeError, RuntimeError):
    """Membership holds but no construction produced a generator set."""


class OracleDisagreementError(NutforgeError):
    """The spectral and kernel tests returned different verdicts."""

    def __init__(self, spectral: NutCertificate, kernel: NutCertificate) -> None:
        self.spectral = spectral
        self.kernel = kernel
        super().__init__(
            f"oracle disagreement on Circ({spectral.n}, {list(spectral.gens)}): "
            f"spectral={spectral.describe()} kernel={kernel.describe()}"
        )
