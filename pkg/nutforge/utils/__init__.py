"""Logging and iteration helpers."""

from nutforge.utils.common import chunker

__all__ = ["chunker"]
