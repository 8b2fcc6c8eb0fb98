"""Workers."""

from nutforge.workers.search_worker import first_match, ordered_map

__all__ = ["first_match", "ordered_map"]
