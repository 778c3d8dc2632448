"""Bounded subset enumeration in canonical order."""

from __future__ import annotations

import os
from itertools import combinations
from typing import Iterable, Iterator

from .errors import EnumerationLimitError

DEFAULT_BOUND = 24
BOUND_ENV = "NAFABA_BOUND"


def default_bound() -> int:
    raw = os.environ.get(BOUND_ENV)
    if raw is None or raw == "":
        return DEFAULT_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BOUND_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{BOUND_ENV} must be non-negative, got {value}")
    return value


def check_bound(size: int, bound: int | None) -> None:
    limit = default_bound() if bound is None else bound
    if size > limit:
        raise EnumerationLimitError(size, limit)


def subsets(universe: Iterable[str], bound: int | None = None) -> Iterator[frozenset[str]]:
    """Yield every subset of ``universe``, smallest first, then lexicographically.

    ``combinations`` over the sorted universe already produces the
    lexicographic order within one cardinality.
    """
    items = sorted(universe)
    check_bound(len(items), bound)
    for k in range(len(items) + 1):
        for combo in combinations(items, k):
            yield frozenset(combo)


def canonical_key(members: Iterable[str]) -> tuple[int, tuple[str, ...]]:
    ordered = tuple(sorted(members))
    return (len(ordered), ordered)


def canonical_sort(sets: Iterable[frozenset[str]]) -> list[frozenset[str]]:
    return sorted(sets, key=canonical_key)
