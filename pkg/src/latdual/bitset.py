"""Subsets of a dense ground set ``0..n-1`` stored as Python ints."""
from __future__ import annotations

from collections.abc import Iterable, Iterator


def make(indices: Iterable[int]) -> int:
    value = 0
    for i in indices:
        value |= 1 << i
    return value


def iter_bits(value: int) -> Iterator[int]:
    """Yield the set bit positions of ``value`` in increasing order."""
    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low


def to_tuple(value: int) -> tuple[int, ...]:
    return tuple(iter_bits(value))


def popcount(value: int) -> int:
    return bin(value).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def full(n: int) -> int:
    return (1 << n) - 1


def set_key(value: int) -> tuple[int, ...]:
    """Canonical ordering key: lexicographic on the sorted index tuple."""
    return to_tuple(value)


def sort_sets(family: Iterable[int]) -> list[int]:
    return sorted(family, key=set_key)


def minimal_sets(family: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of ``family``, deduplicated, first-seen order."""
    seen = list(dict.fromkeys(family))
    by_size = sorted(seen, key=popcount)
    kept: list[int] = []
    for s in by_size:
        if not any(k & ~s == 0 for k in kept):
            kept.append(s)
    keep = set(kept)
    return [s for s in seen if s in keep]


def check_range(value: int, n: int) -> None:
    from .errors import InputError

    if value < 0 or value >> n:
        raise InputError(f"set {value:#b} has an index outside 0..{n - 1}")
