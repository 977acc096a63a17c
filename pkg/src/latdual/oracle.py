"""Exhaustive ground truth for small instances.

Nothing here calls the enumeration or closure code it is used to check: the
closure is recomputed by naive fixpoint iteration and transversals by
scanning every subset.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable

from . import bitset
from .base import ImplicationalBase
from .errors import SizeLimitError
from .hypergraph import DUAL, DualityVerdict, Hypergraph

DEFAULT_GUARD = 20


def _guard(n: int, guard: int) -> None:
    if n > guard:
        raise SizeLimitError(f"ground set of size {n} exceeds the oracle guard {guard}")


def naive_closure(base: ImplicationalBase, s: int) -> int:
    changed = True
    while changed:
        changed = False
        for a, b in base.implications:
            if a & ~s == 0 and not s >> b & 1:
                s |= 1 << b
                changed = True
    return s


def all_closed_sets(base: ImplicationalBase, guard: int = DEFAULT_GUARD) -> list[int]:
    """Every closed set, by breadth-first expansion from the closure of the empty set."""
    _guard(base.n, guard)
    start = naive_closure(base, 0)
    seen = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for x in range(base.n):
            if s >> x & 1:
                continue
            c = naive_closure(base, s | 1 << x)
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return bitset.sort_sets(seen)


def _by_size(family):
    return sorted(family, key=lambda s: (bitset.popcount(s), bitset.set_key(s)))


def brute_dual(base: ImplicationalBase, bplus: Iterable[int],
               guard: int = DEFAULT_GUARD) -> list[int]:
    bplus = list(bplus)
    outside = [c for c in all_closed_sets(base, guard)
               if not any(c & ~b == 0 for b in bplus)]
    return bitset.sort_sets(
        c for c in outside if not any(d != c and d & ~c == 0 for d in outside)
    )


def brute_check_dual(base: ImplicationalBase, bplus: Iterable[int], bminus: Iterable[int],
                     guard: int = DEFAULT_GUARD) -> DualityVerdict:
    """Scan all closed sets, smallest first, against both duality conditions."""
    bplus = list(bplus)
    bminus = list(bminus)
    for f in _by_size(all_closed_sets(base, guard)):
        below = any(f & ~b == 0 for b in bplus)
        above = any(i & ~f == 0 for i in bminus)
        if below and above:
            return DualityVerdict(False, f, "overlap")
        if not below and not above:
            return DualityVerdict(False, f, "uncovered")
    return DUAL


def brute_transversals(h: Hypergraph, guard: int = DEFAULT_GUARD) -> list[int]:
    _guard(h.n, guard)
    edges = h.edges
    hits = [all(t & e for e in edges) for t in range(1 << h.n)]
    return bitset.sort_sets(
        t for t in range(1 << h.n)
        if hits[t] and not any(hits[t & ~(1 << x)] for x in bitset.iter_bits(t))
    )
