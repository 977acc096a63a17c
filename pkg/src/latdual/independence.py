"""Independent sets, minimal generating/covering sets and independent-width."""
from __future__ import annotations

from typing import Iterable

import numpy as np

from . import bitset
from .base import ImplicationalBase
from .errors import ContractError, InputError, SizeLimitError

DEFAULT_GUARD = 20


def _guard(size: int, guard: int, what: str) -> None:
    if size > guard:
        raise SizeLimitError(f"{what} has size {size}, above the brute-force guard {guard}")


def is_independent_set(base: ImplicationalBase, t: int) -> bool:
    """No element of ``t`` is derivable from the others."""
    return all(not base.closure(t & ~(1 << x)) >> x & 1 for x in bitset.iter_bits(t))


def ex(base: ImplicationalBase, i: int) -> int:
    """Deterministic minimal generating set of ``i``.

    Starting from ``T = i``, the smallest-index element whose removal keeps
    ``i`` inside the closure is dropped until none is left.  Deletability only
    shrinks along the way, so a single increasing pass gives the same result.
    """
    t = i
    for x in bitset.iter_bits(i):
        rest = t & ~(1 << x)
        if i & ~base.closure(rest) == 0:
            t = rest
    return t


def _subsets(s: int):
    """All subsets of ``s`` (bit vectors), in increasing integer order."""
    sub = 0
    while True:
        yield sub
        if sub == s:
            return
        sub = (sub - s) & s


def is_minimal_covering_set(base: ImplicationalBase, t: int, i: int) -> bool:
    if i & ~base.closure(t):
        return False
    return all(i & ~base.closure(t & ~(1 << x)) for x in bitset.iter_bits(t))


def spex(base: ImplicationalBase, i: int, guard: int = DEFAULT_GUARD) -> list[int]:
    """All minimal generating sets of ``i`` (exhaustive over subsets of ``i``)."""
    _guard(bitset.popcount(i), guard, "set")
    out = [t for t in _subsets(i) if is_minimal_covering_set(base, t, i)]
    return bitset.sort_sets(out)


def enumerate_minimal_covering_sets(base: ImplicationalBase, i: int,
                                    guard: int = DEFAULT_GUARD) -> list[int]:
    """Every minimal covering set of ``i`` over the whole ground set."""
    bitset.check_range(i, base.n)
    _guard(base.n, guard, "ground set")
    closures = [base.closure(t) for t in range(1 << base.n)]
    out = []
    for t, c in enumerate(closures):
        if i & ~c:
            continue
        if all(i & ~closures[t & ~(1 << x)] for x in bitset.iter_bits(t)):
            out.append(t)
    return bitset.sort_sets(out)


def minimal_covering_counts(base: ImplicationalBase, sets: Iterable[int],
                            guard: int = DEFAULT_GUARD) -> list[int]:
    """Number of minimal covering sets for each of ``sets``, vectorised.

    Equivalent to ``len(enumerate_minimal_covering_sets(base, i))`` per ``i``
    but shares a single closure table over ``2^X``.
    """
    _guard(base.n, guard, "ground set")
    sets = list(sets)
    if not sets:
        return []
    n = base.n
    ts = np.arange(1 << n, dtype=np.int64)
    clos = np.array([base.closure(t) for t in range(1 << n)], dtype=np.int64)
    targets = np.array(sets, dtype=np.int64)[:, None]
    cover = (clos[None, :] & targets) == targets
    minimal = cover.copy()
    for x in range(n):
        has_x = (ts >> x) & 1 == 1
        without = cover[:, ts & ~(1 << x)]
        minimal &= ~(has_x[None, :] & without)
    return [int(c) for c in minimal.sum(axis=1)]


def _check_implications(base: ImplicationalBase, s: Iterable[int]) -> tuple[int, ...]:
    s = tuple(sorted(set(s)))
    for j in s:
        if not 0 <= j < len(base.implications):
            raise InputError(f"implication index {j} out of range")
    return s


def is_independent_implications(base: ImplicationalBase, s: Iterable[int]) -> bool:
    """Every conclusion lies outside the closure of the other premises."""
    s = _check_implications(base, s)
    imps = base.implications
    for j in s:
        others = 0
        for k in s:
            if k != j:
                others |= imps[k].premise
        if base.closure(others) >> imps[j].conclusion & 1:
            return False
    return True


def independent_width(base: ImplicationalBase, mode: str = "exact",
                      guard: int = DEFAULT_GUARD) -> tuple[int, tuple[int, ...]]:
    """Size of a maximum independent set of implications, with a witness.

    ``mode="exact"`` searches subsets from the largest size down and returns
    the first independent one in lexicographic order; it refuses bases with
    more than ``guard`` implications.  ``mode="greedy"`` returns a maximal
    independent set built in canonical order, which is only a lower bound.
    """
    m = len(base.implications)
    imps = base.implications
    cache: dict[int, int] = {}

    def clo(s):
        c = cache.get(s)
        if c is None:
            c = cache[s] = base.closure(s)
        return c

    def independent(s):
        for j in s:
            others = 0
            for k in s:
                if k != j:
                    others |= imps[k].premise
            if clo(others) >> imps[j].conclusion & 1:
                return False
        return True

    if mode == "greedy":
        chosen: list[int] = []
        for j in range(m):
            if independent(chosen + [j]):
                chosen.append(j)
        return len(chosen), tuple(chosen)
    if mode != "exact":
        raise InputError(f"unknown mode {mode!r}")
    _guard(m, guard, "implication list")
    # independence is hereditary, so a maximum independent set is a clique of
    # the pairwise-compatibility graph; search cliques largest-first
    ok = [j for j in range(m) if independent((j,))]
    compat = {j: {k for k in ok if k != j and independent((j, k))} for j in ok}

    def cliques(size, start, current, allowed):
        if len(current) == size:
            yield tuple(current)
            return
        if len(allowed) < size - len(current):
            return
        for pos in range(start, len(ok)):
            j = ok[pos]
            if j not in allowed:
                continue
            if len(ok) - pos < size - len(current):
                return
            current.append(j)
            yield from cliques(size, pos + 1, current, allowed & compat[j])
            current.pop()

    for size in range(len(ok), 0, -1):
        for cand in cliques(size, 0, [], set(ok)):
            if independent(cand):
                return size, cand
    return 0, ()


def dex(base: ImplicationalBase, t: int, i: int) -> tuple[int, ...]:
    """Minimal set of implications with premise inside ``t`` deriving ``i`` from ``t``.

    Implications are dropped greedily in canonical order while ``i`` stays
    inside the restricted closure of ``t``.

    Raises
    ------
    ContractError
        If ``t`` is not an independent covering set of ``i``, or if the
        implications whose premise lies in ``t`` do not derive ``i`` on their
        own (possible when a derivation needs an intermediate conclusion).
    """
    if i & ~base.closure(t):
        raise ContractError("t is not a covering set of i")
    if not is_independent_set(base, t):
        raise ContractError("t is not independent")
    kept = [j for j, (a, _) in enumerate(base.implications) if a & ~t == 0]
    if i & ~base.closure(t, only=kept):
        raise ContractError("implications with premise inside t do not derive i")
    for j in list(kept):
        trial = [k for k in kept if k != j]
        if i & ~base.closure(t, only=trial) == 0:
            kept = trial
    return tuple(kept)

