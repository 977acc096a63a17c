"""Dual antichains in the lattice of closed sets of an implicational base.

Given an antichain ``B+`` of closed sets, its dual ``B-`` is the family of
inclusion-minimal closed sets not contained in any member of ``B+``.  Every
such set is the closure of a minimal transversal of the complementary
hypergraph ``{X - B : B in B+}``, so ``B-`` is obtained by enumerating those
transversals and filtering their closures.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import bitset
from .base import ImplicationalBase
from .errors import AntichainError, ContractError
from .hypergraph import DUAL, DualityVerdict, Hypergraph, iter_transversals, transversals_berge
from .independence import ex


@dataclass(frozen=True)
class Antichain:
    """Pairwise incomparable closed sets of a base, in input order."""

    members: tuple[int, ...]

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, s):
        return s in self.members

    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)


def validate_antichain(base: ImplicationalBase, family: Iterable[int]) -> Antichain:
    if isinstance(family, Antichain):
        family = family.members
    members = tuple(family)
    seen: dict[int, int] = {}
    for i, s in enumerate(members):
        bitset.check_range(s, base.n)
        if s in seen:
            raise AntichainError("duplicate", (seen[s], i),
                                 f"members {seen[s]} and {i} are equal")
        seen[s] = i
        if not base.is_closed(s):
            raise AntichainError("not-closed", (i,),
                                 f"member {i} {{{base.format_set(s)}}} is not closed")
    for i, a in enumerate(members):
        for j, b in enumerate(members):
            if i != j and a & ~b == 0:
                raise AntichainError("comparable", (i, j),
                                     f"member {i} is contained in member {j}")
    return Antichain(members)


def _as_antichain(base, family) -> Antichain:
    return family if isinstance(family, Antichain) else validate_antichain(base, family)


def complementary_hypergraph(base: ImplicationalBase, bplus: Iterable[int]) -> Hypergraph:
    full = base.full
    return Hypergraph(base.n, tuple(full & ~b for b in bplus), base.names)


def _meets_all(s: int, edges) -> bool:
    return all(s & e for e in edges)


def _has_closed_transversal_below(base, edges, i) -> bool:
    """Cheap sound test: some ``I - x`` is itself closed and a transversal."""
    for x in bitset.iter_bits(i):
        c = i & ~(1 << x)
        if _meets_all(c, edges) and base.is_closed(c):
            return True
    return False


def _smaller_closed_transversal(base, h: Hypergraph, i: int) -> int | None:
    """A closed transversal strictly inside ``i``, or None.

    Any closed transversal ``C`` inside ``i`` contains a minimal transversal
    ``T``, and then ``closure(T)`` lies inside ``C``.  So it suffices to look
    at the minimal transversals of ``h`` that fit in ``i``; these are the
    minimal transversals of the trace of ``h`` on ``i``.
    """
    for t in transversals_berge(h.restrict(i)):
        c = base.closure(t)
        if c != i:
            return c
    return None


def is_in_dual_antichain(base: ImplicationalBase, bplus: Iterable[int], i: int) -> bool:
    """Whether the closed transversal ``i`` is a minimal closed set outside ``down(B+)``.

    Checking only the sets ``I - x`` is exact when every premise has at most
    one element (closed sets are then down-sets, and a maximal element of
    ``I - C`` can always be removed).  With larger premises a smaller closed
    transversal need not be of the form ``I - x``, so the remaining
    candidates go through an exact check on the minimal transversals inside
    ``i``.
    """
    bplus = _as_antichain(base, bplus)
    h = complementary_hypergraph(base, bplus)
    if not base.is_closed(i):
        raise ContractError("set is not closed")
    if not _meets_all(i, h.edges):
        raise ContractError("set lies below a member of B+")
    return _membership(base, h, i)


def _membership(base, h, i) -> bool:
    if _has_closed_transversal_below(base, h.edges, i):
        return False
    if base.dimension() <= 1:
        return True
    return _smaller_closed_transversal(base, h, i) is None


@dataclass
class DualEnumStats:
    transversals: int = 0
    emitted: int = 0

    @property
    def discarded(self) -> int:
        return self.transversals - self.emitted


@dataclass(frozen=True)
class DualEnumResult:
    antichain: Antichain
    transversals: int
    emitted: int
    discarded: int

    @property
    def members(self):
        return self.antichain.members


def iter_dual(base: ImplicationalBase, bplus: Iterable[int], strategy: str = "berge",
              stats: DualEnumStats | None = None) -> Iterator[int]:
    """Yield the members of the dual antichain of ``bplus`` one by one.

    Each minimal transversal ``T`` of the complementary hypergraph is closed
    to ``I``; ``I`` is yielded when it is a minimal closed set outside
    ``down(B+)`` and ``T`` is its canonical generating set ``ex(I)``, which
    guarantees each member is produced exactly once.
    """
    bplus = _as_antichain(base, bplus)
    h = complementary_hypergraph(base, bplus)
    if stats is None:
        stats = DualEnumStats()
    for t in iter_transversals(h, strategy):
        stats.transversals += 1
        i = base.closure(t)
        if _has_closed_transversal_below(base, h.edges, i):
            continue
        if ex(base, i) != t:
            continue
        if base.dimension() > 1 and _smaller_closed_transversal(base, h, i) is not None:
            continue
        stats.emitted += 1
        yield i


def dual_enum(base: ImplicationalBase, bplus: Iterable[int], strategy: str = "berge",
              on_result: Callable[[int], None] | None = None) -> DualEnumResult:
    stats = DualEnumStats()
    out = []
    for i in iter_dual(base, bplus, strategy, stats):
        if on_result is not None:
            on_result(i)
        out.append(i)
    return DualEnumResult(Antichain(tuple(out)), stats.transversals, stats.emitted, stats.discarded)


def check_dual(base: ImplicationalBase, bplus: Iterable[int], bminus: Iterable[int],
               strategy: str = "berge") -> DualityVerdict:
    """Decide whether ``bplus`` and ``bminus`` are dual antichains.

    Disjointness is checked pairwise.  For coverage it is enough to scan the
    minimal transversals ``T`` of the complementary hypergraph: a closed set
    ``F`` outside ``down(B+)`` is a transversal, so it contains some minimal
    ``T`` and ``closure(T)`` lies in ``F``.  If every ``closure(T)`` is above a
    member of ``B-`` then so is every such ``F``; otherwise the offending
    ``closure(T)`` is itself outside both sides.

    The witness of a coverage failure is shrunk to an inclusion-minimal closed
    set outside ``down(B+)``; for an overlap it is a member of ``B-`` lying
    below a member of ``B+``.
    """
    bplus = _as_antichain(base, bplus)
    bminus = _as_antichain(base, bminus)
    for i in bminus:
        for b in bplus:
            if i & ~b == 0:
                return DualityVerdict(False, i, "overlap")
    h = complementary_hypergraph(base, bplus)
    for t in iter_transversals(h, strategy):
        f = base.closure(t)
        if not any(i & ~f == 0 for i in bminus):
            return DualityVerdict(False, _shrink(base, h, f), "uncovered")
    return DUAL


def _shrink(base, h, f) -> int:
    while True:
        for x in bitset.iter_bits(f):
            c = f & ~(1 << x)
            if _meets_all(c, h.edges) and base.is_closed(c):
                f = c
                break
        else:
            smaller = _smaller_closed_transversal(base, h, f)
            if smaller is None:
                return f
            f = smaller
