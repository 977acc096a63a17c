"""Hypergraphs and minimal transversals.

Two independent enumerators are provided so that each can check the other:

* :func:`transversals_berge` -- Berge multiplication, one edge at a time.
* :func:`transversals_via_dual` -- incremental generation driven by
  :func:`fk_dual_check`, a Fredman-Khachiyan (algorithm A) duality test.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Iterator, Sequence

from . import bitset
from .errors import ContractError, InputError, SizeLimitError

BERGE_WARN = 1 << 20
BERGE_LIMIT = 1 << 22
# |H| * |G| at or below this is decided by exhaustive search
FK_BASE_PRODUCT = 4


@dataclass(frozen=True)
class Hypergraph:
    """Edges over the ground set ``0..n-1``, deduplicated in insertion order."""

    n: int
    edges: tuple[int, ...] = ()
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        edges = tuple(dict.fromkeys(int(e) for e in self.edges))
        for e in edges:
            bitset.check_range(e, self.n)
        object.__setattr__(self, "edges", edges)
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != self.n:
                raise InputError("names must match the ground set size")
            object.__setattr__(self, "names", names)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def label(self, i: int) -> str:
        return self.names[i] if self.names is not None else str(i)

    def format_set(self, s: int) -> str:
        return " ".join(self.label(i) for i in bitset.iter_bits(s))

    def minimized(self) -> "Hypergraph":
        """Same hypergraph with every non-minimal edge removed."""
        return Hypergraph(self.n, tuple(bitset.minimal_sets(self.edges)), self.names)

    def restrict(self, s: int) -> "Hypergraph":
        """Edges intersected with ``s`` (the trace on ``s``)."""
        return Hypergraph(self.n, tuple(e & s for e in self.edges), self.names)


def is_transversal(h: Hypergraph, t: int) -> bool:
    bitset.check_range(t, h.n)
    return all(t & e for e in h.edges)


def _is_minimal_transversal(edges: Sequence[int], t: int) -> bool:
    if not all(t & e for e in edges):
        return False
    for x in bitset.iter_bits(t):
        rest = t & ~(1 << x)
        if all(rest & e for e in edges):
            return False
    return True


def minimize_transversal(h: Hypergraph, t: int) -> int:
    """Shrink a transversal to a minimal one, deleting lower indices first."""
    if not is_transversal(h, t):
        raise ContractError("not a transversal")
    for x in bitset.iter_bits(t):
        rest = t & ~(1 << x)
        if all(rest & e for e in h.edges):
            t = rest
    return t


def transversals_berge(h: Hypergraph, limit: int = BERGE_LIMIT) -> list[int]:
    """All minimal transversals, in canonical set order.

    After crossing the running family with a new edge ``E``, a candidate
    ``T + x`` (``T`` missing ``E``, ``x`` in ``E``) can only be dominated by a
    family member that already meets ``E`` and contains ``x``, which keeps the
    pruning step local.
    """
    edges = bitset.minimal_sets(h.edges)
    if 0 in edges:
        return []
    family = [0]
    warned = False
    for e in edges:
        meet = [t for t in family if t & e]
        miss = [t for t in family if not t & e]
        if not miss:
            continue
        by_elem: dict[int, list[int]] = {}
        for s in meet:
            for x in bitset.iter_bits(s & e):
                by_elem.setdefault(x, []).append(s)
        new = meet
        elems = list(bitset.iter_bits(e))
        for t in miss:
            for x in elems:
                c = t | 1 << x
                if any(s & ~c == 0 for s in by_elem.get(x, ())):
                    continue
                new.append(c)
        family = new
        if len(family) > limit:
            raise SizeLimitError(f"Berge intermediate family exceeded {limit} sets")
        if len(family) > BERGE_WARN and not warned:
            warnings.warn(f"Berge intermediate family has {len(family)} sets", RuntimeWarning)
            warned = True
    return bitset.sort_sets(family)


@dataclass(frozen=True)
class DualityVerdict:
    """Outcome of a duality test.

    ``witness`` is present iff ``dual`` is false.  ``reason`` says what the
    witness exhibits: ``"uncovered"`` (a set outside both sides), ``"overlap"``
    (a set on both sides), or a precondition failure such as
    ``"not-transversal"``/``"not-minimal"``.
    """

    dual: bool
    witness: int | None = None
    reason: str | None = None

    def __bool__(self):
        return self.dual


DUAL = DualityVerdict(True)


def fk_dual_check(h: Hypergraph, g: Hypergraph) -> DualityVerdict:
    """Decide whether ``g`` is exactly the family of minimal transversals of ``h``.

    When not dual, the witness is a transversal of ``h`` containing no edge
    of ``g`` (reason ``"uncovered"``), or an edge of ``g`` that is not a
    transversal / not a minimal transversal of ``h``.
    """
    if h.n != g.n:
        raise InputError(f"ground sets differ: {h.n} vs {g.n}")
    hedges = bitset.minimal_sets(h.edges)
    for e in g.edges:
        if not all(e & f for f in hedges):
            return DualityVerdict(False, e, "not-transversal")
        if not _is_minimal_transversal(hedges, e):
            return DualityVerdict(False, e, "not-minimal")
    return _fk_verdict(hedges, list(g.edges), h.n)


def _fk_verdict(hedges: list[int], gedges: list[int], n: int) -> DualityVerdict:
    ground = bitset.full(n)
    s = _fk_search(hedges, gedges, ground)
    if s is None:
        return DUAL
    return DualityVerdict(False, ground & ~s, "uncovered")


def _fk_search(hs: list[int], gs: list[int], v: int) -> int | None:
    """Find ``S`` within ``v`` containing no edge of ``hs`` whose complement in
    ``v`` contains no edge of ``gs``; None if there is none.

    ``hs`` and ``gs`` are antichains over ``v`` and every edge of one meets
    every edge of the other.  Such an ``S`` exists exactly when ``gs`` falls
    short of the minimal transversals of ``hs``: ``v - S`` is then a
    transversal of ``hs`` holding no edge of ``gs``.
    """
    if 0 in hs or 0 in gs:
        return None
    if not hs:
        return v
    if not gs:
        return 0
    vars_h = 0
    for e in hs:
        vars_h |= e
    vars_g = 0
    for e in gs:
        vars_g |= e
    if vars_h != vars_g:
        return _variable_witness(hs, gs, v, vars_h, vars_g)
    if len(hs) * len(gs) <= FK_BASE_PRODUCT:
        return _exhaustive(hs, gs, v)
    volume = sum(Fraction(1, 1 << bitset.popcount(e)) for e in hs)
    volume += sum(Fraction(1, 1 << bitset.popcount(e)) for e in gs)
    if volume < 1:
        return _derandomized(hs, gs, v)

    x = _most_frequent(hs, gs)
    bit = 1 << x
    # x inside S
    h1 = bitset.minimal_sets(e & ~bit for e in hs)
    g1 = [e for e in gs if not e & bit]
    found = _fk_search(h1, g1, v & ~bit)
    if found is not None:
        return found | bit
    # x outside S
    h0 = [e for e in hs if not e & bit]
    g0 = bitset.minimal_sets(e & ~bit for e in gs)
    return _fk_search(h0, g0, v & ~bit)


def _most_frequent(hs, gs) -> int:
    counts: dict[int, int] = {}
    for e in hs:
        for x in bitset.iter_bits(e):
            counts[x] = counts.get(x, 0) + 1
    for e in gs:
        for x in bitset.iter_bits(e):
            counts[x] = counts.get(x, 0) + 1
    return min(counts, key=lambda x: (-counts[x], x))


def _variable_witness(hs, gs, v, vars_h, vars_g) -> int:
    only_h = vars_h & ~vars_g
    if only_h:
        x = only_h & -only_h
        e = next(e for e in hs if e & x)
        # e - x still meets every g, and no h fits inside it (antichain)
        return e & ~x
    x = (vars_g & ~vars_h) & -(vars_g & ~vars_h)
    e = next(e for e in gs if e & x)
    return v & ~(e & ~x)


def _exhaustive(hs, gs, v) -> int | None:
    # pick one element per edge of the shorter side; the choices cover all
    # minimal candidates on that side
    cost_h = 1
    for e in hs:
        cost_h *= bitset.popcount(e)
    cost_g = 1
    for e in gs:
        cost_g *= bitset.popcount(e)
    if cost_h <= cost_g:
        for picks in product(*(list(bitset.iter_bits(e)) for e in hs)):
            w = bitset.make(picks)
            if not any(g & ~w == 0 for g in gs):
                return v & ~w
    else:
        for picks in product(*(list(bitset.iter_bits(e)) for e in gs)):
            s = bitset.make(picks)
            if not any(h & ~s == 0 for h in hs):
                return s
    return None


def _derandomized(hs, gs, v) -> int:
    """Method of conditional expectations on a uniformly random ``S``.

    The expected number of violated edges is below one, so fixing variables
    one at a time without increasing it ends with no violation.
    """
    s_in = 0
    s_out = 0

    def expectation(s_in, s_out):
        free = ~(s_in | s_out)
        total = Fraction(0)
        for e in hs:
            if not e & s_out:
                total += Fraction(1, 1 << bitset.popcount(e & free))
        for e in gs:
            if not e & s_in:
                total += Fraction(1, 1 << bitset.popcount(e & free))
        return total

    for x in bitset.iter_bits(v):
        bit = 1 << x
        if expectation(s_in | bit, s_out) <= expectation(s_in, s_out | bit):
            s_in |= bit
        else:
            s_out |= bit
    return s_in


def _iter_via_dual(h: Hypergraph) -> Iterator[int]:
    hedges = bitset.minimal_sets(h.edges)
    found: list[int] = []
    ground = bitset.full(h.n)
    reduced = Hypergraph(h.n, tuple(hedges))
    while True:
        s = _fk_search(hedges, found, ground)
        if s is None:
            return
        t = minimize_transversal(reduced, ground & ~s)
        found.append(t)
        yield t


def transversals_via_dual(h: Hypergraph,
                          on_result: Callable[[int], None] | None = None) -> list[int]:
    """All minimal transversals, generated one duality test at a time.

    Results come out in discovery order; ``on_result`` is called for each one
    as soon as it is found.
    """
    out = []
    for t in _iter_via_dual(h):
        if on_result is not None:
            on_result(t)
        out.append(t)
    return out


STRATEGIES = ("berge", "fk")


def iter_transversals(h: Hypergraph, strategy: str = "berge") -> Iterator[int]:
    if strategy == "berge":
        return iter(transversals_berge(h))
    if strategy == "fk":
        return _iter_via_dual(h)
    raise InputError(f"unknown strategy {strategy!r}, expected one of {STRATEGIES}")


def minimal_transversals(h: Hypergraph, strategy: str = "berge") -> list[int]:
    return list(iter_transversals(h, strategy))


def hypergraph_from_sets(n: int, sets: Iterable[Iterable[int]], names=None) -> Hypergraph:
    return Hypergraph(n, tuple(bitset.make(s) for s in sets), names)
