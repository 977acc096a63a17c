"""Implicational bases over a finite ground set and their closure operator.

Sets are ints used as bit vectors over the ground-set indices (see
:mod:`latdual.bitset`).  A base is immutable once built; the lookup tables used
by :meth:`ImplicationalBase.closure` are computed in ``__post_init__``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from . import bitset
from .errors import InputError, NotAPosetError, UnsupportedDimensionError

NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class Implication(NamedTuple):
    premise: int
    conclusion: int

    def is_inert(self) -> bool:
        """True when the conclusion already lies in the premise."""
        return bool(self.premise >> self.conclusion & 1)


@dataclass(frozen=True)
class ImplicationalBase:
    """Ground set ``names`` plus an ordered list of unit implications.

    The order of ``implications`` is the canonical order used for every
    deterministic tie-break (``dex``, greedy width).
    """

    names: tuple[str, ...]
    implications: tuple[Implication, ...] = ()
    _occurs: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _sizes: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _axioms: int = field(init=False, repr=False, compare=False)
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        names = tuple(self.names)
        imps = tuple(Implication(int(a), int(b)) for a, b in self.implications)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "implications", imps)
        if len(set(names)) != len(names):
            raise InputError("duplicate element names")
        for name in names:
            if not NAME_RE.match(name):
                raise InputError(f"invalid element name {name!r}")
        n = len(names)
        occurs: list[list[int]] = [[] for _ in range(n)]
        axioms = 0
        for j, (a, b) in enumerate(imps):
            if not 0 <= b < n:
                raise InputError(f"implication {j}: conclusion index {b} out of range")
            bitset.check_range(a, n)
            if a == 0:
                axioms |= 1 << b
            for x in bitset.iter_bits(a):
                occurs[x].append(j)
        object.__setattr__(self, "_occurs", tuple(map(tuple, occurs)))
        object.__setattr__(self, "_sizes", tuple(bitset.popcount(a) for a, _ in imps))
        object.__setattr__(self, "_axioms", axioms)
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(names)})

    @classmethod
    def from_names(cls, names: Iterable[str], rules: Iterable[tuple[Iterable[str], str]]):
        """Build a base from ``(premise_names, conclusion_name)`` pairs."""
        names = tuple(names)
        index = {name: i for i, name in enumerate(names)}
        try:
            imps = [Implication(bitset.make(index[p] for p in prem), index[c]) for prem, c in rules]
        except KeyError as exc:
            raise InputError(f"unknown element {exc.args[0]!r}") from None
        return cls(names, tuple(imps))

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full(self) -> int:
        return bitset.full(self.n)

    def __len__(self) -> int:
        return len(self.implications)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown element {name!r}") from None

    def set_of(self, *names: str) -> int:
        """Bit vector for the given element names, e.g. ``base.set_of("1", "3")``."""
        return bitset.make(self.index(name) for name in names)

    def names_of(self, s: int) -> list[str]:
        return [self.names[i] for i in bitset.iter_bits(s)]

    def format_set(self, s: int) -> str:
        return " ".join(self.names_of(s))

    def format_implication(self, j: int) -> str:
        a, b = self.implications[j]
        return f"{self.format_set(a)} -> {self.names[b]}".lstrip()

    def dimension(self) -> int:
        """Size of the largest premise, 0 for an empty base."""
        return max(self._sizes, default=0)

    def closure(self, s: int, only: Sequence[int] | None = None) -> int:
        """Smallest closed superset of ``s``.

        Forward chaining with one unsatisfied-premise counter per implication,
        linear in the total size of the base.  ``only`` restricts the closure
        to a subset of the implications, given by position.
        """
        bitset.check_range(s, self.n)
        imps = self.implications
        if only is None:
            if not imps:
                return s
            count = list(self._sizes)
            result = s | self._axioms
            occurs = self._occurs
        else:
            allowed = set(only)
            count = [self._sizes[j] if j in allowed else -1 for j in range(len(imps))]
            result = s
            for j in allowed:
                if count[j] == 0:
                    result |= 1 << imps[j][1]
            occurs = self._occurs
        stack = list(bitset.iter_bits(result))
        while stack:
            x = stack.pop()
            for j in occurs[x]:
                c = count[j] - 1
                count[j] = c
                if c == 0:
                    b = imps[j][1]
                    if not result >> b & 1:
                        result |= 1 << b
                        stack.append(b)
        return result

    def is_closed(self, s: int) -> bool:
        bitset.check_range(s, self.n)
        for a, b in self.implications:
            if a & ~s == 0 and not s >> b & 1:
                return False
        return True

    def implication_graph(self) -> dict[int, set[int]]:
        """Arcs x -> b for every x in a premise of an implication concluding b.

        Inert implications (conclusion inside the premise) add no arc.
        """
        arcs: dict[int, set[int]] = {x: set() for x in range(self.n)}
        for imp in self.implications:
            if imp.is_inert():
                continue
            for x in bitset.iter_bits(imp.premise):
                arcs[x].add(imp.conclusion)
        return arcs

    def is_acyclic(self) -> bool:
        return _find_cycle(self.implication_graph()) is None

    def underlying_poset(self):
        """Order ``x <= y`` iff ``y -> x`` (reflexive-transitive closure).

        Only defined for bases whose premises are all singletons; in that case
        ``closure(S)`` is the down-set of ``S``.
        """
        from .poset import Poset

        for j, (a, b) in enumerate(self.implications):
            size = self._sizes[j]
            if size > 1:
                raise UnsupportedDimensionError(
                    f"underlying poset needs dimension <= 1, got {self.dimension()}"
                )
            if size == 0:
                raise UnsupportedDimensionError(
                    f"implication {j} has an empty premise; no underlying poset"
                )
        # arcs y -> x mean x <= y
        arcs = self.implication_graph()
        cycle = _find_cycle(arcs)
        if cycle is not None:
            raise NotAPosetError(cycle, self.names)
        down = [1 << x for x in range(self.n)]
        for x in _topological_sinks_first(arcs):
            for y in arcs[x]:
                down[x] |= down[y]
        return Poset(self.names, tuple(down))


def _find_cycle(arcs: dict[int, set[int]]) -> list[int] | None:
    """Return one directed cycle as a vertex list, or None."""
    WHITE, GREY, BLACK = 0, 1, 2
    colour = dict.fromkeys(arcs, WHITE)
    for root in sorted(arcs):
        if colour[root] != WHITE:
            continue
        path = [root]
        iters = [iter(sorted(arcs[root]))]
        colour[root] = GREY
        while iters:
            nxt = next(iters[-1], None)
            if nxt is None:
                colour[path.pop()] = BLACK
                iters.pop()
            elif colour[nxt] == GREY:
                return path[path.index(nxt):]
            elif colour[nxt] == WHITE:
                colour[nxt] = GREY
                path.append(nxt)
                iters.append(iter(sorted(arcs[nxt])))
    return None


def _topological_sinks_first(arcs: dict[int, set[int]]) -> list[int]:
    order: list[int] = []
    seen: set[int] = set()
    for root in sorted(arcs):
        if root in seen:
            continue
        seen.add(root)
        stack = [(root, iter(sorted(arcs[root])))]
        while stack:
            v, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                order.append(v)
                stack.pop()
            elif nxt not in seen:
                seen.add(nxt)
                stack.append((nxt, iter(sorted(arcs[nxt]))))
    return order
