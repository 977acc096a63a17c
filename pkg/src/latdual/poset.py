"""Finite posets stored as principal down-sets, and the 2+2 test."""
from __future__ import annotations

from dataclasses import dataclass

from . import bitset
from .errors import NotAPosetError


@dataclass(frozen=True)
class Poset:
    """``down[x]`` is the bit vector of ``{y : y <= x}`` (contains ``x``)."""

    names: tuple[str, ...]
    down: tuple[int, ...]

    def __post_init__(self):
        n = len(self.names)
        if len(self.down) != n:
            raise ValueError("one down-set per element required")
        for x, d in enumerate(self.down):
            if not d >> x & 1:
                raise ValueError(f"relation is not reflexive at {self.names[x]}")
            for y in bitset.iter_bits(d):
                if self.down[y] & ~d:
                    raise ValueError("relation is not transitive")
                if y != x and self.down[y] >> x & 1:
                    raise NotAPosetError((x, y), self.names)

    @classmethod
    def from_relation(cls, n: int, pairs, names=None):
        """Poset generated by ``(x, y)`` pairs meaning ``x <= y``."""
        names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        down = [1 << x for x in range(n)]
        changed = True
        for x, y in pairs:
            down[y] |= 1 << x
        while changed:
            changed = False
            for y in range(n):
                acc = down[y]
                for x in bitset.iter_bits(down[y]):
                    acc |= down[x]
                if acc != down[y]:
                    down[y] = acc
                    changed = True
        return cls(names, tuple(down))

    @property
    def n(self) -> int:
        return len(self.names)

    def leq(self, x: int, y: int) -> bool:
        return bool(self.down[y] >> x & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def ideal(self, s: int) -> int:
        """Down-set of ``s``."""
        out = 0
        for x in bitset.iter_bits(s):
            out |= self.down[x]
        return out

    def filter(self, s: int) -> int:
        """Up-set of ``s``."""
        out = 0
        for y in range(self.n):
            if self.down[y] & s:
                out |= 1 << y
        return out

    def minimal(self, s: int) -> int:
        return bitset.make(x for x in bitset.iter_bits(s) if self.down[x] & s == 1 << x)

    def maximal(self, s: int) -> int:
        return bitset.make(
            x for x in bitset.iter_bits(s)
            if not any(y != x and self.leq(x, y) for y in bitset.iter_bits(s))
        )

    def strict_pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for y in range(self.n) for x in bitset.iter_bits(self.down[y]) if x != y]

    def find_2plus2(self) -> tuple[int, int, int, int] | None:
        """Return ``(a, b, c, d)`` with ``a < b``, ``c < d`` inducing a 2+2, or None."""
        pairs = self.strict_pairs()
        for i, (a, b) in enumerate(pairs):
            for c, d in pairs[i + 1:]:
                if len({a, b, c, d}) < 4:
                    continue
                if not any(self.comparable(u, v) for u in (a, b) for v in (c, d)):
                    return a, b, c, d
        return None

    def is_interval_order(self) -> bool:
        return self.find_2plus2() is None


def is_interval_order(poset: Poset) -> bool:
    return poset.is_interval_order()
