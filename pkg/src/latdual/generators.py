"""Instance generators and the exhaustive one-in-three solver."""
from __future__ import annotations

import random
from dataclasses import dataclass

from . import bitset
from .base import ImplicationalBase, Implication
from .errors import InputError, SizeLimitError


@dataclass(frozen=True)
class PositiveFormula:
    """Positive 3-CNF: ``clauses[j]`` holds three distinct 0-based variables."""

    n: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        clauses = tuple(tuple(c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        used = set()
        for j, c in enumerate(clauses):
            if len(c) != 3 or len(set(c)) != 3:
                raise InputError(f"clause {j + 1} must hold three distinct variables")
            for v in c:
                if not 0 <= v < self.n:
                    raise InputError(f"clause {j + 1}: variable {v + 1} out of range")
            used.update(c)
        missing = sorted(set(range(self.n)) - used)
        if missing:
            raise InputError(f"variable x{missing[0] + 1} appears in no clause")

    @property
    def m(self) -> int:
        return len(self.clauses)


def gen_fig2(n: int):
    """Base ``u_i -> v_i`` with ``B+ = {X - {u_i, v_i}}``.

    Its complementary hypergraph has ``2^n`` minimal transversals while the
    dual antichain is the single set ``{v_1..v_n}``.
    """
    from .dualization import Antichain

    if n < 1:
        raise InputError("n must be at least 1")
    names = tuple(f"{p}{i}" for i in range(1, n + 1) for p in ("u", "v"))
    imps = tuple(Implication(1 << 2 * i, 2 * i + 1) for i in range(n))
    full = bitset.full(2 * n)
    bplus = Antichain(tuple(full & ~(0b11 << 2 * i) for i in range(n)))
    return ImplicationalBase(names, imps), bplus


def gen_one_in_three(f: PositiveFormula):
    """Base, ``B+`` and ``B-`` whose non-duality encodes a one-in-three assignment.

    Ground set ``x1..xn, y1..ym, z``.  Per clause ``(a, b, c)`` the seven
    implications are, in order: ``ab->z``, ``ac->z``, ``bc->z``, ``za->y``,
    ``zb->y``, ``zc->y``, ``y->z``.  ``B+`` holds ``X - {y_j, a, b, c}`` per
    clause and ``B-`` the single set ``{y1..ym, z}``.
    """
    from .dualization import Antichain

    if not isinstance(f, PositiveFormula):
        raise InputError("expected a PositiveFormula")
    n, m = f.n, f.m
    names = tuple([f"x{i + 1}" for i in range(n)] + [f"y{j + 1}" for j in range(m)] + ["z"])
    z = n + m
    imps = []
    for j, (a, b, c) in enumerate(f.clauses):
        y = n + j
        imps += [
            Implication(1 << a | 1 << b, z),
            Implication(1 << a | 1 << c, z),
            Implication(1 << b | 1 << c, z),
            Implication(1 << z | 1 << a, y),
            Implication(1 << z | 1 << b, y),
            Implication(1 << z | 1 << c, y),
            Implication(1 << y, z),
        ]
    full = bitset.full(n + m + 1)
    bplus = tuple(full & ~(1 << (n + j) | bitset.make(c)) for j, c in enumerate(f.clauses))
    bminus = (bitset.make(range(n, n + m)) | 1 << z,)
    return ImplicationalBase(names, tuple(imps)), Antichain(bplus), Antichain(bminus)


def one_in_three_solve(f: PositiveFormula, guard: int = 20) -> int | None:
    """First variable set, in increasing bit-vector order, meeting every clause once."""
    if f.n > guard:
        raise SizeLimitError(f"{f.n} variables exceed the guard {guard}")
    masks = [bitset.make(c) for c in f.clauses]
    for s in range(1 << f.n):
        if all(bitset.popcount(s & c) == 1 for c in masks):
            return s
    return None


def gen_random_formula(n: int, m: int, seed) -> PositiveFormula:
    """Random positive 3-CNF using every one of ``n`` variables (needs ``3 <= n <= 3m``)."""
    if not 3 <= n <= 3 * m:
        raise InputError("need 3 <= n <= 3m so that every variable can appear")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    clauses = []
    for j in range(m):
        clause = order[3 * j:3 * j + 3]
        while len(clause) < 3:
            v = rng.randrange(n)
            if v not in clause:
                clause.append(v)
        rng.shuffle(clause)
        clauses.append(tuple(clause))
    rng.shuffle(clauses)
    return PositiveFormula(n, tuple(clauses))


def gen_random_base(n: int, m: int, max_premise: int, seed, names=None) -> ImplicationalBase:
    """``m`` implications with premises of 1..max_premise elements and a conclusion outside."""
    if n < 0 or m < 0 or max_premise < 1:
        raise InputError("need n, m >= 0 and max_premise >= 1")
    rng = random.Random(seed)
    names = tuple(names) if names is not None else tuple(str(i + 1) for i in range(n))
    imps = []
    for _ in range(m if n >= 2 else 0):
        size = rng.randint(1, min(max_premise, n - 1))
        premise = rng.sample(range(n), size)
        conclusion = rng.choice([x for x in range(n) if x not in premise])
        imps.append(Implication(bitset.make(premise), conclusion))
    return ImplicationalBase(names, tuple(imps))


def random_intervals(n: int, seed) -> list[tuple[int, int]]:
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        a, b = rng.randint(0, 4 * n), rng.randint(0, 4 * n)
        out.append((min(a, b), max(a, b)))
    return out


def gen_interval_order(n: int, seed) -> ImplicationalBase:
    """Dimension-one base of a random interval order.

    ``x < y`` iff interval ``x`` ends strictly before ``y`` starts; the base
    holds ``y -> x`` for each covering pair only.
    """
    intervals = random_intervals(n, seed)
    below = [bitset.make(x for x in range(n) if intervals[x][1] < intervals[y][0])
             for y in range(n)]
    imps = []
    for y in range(n):
        for x in bitset.iter_bits(below[y]):
            # x is covered by y unless some z sits strictly between them
            if not any(below[z] >> x & 1 for z in bitset.iter_bits(below[y])):
                imps.append(Implication(1 << y, x))
    names = tuple(f"e{i + 1}" for i in range(n))
    return ImplicationalBase(names, tuple(imps))


def gen_random_antichain(base: ImplicationalBase, size: int, seed,
                         max_generators: int = 3, attempts: int = 2000):
    """Up to ``size`` pairwise incomparable closed sets.

    Candidates are closures of random sets of 1..max_generators elements,
    kept when incomparable with everything chosen so far.  Fewer than
    ``size`` members come back if ``attempts`` candidates do not suffice.
    """
    from .dualization import Antichain

    rng = random.Random(seed)
    chosen: list[int] = []
    n = base.n
    if n == 0 or size <= 0:
        return Antichain(())
    for _ in range(attempts):
        if len(chosen) >= size:
            break
        k = rng.randint(1, min(max_generators, n))
        c = base.closure(bitset.make(rng.sample(range(n), k)))
        if all(c & ~d and d & ~c for d in chosen):
            chosen.append(c)
    return Antichain(tuple(chosen))
