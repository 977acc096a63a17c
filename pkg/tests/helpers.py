"""Deterministic random corpora shared by the property and acceptance tests."""
import random
from dataclasses import dataclass
from functools import lru_cache

from latdual.dualization import complementary_hypergraph
from latdual.generators import gen_random_antichain, gen_random_base
from latdual.hypergraph import Hypergraph, transversals_berge
from latdual.independence import independent_width
from latdual.oracle import brute_dual


@dataclass
class Instance:
    seed: int
    base: object
    bplus: object
    width: int
    bminus: list
    tr: list


def random_instance(seed, max_n=10, max_m=8, max_premise=3, max_antichain=5):
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    m = rng.randint(0, max_m)
    base = gen_random_base(n, m, max_premise, seed)
    bplus = gen_random_antichain(base, rng.randint(0, max_antichain), seed)
    k, _ = independent_width(base)
    tr = transversals_berge(complementary_hypergraph(base, bplus))
    return Instance(seed, base, bplus, k, brute_dual(base, bplus), tr)


@lru_cache(maxsize=None)
def corpus(count=500):
    return tuple(random_instance(seed) for seed in range(count))


def random_hypergraph(seed, max_n=8, max_edges=6):
    rng = random.Random(seed)
    n = rng.randint(0, max_n)
    edges = tuple(rng.randrange(1 << n) for _ in range(rng.randint(0, max_edges)))
    return Hypergraph(n, edges)
