"""Random decidable points drawn from a SplitMix64 stream."""

from __future__ import annotations

from itertools import permutations

from .freegroup import iter_words
from .labelings import FinSupport, QuotientPeriodic, cyclic_table
from .rng import SplitMix64


def _s3_table():
    elems = list(permutations(range(3)))
    index = {p: i for i, p in enumerate(elems)}
    # (p*q)(i) = p(q(i))
    return tuple(tuple(index[tuple(p[q[i]] for i in range(3))] for q in elems) for p in elems)


def _klein_table():
    return tuple(tuple(p ^ q for q in range(4)) for p in range(4))


GROUPS = [("Z1", cyclic_table(1)), ("Z2", cyclic_table(2)), ("Z3", cyclic_table(3)),
          ("Z4", cyclic_table(4)), ("V4", _klein_table()), ("Z5", cyclic_table(5)),
          ("Z6", cyclic_table(6)), ("S3", _s3_table())]


def random_finsupport(rng: SplitMix64, rank: int = 2, alphabet: int = 2,
                      radius: int = 3, max_keys: int = 4, nonempty: bool = True) -> FinSupport:
    words = list(iter_words(rank, radius))
    default = rng.below(alphabet)
    lo = 1 if nonempty else 0
    count = lo + rng.below(max_keys - lo + 1)
    mapping = {}
    for w in rng.sample(words, count):
        v = rng.below(alphabet - 1)
        mapping[w] = v if v < default else v + 1
    return FinSupport.from_dict(rank, alphabet, default, mapping)


def random_quotient(rng: SplitMix64, rank: int = 2, alphabet: int = 2,
                    max_order: int = 6) -> QuotientPeriodic:
    choices = [t for _, t in GROUPS if len(t) <= max_order]
    table = rng.choice(choices)
    n = len(table)
    images = tuple(rng.below(n) for _ in range(rank))
    labels = tuple(rng.below(alphabet) for _ in range(n))
    return QuotientPeriodic(rank, alphabet, table, images, labels)
