"""E_0 on eventually periodic sequences, product relations, orbit samples."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Callable, Sequence

from .freegroup import Word, identity, inv, mul
from .labelings import Distinct, Equal, Labeling, equal_points, shift


@dataclass(frozen=True)
class EvPeriodicSeq:
    """x(n) = preperiod[n] for n < len(preperiod), then period repeated."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("period must be non-empty")

    def __getitem__(self, n: int) -> int:
        if n < len(self.preperiod):
            return self.preperiod[n]
        return self.period[(n - len(self.preperiod)) % len(self.period)]


def e0_equiv(x: EvPeriodicSeq, y: EvPeriodicSeq) -> bool:
    # past both preperiods the pair (x(n), y(n)) is periodic with period lcm
    start = max(len(x.preperiod), len(y.preperiod))
    window = lcm(len(x.period), len(y.period))
    return all(x[n] == y[n] for n in range(start, start + window))


# A relation handle answers True, False, or None (unknown).
Relation = Callable[[object, object], "bool | None"]


def product_equiv(relations: Sequence[Relation], left: Sequence, right: Sequence) -> bool | None:
    """(x_1, ..., x_n) ~ (y_1, ..., y_n) iff x_i ~_i y_i for every i.

    A definite False wins over an unknown component; otherwise an unknown
    component makes the answer unknown.
    """
    if not len(relations) == len(left) == len(right):
        raise ValueError("product relation arity mismatch")
    unknown = False
    for rel, a, b in zip(relations, left, right):
        v = rel(a, b)
        if v is False:
            return False
        if v is None:
            unknown = True
    return None if unknown else True


def point_relation(budget: int = 4) -> Relation:
    """Equality of points as a relation handle (None when undecided)."""
    def rel(x, y):
        v = equal_points(x, y, budget)
        if isinstance(v, Equal):
            return True
        if isinstance(v, Distinct):
            return False
        return None
    return rel


@dataclass(frozen=True)
class OrbitEntry:
    g: Word
    point: Labeling
    same_as: int | None      # index of an earlier entry with an equal point
    undecided: tuple[int, ...] = ()


def generator_ball(generators: Sequence[Word], depth: int) -> list[Word]:
    """Distinct products of at most ``depth`` generators and inverses, breadth first."""
    if not generators:
        return []
    rank = generators[0].rank
    steps = []
    for g in generators:
        steps += [g, inv(g)]
    seen = {identity(rank)}
    out = [identity(rank)]
    layer = [identity(rank)]
    for _ in range(depth):
        nxt = []
        for w in layer:
            for st in steps:
                v = mul(w, st)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        out += nxt
        layer = nxt
    return out


def orbit_sample(generators: Sequence[Word], x: Labeling, depth: int,
                 budget: int = 4) -> list[OrbitEntry]:
    if depth < 0:
        raise ValueError("depth must be non-negative")
    gens = [g if g.rank == x.rank else g.lift(x.rank) for g in generators]
    words = generator_ball(gens, depth) if gens else [identity(x.rank)]
    entries: list[OrbitEntry] = []
    for g in words:
        p = shift(g, x)
        same, undecided = None, []
        for idx, e in enumerate(entries):
            v = equal_points(e.point, p, budget)
            if isinstance(v, Equal):
                same = idx
                break
            if not isinstance(v, Distinct):
                undecided.append(idx)
        entries.append(OrbitEntry(g, p, same, tuple(undecided)))
    return entries
