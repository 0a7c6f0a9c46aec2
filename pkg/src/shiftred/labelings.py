"""Finitely described points of X^{F_k} and the left shift action on them.

Three point classes are supported:

* :class:`FinSupport` -- a default symbol except on finitely many words;
* :class:`QuotientPeriodic` -- ``x(g) = label(phi(g))`` for a homomorphism
  ``phi`` onto a finite group given by its multiplication table;
* :class:`Derived` -- an evaluation closure with a provenance tag, used for
  shifted points and for images under the reductions.

Equality of two FinSupport points, or of two QuotientPeriodic points, is
decided exactly.  Everything else is compared on a finite ball and may come
back :class:`Unknown`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .freegroup import Ball, Word, identity, index_of_word, inv, iter_words, mul


@dataclass(frozen=True)
class Equal:
    pass


@dataclass(frozen=True)
class Distinct:
    witness: Word


@dataclass(frozen=True)
class Unknown:
    budget: int


Verdict = Equal | Distinct | Unknown

DEFAULT_BUDGET = 4


class Labeling:
    rank: int
    alphabet: int | None  # None means N-valued

    def eval(self, g: Word) -> int:
        if g.rank != self.rank:
            raise ValueError(f"rank mismatch: point in F_{self.rank}, word in F_{g.rank}")
        return self._eval(g)

    def _eval(self, g: Word) -> int:
        raise NotImplementedError

    @property
    def decidable(self) -> bool:
        return False


def _check_symbol(v: int, alphabet: int | None):
    if v < 0 or (alphabet is not None and v >= alphabet):
        raise ValueError(f"symbol {v} outside alphabet {alphabet}")


class FinSupport(Labeling):
    """``default`` everywhere except on the finitely many words in ``mapping``."""

    __slots__ = ("rank", "alphabet", "default", "_map", "_key")

    def __init__(self, rank: int, alphabet: int | None, default: int,
                 support: Iterable[tuple[Word, int]] = ()):
        _check_symbol(default, alphabet)
        m = {}
        for w, v in support:
            if w.rank != rank:
                raise ValueError(f"support word {w} has rank {w.rank}, expected {rank}")
            _check_symbol(v, alphabet)
            if v != default:
                m[w] = v
        self.rank, self.alphabet, self.default = rank, alphabet, default
        self._map = m
        self._key = None

    @classmethod
    def from_dict(cls, rank, alphabet, default, mapping) -> "FinSupport":
        return cls(rank, alphabet, default, mapping.items())

    @classmethod
    def _translated(cls, x: "FinSupport", g: Word) -> "FinSupport":
        out = object.__new__(cls)
        out.rank, out.alphabet, out.default = x.rank, x.alphabet, x.default
        out._map = {mul(g, w): v for w, v in x._map.items()}
        out._key = None
        return out

    @property
    def support(self) -> tuple[tuple[Word, int], ...]:
        """Non-default entries in enumeration order."""
        return tuple(sorted(self._map.items(), key=lambda kv: index_of_word(kv[0])))

    def _ident(self):
        if self._key is None:
            self._key = (self.rank, self.alphabet, self.default, frozenset(self._map.items()))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, FinSupport):
            return NotImplemented
        return self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        items = ", ".join(f"{w}: {v}" for w, v in self.support)
        return f"FinSupport(k={self.rank}, alphabet={self.alphabet}, default={self.default}, {{{items}}})"

    def _eval(self, g):
        return self._map.get(g, self.default)

    @property
    def decidable(self):
        return True

    def radius(self) -> int:
        return max((len(w) for w in self._map), default=0)


@dataclass(frozen=True, eq=False)
class QuotientPeriodic(Labeling):
    """x(g) = labels[phi(g)], phi given by the images of the generators."""

    rank: int
    alphabet: int | None
    table: tuple[tuple[int, ...], ...]
    images: tuple[int, ...]
    labels: tuple[int, ...]
    _e: int = field(init=False, repr=False, compare=False)
    _inverse: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _limg: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.table)
        if n == 0 or any(len(row) != n for row in self.table):
            raise ValueError("group table must be a non-empty square table")
        if any(not 0 <= v < n for row in self.table for v in row):
            raise ValueError("group table entries out of range")
        es = [e for e in range(n) if all(self.table[e][q] == q == self.table[q][e] for q in range(n))]
        if not es:
            raise ValueError("group table has no identity element")
        e = es[0]
        inverse = []
        for q in range(n):
            cands = [r for r in range(n) if self.table[q][r] == e]
            if not cands:
                raise ValueError(f"element {q} has no inverse")
            inverse.append(cands[0])
        for p in range(n):
            for q in range(n):
                for r in range(n):
                    t = self.table
                    if t[t[p][q]][r] != t[p][t[q][r]]:
                        raise ValueError("group table is not associative")
        if len(self.images) != self.rank:
            raise ValueError(f"need {self.rank} generator images, got {len(self.images)}")
        if any(not 0 <= q < n for q in self.images):
            raise ValueError("generator image out of range")
        if len(self.labels) != n:
            raise ValueError(f"label map must cover all {n} group elements")
        for v in self.labels:
            _check_symbol(v, self.alphabet)
        object.__setattr__(self, "_e", e)
        object.__setattr__(self, "_inverse", tuple(inverse))
        self._set_letter_images()

    def _set_letter_images(self):
        limg = {}
        for i, q in enumerate(self.images):
            limg[i + 1], limg[-i - 1] = q, self._inverse[q]
        object.__setattr__(self, "_limg", limg)

    def _relabel(self, labels: tuple[int, ...]) -> "QuotientPeriodic":
        # same group data, already validated; only the labels change
        out = object.__new__(QuotientPeriodic)
        for name in ("rank", "alphabet", "table", "images", "_e", "_inverse", "_limg"):
            object.__setattr__(out, name, getattr(self, name))
        object.__setattr__(out, "labels", labels)
        return out

    def __eq__(self, other):
        if not isinstance(other, QuotientPeriodic):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (self.rank, self.alphabet, self.table, self.images, self.labels)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity_element(self) -> int:
        return self._e

    def mul(self, p: int, q: int) -> int:
        return self.table[p][q]

    def inverse(self, q: int) -> int:
        return self._inverse[q]

    def letter_image(self, letter: int) -> int:
        return self._limg[letter]

    def phi(self, g: Word) -> int:
        q, table, limg = self._e, self.table, self._limg
        for l in g.letters:
            q = table[q][limg[l]]
        return q

    def _eval(self, g):
        return self.labels[self.phi(g)]

    @property
    def decidable(self):
        return True


def cyclic_table(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple((p + q) % n for q in range(n)) for p in range(n))


def cyclic(rank, alphabet, n, images, labels) -> QuotientPeriodic:
    return QuotientPeriodic(rank, alphabet, cyclic_table(n), tuple(images), tuple(labels))


class Derived(Labeling):
    """A point given by an evaluation closure.

    ``tag`` names the construction, ``params`` its parameters and ``sources``
    the points it was built from.  The closure must be pure.
    """

    def __init__(self, rank, alphabet, fn: Callable[[Word], int], tag: str,
                 params: tuple = (), sources: tuple = ()):
        self.rank = rank
        self.alphabet = alphabet
        self._fn = fn
        self.tag = tag
        self.params = params
        self.sources = sources

    def _eval(self, g):
        return self._fn(g)

    def __repr__(self):
        ps = ", ".join(str(p) for p in self.params)
        return f"Derived({self.tag}[{ps}], k={self.rank})"


def constant(rank: int, alphabet: int | None, value: int = 0) -> FinSupport:
    return FinSupport(rank, alphabet, value, ())


def _as_rank(g: Word, rank: int) -> Word:
    return g if g.rank == rank else g.lift(rank)


# -- shift action: (g.x)(h) = x(g^{-1} h) --

def shift(g: Word, x: Labeling) -> Labeling:
    g = _as_rank(g, x.rank)
    if g.is_identity():
        return x
    if isinstance(x, FinSupport):
        return FinSupport._translated(x, g)
    if isinstance(x, QuotientPeriodic):
        gi = x.inverse(x.phi(g))
        row = x.table[gi]
        return x._relabel(tuple(x.labels[row[q]] for q in range(x.order)))
    if isinstance(x, Derived) and x.tag == "shift":
        # g.(g2.base) = (g g2).base
        (g2,), (base,) = x.params, x.sources
        return shift(mul(g, g2), base)
    gi = inv(g)
    return Derived(x.rank, x.alphabet, lambda h: x.eval(mul(gi, h)), "shift", (g,), (x,))


def unshift(x: Labeling) -> tuple[Word, Labeling]:
    """Split a point into (g, base) with x = g.base and base not a shift image."""
    if isinstance(x, Derived) and x.tag == "shift":
        return x.params[0], x.sources[0]
    return identity(x.rank), x


def restrict(x: Labeling, b: Ball) -> list[int]:
    if b.rank != x.rank:
        raise ValueError(f"ball in F_{b.rank} but point in F_{x.rank}")
    return [x.eval(g) for g in b.elements]


# -- equality of points --

# Structural comparators for Derived families: tag -> fn(x, y, radius).
# A comparator returns None when it does not apply, otherwise a Verdict
# restricted to the ball of the given radius (radius None = everywhere).
STRUCTURAL: dict[str, Callable] = {}


def _finsupport_diff(x: FinSupport, y: FinSupport) -> Word | None:
    cands = set(x._map) | set(y._map)
    if x.default != y.default:
        for w in iter_words(x.rank):
            if w not in cands:
                cands.add(w)
                break
    diffs = [w for w in cands if x._eval(w) != y._eval(w)]
    return min(diffs, key=index_of_word) if diffs else None


def _quotient_diff(x: QuotientPeriodic, y: QuotientPeriodic) -> Word | None:
    # breadth-first walk of the image of F_k in Q_x x Q_y; the first
    # differing node reached carries the least differing word
    start = (x.identity_element, y.identity_element)
    seen = {start}
    queue = deque([(start, ())])
    letters = [l for i in range(1, x.rank + 1) for l in (i, -i)]
    while queue:
        (p, q), word = queue.popleft()
        if x.labels[p] != y.labels[q]:
            return Word(x.rank, word)
        for l in letters:
            if word and word[-1] == -l:
                continue
            nxt = (x.mul(p, x.letter_image(l)), y.mul(q, y.letter_image(l)))
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, word + (l,)))
    return None


def _check_compatible(x: Labeling, y: Labeling):
    if x.rank != y.rank:
        raise ValueError(f"rank mismatch: {x.rank} vs {y.rank}")
    if x.alphabet != y.alphabet:
        raise ValueError(f"alphabet mismatch: {x.alphabet} vs {y.alphabet}")


def _structural(x, y, radius):
    for lab in (x, y):
        _, base = unshift(lab)
        if isinstance(base, Derived) and base.tag in STRUCTURAL:
            out = STRUCTURAL[base.tag](x, y, radius)
            if out is not None:
                return out
    return None


def scan_difference(x: Labeling, y: Labeling, radius: int,
                    words: Iterable[Word] | None = None) -> Word | None:
    for g in (iter_words(x.rank, radius) if words is None else words):
        if x.eval(g) != y.eval(g):
            return g
    return None


def equal_points(x: Labeling, y: Labeling, budget: int = DEFAULT_BUDGET) -> Verdict:
    _check_compatible(x, y)
    if x is y:
        return Equal()
    if isinstance(x, FinSupport) and isinstance(y, FinSupport):
        d = _finsupport_diff(x, y)
        return Equal() if d is None else Distinct(d)
    if isinstance(x, QuotientPeriodic) and isinstance(y, QuotientPeriodic):
        d = _quotient_diff(x, y)
        return Equal() if d is None else Distinct(d)
    out = _structural(x, y, None)
    if out is not None:
        return out
    d = scan_difference(x, y, budget)
    return Unknown(budget) if d is None else Distinct(d)


def first_difference(x: Labeling, y: Labeling, radius: int) -> Verdict:
    """Compare x and y on B(1, radius).

    Equal means the two points agree on the whole ball, Distinct carries a
    differing word inside it.  Unknown is only returned by structural
    comparators that gave up.
    """
    _check_compatible(x, y)
    if x is y:
        return Equal()
    if x.decidable and y.decidable and type(x) is type(y):
        v = equal_points(x, y)
        if isinstance(v, Distinct) and len(v.witness) > radius:
            return Equal()
        return v
    out = _structural(x, y, radius)
    if out is not None:
        return out
    d = scan_difference(x, y, radius)
    return Equal() if d is None else Distinct(d)


# -- freeness --

def left_free_witness(x: Labeling, g: Word, gp: Word, radius: int) -> Word | None:
    """Some h with |h| <= radius and x(hg) != x(hg'), or None."""
    g, gp = _as_rank(g, x.rank), _as_rank(gp, x.rank)
    if g == gp:
        raise ValueError("left_free_witness needs distinct g and g'")
    for h in iter_words(x.rank, radius):
        if x.eval(mul(h, g)) != x.eval(mul(h, gp)):
            return h
    return None


def free_witness(x: Labeling, g: Word, budget: int = DEFAULT_BUDGET) -> Word | None:
    """Some h with |h| <= budget and (g.x)(h) != x(h), or None."""
    g = _as_rank(g, x.rank)
    if g.is_identity():
        raise ValueError("free_witness needs g != 1")
    gx = shift(g, x)
    for h in iter_words(x.rank, budget):
        if gx.eval(h) != x.eval(h):
            return h
    return None


__all__ = [
    "Labeling", "FinSupport", "QuotientPeriodic", "Derived", "Equal", "Distinct",
    "Unknown", "Verdict", "cyclic", "cyclic_table", "constant", "shift", "unshift",
    "restrict", "equal_points", "first_difference", "scan_difference",
    "left_free_witness", "free_witness", "STRUCTURAL",
]
