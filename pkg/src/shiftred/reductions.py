"""The reduction maps: f_w, the embedding 2^{F_2} -> 9^{F_3}, the ball-code
encoder, and the left-free embedding 2^{F_2} -> 4^{F_3}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from math import isqrt

from .encoding import code6, pair, pattern_code, pi_apply, unpair
from .freegroup import (Word, ball, decompose_prefix_block, decompose_suffix_f2,
                        identity, index_of_word, inv, iter_words, mul, power,
                        word_of_index)
from .labelings import (STRUCTURAL, Derived, Distinct, Equal, FinSupport,
                        Labeling, QuotientPeriodic, Unknown, equal_points,
                        first_difference, restrict, shift, unshift)

C = Word(3, (3,))


# -- schedule --

class Schedule:
    """n(i,j) = j+1, m(i,j) = <i,j>+1, w(i,j) = g_{n(i,j)} g_{n(i,j+1)}^{-1}."""

    def n(self, i: int, j: int) -> int:
        return j + 1

    def m(self, i: int, j: int) -> int:
        return pair(i, j) + 1

    def w(self, i: int, j: int) -> Word:
        return mul(word_of_index(2, self.n(i, j)), inv(word_of_index(2, self.n(i, j + 1))))

    def lookup(self, m: int) -> tuple[int, int] | None:
        """The unique (i, j) with m(i, j) == m, or None."""
        if m < 1:
            return None
        return unpair(m - 1)

    def __eq__(self, other):
        return type(self) is type(other)

    def __hash__(self):
        return hash(type(self))

    def __repr__(self):
        return "Schedule()"


def default_schedule() -> Schedule:
    return Schedule()


# -- f_w --

def _require_binary_f2(x: Labeling):
    if x.rank != 2:
        raise ValueError("expected a point of 2^{F_2}")
    if x.alphabet != 2:
        raise ValueError(f"expected alphabet 2, got {x.alphabet}")
    if not x.decidable:
        raise ValueError("f_w needs a FinSupport or QuotientPeriodic point")


def _pattern_cmp(default: int):
    # lexicographic order of dense patterns in ball order, given sparsely
    # as {ball index: symbol}
    def cmp(p, q):
        for k in sorted(set(p) | set(q)):
            a, b = p.get(k, default), q.get(k, default)
            if a != b:
                return -1 if a < b else 1
        return 0
    return cmp


def _product_length(a: tuple, b: tuple) -> int:
    i, n = 0, min(len(a), len(b))
    while i < n and a[-1 - i] == -b[i]:
        i += 1
    return len(a) + len(b) - 2 * i


def _tmul(a: tuple, b: tuple) -> tuple:
    i, n = 0, min(len(a), len(b))
    while i < n and a[-1 - i] == -b[i]:
        i += 1
    return a[: len(a) - i] + b[i:]


def _fw_t_finsupport(w: Word, v: FinSupport) -> int:
    # line of roots w^j; the pattern at j is h -> v(w^j h) on B_2(1, n) and
    # differs from the all-default pattern D only at offsets h = w^{-j} s
    support = [(s.letters, val) for s, val in v._map.items()]
    words = [s for s, _ in support]
    reach = max(len(s) for s in words)
    # |w^{-j}| is non-decreasing in |j| and |w^{-j} s| >= |w^{-j}| - reach,
    # so each direction can stop once |w^{-j}| - reach exceeds the best distance
    dist: dict[int, list[int]] = {}
    best = min(len(s) for s in words)
    wl = w.letters
    for step, sign in ((inv(w).letters, 1), (wl, -1)):
        cur, j = (), 0
        while True:
            if j not in dist:
                ds = [_product_length(cur, s) for s in words]
                dist[j] = ds
                m = min(ds)
                if m < best:
                    best = m
            cur = _tmul(cur, step)
            j += sign
            if len(cur) - reach > best:
                break
    n = best
    patterns = {}
    for j, ds in dist.items():
        if min(ds) <= n:
            back = power(inv(w), j) if j >= 0 else power(w, -j)
            patterns[j] = {index_of_word(mul(back, Word._raw(2, s))): val
                           for (s, val), d in zip(support, ds) if d <= n}
    # every j outside `patterns` carries D, which is never a hit pattern
    cmp = _pattern_cmp(v.default)
    least = min(patterns.values(), key=cmp_to_key(cmp))
    if cmp(least, {}) > 0:
        # D is the least pattern: Z is cofinite, its complement has a largest element
        return max(patterns) % 2
    z = [j for j, p in patterns.items() if cmp(p, least) == 0]
    return max(z) % 2


@lru_cache(maxsize=256)
def _first_images(table, images) -> tuple[tuple[int, int], ...]:
    """(element, length) for each element of phi(F_2), in order of first
    occurrence along the enumeration of F_2."""
    q = QuotientPeriodic(2, None, table, images, (0,) * len(table))
    reachable = {q.identity_element}
    frontier = [q.identity_element]
    while frontier:
        nxt = []
        for p in frontier:
            for l in (1, -1, 2, -2):
                r = q.mul(p, q.letter_image(l))
                if r not in reachable:
                    reachable.add(r)
                    nxt.append(r)
        frontier = nxt
    found: dict[int, int] = {}
    for h in iter_words(2):
        r = q.phi(h)
        if r not in found:
            found[r] = len(h)
            if len(found) == len(reachable):
                break
    return tuple(found.items())


def _fw_t_quotient(w: Word, v: QuotientPeriodic) -> int:
    r = v.phi(w)
    period, q = 1, r
    while q != v.identity_element:
        q = v.mul(q, r)
        period += 1
    roots = [v.identity_element]
    for _ in range(period - 1):
        roots.append(v.mul(roots[-1], r))
    firsts = _first_images(v.table, v.images)
    # comparing patterns on the distinct images in first-occurrence order
    # gives the same lexicographic order as comparing them on the whole ball
    for n in range(firsts[-1][1] + 1):
        reps = [t for t, length in firsts if length <= n]
        patterns = [tuple(v.labels[v.mul(root, t)] for t in reps) for root in roots]
        if len(set(patterns)) > 1:
            break
    else:
        raise AssertionError("case II point with identical patterns along the line")
    least = min(patterns)
    in_z = [p == least for p in patterns]
    z_prime = [in_z[j] and not in_z[(j + 1) % period] for j in range(period)]
    if z_prime[0]:
        return 0
    first = next(j for j in range(1, period + 1) if z_prime[j % period])
    return 1 if first % 2 else 2


@lru_cache(maxsize=1 << 16)
def fw_root_value(w: Word, view: Labeling) -> int:
    """f_w at the root, for x already viewed from that root."""
    bit = view.eval(identity(2))
    moved = shift(inv(w), view)
    if view == moved if isinstance(view, FinSupport) else isinstance(equal_points(view, moved), Equal):
        return code6(bit, 0)
    if isinstance(view, FinSupport):
        return code6(bit, _fw_t_finsupport(w, view))
    return code6(bit, _fw_t_quotient(w, view))


def fw_value(w: Word, x: Labeling, g: Word) -> int:
    # the value only depends on x viewed from root g, i.e. on g^{-1}.x
    return fw_root_value(w, shift(inv(g), x))


def fw(w: Word, x: Labeling) -> Derived:
    if w.rank != 2 or w.is_identity():
        raise ValueError("f_w needs a non-trivial word of F_2")
    _require_binary_f2(x)
    return Derived(2, 6, lambda g: fw_value(w, x, g), "fw", (w,), (x,))


# -- embedding 2^{F_2} -> 9^{F_3} --

def embed_value(x: Labeling, s: Schedule, g: Word) -> int:
    block = decompose_prefix_block(g)
    if block is None:
        return x.eval(Word(2, g.letters))
    if block.sign < 0:
        return 2
    ij = s.lookup(block.p)
    if ij is None:
        return 2
    return fw_value(s.w(*ij), x, Word(2, block.head.letters)) + 3


def embed_2to9(x: Labeling, s: Schedule | None = None) -> Derived:
    _require_binary_f2(x)
    s = s or default_schedule()
    return Derived(3, 9, lambda g: embed_value(x, s, g), "embed", (s,), (x,))


EMBED_SCAN_LIMIT = 50_000


def _embed_view(lab):
    g, base = unshift(lab)
    if isinstance(base, Derived) and base.tag == "embed" and g.in_f2():
        return Word(2, g.letters), base
    return None


def _compare_embed_views(x, y, radius):
    """Compare g.f(x0) with g'.f(y0) for embedding images under one schedule.

    f(x0) at a position with F_2-prefix h is determined by x0 viewed from h,
    so g.f(x0) = g'.f(y0) exactly when g.x0 = g'.y0.  Inside a ball the
    difference is either at an F_2 position or at some h c^p.
    """
    vx, vy = _embed_view(x), _embed_view(y)
    if vx is None or vy is None or vx[1].params != vy[1].params:
        return None
    (gx, bx), (gy, by) = vx, vy
    sx, sy = shift(gx, bx.sources[0]), shift(gy, by.sources[0])
    if type(sx) is not type(sy) or not sx.decidable:
        return None
    v = equal_points(sx, sy)
    if isinstance(v, Equal):
        return Equal()
    d = Word(3, v.witness.letters)
    if radius is None or len(d) <= radius:
        return Distinct(d)
    sched = bx.params[0]
    budget = 0
    for p in range(radius, 0, -1):
        if sched.lookup(p) is None:
            continue
        cp = power(C, p)
        for h0 in iter_words(2, radius - p):
            pos = mul(Word(3, h0.letters), cp)
            if x.eval(pos) != y.eval(pos):
                return Distinct(pos)
            budget += 1
            if budget > EMBED_SCAN_LIMIT:
                return Unknown(radius)
    return Equal()


STRUCTURAL["embed"] = _compare_embed_views


# -- the set A --

@dataclass(frozen=True)
class Pass:
    pass


@dataclass(frozen=True)
class Counterexample:
    i: int
    j: int
    witness: Word


@dataclass(frozen=True)
class Inconclusive:
    i: int
    j: int


def check_A(y: Labeling, imax: int, jmax: int, s: Schedule | None = None,
            mmax: int | None = None):
    """Check the defining implication of A for i <= imax, j <= jmax.

    Pairs with m(i, j) > mmax are skipped when mmax is given.  Returns the
    first Counterexample, else the first Inconclusive, else Pass().
    """
    s = s or default_schedule()
    if y.rank != 3:
        raise ValueError("check_A expects a point of F_3")
    pending = None
    for i in range(imax + 1):
        for j in range(jmax + 1):
            m = s.m(i, j)
            if mmax is not None and m > mmax:
                continue
            a = shift(word_of_index(2, s.n(i, j)).lift(3), y)
            b = shift(word_of_index(2, s.n(i, j + 1)).lift(3), y)
            premise = first_difference(a, b, m)
            if isinstance(premise, Distinct):
                continue
            if isinstance(premise, Unknown):
                pending = pending or Inconclusive(i, j)
                continue
            verdict = equal_points(a, b)
            if isinstance(verdict, Distinct):
                return Counterexample(i, j, verdict.witness)
            if isinstance(verdict, Unknown):
                pending = pending or Inconclusive(i, j)
    return pending or Pass()


# -- the ball-code encoder --

class BallCode:
    """c((g_n . y) restricted to B_3(1, m)), kept symbolic.

    ``value`` materialises the integer code; comparisons go through
    :func:`first_difference` so codes of large radius stay comparable.
    """

    def __init__(self, view: Labeling, radius: int):
        self.view = view
        self.radius = radius

    @property
    def value(self) -> int:
        digits = restrict(self.view, ball(3, identity(3), self.radius))
        return pattern_code(self.radius, digits)

    def same(self, other: "BallCode") -> bool | None:
        if self.radius != other.radius:
            return False
        v = first_difference(self.view, other.view, self.radius)
        if isinstance(v, Unknown):
            return None
        return isinstance(v, Equal)

    def __repr__(self):
        return f"BallCode(m={self.radius}, {self.view!r})"


def _require_nine(y: Labeling):
    if y.rank != 3:
        raise ValueError("the encoder expects a point of F_3")
    if y.alphabet is None or y.alphabet > 9:
        raise ValueError("the encoder expects an alphabet of at most 9 symbols")


def fstar_coord(y: Labeling, k: int) -> BallCode:
    n, m = unpair(k)
    return BallCode(shift(word_of_index(2, n).lift(3), y), m)


def fstar(y: Labeling, K: int, coord=fstar_coord) -> list[BallCode]:
    _require_nine(y)
    if K < 1:
        raise ValueError("need at least one coordinate")
    return [coord(y, k) for k in range(K)]


def encode_pipeline(x: Labeling, s: Schedule | None = None, K: int = 1) -> list[BallCode]:
    return fstar(embed_2to9(x, s), K)


@dataclass(frozen=True)
class Fail:
    k: int


def verify_forward(x: Labeling, a: int, K: int, s: Schedule | None = None,
                   coord=fstar_coord, reference=None):
    """Check encode(g_a . x)[k] == encode(x)[pi_a(k)] for k < K.

    ``coord`` computes coordinates of the shifted side and ``reference``
    (defaulting to ``coord``) those of the unshifted side.
    """
    reference = reference or coord
    s = s or default_schedule()
    lhs = embed_2to9(shift(word_of_index(2, a), x), s)
    rhs = embed_2to9(x, s)
    for k in range(K):
        if coord(lhs, k).same(reference(rhs, pi_apply(a, k))) is not True:
            return Fail(k)
    return Pass()


@dataclass(frozen=True)
class RefutedUpTo:
    amax: int
    witnesses: tuple[int, ...]


@dataclass(frozen=True)
class PossiblyEquivalent:
    a: int


def refute_equivalence(x: Labeling, y: Labeling, amax: int, K: int,
                       s: Schedule | None = None):
    """For each a <= amax look for k < K with y*(k) != x*(pi_a(k))."""
    s = s or default_schedule()
    ex, ey = embed_2to9(x, s), embed_2to9(y, s)
    witnesses = []
    for a in range(amax + 1):
        for k in range(K):
            if fstar_coord(ey, k).same(fstar_coord(ex, pi_apply(a, k))) is False:
                witnesses.append(k)
                break
        else:
            return PossiblyEquivalent(a)
    return RefutedUpTo(amax, tuple(witnesses))


# -- the left-free embedding into 4^{F_3} --

def _is_square(n: int) -> bool:
    r = isqrt(n)
    return r * r == n


def z0_value(w: Word) -> int:
    return 3 if _is_square(len(w)) else 2


def z0() -> Derived:
    """3 where the word length is a perfect square, 2 elsewhere."""
    return Derived(2, 4, z0_value, "z0")


def z0_witness_bound(g: Word, gp: Word) -> int:
    u = mul(inv(g), gp)
    k = (len(u) + 2) // 2
    return k * k + len(g)


def lf_witness_bound(g: Word, gp: Word) -> int:
    """Length bound on a left-freeness witness for lf_embed images.

    Either h = g^{-1} works, or h = c p g^{-1} with p a z_0 witness for g^{-1} g'.
    """
    u = mul(inv(g), gp)
    k = (len(u) + 2) // 2
    return 1 + k * k + len(g)


def lf_value(x: Labeling, h: Word) -> int:
    split = decompose_suffix_f2(h)
    if split is None:
        return x.eval(Word(2, h.letters))
    return z0_value(split.tail)


def lf_embed(x: Labeling) -> Derived:
    if x.rank != 2:
        raise ValueError("expected a point of F_2")
    return Derived(3, 4, lambda h: lf_value(x, h), "lf_embed", (), (x,))
