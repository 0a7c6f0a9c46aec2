"""Brute-force reference computations used to cross-check the fast paths.

Nothing here calls the structural machinery in ``labelings``/``reductions``;
everything is dense evaluation over explicit windows and balls.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import lcm

from .encoding import code6
from .freegroup import Word, inv, iter_words, mul, reduce


def _line_patterns(w: Word, x, g: Word, span: int, max_radius: int):
    """Dense patterns p_j(h) = x(g w^j h) on the smallest ball where they differ.

    Returns (n, {j: pattern}) or None when all patterns agree up to max_radius.
    """
    roots = {0: g}
    for j in range(1, span + 1):
        roots[j] = mul(roots[j - 1], w)
        roots[-j] = mul(roots[-j + 1], inv(w))
    # all patterns agree iff p_0 and p_1 agree (the line is w-invariant)
    if all(x.eval(mul(roots[0], h)) == x.eval(mul(roots[1], h))
           for n in range(max_radius + 1) for h in _shell(g.rank, n)):
        return None
    pats = {j: () for j in roots}
    for n in range(max_radius + 1):
        shell = _shell(g.rank, n)
        for j in roots:
            pats[j] = pats[j] + tuple(x.eval(mul(roots[j], h)) for h in shell)
        if len(set(pats.values())) > 1:
            return n, pats
    raise AssertionError("p_0 and p_1 differ but the window patterns agree")


@lru_cache(maxsize=32)
def _shell(rank: int, n: int) -> tuple[Word, ...]:
    return tuple(h for h in iter_words(rank, n) if len(h) == n)


def fw_periodic_bruteforce(w: Word, x, g: Word, order: int) -> int:
    """f_w(x)(g) for a point factoring through a group of the given order.

    The window is j in [-2*order, 2*order]; patterns along the line are
    periodic with period dividing the order, so the window holds at least two
    full periods on each side of 0.
    """
    span = 2 * order
    # the image of F_2 has at most `order` elements, all reached by words of
    # length < order, so patterns on B_2(1, order - 1) already separate roots
    found = _line_patterns(w, x, g, span, max(order - 1, 0))
    bit = x.eval(g)
    if found is None:
        return code6(bit, 0)
    _, pats = found
    least = min(pats.values())
    z = {j for j, p in pats.items() if p == least}
    z_prime = {j for j in range(-span, span) if j in z and j + 1 not in z}
    if 0 in z_prime:
        return code6(bit, 0)
    first = min(j for j in z_prime if j > 0)
    return code6(bit, 1 if first % 2 else 2)


def fw_finsupport_bruteforce(w: Word, x, g: Word, span: int, max_radius: int) -> int:
    """f_w(x)(g) for a finite-support point, scanning j in [-span, span].

    ``span`` must be large enough that both window ends lie outside the
    support's reach (the patterns there are all-default).
    """
    found = _line_patterns(w, x, g, span, max_radius)
    bit = x.eval(g)
    if found is None:
        return code6(bit, 0)
    _, pats = found
    ends = {pats[-span], pats[span]}
    if len(ends) != 1:
        raise ValueError("window too small: end patterns differ")
    least = min(pats.values())
    z = sorted(j for j, p in pats.items() if p == least)
    if least not in ends:
        t = z[-1] % 2
    else:
        t = max(j for j, p in pats.items() if p != least) % 2
    return code6(bit, t)


def reduced_words_bruteforce(rank: int, max_length: int) -> set[Word]:
    """All reduced words of length <= max_length, by reducing every letter string."""
    letters = [l for i in range(1, rank + 1) for l in (i, -i)]
    out = set()
    for n in range(max_length + 1):
        for raw in product(letters, repeat=n):
            out.add(reduce(rank, raw))
    return out


def e0_tail_bruteforce(x, y) -> bool:
    """Agreement on a long stretch after 4*(|pre| + lcm) symbols' worth of prefix."""
    pre = max(len(x.preperiod), len(y.preperiod))
    n = 4 * (pre + lcm(len(x.period), len(y.period)))
    # sequences agree eventually iff they agree on [n/2, n)
    return all(x[i] == y[i] for i in range(n // 2, n))
