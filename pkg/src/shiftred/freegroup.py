"""Reduced words in the free groups F_2 and F_3.

Letters are signed generator indices: generator ``i`` (0-based) is stored as
``i + 1`` and its inverse as ``-(i + 1)``.  Text rendering uses a/A/b/B/c/C,
with the empty word rendered as ``1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

RANKS = (2, 3)
_CHARS = "aAbBcC"


def _letter_pos(letter: int) -> int:
    # position in the fixed letter order a < A < b < B < c < C
    return 2 * (abs(letter) - 1) + (letter < 0)


def _letters_in_order(rank: int) -> tuple[int, ...]:
    return tuple(l for i in range(1, rank + 1) for l in (i, -i))


@dataclass(frozen=True, slots=True)
class Word:
    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank not in RANKS:
            raise ValueError(f"rank must be 2 or 3, got {self.rank}")
        prev = 0
        for l in self.letters:
            if l == 0 or abs(l) > self.rank:
                raise ValueError(f"invalid letter {l} for rank {self.rank}")
            if l == -prev:
                raise ValueError("letters are not reduced; use reduce()")
            prev = l

    @classmethod
    def _raw(cls, rank: int, letters: tuple[int, ...]) -> "Word":
        # trusted constructor for letters already known to be reduced
        w = object.__new__(cls)
        object.__setattr__(w, "rank", rank)
        object.__setattr__(w, "letters", letters)
        return w

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return mul(self, other)

    def __invert__(self) -> "Word":
        return inv(self)

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({self.rank}, {format_word(self)!r})"

    def is_identity(self) -> bool:
        return not self.letters

    def lift(self, rank: int) -> "Word":
        """The same word viewed in a free group of (at least) the given rank."""
        if rank < self.rank:
            if any(abs(l) > rank for l in self.letters):
                raise ValueError(f"{self} is not in F_{rank}")
        return Word(rank, self.letters)

    def in_f2(self) -> bool:
        return all(abs(l) <= 2 for l in self.letters)


def identity(rank: int) -> Word:
    return Word(rank, ())


def generators(rank: int) -> list[Word]:
    """Generators and their inverses in letter order (a, A, b, B[, c, C])."""
    return [Word(rank, (l,)) for l in _letters_in_order(rank)]


def reduce(rank: int, letters) -> Word:
    if rank not in RANKS:
        raise ValueError(f"rank must be 2 or 3, got {rank}")
    out: list[int] = []
    for l in letters:
        if l == 0 or abs(l) > rank:
            raise ValueError(f"invalid letter {l} for rank {rank}")
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return Word(rank, tuple(out))


def mul(x: Word, y: Word) -> Word:
    if x.rank != y.rank:
        raise ValueError(f"rank mismatch: {x.rank} vs {y.rank}")
    a, b = x.letters, y.letters
    i = 0
    n = min(len(a), len(b))
    while i < n and a[-1 - i] == -b[i]:
        i += 1
    return Word._raw(x.rank, a[: len(a) - i] + b[i:])


def inv(x: Word) -> Word:
    return Word._raw(x.rank, tuple(-l for l in reversed(x.letters)))


def power(x: Word, n: int) -> Word:
    base = x if n >= 0 else inv(x)
    out = identity(x.rank)
    for _ in range(abs(n)):
        out = mul(out, base)
    return out


def powers(x: Word, lo: int, hi: int) -> dict[int, Word]:
    """{j: x^j} for lo <= j <= hi (lo <= 0 <= hi)."""
    out = {0: identity(x.rank)}
    xi = inv(x)
    for j in range(1, hi + 1):
        out[j] = mul(out[j - 1], x)
    for j in range(-1, lo - 1, -1):
        out[j] = mul(out[j + 1], xi)
    return out


def parse_word(text: str, rank: int) -> Word:
    """Parse a/A/b/B/c/C text (``1`` or the empty string is the identity).

    The input need not be reduced; whitespace is ignored.
    """
    s = "".join(text.split())
    if s in ("", "1"):
        return identity(rank)
    letters = []
    for ch in s:
        k = _CHARS.find(ch)
        if k < 0:
            raise ValueError(f"invalid letter {ch!r} in word {text!r}")
        letter = (k // 2 + 1) * (-1 if k % 2 else 1)
        if abs(letter) > rank:
            raise ValueError(f"letter {ch!r} not in F_{rank}")
        letters.append(letter)
    return reduce(rank, letters)


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    return "".join(_CHARS[_letter_pos(l)] for l in w.letters)


# -- canonical enumeration g_0, g_1, ... (length first, then letter order) --

def count_of_length(rank: int, length: int) -> int:
    if length == 0:
        return 1
    return 2 * rank * (2 * rank - 1) ** (length - 1)


def ball_size(rank: int, radius: int) -> int:
    """1 + 2k((2k-1)^m - 1)/(2k-2)."""
    q = 2 * rank - 1
    return 1 + 2 * rank * (q ** radius - 1) // (q - 1)


def _next_choices(rank: int, prev: int) -> tuple[int, ...]:
    return tuple(l for l in _letters_in_order(rank) if l != -prev)


def index_of_word(w: Word) -> int:
    rank, letters = w.rank, w.letters
    n = len(letters)
    if n == 0:
        return 0
    q = 2 * rank - 1
    offset = ball_size(rank, n - 1)
    pos = _letter_pos(letters[0])
    for prev, l in zip(letters, letters[1:]):
        r = _letter_pos(l)
        if r > _letter_pos(-prev):
            r -= 1
        pos = pos * q + r
    return offset + pos


def word_of_index(rank: int, n: int) -> Word:
    if n < 0:
        raise ValueError("index must be non-negative")
    if n == 0:
        return identity(rank)
    length = 1
    while ball_size(rank, length) <= n:
        length += 1
    pos = n - ball_size(rank, length - 1)
    q = 2 * rank - 1
    digits = []
    for _ in range(length - 1):
        pos, r = divmod(pos, q)
        digits.append(r)
    order = _letters_in_order(rank)
    letters = [order[pos]]
    for r in reversed(digits):
        letters.append(_next_choices(rank, letters[-1])[r])
    return Word(rank, tuple(letters))


def iter_words(rank: int, max_length: int | None = None) -> Iterator[Word]:
    """Reduced words in enumeration order, up to ``max_length`` (unbounded if None)."""
    yield identity(rank)
    layer: list[tuple[int, ...]] = [()]
    length = 0
    order = _letters_in_order(rank)
    while max_length is None or length < max_length:
        nxt = []
        for letters in layer:
            last = letters[-1] if letters else 0
            for l in order:
                if l != -last:
                    nxt.append(letters + (l,))
        # extending each word of the previous layer in letter order keeps
        # length-lex order, since the prefix is compared first
        for letters in nxt:
            yield Word._raw(rank, letters)
        layer = nxt
        length += 1


# -- balls --

@dataclass(frozen=True)
class Ball:
    rank: int
    center: Word
    radius: int
    elements: tuple[Word, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@lru_cache(maxsize=64)
def _offsets(rank: int, radius: int) -> tuple[Word, ...]:
    return tuple(iter_words(rank, radius))


def ball(rank: int, center: Word, radius: int) -> Ball:
    """B_k(center, radius), ordered by the enumeration order of the offset."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    if center.rank != rank:
        center = center.lift(rank)
    elements = tuple(mul(center, h) for h in _offsets(rank, radius))
    return Ball(rank, center, radius, elements)


# -- decompositions used by the embeddings --

@dataclass(frozen=True)
class PrefixBlock:
    """g = head . c^(sign*p) . tail with head in F_2 and tail not starting with c^{+-1}."""

    head: Word
    sign: int
    p: int
    tail: Word


@dataclass(frozen=True)
class SuffixSplit:
    """h = prefix . c^sign . tail with tail in F_2."""

    prefix: Word
    sign: int
    tail: Word


def _require_rank3(w: Word):
    if w.rank != 3:
        raise ValueError("decomposition expects a word in F_3")


def decompose_prefix_block(g: Word) -> PrefixBlock | None:
    """Split off the maximal F_2 prefix and the first c-block; None if g is in F_2."""
    _require_rank3(g)
    letters = g.letters
    i = 0
    while i < len(letters) and abs(letters[i]) != 3:
        i += 1
    if i == len(letters):
        return None
    sign = 1 if letters[i] > 0 else -1
    j = i
    while j < len(letters) and letters[j] == letters[i]:
        j += 1
    return PrefixBlock(Word(3, letters[:i]), sign, j - i, Word(3, letters[j:]))


def decompose_suffix_f2(h: Word) -> SuffixSplit | None:
    """Split off the maximal F_2 suffix and the c-letter before it; None if h is in F_2."""
    _require_rank3(h)
    letters = h.letters
    i = len(letters)
    while i > 0 and abs(letters[i - 1]) != 3:
        i -= 1
    if i == 0:
        return None
    sign = 1 if letters[i - 1] > 0 else -1
    return SuffixSplit(Word(3, letters[: i - 1]), sign, Word(3, letters[i:]))
