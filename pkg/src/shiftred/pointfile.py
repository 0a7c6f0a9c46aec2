"""Line-oriented text format for FinSupport and QuotientPeriodic points.

::

    labeling fin-support k=2 alphabet=2 default=0
    set ab 1

    labeling quotient k=2 alphabet=2
    group cyclic 4            # or: group table 3, then 3 rows
    hom a=1 b=2
    label 0 0
    ...

Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from pathlib import Path

from .freegroup import format_word, parse_word
from .labelings import FinSupport, Labeling, QuotientPeriodic, cyclic_table


class PointFileError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def _int(tok: str, line: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise PointFileError(line, f"expected an integer for {what}, got {tok!r}") from None


def _options(tokens, line, allowed):
    out = {}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep or key not in allowed:
            raise PointFileError(line, f"unexpected field {tok!r}")
        if key in out:
            raise PointFileError(line, f"duplicate field {key!r}")
        out[key] = _int(val, line, key)
    return out


def parse_point(text: str) -> Labeling:
    lines = []
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((no, body.split()))
    if not lines:
        raise PointFileError(1, "empty point file")

    no, head = lines[0]
    if head[0] != "labeling" or len(head) < 2:
        raise PointFileError(no, "first line must start with 'labeling <fin-support|quotient>'")
    kind = head[1]
    opts = _options(head[2:], no, {"k", "alphabet", "default"})
    if "k" not in opts or opts["k"] not in (2, 3):
        raise PointFileError(no, "k=2 or k=3 is required")
    if "alphabet" not in opts or opts["alphabet"] < 1:
        raise PointFileError(no, "alphabet=<n> is required")
    rank, alphabet = opts["k"], opts["alphabet"]
    body = lines[1:]

    def symbol(tok, line):
        v = _int(tok, line, "symbol")
        if not 0 <= v < alphabet:
            raise PointFileError(line, f"symbol {v} outside alphabet {alphabet}")
        return v

    def word(tok, line):
        try:
            return parse_word(tok, rank)
        except ValueError as e:
            raise PointFileError(line, str(e)) from None

    if kind == "fin-support":
        default = symbol(str(opts.get("default", 0)), no)
        mapping = {}
        for line, toks in body:
            if toks[0] != "set" or len(toks) != 3:
                raise PointFileError(line, "expected 'set <word> <symbol>'")
            w = word(toks[1], line)
            if w in mapping:
                raise PointFileError(line, f"word {format_word(w)} set twice")
            mapping[w] = symbol(toks[2], line)
        return FinSupport.from_dict(rank, alphabet, default, mapping)

    if kind != "quotient":
        raise PointFileError(no, f"unknown labeling class {kind!r}")
    if "default" in opts:
        raise PointFileError(no, "quotient points take no default")
    table = images = None
    labels: dict[int, int] = {}
    i = 0
    while i < len(body):
        line, toks = body[i]
        i += 1
        if toks[0] == "group":
            if table is not None:
                raise PointFileError(line, "group given twice")
            if len(toks) != 3 or toks[1] not in ("cyclic", "table"):
                raise PointFileError(line, "expected 'group cyclic <n>' or 'group table <n>'")
            n = _int(toks[2], line, "group order")
            if n < 1:
                raise PointFileError(line, "group order must be positive")
            if toks[1] == "cyclic":
                table = cyclic_table(n)
            else:
                rows = []
                for _ in range(n):
                    if i >= len(body):
                        raise PointFileError(line, f"group table needs {n} rows")
                    rl, rt = body[i]
                    i += 1
                    row = tuple(_int(t, rl, "table entry") for t in rt)
                    if len(row) != n:
                        raise PointFileError(rl, f"table row needs {n} entries")
                    rows.append(row)
                table = tuple(rows)
        elif toks[0] == "hom":
            names = {"a": 0, "b": 1, "c": 2}
            o = _options(toks[1:], line, set("abc"[:rank]))
            if len(o) != rank:
                raise PointFileError(line, f"hom needs images of all {rank} generators")
            images = tuple(o[k] for k in sorted(o, key=names.get))
        elif toks[0] == "label":
            if len(toks) != 3:
                raise PointFileError(line, "expected 'label <q> <symbol>'")
            q = _int(toks[1], line, "group element")
            if q in labels:
                raise PointFileError(line, f"element {q} labelled twice")
            labels[q] = symbol(toks[2], line)
        else:
            raise PointFileError(line, f"unknown directive {toks[0]!r}")
    last = lines[-1][0]
    if table is None:
        raise PointFileError(last, "missing 'group' line")
    if images is None:
        raise PointFileError(last, "missing 'hom' line")
    if sorted(labels) != list(range(len(table))):
        raise PointFileError(last, f"labels must cover elements 0..{len(table) - 1}")
    try:
        return QuotientPeriodic(rank, alphabet, table, images,
                                tuple(labels[q] for q in range(len(table))))
    except ValueError as e:
        raise PointFileError(last, str(e)) from None


def load_point(path) -> Labeling:
    return parse_point(Path(path).read_text())


def format_point(x: Labeling) -> str:
    if isinstance(x, FinSupport):
        out = [f"labeling fin-support k={x.rank} alphabet={x.alphabet} default={x.default}"]
        out += [f"set {format_word(w)} {v}" for w, v in x.support]
    elif isinstance(x, QuotientPeriodic):
        out = [f"labeling quotient k={x.rank} alphabet={x.alphabet}",
               f"group table {x.order}"]
        out += [" ".join(map(str, row)) for row in x.table]
        out.append("hom " + " ".join(f"{'abc'[i]}={q}" for i, q in enumerate(x.images)))
        out += [f"label {q} {v}" for q, v in enumerate(x.labels)]
    else:
        raise ValueError("only FinSupport and QuotientPeriodic points have a file form")
    return "\n".join(out) + "\n"
