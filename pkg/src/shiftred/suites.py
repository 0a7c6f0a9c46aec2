"""Property suites behind ``verify all`` and the acceptance tests.

Each suite returns a list of :class:`Record`.  Sampling goes through a
SplitMix64 stream seeded per suite, so a run is a pure function of
(seed, config).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import oracles
from .encoding import (decode6, pattern_decode, pi_apply, pi_compose_index,
                       unpair)
from .freegroup import (Word, ball, ball_size, decompose_prefix_block,
                        decompose_suffix_f2, format_word, identity,
                        index_of_word, inv, iter_words, mul, parse_word,
                        word_of_index)
from .labelings import (Equal, FinSupport, constant, equal_points,
                        left_free_witness, scan_difference, shift)
from .reductions import (BallCode, Counterexample, Fail, Pass,
                         PossiblyEquivalent, RefutedUpTo, check_A, embed_2to9,
                         fstar, fstar_coord, fw, lf_embed, lf_witness_bound,
                         refute_equivalence, verify_forward, z0,
                         z0_witness_bound, default_schedule)
from .relations import EvPeriodicSeq, e0_equiv, orbit_sample, product_equiv
from .rng import SplitMix64
from .sampling import random_finsupport, random_quotient

BALL_SIZES = {2: [1, 5, 17, 53, 161, 485, 1457],
              3: [1, 7, 37, 187, 937, 4687, 23437]}


@dataclass(frozen=True, order=True)
class Record:
    suite: str
    case: str
    status: str          # PASS / FAIL / INCONCLUSIVE
    detail: str = ""
    witness: str = ""

    def line(self) -> str:
        detail = self.detail + (f" witness={self.witness}" if self.witness else "")
        return f"{self.status}\t{self.suite}\t{self.case}\t{detail}"


@dataclass(frozen=True)
class Config:
    seed: int = 7
    enum_max: int = 10_000
    word_len: int = 6
    ball_max: int = 6
    ball_brute: int = 4
    law_len: int = 3
    decomp_len: int = 5
    pi_amax: int = 50
    pi_kmax: int = 5000
    hom_max: int = 30
    hom_kmax: int = 2000
    fin_points: int = 100
    quot_points: int = 20
    sub_radius: int = 4
    equiv_radius: int = 3
    equiv_shift: int = 1
    oracle_radius: int = 3
    embed_equiv_points: int = 10
    inject_pairs: int = 50
    checkA_points: int = 20
    checkA_mmax: int = 12
    forward_runs: int = 100
    forward_amax: int = 20
    forward_K: int = 500
    refute_pairs: int = 20
    refute_amax: int = 20
    refute_K: int = 200
    lf_points: int = 5
    lf_radius: int = 4
    z0_len: int = 6
    lf_pair_radius: int = 2
    e0_pairs: int = 200

    @classmethod
    def for_depth(cls, seed: int, depth: int) -> "Config":
        """A lighter configuration; ``depth`` scales radii and sample counts."""
        d = max(1, depth)
        return cls(seed=seed, enum_max=200 * d * d, word_len=min(d + 2, 6),
                   ball_max=min(d + 2, 6), ball_brute=min(d, 4), law_len=min(d, 3),
                   decomp_len=min(d + 1, 5), pi_amax=5 * d, pi_kmax=100 * d * d,
                   hom_max=3 * d, hom_kmax=50 * d * d, fin_points=4 * d,
                   quot_points=2 * d, sub_radius=min(d, 4), equiv_radius=min(d, 3),
                   equiv_shift=1, oracle_radius=min(d, 3),
                   embed_equiv_points=d, inject_pairs=5 * d, checkA_points=2 * d,
                   checkA_mmax=min(4 * d, 12), forward_runs=3 * d,
                   forward_amax=min(5 * d, 20), forward_K=40 * d,
                   refute_pairs=2 * d, refute_amax=min(5 * d, 20),
                   refute_K=min(60 * d, 200), lf_points=1 + d // 2,
                   lf_radius=min(d, 4), z0_len=min(d + 2, 6),
                   lf_pair_radius=min(d, 2), e0_pairs=30 * d)


def _rng(cfg: Config, suite: str) -> SplitMix64:
    salt = sum((i + 1) * ord(ch) for i, ch in enumerate(suite))
    return SplitMix64(cfg.seed * 1_000_003 + salt)


def _record(suite, case, failures, checks, inconclusive=0):
    if failures:
        return Record(suite, case, "FAIL", f"{len(failures)}/{checks} checks failed",
                      failures[0])
    if inconclusive:
        return Record(suite, case, "INCONCLUSIVE", f"{inconclusive}/{checks} undecided")
    return Record(suite, case, "PASS", f"{checks} checks")


def _w(w: Word) -> str:
    return format_word(w)


def _fixed_ws():
    s = default_schedule()
    return [("w00", s.w(0, 0)), ("w01", s.w(0, 1)),
            ("a", parse_word("a", 2)), ("ba", parse_word("ba", 2))]


def _points(cfg, rng, fin, quot):
    pts = [(f"fin{i:03d}", random_finsupport(rng)) for i in range(fin)]
    pts += [(f"quot{i:03d}", random_quotient(rng)) for i in range(quot)]
    return pts


# -- enumeration and balls --

def suite_enumeration(cfg: Config) -> list[Record]:
    S = "enumeration"
    out = []
    for k in (2, 3):
        fails, checks = [], 0
        for n in range(cfg.enum_max + 1):
            checks += 1
            if index_of_word(word_of_index(k, n)) != n:
                fails.append(f"n={n}")
        out.append(_record(S, f"index-roundtrip-k{k}", fails, checks))

        fails, checks = [], 0
        for n, w in enumerate(iter_words(k, cfg.word_len)):
            checks += 1
            if index_of_word(w) != n or word_of_index(k, n) != w:
                fails.append(_w(w))
        out.append(_record(S, f"word-roundtrip-k{k}", fails, checks))

        fails, checks = [], 0
        centers = list(iter_words(k, 1))
        for m in range(cfg.ball_max + 1):
            expect = BALL_SIZES[k][m]
            checks += 1
            if ball_size(k, m) != expect:
                fails.append(f"m={m}")
            for c in centers:
                b = ball(k, c, m)
                checks += 1
                if len(b) != expect or len(set(b.elements)) != expect:
                    fails.append(f"m={m} center={_w(c)}")
        out.append(_record(S, f"ball-size-k{k}", fails, checks))

        fails, checks = [], 0
        for m in range(cfg.ball_brute + 1):
            checks += 1
            brute = oracles.reduced_words_bruteforce(k, m)
            if len(brute) != BALL_SIZES[k][m] or set(ball(k, identity(k), m).elements) != brute:
                fails.append(f"m={m}")
        out.append(_record(S, f"ball-exhaustive-k{k}", fails, checks))

    words = list(iter_words(2, cfg.law_len))
    fails, checks = [], 0
    e = identity(2)
    for x in words:
        checks += 1
        if inv(inv(x)) != x or mul(inv(x), x) != e or mul(x, e) != x:
            fails.append(_w(x))
        for y in words:
            xy = mul(x, y)
            for z in words:
                checks += 1
                if mul(xy, z) != mul(x, mul(y, z)):
                    fails.append(f"{_w(x)},{_w(y)},{_w(z)}")
    out.append(_record(S, "group-laws", fails, checks))

    fails, checks = [], 0
    for g in iter_words(3, cfg.decomp_len):
        checks += 1
        pb = decompose_prefix_block(g)
        if pb is None:
            ok = g.in_f2()
        else:
            block = Word(3, (3 * pb.sign,) * pb.p)
            joined = pb.head.letters + block.letters + pb.tail.letters
            ok = (joined == g.letters and pb.head.in_f2() and pb.p >= 1
                  and (not pb.tail.letters or abs(pb.tail.letters[0]) != 3))
        sp = decompose_suffix_f2(g)
        if sp is None:
            ok = ok and g.in_f2()
        else:
            joined = sp.prefix.letters + (3 * sp.sign,) + sp.tail.letters
            ok = ok and joined == g.letters and sp.tail.in_f2()
        if not ok:
            fails.append(_w(g))
    out.append(_record(S, "decompositions", fails, checks))
    return out


# -- pi_a --

def suite_pi(cfg: Config) -> list[Record]:
    S = "pi-group"
    out = []
    fails, checks = [], 0
    for a in range(cfg.pi_amax + 1):
        seen = {}
        for k in range(cfg.pi_kmax + 1):
            checks += 1
            v = pi_apply(a, k)
            if v in seen:
                fails.append(f"a={a} k={seen[v]},{k}")
            seen[v] = k
            if unpair(v)[1] != unpair(k)[1]:
                fails.append(f"a={a} k={k}")
    out.append(_record(S, "injective-fixes-second", fails, checks))

    fails, checks = [], 0
    for a in range(cfg.hom_max + 1):
        for b in range(cfg.hom_max + 1):
            c = pi_compose_index(a, b)
            for k in range(cfg.hom_kmax + 1):
                checks += 1
                if pi_apply(b, pi_apply(a, k)) != pi_apply(c, k):
                    fails.append(f"a={a} b={b} k={k}")
    out.append(_record(S, "anti-homomorphism", fails, checks))
    return out


# -- f_w --

def suite_fw(cfg: Config) -> list[Record]:
    S = "fw"
    rng = _rng(cfg, S)
    out = []
    gs = list(iter_words(2, cfg.sub_radius))
    eq_gs = list(iter_words(2, cfg.equiv_radius))
    # equivariance under the generators gives it for every g'
    shifts = [g for g in iter_words(2, cfg.equiv_shift) if len(g) == cfg.equiv_shift]
    for name, x in _points(cfg, rng, cfg.fin_points, cfg.quot_points):
        fails, checks = [], 0
        for wname, w in _fixed_ws():
            f = fw(w, x)
            for g in gs:
                checks += 1
                a, b = f.eval(g), f.eval(mul(g, w))
                if decode6(a)[0] != x.eval(g):
                    fails.append(f"{wname} g={_w(g)} root bit")
                if a == b:
                    v = equal_points(shift(inv(g), x), shift(inv(mul(g, w)), x))
                    if not isinstance(v, Equal):
                        fails.append(f"{wname} g={_w(g)}")
            for gp in shifts:
                lhs = fw(w, shift(gp, x))
                rhs = shift(gp, f)
                for g in eq_gs:
                    checks += 1
                    if lhs.eval(g) != rhs.eval(g):
                        fails.append(f"{wname} equivariance g'={_w(gp)} g={_w(g)}")
            if name.startswith("quot"):
                for g in iter_words(2, cfg.oracle_radius):
                    checks += 1
                    if f.eval(g) != oracles.fw_periodic_bruteforce(w, x, g, x.order):
                        fails.append(f"{wname} oracle g={_w(g)}")
        out.append(_record(S, name, fails, checks))
    return out


# -- embedding --

def suite_embedding(cfg: Config) -> list[Record]:
    S = "embedding"
    rng = _rng(cfg, S)
    s = default_schedule()
    out = []

    positions = list(iter_words(3, 3))
    shifts = list(iter_words(2, 2))
    for i in range(cfg.embed_equiv_points):
        x = random_finsupport(rng) if i % 2 == 0 else random_quotient(rng)
        fx = embed_2to9(x, s)
        fails, checks = [], 0
        for g in shifts:
            lhs, rhs = embed_2to9(shift(g, x), s), shift(g, fx)
            for p in positions:
                checks += 1
                if lhs.eval(p) != rhs.eval(p):
                    fails.append(f"g={_w(g)} at {_w(p)}")
        out.append(_record(S, f"equivariance{i:03d}", fails, checks))

    fails, checks = [], 0
    for i in range(cfg.inject_pairs):
        x = random_finsupport(rng)
        y = random_finsupport(rng)
        while equal_points(x, y) == Equal():
            y = random_finsupport(rng)
        checks += 1
        radius = max(x.radius(), y.radius())
        if scan_difference(embed_2to9(x, s), embed_2to9(y, s), radius) is None:
            fails.append(f"pair{i:03d}")
    out.append(_record(S, "injectivity", fails, checks))

    imax = jmax = cfg.checkA_mmax
    for i in range(cfg.checkA_points):
        x = random_finsupport(rng) if i % 4 else random_quotient(rng)
        r = check_A(embed_2to9(x, s), imax, jmax, s, mmax=cfg.checkA_mmax)
        if isinstance(r, Pass):
            out.append(Record(S, f"checkA{i:03d}", "PASS", f"m<={cfg.checkA_mmax}"))
        elif isinstance(r, Counterexample):
            out.append(Record(S, f"checkA{i:03d}", "FAIL", "implication violated",
                              f"(i,j)=({r.i},{r.j}) at {_w(r.witness)}"))
        else:
            out.append(Record(S, f"checkA{i:03d}", "INCONCLUSIVE", f"(i,j)=({r.i},{r.j})"))

    y = FinSupport.from_dict(3, 9, 0, {parse_word("Abb", 3): 1})
    r = check_A(y, 0, 0, s)
    ok = isinstance(r, Counterexample) and (r.i, r.j) == (0, 0)
    if ok:
        # the witness must separate a.y from A.y
        a, A = word_of_index(3, 1), word_of_index(3, 2)
        ok = shift(a, y).eval(r.witness) != shift(A, y).eval(r.witness)
    out.append(Record(S, "counterexample-Abb", "PASS" if ok else "FAIL",
                      f"check_A -> {r}", "" if ok else "expected Counterexample(0,0)"))
    r = check_A(constant(3, 9), 3, 3, s)
    out.append(Record(S, "constant-point", "PASS" if isinstance(r, Pass) else "FAIL", str(r)))
    return out


# -- encoder --

def _mutant_radius(y, k):
    n, m = unpair(k)
    return BallCode(shift(word_of_index(2, n).lift(3), y), m + 1)


def _mutant_pairing(y, k):
    m, n = unpair(k)
    return BallCode(shift(word_of_index(2, n).lift(3), y), m)


def _mutant_shift(y, k):
    n, m = unpair(k)
    return BallCode(shift(inv(word_of_index(2, n)).lift(3), y), m)


def suite_encoder(cfg: Config) -> list[Record]:
    S = "encoder"
    rng = _rng(cfg, S)
    s = default_schedule()
    out = []
    for i in range(cfg.forward_runs):
        x = random_finsupport(rng) if i % 5 else random_quotient(rng)
        a = rng.below(cfg.forward_amax + 1)
        r = verify_forward(x, a, cfg.forward_K, s)
        status = "PASS" if isinstance(r, Pass) else "FAIL"
        out.append(Record(S, f"forward{i:03d}", status, f"a={a} K={cfg.forward_K}",
                          "" if status == "PASS" else f"k={r.k}"))

    # integer codes agree with the symbolic comparison on small radii
    fails, checks = [], 0
    for i in range(3):
        x = random_finsupport(rng)
        a = 1 + rng.below(cfg.forward_amax)
        lhs = fstar(embed_2to9(shift(word_of_index(2, a), x), s), 6)
        rhs = embed_2to9(x, s)
        for k, code in enumerate(lhs):
            other = fstar_coord(rhs, pi_apply(a, k))
            checks += 1
            if code.value != other.value or pattern_decode(code.value)[0] != unpair(k)[1]:
                fails.append(f"x{i} a={a} k={k}")
    out.append(_record(S, "integer-codes", fails, checks))

    x = random_finsupport(rng)
    mutants = [("mutant-radius", dict(coord=_mutant_radius, reference=fstar_coord)),
               ("mutant-pairing", dict(coord=_mutant_pairing)),
               ("mutant-shift", dict(coord=_mutant_shift))]
    for name, kw in mutants:
        r = verify_forward(x, 3, cfg.forward_K, s, **kw)
        caught = isinstance(r, Fail)
        out.append(Record(S, name, "PASS" if caught else "FAIL",
                          f"mutant detected at k={r.k}" if caught else "mutant not detected",
                          "" if caught else "a=3"))

    for i in range(cfg.refute_pairs):
        x = random_finsupport(rng)
        root = identity(2)
        y = FinSupport.from_dict(2, 2, x.default, {**x._map, root: 1 - x.eval(root)})
        r = refute_equivalence(x, y, cfg.refute_amax, cfg.refute_K, s)
        ok = isinstance(r, RefutedUpTo)
        out.append(Record(S, f"refute{i:03d}", "PASS" if ok else "FAIL",
                          f"amax={cfg.refute_amax} K={cfg.refute_K}",
                          "" if ok else f"a={r.a}"))
    x = random_finsupport(rng)
    a = 1 + rng.below(cfg.refute_amax)
    r = refute_equivalence(x, shift(word_of_index(2, a), x), a, cfg.refute_K, s)
    ok = isinstance(r, PossiblyEquivalent) and r.a == a
    out.append(Record(S, "refute-control", "PASS" if ok else "FAIL",
                      f"orbit pair a={a} -> {type(r).__name__}", "" if ok else f"a={a}"))
    return out


# -- left-free embedding --

def suite_left_free(cfg: Config) -> list[Record]:
    S = "left-free"
    rng = _rng(cfg, S)
    out = []
    pts = [random_finsupport(rng) if i % 2 == 0 else random_quotient(rng)
           for i in range(cfg.lf_points)]
    positions = list(iter_words(3, cfg.lf_radius))
    for i, x in enumerate(pts):
        img = lf_embed(x)
        fails, checks = [], 0
        for p in positions:
            checks += 1
            v = img.eval(p)
            if (v in (0, 1)) != p.in_f2() or v not in (0, 1, 2, 3):
                fails.append(_w(p))
        out.append(_record(S, f"values{i:03d}", fails, checks))

    z = z0()
    fails, checks = [], 0
    e = identity(2)
    for u in iter_words(2, cfg.z0_len):
        if u.is_identity():
            continue
        checks += 1
        bound = z0_witness_bound(e, u)
        h = _left_free(z, e, u, bound)
        if h is None:
            fails.append(_w(u))
    out.append(_record(S, "z0-left-free", fails, checks))

    pairs = list(combinations(iter_words(3, cfg.lf_pair_radius), 2))
    for i, x in enumerate(pts):
        img = lf_embed(x)
        fails, checks = [], 0
        for g, gp in pairs:
            for a, b in ((g, gp), (gp, g)):
                checks += 1
                if _left_free(img, a, b, lf_witness_bound(a, b)) is None:
                    fails.append(f"{_w(a)},{_w(b)}")
        out.append(_record(S, f"image-left-free{i:03d}", fails, checks))
    return out


def _left_free(x, g, gp, radius):
    h = left_free_witness(x, g, gp, radius)
    if h is not None and x.eval(mul(h, g.lift(x.rank))) == x.eval(mul(h, gp.lift(x.rank))):
        return None
    return h


# -- relations --

def _random_seq(rng, max_pre=4, max_period=4):
    pre = tuple(rng.below(2) for _ in range(rng.below(max_pre + 1)))
    period = tuple(rng.below(2) for _ in range(1 + rng.below(max_period)))
    return EvPeriodicSeq(pre, period)


def _tail_partner(rng, x, max_pre=4):
    # a sequence with the same tail as x and a fresh preperiod
    pre = tuple(rng.below(2) for _ in range(rng.below(max_pre + 1)))
    p = len(x.period)
    rot = (len(pre) - len(x.preperiod)) % p
    return EvPeriodicSeq(pre, x.period[rot:] + x.period[:rot])


def suite_relations(cfg: Config) -> list[Record]:
    S = "relations"
    rng = _rng(cfg, S)
    out = []
    fails, checks = [], 0
    pairs = []
    for i in range(cfg.e0_pairs):
        x = _random_seq(rng)
        y = _tail_partner(rng, x) if rng.below(2) else _random_seq(rng)
        pairs.append((x, y))
        checks += 1
        if e0_equiv(x, y) != oracles.e0_tail_bruteforce(x, y):
            fails.append(f"pair{i:03d}")
    out.append(_record(S, "e0-oracle", fails, checks))

    fails, checks = [], 0
    for i in range(cfg.e0_pairs // 2):
        x, y = pairs[i]
        z = _tail_partner(rng, y) if rng.below(2) else _random_seq(rng)
        checks += 1
        if not e0_equiv(x, x) or e0_equiv(x, y) != e0_equiv(y, x):
            fails.append(f"triple{i:03d}")
        if e0_equiv(x, y) and e0_equiv(y, z) and not e0_equiv(x, z):
            fails.append(f"triple{i:03d} transitivity")
    out.append(_record(S, "e0-equivalence", fails, checks))

    fails, checks = [], 0
    for i in range(0, len(pairs) - 1, 2):
        (x1, y1), (x2, y2) = pairs[i], pairs[i + 1]
        checks += 1
        got = product_equiv([e0_equiv, e0_equiv], (x1, x2), (y1, y2))
        if got != (e0_equiv(x1, y1) and e0_equiv(x2, y2)):
            fails.append(f"pair{i:03d}")
    out.append(_record(S, "product", fails, checks))

    fails, checks = [], 0
    x = FinSupport.from_dict(2, 2, 0, {identity(2): 1})
    gens = [parse_word("a", 2), parse_word("b", 2)]
    for d in range(3):
        entries = orbit_sample(gens, x, d)
        checks += 1
        if len(entries) != ball_size(2, d) or any(e.same_as is not None for e in entries):
            fails.append(f"depth={d}")
        for e in entries:
            checks += 1
            if e.point.eval(e.g) != 1:
                fails.append(f"depth={d} g={_w(e.g)}")
    entries = orbit_sample(gens, constant(2, 2), 2)
    checks += 1
    if any(e.same_as != 0 for e in entries[1:]):
        fails.append("constant orbit")
    out.append(_record(S, "orbit-sample", fails, checks))
    return out


SUITES = {
    "enumeration": suite_enumeration,
    "pi-group": suite_pi,
    "fw": suite_fw,
    "embedding": suite_embedding,
    "encoder": suite_encoder,
    "left-free": suite_left_free,
    "relations": suite_relations,
}


def run_suites(cfg: Config, names=None) -> list[Record]:
    records = []
    for name in names or SUITES:
        records += SUITES[name](cfg)
    return sorted(records)


def summarize(records) -> tuple[str, int]:
    """Final report line and exit code (0 pass, 1 any failure)."""
    fails = sum(r.status == "FAIL" for r in records)
    inconclusive = sum(r.status == "INCONCLUSIVE" for r in records)
    if fails:
        return f"FAILURES: {fails} of {len(records)} records", 1
    if inconclusive:
        return f"WARNING: {inconclusive} inconclusive records\nALL PASS", 0
    return "ALL PASS", 0
