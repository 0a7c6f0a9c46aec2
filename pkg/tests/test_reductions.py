import pytest
from hypothesis import given, settings, strategies as st

from shiftred.encoding import decode6, pair, pattern_decode, unpair
from shiftred.freegroup import (ball_size, identity, inv, iter_words, mul,
                                parse_word, word_of_index)
from shiftred.labelings import (Equal, FinSupport, QuotientPeriodic, constant,
                                cyclic, equal_points, left_free_witness, shift)
from shiftred.oracles import fw_finsupport_bruteforce, fw_periodic_bruteforce
from shiftred.reductions import (BallCode, Counterexample, Fail, Pass,
                                 PossiblyEquivalent, RefutedUpTo, check_A,
                                 default_schedule, embed_2to9, encode_pipeline,
                                 fstar, fstar_coord, fw, lf_embed,
                                 lf_witness_bound, refute_equivalence,
                                 verify_forward, z0, z0_witness_bound)
from shiftred.rng import SplitMix64
from shiftred.sampling import GROUPS, random_finsupport, random_quotient

GS = ["1", "a", "A", "b", "B", "ab", "ba", "aB", "BB"]
WS = ["aa", "AB", "a", "ba"]


def test_schedule():
    s = default_schedule()
    assert [s.m(0, 0), s.m(0, 1), s.m(1, 0)] == [1, 2, 3]
    assert str(s.w(0, 0)) == "aa" and str(s.w(0, 1)) == "AB"
    assert s.lookup(1) == (0, 0) and s.lookup(5) == (1, 1) and s.lookup(0) is None
    seen = set()
    for i in range(15):
        for j in range(15):
            assert 0 < s.n(i, j) < s.n(i, j + 1)
            assert 0 < s.m(i, j) < s.m(i, j + 1)
            assert not s.w(i, j).is_identity()
            assert s.lookup(s.m(i, j)) == (i, j)
            seen.add(s.m(i, j))
    assert len(seen) == 225


# values below were produced by the brute-force j-scan oracles


def test_fw_frozen_finsupport(two_points, W2):
    fin, _ = two_points
    frozen = {"aa": [0, 0, 1, 0, 3, 3, 0, 0, 0],
              "AB": [0, 1, 0, 0, 3, 3, 1, 0, 0],
              "a": [1, 0, 0, 0, 3, 3, 1, 0, 0],
              "ba": [0, 1, 0, 0, 3, 3, 1, 1, 1]}
    for w, vals in frozen.items():
        assert [fw(W2(w), fin).eval(W2(g)) for g in GS] == vals


def test_fw_frozen_periodic(W2):
    s3 = QuotientPeriodic(2, 2, dict(GROUPS)["S3"], (1, 3), (0, 1, 1, 0, 0, 1))
    assert [fw(W2("aa"), s3).eval(W2(g)) for g in GS] == [0, 3, 3, 0, 0, 3, 3, 3, 0]
    assert [fw(W2("ba"), s3).eval(W2(g)) for g in GS] == [0, 4, 4, 0, 0, 4, 4, 4, 0]
    z6 = cyclic(2, 2, 6, (1, 2), (0, 0, 0, 1, 1, 0))
    assert [fw(W2("a"), z6).eval(W2(g)) for g in ["1", "a", "A", "b", "ab"]] == [2, 1, 1, 0, 4]
    z6 = cyclic(2, 2, 6, (1, 2), (0, 0, 1, 0, 1, 1))
    assert [fw(W2("a"), z6).eval(W2(g)) for g in ["1", "a", "A", "b", "ab"]] == [1, 0, 5, 4, 0]


def test_fw_single_mark(W2):
    # patterns along the line differ only at j = 0, and the all-default one is least
    x = FinSupport.from_dict(2, 2, 0, {identity(2): 1})
    assert fw(W2("a"), x).eval(identity(2)) == 3
    assert fw(W2("a"), x).eval(W2("A")) == 1


def test_fw_case_one_values(W2):
    # a point invariant under w: every root is in case I
    x = cyclic(2, 2, 2, (0, 1), (0, 1))
    assert [fw(W2("a"), x).eval(W2(g)) for g in GS] == [3 * x.eval(W2(g)) for g in GS]
    assert fw(W2("a"), constant(2, 2, 1)).eval(W2("ab")) == 3


@given(st.integers(0, 10**6), st.sampled_from(WS))
@settings(max_examples=10, deadline=None)
def test_fw_matches_oracles(seed, w):
    rng = SplitMix64(seed)
    w = parse_word(w, 2)
    x, q = random_finsupport(rng), random_quotient(rng)
    fx, fq = fw(w, x), fw(w, q)
    for g in iter_words(2, 2):
        assert fx.eval(g) == fw_finsupport_bruteforce(w, x, g, 14, 9)
        assert fq.eval(g) == fw_periodic_bruteforce(w, q, g, q.order)


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_fw_implication_and_equivariance(seed):
    rng = SplitMix64(seed)
    for x in (random_finsupport(rng), random_quotient(rng)):
        for w in (parse_word(t, 2) for t in WS):
            f = fw(w, x)
            for g in iter_words(2, 2):
                a = f.eval(g)
                assert decode6(a)[0] == x.eval(g)
                if a == f.eval(mul(g, w)):
                    assert equal_points(shift(inv(g), x), shift(inv(mul(g, w)), x)) == Equal()
                for h in (parse_word("a", 2), parse_word("B", 2)):
                    assert fw(w, shift(h, x)).eval(g) == f.eval(mul(inv(h), g))


def test_fw_rejects_bad_input(W2):
    with pytest.raises(ValueError):
        fw(identity(2), constant(2, 2))
    with pytest.raises(ValueError):
        fw(W2("a"), constant(2, 3))
    with pytest.raises(ValueError):
        fw(W2("a"), constant(3, 2))


def test_embed_frozen(two_points, W3):
    fin, _ = two_points
    y = embed_2to9(fin)
    assert [y.eval(W3(g)) for g in ["1", "ab", "c", "cc", "C", "acc", "Bccc", "cA", "abc"]] == \
        [0, 1, 3, 3, 2, 4, 6, 3, 6]
    assert y.alphabet == 9 and y.rank == 3


def test_embed_equivariance(two_points, W2):
    for x in two_points:
        for g in (W2("a"), W2("bA")):
            lhs, rhs = embed_2to9(shift(g, x)), shift(g, embed_2to9(x))
            for h in iter_words(3, 3):
                assert lhs.eval(h) == rhs.eval(h)


def test_embed_comparison_is_exact(two_points, W2):
    fin, per = two_points
    y = embed_2to9(fin)
    assert equal_points(shift(W2("a"), y), embed_2to9(shift(W2("a"), fin))) == Equal()
    v = equal_points(y, embed_2to9(shift(W2("a"), fin)))
    assert not isinstance(v, Equal)
    assert y.eval(v.witness) != embed_2to9(shift(W2("a"), fin)).eval(v.witness)


def test_check_a(W3):
    bad = FinSupport.from_dict(3, 9, 0, {W3("Abb"): 1})
    r = check_A(bad, 0, 0)
    assert r == Counterexample(0, 0, W3("bb"))
    assert check_A(constant(3, 9), 3, 3) == Pass()
    x = cyclic(2, 2, 3, (1, 2), (0, 1, 1))
    assert check_A(embed_2to9(x), 4, 4, mmax=12) == Pass()


def test_fstar_constant_point():
    codes = fstar(constant(3, 9), 2)
    assert [c.value for c in codes] == [0, 2]
    assert [c.value for c in encode_pipeline(constant(2, 2), K=1)] == [0]
    with pytest.raises(ValueError):
        fstar(constant(3, 10), 1)


def test_fstar_frozen(two_points):
    fin, _ = two_points
    codes = fstar(embed_2to9(fin), 4)
    assert [c.value for c in codes[:3]] == [0, 776995183937, 0]
    m, digits = pattern_decode(codes[3].value)
    assert m == 2 and len(digits) == ball_size(3, 2)
    # symbolic comparison agrees with integer comparison
    assert codes[0].same(codes[2]) is True
    assert codes[1].same(codes[3]) is False


def test_ballcode_large_radius(two_points):
    fin, _ = two_points
    y = embed_2to9(fin)
    k = pair(0, 30)
    assert fstar_coord(y, k).same(fstar_coord(y, k)) is True
    assert fstar_coord(y, k).same(fstar_coord(shift(parse_word("a", 3), y), k)) is False


def _radius_mutant(y, k):
    n, m = unpair(k)
    return BallCode(shift(word_of_index(2, n).lift(3), y), m + 1)


def _pairing_mutant(y, k):
    m, n = unpair(k)
    return BallCode(shift(word_of_index(2, n).lift(3), y), m)


def test_verify_forward_and_mutants(two_points):
    for x in two_points:
        for a in (1, 5, 17):
            assert verify_forward(x, a, 60) == Pass()
    fin, _ = two_points
    assert isinstance(verify_forward(fin, 3, 60, coord=_radius_mutant, reference=fstar_coord), Fail)
    assert isinstance(verify_forward(fin, 3, 60, coord=_pairing_mutant), Fail)


def test_refutation(two_points, W2):
    fin, _ = two_points
    flipped = FinSupport.from_dict(2, 2, 0, {W2("ab"): 1, W2("B"): 1, identity(2): 1})
    r = refute_equivalence(fin, flipped, 5, 50)
    assert isinstance(r, RefutedUpTo) and r.amax == 5 and len(r.witnesses) == 6
    a = 4
    assert refute_equivalence(fin, shift(word_of_index(2, a), fin), 6, 50) == PossiblyEquivalent(a)


def test_z0(W2):
    z = z0()
    assert [z.eval(W2(t)) for t in ["1", "a", "ab", "abA", "abab", "aaaaa"]] == [3, 3, 2, 2, 3, 2]
    e = identity(2)
    for u in iter_words(2, 4):
        if u.is_identity():
            continue
        h = left_free_witness(z, e, u, z0_witness_bound(e, u))
        assert h is not None and z.eval(h) != z.eval(mul(h, u))


def test_lf_embed(two_points, W3):
    for x in two_points:
        y = lf_embed(x)
        for h in iter_words(3, 3):
            v = y.eval(h)
            assert (v in (0, 1)) == h.in_f2() and 0 <= v <= 3
        assert y.eval(W3("ab")) == x.eval(parse_word("ab", 2))
        assert y.eval(W3("acab")) == 2 and y.eval(W3("Cb")) == 3
        for g, gp in [(W3("1"), W3("c")), (W3("ab"), W3("Ca")), (W3("cc"), W3("C"))]:
            assert left_free_witness(y, g, gp, lf_witness_bound(g, gp)) is not None
    with pytest.raises(ValueError):
        lf_embed(constant(3, 2))
