import pytest
from hypothesis import given, strategies as st

from shiftred.freegroup import ball_size, identity, parse_word
from shiftred.labelings import Derived, FinSupport, constant, cyclic
from shiftred.oracles import e0_tail_bruteforce
from shiftred.relations import (EvPeriodicSeq, e0_equiv, generator_ball,
                                orbit_sample, point_relation, product_equiv)

bits = st.lists(st.integers(0, 1), max_size=6)
seqs = st.builds(EvPeriodicSeq, bits, st.lists(st.integers(0, 1), min_size=1, max_size=5))


def test_e0_examples():
    x = EvPeriodicSeq((1, 1, 0), (0, 1))
    assert e0_equiv(x, EvPeriodicSeq((), (1, 0)))
    assert e0_equiv(x, EvPeriodicSeq((0,), (0, 1, 0, 1)))
    assert not e0_equiv(x, EvPeriodicSeq((0,), (1, 0, 1, 0)))
    assert not e0_equiv(x, EvPeriodicSeq((), (0, 1, 1)))
    assert [x[n] for n in range(7)] == [1, 1, 0, 0, 1, 0, 1]
    with pytest.raises(ValueError):
        EvPeriodicSeq((0,), ())


@given(seqs, seqs)
def test_e0_matches_tail_oracle(x, y):
    assert e0_equiv(x, y) == e0_tail_bruteforce(x, y)


@given(seqs, seqs, seqs)
def test_e0_is_an_equivalence(x, y, z):
    assert e0_equiv(x, x)
    assert e0_equiv(x, y) == e0_equiv(y, x)
    if e0_equiv(x, y) and e0_equiv(y, z):
        assert e0_equiv(x, z)


@given(seqs, seqs, seqs, seqs)
def test_product_is_conjunction(a, b, c, d):
    assert product_equiv([e0_equiv, e0_equiv], (a, c), (b, d)) == \
        (e0_equiv(a, b) and e0_equiv(c, d))


def test_product_unknowns():
    unknown = lambda a, b: None
    assert product_equiv([unknown, e0_equiv], (0, EvPeriodicSeq((), (0,))),
                         (0, EvPeriodicSeq((), (1,)))) is False
    assert product_equiv([unknown, e0_equiv], (0, EvPeriodicSeq((), (0,))),
                         (0, EvPeriodicSeq((1,), (0,)))) is None
    with pytest.raises(ValueError):
        product_equiv([e0_equiv], (), ())


def test_point_relation():
    rel = point_relation()
    assert rel(constant(2, 2), constant(2, 2)) is True
    assert rel(constant(2, 2), constant(2, 2, 1)) is False
    assert rel(constant(2, 2), Derived(2, 2, lambda g: 0, "zero")) is None


def test_generator_ball():
    gens = [parse_word("a", 2), parse_word("b", 2)]
    assert [len(generator_ball(gens, d)) for d in range(4)] == [ball_size(2, d) for d in range(4)]
    assert len(generator_ball([parse_word("aa", 2)], 3)) == 7


def test_orbit_sample():
    gens = [parse_word("a", 2), parse_word("b", 2)]
    x = FinSupport.from_dict(2, 2, 0, {identity(2): 1})
    entries = orbit_sample(gens, x, 2)
    assert len(entries) == 17 and all(e.same_as is None for e in entries)
    # a and b act the same on this Z2 point, and aa fixes it
    p = cyclic(2, 2, 2, (1, 1), (0, 1))
    entries = orbit_sample(gens, p, 2)
    assert [e.same_as for e in entries[:5]] == [None, None, 1, 1, 1]
    assert entries[5].same_as == 0  # aa
    with pytest.raises(ValueError):
        orbit_sample(gens, p, -1)
