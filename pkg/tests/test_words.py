import random

import pytest
from hypothesis import given, settings, strategies as st

from ringgroups.words import (
    FAMILIES, GroupId, GroupMismatch, GroupWord, IllegalLetter, IndexOutOfRange,
    WordError, WordSyntaxError, alpha, alphabet, concat, exponent_sums, format_word, free_reduce,
    invert, parse_word, power, random_word, rho, sigma, tau,
)

W3 = GroupId("W", 3)
R2 = GroupId("R", 2)


def test_parse_examples():
    assert parse_word("r1 s2^-1", W3).letters == (rho(1), sigma(2, -1))
    assert parse_word("t1 t1", R2).letters == (tau(1), tau(1))
    with pytest.raises(IllegalLetter):
        parse_word("t1", GroupId("UW", 2))


def test_parse_expands_powers():
    assert parse_word("s1^3", W3).letters == (sigma(1),) * 3
    assert parse_word("r2^-2", W3).letters == (rho(2, -1),) * 2
    assert parse_word("s1^0", W3).letters == ()


def test_parse_identity_tokens():
    assert parse_word("1", W3).is_empty()
    assert parse_word("", W3).is_empty()
    assert format_word(GroupWord(W3)) == "1"


def test_parse_errors():
    with pytest.raises(WordSyntaxError) as err:
        parse_word("r1 q2", W3)
    assert err.value.position == 3
    with pytest.raises(IndexOutOfRange):
        parse_word("r3", W3)
    with pytest.raises(IndexOutOfRange):
        parse_word("t4", W3)
    with pytest.raises(IllegalLetter):
        parse_word("t1", GroupId("UR", 3))


def test_alpha_letters_only_in_pur():
    g = GroupId("PUR", 3)
    assert parse_word("a1_2 a3_1^-1", g).letters == (alpha(1, 2), alpha(3, 1, -1))
    with pytest.raises(IllegalLetter):
        parse_word("r1", g)
    with pytest.raises(IllegalLetter):
        parse_word("a1_2", R2)
    with pytest.raises(WordError):
        parse_word("a1_1", g)


def test_free_reduce_examples():
    assert free_reduce(GroupWord(W3, (rho(1), rho(1, -1)))).is_empty()
    w = GroupWord(W3, (sigma(1), tau(2), tau(2, -1), sigma(1)))
    assert free_reduce(w).letters == (sigma(1), sigma(1))
    assert free_reduce(GroupWord(W3)).is_empty()


def test_invert_concat_examples():
    w = GroupWord(W3, (rho(1), sigma(2)))
    assert invert(w).letters == (sigma(2, -1), rho(1, -1))
    assert concat(GroupWord(W3, (rho(1),)), GroupWord(W3, (rho(1, -1),))).is_empty()
    assert concat(w, GroupWord(W3)) == free_reduce(w)
    with pytest.raises(GroupMismatch):
        concat(w, GroupWord(GroupId("W", 4)))


def test_exponent_sums_examples():
    w = GroupWord(W3, (rho(1), rho(1), sigma(2, -1)))
    s = exponent_sums(w)
    assert s.rho == (2, 0) and s.sigma == (0, -1) and s.tau == (0, 0, 0)
    assert exponent_sums(GroupWord(W3)) == exponent_sums(w * invert(w))
    assert exponent_sums(GroupWord(W3)).rho == (0, 0)


def test_power():
    w = parse_word("r1 t2", W3)
    assert power(w, 3) == parse_word("r1 t2 r1 t2 r1 t2", W3)
    assert power(w, -1) == invert(w)
    assert power(w, 0).is_empty()


def test_round_trip_format():
    rng = random.Random(1)
    for fam in FAMILIES:
        g = GroupId(fam, 4)
        for _ in range(20):
            w = random_word(g, 12, rng)
            assert parse_word(format_word(w), g) == w


def test_alphabet_sizes():
    assert len(alphabet(GroupId("UW", 4))) == 6
    assert len(alphabet(GroupId("R", 4))) == 10
    assert len(alphabet(GroupId("PUR", 4))) == 12


groups = st.sampled_from([GroupId(f, n) for f in FAMILIES for n in (2, 3, 5)])


@st.composite
def words(draw, group=None):
    g = group or draw(groups)
    gens = alphabet(g)
    idx = draw(st.lists(st.tuples(st.integers(0, len(gens) - 1), st.booleans()), max_size=30))
    return GroupWord(g, tuple(gens[k] if pos else gens[k].inverse() for k, pos in idx))


@given(words())
def test_free_reduce_idempotent(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert all(not a.cancels(b) for a, b in zip(r.letters, r.letters[1:]))


@given(words())
def test_word_times_inverse_reduces_to_empty(w):
    assert concat(w, invert(w)).is_empty()


@settings(max_examples=200)
@given(st.data())
def test_exponent_sums_additive(data):
    g = data.draw(groups)
    w1, w2 = data.draw(words(g)), data.draw(words(g))
    assert exponent_sums(w1) + exponent_sums(w2) == exponent_sums(concat(w1, w2))


@given(st.data())
def test_exponent_sums_ignore_commutators(data):
    g = data.draw(groups)
    w, a, b = data.draw(words(g)), data.draw(words(g)), data.draw(words(g))
    comm = a * b * invert(a) * invert(b)
    cut = data.draw(st.integers(0, len(w)))
    spliced = GroupWord(g, w.letters[:cut] + comm.letters + w.letters[cut:])
    assert exponent_sums(spliced) == exponent_sums(w)
