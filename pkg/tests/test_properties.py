"""Randomized algebraic laws, driven by hypothesis through seeded generators."""

import numpy as np
from hypothesis import given, settings, strategies as st

from iboxchain.engines import b_kk, b_via_mutation_path, b_word
from iboxchain.exmatrix import (ExchangeMatrix, check_skew_symmetrizable, mutate, permute,
                                transposition)
from iboxchain.ibox import (Chain, box_move, chain_from_pair, check_chain_conditions,
                            movable, pair_from_chain, path_to_initial)
from iboxchain.randomgen import (random_cartan, random_instance, random_signed_word,
                                 random_word)
from iboxchain.signedword import (SignedWord, b_matrix_signed, flip, left_reflection,
                                  signed_word_of_chain)

rngs = st.randoms(use_true_random=False)
SETTINGS = settings(max_examples=60, deadline=None)


def _sample_matrix(rng):
    sw = random_signed_word(rng, random_cartan(rng), min_len=3)
    return b_matrix_signed(sw)


@SETTINGS
@given(rngs)
def test_chain_round_trip(rng):
    ch = random_instance(rng)
    check_chain_conditions(ch.word, ch.boxes)
    assert pair_from_chain(ch.word, ch.boxes) == (ch.root, ch.ops)
    assert chain_from_pair(ch.word, ch.root, ch.ops) == ch


@SETTINGS
@given(rngs)
def test_box_move_involution_and_colors(rng):
    ch = random_instance(rng)
    for s in range(1, len(ch)):
        if not movable(ch, s):
            continue
        moved = box_move(ch, s)
        check_chain_conditions(moved.word, moved.boxes)
        assert box_move(moved, s) == ch
        want = list(ch.colors)
        want[s - 1], want[s] = want[s], want[s - 1]
        assert list(moved.colors) == want


@SETTINGS
@given(rngs)
def test_path_to_initial_replays(rng):
    ch = random_instance(rng)
    cur = ch
    for s in path_to_initial(ch):
        cur = box_move(cur, s)
    assert "R" not in cur.ops and cur.range == ch.range
    for s in reversed(path_to_initial(ch)):
        cur = box_move(cur, s)
    assert cur == ch


@SETTINGS
@given(rngs)
def test_mutation_involution_and_skew(rng):
    m = _sample_matrix(rng)
    for k in m.cols:
        once = mutate(m, k)
        assert check_skew_symmetrizable(once)[0]
        assert mutate(once, k) == m


@SETTINGS
@given(rngs)
def test_mutate_permute_commute(rng):
    m = _sample_matrix(rng)
    labels = list(m.rows)
    image = labels[:]
    rng.shuffle(image)
    sigma = dict(zip(labels, image))
    for k in m.cols:
        assert mutate(permute(m, sigma), sigma[k]) == permute(mutate(m, k), sigma)


@SETTINGS
@given(rngs)
def test_permutation_composition(rng):
    m = _sample_matrix(rng)
    labels = list(m.rows)
    a, b = labels[:], labels[:]
    rng.shuffle(a)
    rng.shuffle(b)
    s, t = dict(zip(labels, a)), dict(zip(labels, b))
    ts = {x: t[s[x]] for x in labels}
    assert permute(permute(m, s), t) == permute(m, ts)
    j = rng.choice(labels)
    k = rng.choice(labels)
    if j != k:
        assert permute(permute(m, transposition(j, k)), transposition(j, k)) == m


@SETTINGS
@given(rngs)
def test_signed_word_covariance(rng):
    sw = random_signed_word(rng, random_cartan(rng))
    b = b_matrix_signed(sw)
    assert b_matrix_signed(left_reflection(sw)) == b
    for j in range(1, len(sw)):
        if sw.sign(j) == sw.sign(j + 1):
            continue
        after = b_matrix_signed(flip(sw, j))
        if sw.letter(j) == sw.letter(j + 1):
            assert after == mutate(b, j)
        else:
            assert after == permute(b, transposition(j, j + 1))


@SETTINGS
@given(rngs)
def test_three_constructions_agree(rng):
    ch = random_instance(rng)
    w = b_word(ch)
    assert b_via_mutation_path(ch)[0] == w
    assert b_kk(ch) == w


@SETTINGS
@given(rngs)
def test_serialization_round_trips(rng):
    ch = random_instance(rng)
    m = b_word(ch)
    assert ExchangeMatrix.from_json(m.to_json()) == m
    sw = signed_word_of_chain(ch)
    assert SignedWord.from_json(sw.to_json(), sw.cartan) == sw
    assert Chain(ch.word, ch.root, ch.ops) == ch


@SETTINGS
@given(rngs)
def test_word_matrix_integrality(rng):
    cartan = random_cartan(rng)
    w = random_word(rng, cartan)
    sw = SignedWord(tuple((1, h) for h in w.letters), cartan)
    m = b_matrix_signed(sw)
    assert m.entries.dtype == np.int64
    assert np.abs(m.entries).max(initial=0) <= 3
