import pytest

from iboxchain.cartan import finite_type_cartan
from iboxchain.errors import EmptyWord, NotFlippable, OutOfRange
from iboxchain.ibox import chain_from_pair, color_shift, frozen_indices
from iboxchain.iword import POS_INF
from iboxchain.signedword import (SignedWord, b_matrix_signed, flip, left_reflection,
                                  signed_word_from_string, signed_word_of_chain)


def sw(text, cartan):
    return signed_word_from_string(text, cartan)


def test_of_chain_examples(a3_word, chain_c, chain_c1):
    assert str(signed_word_of_chain(chain_c)) == "(+1,+3,+2,+1,+3,+2,+3,+1)"
    assert str(signed_word_of_chain(chain_c1)) == "(+3,-1,+2,+1,+3,+2,+3,+1)"
    assert str(signed_word_of_chain(chain_from_pair(a3_word, 0, ""))) == "(+3)"


def test_k_sets_agree_with_chain(chain_c, chain_ct):
    for ch in (chain_c, chain_ct):
        w = signed_word_of_chain(ch)
        assert (w.frozen, w.exchangeable) == frozen_indices(ch)
        assert [w.shift(k) for k in range(1, 9)] == [color_shift(ch, k) for k in range(1, 9)]


def test_left_reflection(a3):
    w = sw("+3,-1,+2", a3)
    assert str(left_reflection(w)) == "(-3,-1,+2)"
    assert left_reflection(left_reflection(w)) == w
    assert str(left_reflection(sw("+1", a3))) == "(-1)"
    with pytest.raises(EmptyWord):
        left_reflection(SignedWord((), a3))


def test_flip(a3):
    w = sw("+3,-1,+2", a3)
    assert str(flip(w, 1)) == "(-1,+3,+2)"
    assert flip(flip(w, 1), 1) == w
    with pytest.raises(NotFlippable):
        flip(sw("+1,+1", a3), 1)
    with pytest.raises(OutOfRange):
        flip(w, 3)


def test_matrix_entries(a3):
    b = b_matrix_signed(sw("+1,+3,+2,+1,+3,+2,+3,+1", a3))
    assert b.cols == (1, 2, 3, 4, 5)
    assert b[1, 4] == 1 and b[4, 1] == -1
    assert b[3, 4] == -1
    assert b[2, 4] == 0


def test_length_one(a3):
    b = b_matrix_signed(sw("+2", a3))
    assert b.rows == (1,) and b.cols == () and b.shape == (1, 0)


def test_shift_and_sets(a3):
    w = sw("+1,-1,+2", a3)
    assert w.shift(1) == 2 and w.shift(2) == POS_INF
    assert w.exchangeable == (1,) and w.frozen == (2, 3)


def test_two_letter_words(a3):
    # same letter: single arrow between 1 and 2 whose sign follows epsilon_2
    assert b_matrix_signed(sw("+1,+1", a3))[2, 1] == -1
    assert b_matrix_signed(sw("+1,-1", a3))[2, 1] == 1


def test_symmetrizer_uses_letter_weights():
    g2 = finite_type_cartan("G", 2)
    b = b_matrix_signed(sw("+1,+2,+1,-2,+2", g2))
    assert b.symmetrizer == (1, 3, 1, 3, 3)


def test_json_roundtrip(a3):
    w = sw("+1,-3,+2", a3)
    assert w.to_json() == {"letters": [[1, "1"], [-1, "3"], [1, "2"]]}
    assert SignedWord.from_json(w.to_json(), a3) == w
