import pytest

from iboxchain.cartan import finite_type_cartan, standard_involution
from iboxchain.errors import EmptyWord, OutOfRange, UnknownIndex
from iboxchain.iword import NEG_INF, POS_INF, IWord, hat_w0_window

from conftest import A3_W0

INF = float("inf")


def scan(word, s, pred, forward):
    """Linear-scan oracle over the whole window."""
    rng = range(s, word.stop + 1) if forward else range(s, word.start - 1, -1)
    for t in rng:
        if pred(t):
            return t
    return INF if forward else -INF


def test_letters(a3_word):
    assert a3_word.letters == (1, 3, 2, 3, 1, 2, 3, 1)
    assert a3_word.window == (-3, 4)


def test_succ_pred_examples(a3_word):
    assert a3_word.succ(1) == 4
    assert a3_word.succ(4) == POS_INF
    assert a3_word.succ(-2) == 0
    assert a3_word.pred(4) == 1
    assert a3_word.pred(-3) == NEG_INF
    assert a3_word.pred(3) == 0


def test_closure_symbol_examples(a3_word):
    assert a3_word.first_at_or_after(-3, 1) == -3
    assert a3_word.first_at_or_after(-3, 2) == -1
    assert a3_word.first_at_or_after(2, 1) == 4
    assert a3_word.last_at_or_before(4, 3) == 3
    assert a3_word.last_at_or_before(4, 1) == 4
    assert a3_word.last_at_or_before(-3, 2) == NEG_INF


def test_against_scan(a3_word):
    w = a3_word
    for s in range(w.start, w.stop + 1):
        assert w.succ(s) == scan(w, s + 1, lambda t: w[t] == w[s], True)
        assert w.pred(s) == scan(w, s - 1, lambda t: w[t] == w[s], False)
        for j in (1, 2, 3):
            assert w.first_at_or_after(s, j) == scan(w, s, lambda t: w[t] == j, True)
            assert w.last_at_or_before(s, j) == scan(w, s, lambda t: w[t] == j, False)


def test_errors(a3_word):
    with pytest.raises(OutOfRange):
        a3_word.succ(5)
    with pytest.raises(OutOfRange):
        a3_word.pred(-4)
    with pytest.raises(UnknownIndex):
        a3_word.first_at_or_after(0, 7)


def test_sentinel_order():
    assert NEG_INF < -10**9 < 10**9 < POS_INF


def test_hat_w0_windows(a3):
    star = standard_involution("A", 3)
    assert hat_w0_window(A3_W0, star, (1, 6), a3).letters == tuple(A3_W0)
    # i_{k+6} = star(i_k) applied letter by letter from positions 1..6
    assert hat_w0_window(A3_W0, star, (5, 10), a3).letters == (2, 1, 3, 2, 1, 3)
    assert hat_w0_window(A3_W0, star, (7, 12), a3).letters == (3, 2, 1, 3, 2, 3)


def test_hat_w0_coherent(a3):
    star = standard_involution("A", 3)
    big = hat_w0_window(A3_W0, star, (-20, 20), a3)
    for a, b in [(-3, 4), (-13, -2), (5, 17)]:
        assert hat_w0_window(A3_W0, star, (a, b), a3).letters == big.restrict(a, b).letters
    for k in range(-20, 15):
        assert big[k + 6] == star(big[k])


def test_hat_w0_errors(a3):
    star = standard_involution("A", 3)
    with pytest.raises(EmptyWord):
        hat_w0_window([], star, (0, 3), a3)
    with pytest.raises(UnknownIndex):
        hat_w0_window([1, 5], star, (0, 3), a3)


def test_from_window_checks_length(a3):
    with pytest.raises(OutOfRange):
        IWord.from_window((0, 3), [1, 2], a3)
    w = IWord.from_window((0, 1), ["1", "2"], a3)
    assert w.letters == (1, 2)
