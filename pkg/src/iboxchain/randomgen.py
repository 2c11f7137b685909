"""Random Cartan matrices, words, chains and signed words for the verifiers."""

from __future__ import annotations

import random

from .cartan import CartanMatrix, validate_cartan
from .ibox import Chain
from .iword import IWord
from .signedword import SignedWord


def random_cartan(rng: random.Random, max_rank: int = 5, edge_prob: float = 0.5) -> CartanMatrix:
    """Symmetrizable matrix with off-diagonal entries in [-3, 0].

    A weight ``w_i`` in {1, 2, 3} is drawn per node and each edge gets a pair
    ``(c_ij, c_ji)`` with ``w_i c_ij = w_j c_ji``; edges with no such pair are
    dropped. Diagrams may be disconnected and non-symmetric.
    """
    n = rng.randint(1, max_rank)
    w = [rng.choice((1, 1, 2, 3)) for _ in range(n)]
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() >= edge_prob:
                continue
            pairs = [(x, y) for x in range(-3, 0) for y in range(-3, 0) if w[i] * x == w[j] * y]
            if pairs:
                rows[i][j], rows[j][i] = rng.choice(pairs)
    return validate_cartan(rows)


def random_word(rng: random.Random, cartan: CartanMatrix, max_len: int = 14,
                min_len: int = 1) -> IWord:
    n = rng.randint(min_len, max_len)
    start = rng.randint(-5, 5)
    letters = tuple(rng.choice(cartan.index_set) for _ in range(n))
    return IWord(start, letters, cartan)


def random_chain(rng: random.Random, word: IWord, full_range: bool = False) -> Chain:
    """Root uniform in a random range; the L/R multiset shuffled."""
    if full_range:
        a, b = word.window
    else:
        a = rng.randint(word.start, word.stop)
        b = rng.randint(a, word.stop)
    c = rng.randint(a, b)
    ops = ["L"] * (c - a) + ["R"] * (b - c)
    rng.shuffle(ops)
    return Chain(word, c, "".join(ops))


def random_instance(rng: random.Random, max_rank: int = 5, max_len: int = 14) -> Chain:
    cartan = random_cartan(rng, max_rank)
    return random_chain(rng, random_word(rng, cartan, max_len))


def random_signed_word(rng: random.Random, cartan: CartanMatrix, max_len: int = 14,
                       min_len: int = 1) -> SignedWord:
    n = rng.randint(min_len, max_len)
    return SignedWord(tuple((rng.choice((1, -1)), rng.choice(cartan.index_set)) for _ in range(n)),
                      cartan)
