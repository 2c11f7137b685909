"""Signed words and their exchange matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .cartan import CartanMatrix
from .errors import EmptyWord, NotFlippable, OutOfRange, ParseError
from .exmatrix import ExchangeMatrix
from .ibox import Chain
from .iword import POS_INF, ExtInt


@dataclass(frozen=True)
class SignedWord:
    """Letters ``(sign, h)`` with ``sign`` in {+1, -1}; indices are 1-based."""

    letters: tuple[tuple[int, object], ...]
    cartan: CartanMatrix = field(repr=False)
    _next: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        letters = []
        for eps, h in self.letters:
            if eps not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {eps!r}")
            letters.append((int(eps), self.cartan.resolve(h)))
        object.__setattr__(self, "letters", tuple(letters))
        nxt: list[ExtInt] = [POS_INF] * len(letters)
        last: dict = {}
        for k in range(len(letters), 0, -1):
            h = letters[k - 1][1]
            nxt[k - 1] = last.get(h, POS_INF)
            last[h] = k
        object.__setattr__(self, "_next", tuple(nxt))

    def __len__(self) -> int:
        return len(self.letters)

    def sign(self, k: int) -> int:
        return self.letters[k - 1][0]

    def letter(self, k: int):
        return self.letters[k - 1][1]

    def shift(self, k: int) -> ExtInt:
        """``k[1]``: next index with the same letter, or +inf."""
        if not 1 <= k <= len(self):
            raise OutOfRange(f"index {k} outside [1,{len(self)}]")
        return self._next[k - 1]

    @property
    def exchangeable(self) -> tuple[int, ...]:
        return tuple(k for k in range(1, len(self) + 1) if self._next[k - 1] != POS_INF)

    @property
    def frozen(self) -> tuple[int, ...]:
        return tuple(k for k in range(1, len(self) + 1) if self._next[k - 1] == POS_INF)

    def __str__(self):
        return "(" + ",".join(f"{'+' if e > 0 else '-'}{h}" for e, h in self.letters) + ")"

    def to_json(self) -> dict:
        return {"letters": [[e, str(h)] for e, h in self.letters]}

    @classmethod
    def from_json(cls, obj: Mapping, cartan: CartanMatrix) -> "SignedWord":
        try:
            return cls(tuple((int(e), h) for e, h in obj["letters"]), cartan)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad signed word: {exc}") from exc


def signed_word_of_chain(chain: Chain) -> SignedWord:
    letters = [(1, chain.boxes[0].color)]
    for op, bx in zip(chain.ops, chain.boxes[1:]):
        letters.append((1 if op == "L" else -1, bx.color))
    return SignedWord(tuple(letters), chain.word.cartan)


def left_reflection(sw: SignedWord) -> SignedWord:
    if not len(sw):
        raise EmptyWord("cannot reflect an empty signed word")
    (e, h), rest = sw.letters[0], sw.letters[1:]
    return SignedWord(((-e, h),) + rest, sw.cartan)


def flip(sw: SignedWord, j: int) -> SignedWord:
    if not 1 <= j < len(sw):
        raise OutOfRange(f"flip position {j} outside [1,{len(sw) - 1}]")
    if sw.sign(j) == sw.sign(j + 1):
        raise NotFlippable(f"letters {j} and {j + 1} have the same sign")
    letters = list(sw.letters)
    letters[j - 1], letters[j] = letters[j], letters[j - 1]
    return SignedWord(tuple(letters), sw.cartan)


def b_tilde_signed(sw: SignedWord) -> np.ndarray:
    """The full ``K x K`` matrix; entry ``[j-1, k-1]`` is ``b~_{jk}``."""
    n = len(sw)
    c = sw.cartan
    eps = [0] + [e for e, _ in sw.letters]  # 1-based, padded
    hs = [None] + [h for _, h in sw.letters]
    nxt = [None] + list(sw._next)
    out = np.zeros((n, n), dtype=np.int64)
    for j in range(1, n + 1):
        j1 = nxt[j]
        for k in range(1, n + 1):
            k1 = nxt[k]
            if k == j1:
                v = eps[k]
            elif j == k1:
                v = -eps[j]
            elif j < k < j1 < k1 and eps[j1] == eps[k]:
                v = eps[k] * c.c(hs[j], hs[k])
            elif j < k < k1 < j1 and eps[k] == -eps[k1]:
                v = eps[k] * c.c(hs[j], hs[k])
            elif k < j < k1 < j1 and eps[k1] == eps[j]:
                v = -eps[j] * c.c(hs[j], hs[k])
            elif k < j < j1 < k1 and eps[j] == -eps[j1]:
                v = -eps[j] * c.c(hs[j], hs[k])
            else:
                continue
            out[j - 1, k - 1] = v
    return out


def word_symmetrizer(sw: SignedWord) -> tuple[int, ...]:
    return tuple(sw.cartan.d(h) for _, h in sw.letters)


def b_matrix_signed(sw: SignedWord) -> ExchangeMatrix:
    """The ``K x K_ex`` exchange matrix of a signed word."""
    full = b_tilde_signed(sw)
    ex = sw.exchangeable
    rows = tuple(range(1, len(sw) + 1))
    return ExchangeMatrix(rows, ex, full[:, [k - 1 for k in ex]], word_symmetrizer(sw))


def signed_word_from_string(text: str, cartan: CartanMatrix) -> SignedWord:
    """Parse ``"+1,-3,+2"``; a missing sign means +1."""
    letters = []
    for tok in (t.strip() for t in text.split(",")):
        if not tok:
            continue
        eps = -1 if tok[0] == "-" else 1
        letters.append((eps, tok.lstrip("+-")))
    return SignedWord(tuple(letters), cartan)
