"""Index words over finite integer windows.

Positions outside the window resolve to the sentinels ``POS_INF`` and
``NEG_INF``; these compare correctly against plain ints.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from .cartan import CartanMatrix, DynkinInvolution
from .errors import EmptyWord, OutOfRange, UnknownIndex

POS_INF = math.inf
NEG_INF = -math.inf

ExtInt = Union[int, float]


@dataclass(frozen=True)
class IWord:
    """Letters ``i_k`` for ``k`` in the window ``[start, stop]``."""

    start: int
    letters: tuple
    cartan: CartanMatrix
    _occ: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not self.letters:
            raise EmptyWord("a word needs at least one position")
        occ: dict = {}
        for off, lab in enumerate(self.letters):
            if lab not in self.cartan:
                raise UnknownIndex(f"letter {lab!r} at position {self.start + off} not in index set")
            occ.setdefault(lab, []).append(self.start + off)
        object.__setattr__(self, "_occ", occ)

    @classmethod
    def from_window(cls, window: tuple[int, int], letters: Sequence, cartan: CartanMatrix) -> "IWord":
        a, b = int(window[0]), int(window[1])
        letters = tuple(cartan.resolve(x) for x in letters)
        if b - a + 1 != len(letters):
            raise OutOfRange(f"window [{a},{b}] needs {b - a + 1} letters, got {len(letters)}")
        return cls(a, letters, cartan)

    @property
    def stop(self) -> int:
        return self.start + len(self.letters) - 1

    @property
    def window(self) -> tuple[int, int]:
        return (self.start, self.stop)

    def __contains__(self, s) -> bool:
        return isinstance(s, int) and self.start <= s <= self.stop

    def __getitem__(self, s: int):
        self._check(s)
        return self.letters[s - self.start]

    def _check(self, s):
        if s not in self:
            raise OutOfRange(f"position {s} outside window [{self.start},{self.stop}]")

    def positions(self, j) -> list[int]:
        if j not in self.cartan:
            raise UnknownIndex(f"{j!r} not in index set")
        return self._occ.get(j, [])

    def succ(self, s: int) -> ExtInt:
        self._check(s)
        occ = self._occ[self[s]]
        p = bisect_right(occ, s)
        return occ[p] if p < len(occ) else POS_INF

    def pred(self, s: int) -> ExtInt:
        self._check(s)
        occ = self._occ[self[s]]
        p = bisect_left(occ, s)
        return occ[p - 1] if p > 0 else NEG_INF

    def first_at_or_after(self, s: int, j) -> ExtInt:
        self._check(s)
        occ = self.positions(j)
        p = bisect_left(occ, s)
        return occ[p] if p < len(occ) else POS_INF

    def last_at_or_before(self, s: int, j) -> ExtInt:
        self._check(s)
        occ = self.positions(j)
        p = bisect_right(occ, s)
        return occ[p - 1] if p > 0 else NEG_INF

    def restrict(self, a: int, b: int) -> "IWord":
        self._check(a)
        self._check(b)
        return IWord(a, self.letters[a - self.start:b - self.start + 1], self.cartan)

    def to_json(self) -> dict:
        return {"window": [self.start, self.stop], "letters": list(self.letters)}


def hat_w0_window(reduced_word: Sequence, involution: DynkinInvolution | Mapping,
                  window: tuple[int, int], cartan: CartanMatrix) -> IWord:
    """Restrict the bi-infinite extension ``i_{k+l} = star(i_k)`` to ``window``.

    The given word occupies positions ``1..l``.
    """
    word = tuple(cartan.resolve(x) for x in reduced_word)
    if not word:
        raise EmptyWord("reduced word is empty")
    star = involution.star if isinstance(involution, DynkinInvolution) else involution
    star = {cartan.resolve(k): cartan.resolve(v) for k, v in star.items()}
    for lab in cartan.index_set:
        if lab not in star:
            raise UnknownIndex(f"involution does not map {lab!r}")
    if any(star[star[lab]] != lab for lab in star):
        raise ValueError("involution must square to the identity")
    a, b = int(window[0]), int(window[1])
    if a > b:
        raise OutOfRange(f"empty window [{a},{b}]")
    n = len(word)
    letters = []
    for k in range(a, b + 1):
        shift, r = divmod(k - 1, n)
        lab = word[r]
        if shift % 2:  # star is an involution, so only the parity matters
            lab = star[lab]
        letters.append(lab)
    return IWord(a, tuple(letters), cartan)
