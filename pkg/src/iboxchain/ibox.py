"""i-boxes, chains of i-boxes and box moves.

A chain is stored as its root position plus the string of expansion
operators ``"L"``/``"R"``; the boxes themselves are rebuilt from that pair.
Chain indices ``k`` and move positions ``s`` are 1-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .errors import NoSuchBox, NotAChain, NotMovable, OutOfRange, WindowExceeded
from .iword import POS_INF, ExtInt, IWord


@dataclass(frozen=True)
class IBox:
    a: int
    b: int
    color: object
    order: int

    @classmethod
    def on(cls, word: IWord, a: int, b: int) -> "IBox":
        if a > b or word[a] != word[b]:
            raise NoSuchBox(f"[{a},{b}] is not an i-box")
        color = word[a]
        order = sum(1 for t in word.positions(color) if a <= t <= b)
        return cls(a, b, color, order)

    def __str__(self):
        inner = f"{self.a}" if self.a == self.b else f"{self.a},{self.b}"
        return f"[{inner}]_{self.color}"

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "color": self.color, "order": self.order}


def box_left_closure(word: IWord, a: int, b: int) -> IBox:
    """``[a, b}``: the largest box of color ``i_a`` inside ``[a, b]`` starting at ``a``."""
    word._check(a)
    word._check(b)
    end = word.last_at_or_before(b, word[a])
    if end < a:
        raise NoSuchBox(f"color {word[a]!r} does not occur in [{a},{b}]")
    return IBox.on(word, a, end)


def box_right_closure(word: IWord, a: int, b: int) -> IBox:
    """``{a, b]``: the largest box of color ``i_b`` inside ``[a, b]`` ending at ``b``."""
    word._check(a)
    word._check(b)
    begin = word.first_at_or_after(a, word[b])
    if begin > b:
        raise NoSuchBox(f"color {word[b]!r} does not occur in [{a},{b}]")
    return IBox.on(word, begin, b)


@dataclass(frozen=True)
class Chain:
    word: IWord = field(repr=False)
    root: int
    ops: str
    boxes: tuple[IBox, ...] = field(init=False, repr=False, compare=False)
    envelopes: tuple[tuple[int, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        ops = "".join(self.ops).upper()
        if set(ops) - {"L", "R"}:
            raise ValueError(f"expansion operators must be L or R, got {self.ops!r}")
        object.__setattr__(self, "ops", ops)
        word = self.word
        if self.root not in word:
            raise WindowExceeded(f"root {self.root} outside window {list(word.window)}")
        boxes = [IBox.on(word, self.root, self.root)]
        lo = hi = self.root
        envs = [(lo, hi)]
        for k, op in enumerate(ops, start=2):
            if op == "L":
                if lo - 1 < word.start:
                    raise WindowExceeded(f"step {k} (L) leaves window at {lo - 1}")
                lo -= 1
                boxes.append(box_left_closure(word, lo, hi))
            else:
                if hi + 1 > word.stop:
                    raise WindowExceeded(f"step {k} (R) leaves window at {hi + 1}")
                hi += 1
                boxes.append(box_right_closure(word, lo, hi))
            envs.append((lo, hi))
        object.__setattr__(self, "boxes", tuple(boxes))
        object.__setattr__(self, "envelopes", tuple(envs))

    def __len__(self) -> int:
        return len(self.boxes)

    def box(self, k: int) -> IBox:
        self._check(k)
        return self.boxes[k - 1]

    def op(self, k: int) -> str:
        """The expansion operator ``E_k`` for ``1 <= k < l``."""
        if not 1 <= k < len(self):
            raise OutOfRange(f"operator index {k} outside [1,{len(self) - 1}]")
        return self.ops[k - 1]

    @property
    def colors(self) -> tuple:
        return tuple(bx.color for bx in self.boxes)

    @property
    def range(self) -> tuple[int, int]:
        return self.envelopes[-1]

    def prefix(self, s: int) -> "Chain":
        """The sub-chain made of the first ``s`` boxes."""
        self._check(s)
        return Chain(self.word, self.root, self.ops[:s - 1])

    def _check(self, k):
        if not 1 <= k <= len(self):
            raise OutOfRange(f"chain index {k} outside [1,{len(self)}]")

    def to_json(self) -> dict:
        return {"root": self.root, "ops": self.ops}


def chain_from_pair(word: IWord, root: int, ops: str | Sequence[str]) -> Chain:
    return Chain(word, root, "".join(ops))


def check_chain_conditions(word: IWord, boxes: Sequence[tuple[int, int] | IBox]) -> None:
    """Raise NotAChain unless ``boxes`` satisfy conditions (i) and (ii)."""
    spans = [(bx.a, bx.b) if isinstance(bx, IBox) else (int(bx[0]), int(bx[1])) for bx in boxes]
    if not spans:
        raise NotAChain("a chain has at least one box", 0, "length")
    lo, hi = None, None
    for s, (a, b) in enumerate(spans, start=1):
        if a not in word or b not in word or a > b or word[a] != word[b]:
            raise NotAChain(f"box {s} = [{a},{b}] is not an i-box of the word", s, "ibox")
        lo = a if lo is None else min(lo, a)
        hi = b if hi is None else max(hi, b)
        if hi - lo + 1 != s:
            raise NotAChain(f"union of the first {s} boxes has length {hi - lo + 1}", s, "i")
        color = word[a]
        if (word.first_at_or_after(lo, color), word.last_at_or_before(hi, color)) != (a, b):
            raise NotAChain(f"box {s} is not the largest of color {color!r} in [{lo},{hi}]", s, "ii")


def pair_from_chain(word: IWord, boxes: Sequence[tuple[int, int] | IBox]) -> tuple[int, str]:
    check_chain_conditions(word, boxes)
    spans = [(bx.a, bx.b) if isinstance(bx, IBox) else (int(bx[0]), int(bx[1])) for bx in boxes]
    root = spans[0][0]
    ops = []
    lo = hi = root
    for a, b in spans[1:]:
        if a < lo:
            ops.append("L")
            lo -= 1
        else:
            ops.append("R")
            hi += 1
    return root, "".join(ops)


def initial_chain(word: IWord, a: int, b: int) -> Chain:
    """The all-L chain of range ``[a, b]`` rooted at ``b``."""
    if a > b or a not in word or b not in word:
        raise OutOfRange(f"[{a},{b}] is not a nonempty interval of window {list(word.window)}")
    return Chain(word, b, "L" * (b - a))


def movable(chain: Chain, s: int) -> bool:
    if not 1 <= s < len(chain):
        raise OutOfRange(f"move position {s} outside [1,{len(chain) - 1}]")
    return s == 1 or chain.ops[s - 2] != chain.ops[s - 1]


_TOGGLE = {"L": "R", "R": "L"}


def box_move(chain: Chain, s: int) -> Chain:
    if not movable(chain, s):
        raise NotMovable(f"box {s} is not movable (E_{s - 1} = E_{s})")
    ops = list(chain.ops)
    root = chain.root
    if s == 1:
        root += 1 if ops[0] == "R" else -1
    for k in (s - 1, s):
        if k >= 1:
            ops[k - 1] = _TOGGLE[ops[k - 1]]
    return Chain(chain.word, root, "".join(ops))


def effective_end(chain: Chain, k: int) -> int:
    bx = chain.box(k)
    if k == 1:
        return chain.root
    return bx.b if chain.ops[k - 2] == "R" else bx.a


def frozen_indices(chain: Chain) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(K_fr, K_ex)``: indices whose box is / is not maximal for its color in the range."""
    a, b = chain.range
    word = chain.word
    frozen, ex = [], []
    for k, bx in enumerate(chain.boxes, start=1):
        full = (word.first_at_or_after(a, bx.color), word.last_at_or_before(b, bx.color))
        (frozen if full == (bx.a, bx.b) else ex).append(k)
    return tuple(frozen), tuple(ex)


def color_shift(chain: Chain, k: int) -> ExtInt:
    """``k[1]``: the next chain index with the color of box ``k``."""
    color = chain.box(k).color
    for k2 in range(k + 1, len(chain) + 1):
        if chain.boxes[k2 - 1].color == color:
            return k2
    return POS_INF


def descending_moves(chain: Chain) -> list[int]:
    """Moves that push an R one slot left or turn a leading R into L.

    Each such move lowers (sum of R slots + number of R's), so repeating any
    of them reaches the initial chain of the same range.
    """
    ops = chain.ops
    moves = [1] if ops[:1] == "R" else []
    moves += [k for k in range(2, len(ops) + 1) if ops[k - 2] == "L" and ops[k - 1] == "R"]
    return moves


def path_to_initial(chain: Chain) -> list[int]:
    """Box-move positions taking ``chain`` to the initial chain of its range."""
    path = []
    while "R" in chain.ops:
        s = chain.ops.index("R") + 1
        path.append(s)
        chain = box_move(chain, s)
    return path


def chains_with_range(word: IWord, a: int, b: int) -> Iterator[Chain]:
    """Every chain of range ``[a, b]``: root ``c`` with ``c - a`` L's and ``b - c`` R's."""
    n = b - a
    for c in range(a, b + 1):
        for rs in combinations(range(n), b - c):
            ops = ["L"] * n
            for p in rs:
                ops[p] = "R"
            yield Chain(word, c, "".join(ops))


def all_chains(word: IWord) -> Iterator[Chain]:
    for a in range(word.start, word.stop + 1):
        for b in range(a, word.stop + 1):
            yield from chains_with_range(word, a, b)
