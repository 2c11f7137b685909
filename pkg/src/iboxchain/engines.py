"""Three constructions of the exchange matrix of a chain, and their cross-checks.

* ``b_via_mutation_path`` starts from the closed formula for the all-L chain
  and follows box moves, mutating or swapping at each step;
* ``b_matrix_signed(signed_word_of_chain(chain))`` is the signed-word formula;
* ``b_kk`` reads the matrix off interval incidences of the boxes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .errors import InconsistentMatrix, OutOfRange
from .exmatrix import ExchangeMatrix, check_skew_symmetrizable, mutate, permute, transposition
from .ibox import (Chain, box_move, color_shift, descending_moves, effective_end,
                   frozen_indices, initial_chain, movable, path_to_initial)
from .iword import IWord
from .signedword import b_matrix_signed, signed_word_of_chain


@dataclass(frozen=True)
class MoveTraceStep:
    step: int
    position: int
    action: str  # "mutate" or "permute"
    colors: tuple

    def to_json(self) -> dict:
        return {"step": self.step, "position": self.position, "action": self.action,
                "colors": [str(c) for c in self.colors]}


def _chain_symmetrizer(chain: Chain) -> tuple[int, ...]:
    cartan = chain.word.cartan
    return tuple(cartan.d(col) for col in chain.colors)


def b_initial(word: IWord, a: int, b: int) -> ExchangeMatrix:
    """Closed formula for the matrix of the all-L chain of range ``[a, b]``."""
    chain = initial_chain(word, a, b)
    n = len(chain)
    cartan = word.cartan
    colors = (None,) + chain.colors
    nxt = (None,) + tuple(color_shift(chain, k) for k in range(1, n + 1))
    _, ex = frozen_indices(chain)
    out = np.zeros((n, len(ex)), dtype=np.int64)
    for j in range(1, n + 1):
        for q, k in enumerate(ex):
            if k == nxt[j]:
                v = 1
            elif j == nxt[k]:
                v = -1
            elif j < k < nxt[j] < nxt[k]:
                v = cartan.c(colors[j], colors[k])
            elif k < j < nxt[k] < nxt[j]:
                v = -cartan.c(colors[j], colors[k])
            else:
                continue
            out[j - 1, q] = v
    return ExchangeMatrix(tuple(range(1, n + 1)), ex, out, _chain_symmetrizer(chain))


def replay_moves(start: Chain, matrix: ExchangeMatrix, moves) -> tuple[ExchangeMatrix, list[MoveTraceStep], Chain]:
    """Follow box moves from ``start``, mutating on equal colors and swapping otherwise."""
    trace = []
    cur = start
    for step, p in enumerate(moves, start=1):
        colors = (cur.boxes[p - 1].color, cur.boxes[p].color)
        if colors[0] == colors[1]:
            matrix = mutate(matrix, p)
            action = "mutate"
        else:
            matrix = permute(matrix, transposition(p, p + 1))
            action = "permute"
        trace.append(MoveTraceStep(step, p, action, colors))
        cur = box_move(cur, p)
    return matrix, trace, cur


def b_via_mutation_path(chain: Chain) -> tuple[ExchangeMatrix, list[MoveTraceStep]]:
    a, b = chain.range
    moves = path_to_initial(chain)[::-1]
    start = initial_chain(chain.word, a, b)
    matrix, trace, end = replay_moves(start, b_initial(chain.word, a, b), moves)
    assert end == chain
    return matrix, trace


def _probe(value, lo, hi):
    # predecessor/successor probes are taken inside the chain's range
    if value < lo:
        return -np.inf
    if value > hi:
        return np.inf
    return value


def b_kk_tilde(chain: Chain) -> np.ndarray:
    """Full ``K x K`` incidence-defined matrix; entry ``[j-1, k-1]`` is ``b_jk``."""
    n = len(chain)
    word = chain.word
    cartan = word.cartan
    lo, hi = chain.range
    A = [None] + [bx.a for bx in chain.boxes]
    B = [None] + [bx.b for bx in chain.boxes]
    H = [None] + list(chain.colors)
    d = [None] + [cartan.d(h) for h in chain.colors]
    am = [None] + [_probe(word.pred(x), lo, hi) for x in A[1:]]
    bm = [None] + [_probe(word.pred(x), lo, hi) for x in B[1:]]
    bp = [None] + [_probe(word.succ(x), lo, hi) for x in B[1:]]
    eff = [None] + [effective_end(chain, k) for k in range(1, n + 1)]
    spans = {(bx.a, bx.b) for bx in chain.boxes}

    def positive(j, k):
        if (A[j] == A[k] and B[k] == bm[j]) or (B[j] == B[k] and A[k] == am[j]):
            return 1
        c = cartan.c(H[j], H[k])
        if c >= 0:
            return None
        up_j = (A[j], bp[j]) in spans
        down_k = (am[k], B[k]) in spans
        a_eff_j = eff[j] == A[j]
        b_eff_k = eff[k] == B[k]
        if ((up_j and a_eff_j and am[k] < A[j] < A[k] <= B[k] < bp[j] < bp[k])
                or (up_j and b_eff_k and am[k] < A[j] <= B[j] < B[k] < bp[j] < bp[k])
                or (down_k and b_eff_k and am[j] < am[k] < A[j] <= B[j] < B[k] < bp[j])
                or (down_k and a_eff_j and am[j] < am[k] < A[j] < A[k] <= B[k] < bp[j])):
            return -c
        return None

    out = np.zeros((n, n), dtype=np.int64)
    for j in range(1, n + 1):
        for k in range(j, n + 1):
            pjk, pkj = positive(j, k), positive(k, j)
            if pjk is not None and pkj is not None:
                raise InconsistentMatrix(f"entries ({j},{k}) and ({k},{j}) are both positive")
            if pjk is None and pkj is None:
                continue
            src, dst, v = (j, k, pjk) if pjk is not None else (k, j, pkj)
            back, rem = divmod(-d[src] * v, d[dst])
            if rem:
                raise InconsistentMatrix(f"entry ({dst},{src}) is not an integer")
            out[src - 1, dst - 1] = v
            out[dst - 1, src - 1] = back
    return out


def b_kk(chain: Chain) -> ExchangeMatrix:
    full = b_kk_tilde(chain)
    _, ex = frozen_indices(chain)
    return ExchangeMatrix(tuple(range(1, len(chain) + 1)), ex,
                          full[:, [k - 1 for k in ex]], _chain_symmetrizer(chain))


def b_word(chain: Chain) -> ExchangeMatrix:
    return b_matrix_signed(signed_word_of_chain(chain))


# -- verification -----------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: bool
    detail: object = None

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, detail=None):
        self.checks.append(Check(name, bool(passed), detail))

    def extend(self, other: "Report"):
        self.checks.extend(other.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks]}

    @classmethod
    def from_json(cls, obj) -> "Report":
        return cls([Check(c["name"], bool(c["pass"]), c.get("detail")) for c in obj["checks"]])


def verify_chain(chain: Chain, tamper=None) -> Report:
    """Compare the three constructions on one chain.

    ``tamper`` (tests only) is applied to the mutation-path matrix before
    comparison, as a negative control.
    """
    report = Report()
    sw = signed_word_of_chain(chain)
    word_m = b_matrix_signed(sw)
    path_m, _ = b_via_mutation_path(chain)
    if tamper is not None:
        path_m = tamper(path_m)
    kk_m = b_kk(chain)

    diff = path_m.first_difference(word_m)
    report.add("T1", diff is None, diff)
    diff = kk_m.first_difference(word_m)
    report.add("P42", diff is None, diff)

    want_d = _chain_symmetrizer(chain)
    bad = {}
    for name, m in (("path", path_m), ("word", word_m), ("kk", kk_m)):
        ok, pair = check_skew_symmetrizable(m)
        if not ok:
            bad[name] = list(pair)
        elif m.symmetrizer != want_d:
            bad[name] = {"symmetrizer": list(m.symmetrizer)}
    report.add("SS", not bad, bad or None)

    fr, ex = frozen_indices(chain)
    shifts_c = [color_shift(chain, k) for k in range(1, len(chain) + 1)]
    shifts_w = [sw.shift(k) for k in range(1, len(sw) + 1)]
    kf_ok = (fr, ex) == (sw.frozen, sw.exchangeable) and shifts_c == shifts_w
    report.add("KF", kf_ok, None if kf_ok else {"chain": [list(fr), list(ex)],
                                                "word": [list(sw.frozen), list(sw.exchangeable)]})
    return report


def random_path_from_initial(chain: Chain, rng: random.Random, detour: int | None = None) -> list[int]:
    """A random legal box-move sequence from the initial chain of the range to ``chain``.

    Built backwards: wander ``detour`` random moves away from ``chain``, then
    descend to the initial chain by randomly chosen descending moves, and
    reverse (box moves are involutions).
    """
    if len(chain) < 2:
        return []
    if detour is None:
        detour = rng.randint(0, 2 * len(chain))
    seq, cur = [], chain
    for _ in range(detour):
        options = [s for s in range(1, len(cur)) if movable(cur, s)]
        s = rng.choice(options)
        seq.append(s)
        cur = box_move(cur, s)
    while "R" in cur.ops:
        s = rng.choice(descending_moves(cur))
        seq.append(s)
        cur = box_move(cur, s)
    return seq[::-1]


def verify_path_independence(chain: Chain, trials: int = 20, seed: int = 0) -> Report:
    rng = random.Random(seed)
    a, b = chain.range
    start = initial_chain(chain.word, a, b)
    b0 = b_initial(chain.word, a, b)
    reference, _ = b_via_mutation_path(chain)
    report = Report()
    failure = None
    for t in range(trials):
        moves = random_path_from_initial(chain, rng)
        m, _, end = replay_moves(start, b0, moves)
        diff = m.first_difference(reference) if end == chain else {"end": end.to_json()}
        if diff is not None:
            failure = {"trial": t, "moves": moves, "difference": diff}
            break
    report.add("PI", failure is None, failure)
    return report


def verify_stabilization(chain: Chain, s: int, t: int) -> Report:
    if not 1 <= s <= t <= len(chain):
        raise OutOfRange(f"need 1 <= s <= t <= {len(chain)}, got s={s}, t={t}")
    bs = b_word(chain.prefix(s))
    bt = b_word(chain.prefix(t))
    report = Report()
    if not set(bs.cols) <= set(bt.cols):
        report.add("STAB", False, {"s": s, "t": t, "cols": [list(bs.cols), list(bt.cols)]})
        return report
    diff = bt.restrict(bs.rows, bs.cols).first_difference(bs)
    report.add("STAB", diff is None, None if diff is None else {"s": s, "t": t, **diff})
    return report


def verify_all_prefixes(chain: Chain) -> Report:
    """Stabilization for every prefix pair ``s < t``."""
    mats = [b_word(chain.prefix(s)) for s in range(1, len(chain) + 1)]
    report = Report()
    for s in range(1, len(chain) + 1):
        bs = mats[s - 1]
        for t in range(s + 1, len(chain) + 1):
            bt = mats[t - 1]
            if not set(bs.cols) <= set(bt.cols):
                diff = {"cols": [list(bs.cols), list(bt.cols)]}
            else:
                diff = bt.restrict(bs.rows, bs.cols).first_difference(bs)
            if diff is not None:
                report.add("STAB", False, {"s": s, "t": t, **diff})
                return report
    report.add("STAB", True)
    return report
