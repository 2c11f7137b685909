"""Exchange matrices over finite index sets: mutation, relabeling, exports."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .errors import NotAPermutation, NotExchangeable


@dataclass(frozen=True, eq=False)
class ExchangeMatrix:
    """Integer ``K x K_ex`` matrix with a positive skew-symmetrizer on ``K``.

    ``rows`` and ``cols`` are sorted tuples of labels with ``cols`` a subset
    of ``rows``. ``symmetrizer`` holds one weight per row label; only its
    values on ``cols`` matter for skew-symmetrizability, the rest let
    exports recover the frozen-row partner entries.
    """

    rows: tuple
    cols: tuple
    entries: np.ndarray
    symmetrizer: tuple[int, ...]
    _row_pos: dict = field(init=False, repr=False)
    _col_pos: dict = field(init=False, repr=False)

    def __post_init__(self):
        rows, cols = tuple(self.rows), tuple(self.cols)
        ent = np.array(self.entries, dtype=np.int64).reshape(len(rows), len(cols))
        ent.setflags(write=False)
        if not set(cols) <= set(rows):
            raise ValueError("column labels must be a subset of row labels")
        if len(self.symmetrizer) != len(rows) or any(int(x) <= 0 for x in self.symmetrizer):
            raise ValueError("symmetrizer needs one positive integer per row")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ent)
        object.__setattr__(self, "symmetrizer", tuple(int(x) for x in self.symmetrizer))
        object.__setattr__(self, "_row_pos", {r: p for p, r in enumerate(rows)})
        object.__setattr__(self, "_col_pos", {c: p for p, c in enumerate(cols)})

    def __getitem__(self, key) -> int:
        i, k = key
        return int(self.entries[self._row_pos[i], self._col_pos[k]])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExchangeMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self.symmetrizer == other.symmetrizer
                and np.array_equal(self.entries, other.entries))

    __hash__ = None

    def d(self, i) -> int:
        return self.symmetrizer[self._row_pos[i]]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def first_difference(self, other: "ExchangeMatrix"):
        """None when equal, else a short description of the first mismatch."""
        if self.rows != other.rows or self.cols != other.cols:
            return {"index_sets": [[list(self.rows), list(self.cols)], [list(other.rows), list(other.cols)]]}
        if self.symmetrizer != other.symmetrizer:
            return {"symmetrizer": [list(self.symmetrizer), list(other.symmetrizer)]}
        diff = np.argwhere(self.entries != other.entries)
        if len(diff) == 0:
            return None
        p, q = diff[0]
        return {"entry": [self.rows[p], self.cols[q]],
                "values": [int(self.entries[p, q]), int(other.entries[p, q])]}

    def restrict(self, rows: Sequence, cols: Sequence) -> "ExchangeMatrix":
        rp = [self._row_pos[r] for r in rows]
        cp = [self._col_pos[c] for c in cols]
        return ExchangeMatrix(tuple(rows), tuple(cols), self.entries[np.ix_(rp, cp)],
                              tuple(self.symmetrizer[p] for p in rp))

    def to_json(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols),
                "entries": self.entries.tolist(), "symmetrizer": list(self.symmetrizer)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "ExchangeMatrix":
        rows = tuple(obj["rows"])
        return cls(rows, tuple(obj["cols"]),
                   np.array(obj["entries"], dtype=np.int64).reshape(len(rows), len(obj["cols"])),
                   tuple(obj["symmetrizer"]))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + list(self.cols))
        for r, row in zip(self.rows, self.entries.tolist()):
            w.writerow([r] + row)
        return buf.getvalue()

    def to_dot(self, name: str = "Q") -> str:
        """Quiver (or valued quiver) drawing: frozen rows boxed, exchangeable circled."""
        ex = set(self.cols)
        skew = all(self.d(k) == 1 for k in self.rows)
        lines = [f"digraph {name} {{"]
        for r in self.rows:
            shape = "circle" if r in ex else "box"
            lines.append(f'  "{r}" [shape={shape}];')
        for p, j in enumerate(self.rows):
            for q, k in enumerate(self.cols):
                v = int(self.entries[p, q])
                if v > 0:
                    src, dst, bjk = j, k, v
                elif v < 0 and j not in ex:
                    src, dst, bjk = k, j, -v
                else:
                    continue
                if skew:
                    lines.append(f'  "{src}" -> "{dst}" [label="{bjk}"];')
                else:
                    # |b_{dst,src}| = d_src |b_{src,dst}| / d_dst
                    back = bjk * self.d(src) // self.d(dst)
                    lines.append(f'  "{src}" -> "{dst}" [label="({bjk},{back})"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def mutate(z: ExchangeMatrix, k) -> ExchangeMatrix:
    """Fomin-Zelevinsky mutation at an exchangeable index ``k``."""
    if k not in z._col_pos:
        raise NotExchangeable(f"{k!r} is not an exchangeable index")
    e = z.entries
    q = z._col_pos[k]
    p = z._row_pos[k]
    col_k = e[:, q]
    row_k = e[p, :]
    pos = np.outer(np.maximum(col_k, 0), np.maximum(row_k, 0))
    neg = np.outer(np.maximum(-col_k, 0), np.maximum(-row_k, 0))
    out = e + pos - neg
    out[p, :] = -e[p, :]
    out[:, q] = -e[:, q]
    return ExchangeMatrix(z.rows, z.cols, out, z.symmetrizer)


def permute(z: ExchangeMatrix, sigma: Mapping) -> ExchangeMatrix:
    """Relabel by ``sigma``: ``(sigma Z)[sigma i, sigma j] = Z[i, j]``.

    Labels missing from ``sigma`` are fixed.
    """
    full = {r: sigma.get(r, r) for r in z.rows}
    if set(full.values()) != set(z.rows) or len(set(full.values())) != len(z.rows):
        raise NotAPermutation(f"{dict(sigma)!r} is not a permutation of the row labels")
    rows = z.rows
    cols = tuple(sorted(full[c] for c in z.cols))
    inv = {v: u for u, v in full.items()}
    rp = [z._row_pos[inv[r]] for r in rows]
    cp = [z._col_pos[inv[c]] for c in cols]
    return ExchangeMatrix(rows, cols, z.entries[np.ix_(rp, cp)],
                          tuple(z.symmetrizer[p] for p in rp))


def transposition(j, k) -> dict:
    return {j: k, k: j}


def check_skew_symmetrizable(z: ExchangeMatrix) -> tuple[bool, tuple | None]:
    """Check ``D_i Z_ik = -D_k Z_ki`` on ``K_ex x K_ex``; return the first bad pair."""
    for i in z.cols:
        for k in z.cols:
            if z.d(i) * z[i, k] != -z.d(k) * z[k, i]:
                return False, (i, k)
    return True, None
