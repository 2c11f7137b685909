"""Generalized Cartan matrices, minimal symmetrizers and Dynkin involutions."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Mapping, Sequence

from .errors import NotCartan, NotSymmetrizable, UnknownIndex, UnknownType

Label = Hashable


@dataclass(frozen=True)
class CartanMatrix:
    """A symmetrizable generalized Cartan matrix over an ordered index set.

    ``entries[p][q]`` is ``c_{index_set[p], index_set[q]}``; ``symmetrizer[p]``
    is the minimal ``d`` for ``index_set[p]``. Build through
    :func:`validate_cartan` or :func:`finite_type_cartan`.
    """

    index_set: tuple
    entries: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    cartan_type: tuple[str, int] | None = None
    _pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_pos", {lab: p for p, lab in enumerate(self.index_set)})

    @property
    def rank(self) -> int:
        return len(self.index_set)

    def __contains__(self, label) -> bool:
        return label in self._pos

    def position(self, label) -> int:
        try:
            return self._pos[label]
        except (KeyError, TypeError):
            raise UnknownIndex(f"{label!r} is not in the index set {list(self.index_set)}") from None

    def resolve(self, value):
        """Map a label or its string form (as found in JSON) to the label."""
        if value in self._pos:
            return value
        text = str(value)
        for lab in self.index_set:
            if str(lab) == text:
                return lab
        raise UnknownIndex(f"{value!r} is not in the index set {list(self.index_set)}")

    def c(self, i, j) -> int:
        return self.entries[self.position(i)][self.position(j)]

    def d(self, i) -> int:
        return self.symmetrizer[self.position(i)]

    def components(self) -> list[list[int]]:
        """Connected components of the Dynkin diagram, as lists of positions."""
        n = self.rank
        seen = [False] * n
        comps = []
        for start in range(n):
            if seen[start]:
                continue
            seen[start] = True
            comp, queue = [], deque([start])
            while queue:
                p = queue.popleft()
                comp.append(p)
                for q in range(n):
                    if q != p and self.entries[p][q] != 0 and not seen[q]:
                        seen[q] = True
                        queue.append(q)
            comps.append(sorted(comp))
        return comps

    def to_json(self) -> dict:
        if self.cartan_type is not None:
            return {"type": self.cartan_type[0], "rank": self.cartan_type[1]}
        return {"indices": list(self.index_set), "entries": [list(r) for r in self.entries]}


@dataclass(frozen=True)
class DynkinInvolution:
    star: Mapping

    def __call__(self, label):
        return self.star[label]

    def is_involution(self) -> bool:
        return all(self.star[self.star[i]] == i for i in self.star)

    def is_automorphism_of(self, cartan: CartanMatrix) -> bool:
        return all(
            cartan.c(self.star[i], self.star[j]) == cartan.c(i, j)
            for i in cartan.index_set
            for j in cartan.index_set
        )


def _minimal_symmetrizer(entries: list[list[int]]) -> list[int]:
    # BFS over each component propagating d_j = d_i * c_ij / c_ji, then clear
    # denominators and the component gcd.
    n = len(entries)
    ratio: list[Fraction | None] = [None] * n
    for start in range(n):
        if ratio[start] is not None:
            continue
        ratio[start] = Fraction(1)
        comp, queue = [start], deque([start])
        while queue:
            p = queue.popleft()
            for q in range(n):
                if q == p or entries[p][q] == 0:
                    continue
                want = ratio[p] * Fraction(entries[p][q], entries[q][p])
                if ratio[q] is None:
                    ratio[q] = want
                    comp.append(q)
                    queue.append(q)
                elif ratio[q] != want:
                    raise NotSymmetrizable(
                        f"no symmetrizer: inconsistent ratio along edge ({p}, {q})"
                    )
        scale = lcm(*(ratio[p].denominator for p in comp))
        ints = [int(ratio[p] * scale) for p in comp]
        g = gcd(*ints)
        for p, v in zip(comp, ints):
            ratio[p] = Fraction(v // g)
    return [int(r) for r in ratio]


def validate_cartan(entries: Sequence[Sequence[int]], indices: Sequence | None = None,
                    cartan_type: tuple[str, int] | None = None) -> CartanMatrix:
    """Check the generalized Cartan axioms and attach the minimal symmetrizer.

    Raises NotCartan for a bad diagonal, a positive off-diagonal entry or an
    asymmetric zero pattern, and NotSymmetrizable when no positive diagonal
    D makes DC symmetric.
    """
    rows = [list(r) for r in entries]
    n = len(rows)
    if n == 0:
        raise NotCartan("empty matrix")
    if indices is None:
        indices = list(range(1, n + 1))
    indices = tuple(indices)
    if len(indices) != n or len(set(indices)) != n:
        raise NotCartan("index list must have one distinct label per row")
    for p, row in enumerate(rows):
        if len(row) != n:
            raise NotCartan(f"row {p} has length {len(row)}, expected {n}")
        for q, v in enumerate(row):
            if isinstance(v, bool) or int(v) != v:
                raise NotCartan(f"entry ({p}, {q}) is not an integer: {v!r}")
            row[q] = int(v)
    for p in range(n):
        if rows[p][p] != 2:
            raise NotCartan(f"diagonal entry at {indices[p]!r} is {rows[p][p]}, expected 2")
        for q in range(n):
            if p == q:
                continue
            if rows[p][q] > 0:
                raise NotCartan(f"positive off-diagonal entry at ({indices[p]!r}, {indices[q]!r})")
            if (rows[p][q] == 0) != (rows[q][p] == 0):
                raise NotCartan(f"zero pattern not symmetric at ({indices[p]!r}, {indices[q]!r})")
    d = _minimal_symmetrizer(rows)
    for p in range(n):
        for q in range(n):
            if d[p] * rows[p][q] != d[q] * rows[q][p]:
                raise NotSymmetrizable(f"DC not symmetric at ({indices[p]!r}, {indices[q]!r})")
    return CartanMatrix(indices, tuple(tuple(r) for r in rows), tuple(d), cartan_type)


def _edges(letter: str, n: int) -> list[tuple[int, int, int, int]]:
    """(i, j, c_ij, c_ji) for each edge of the standard diagram, Bourbaki labels."""
    simple = lambda pairs: [(i, j, -1, -1) for i, j in pairs]
    chain = [(i, i + 1) for i in range(1, n)]
    if letter == "A" and n >= 1:
        return simple(chain)
    if letter == "B" and n >= 2:
        return simple(chain[:-1]) + [(n - 1, n, -2, -1)]
    if letter == "C" and n >= 2:
        return simple(chain[:-1]) + [(n - 1, n, -1, -2)]
    if letter == "D" and n >= 4:
        return simple([(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)])
    if letter == "E" and n in (6, 7, 8):
        return simple([(1, 3), (2, 4)] + [(i, i + 1) for i in range(3, n)])
    if letter == "F" and n == 4:
        return simple([(1, 2), (3, 4)]) + [(2, 3, -2, -1)]
    if letter == "G" and n == 2:
        return [(1, 2, -3, -1)]
    raise UnknownType(f"no finite type {letter}{n}")


def finite_type_cartan(type_letter: str, rank: int) -> CartanMatrix:
    letter = str(type_letter).upper()
    rank = int(rank)
    edges = _edges(letter, rank)
    rows = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, cij, cji in edges:
        rows[i - 1][j - 1] = cij
        rows[j - 1][i - 1] = cji
    return validate_cartan(rows, range(1, rank + 1), (letter, rank))


def standard_involution(type_letter: str, rank: int) -> DynkinInvolution:
    """The involution i -> i* with w0(alpha_i) = -alpha_{i*}."""
    letter = str(type_letter).upper()
    rank = int(rank)
    _edges(letter, rank)  # validates the type
    star = {i: i for i in range(1, rank + 1)}
    if letter == "A":
        star = {i: rank + 1 - i for i in star}
    elif letter == "D" and rank % 2 == 1:
        star[rank - 1], star[rank] = rank, rank - 1
    elif letter == "E" and rank == 6:
        star.update({1: 6, 6: 1, 3: 5, 5: 3})
    return DynkinInvolution(star)


def cartan_from_json(obj: Mapping) -> CartanMatrix:
    if "type" in obj:
        return finite_type_cartan(obj["type"], obj["rank"])
    return validate_cartan(obj["entries"], obj.get("indices"))
