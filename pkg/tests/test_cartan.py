from itertools import product

import pytest

from iboxchain.cartan import finite_type_cartan, standard_involution, validate_cartan
from iboxchain.errors import NotCartan, NotSymmetrizable, UnknownIndex, UnknownType


def brute_symmetrizer(rows, bound=6):
    """Smallest positive vector (lexicographic over a box) with DC symmetric and gcd 1 per component."""
    n = len(rows)
    for d in product(range(1, bound + 1), repeat=n):
        if all(d[i] * rows[i][j] == d[j] * rows[j][i] for i in range(n) for j in range(n)):
            return d
    return None


def a_table(n):
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]


def test_rank_one():
    c = validate_cartan([[2]])
    assert c.symmetrizer == (1,)


@pytest.mark.parametrize("rows", [a_table(3), [[2, -2], [-1, 2]], [[2, -3], [-1, 2]],
                                  [[2, -1, 0], [-2, 2, -1], [0, -2, 2]]])
def test_symmetrizer_matches_brute_force(rows):
    assert validate_cartan(rows).symmetrizer == brute_symmetrizer(rows)


def test_b2_style():
    assert validate_cartan([[2, -2], [-1, 2]]).symmetrizer == (1, 2)


def test_disconnected_components_each_minimal():
    rows = [[2, -2, 0], [-1, 2, 0], [0, 0, 2]]
    assert validate_cartan(rows).symmetrizer == (1, 2, 1)


@pytest.mark.parametrize("rows", [[[2, 1], [1, 2]], [[1, 0], [0, 2]], [[2, -1], [0, 2]], [[2, -1]]])
def test_not_cartan(rows):
    with pytest.raises(NotCartan):
        validate_cartan(rows)


def test_not_symmetrizable():
    # a 3-cycle whose ratios multiply to 2
    rows = [[2, -1, -1], [-2, 2, -1], [-1, -1, 2]]
    with pytest.raises(NotSymmetrizable):
        validate_cartan(rows)


def test_labels_and_lookup():
    c = validate_cartan([[2, -3], [-1, 2]], ["x", "y"])
    assert c.c("x", "y") == -3
    assert c.d("y") == 3
    assert c.resolve("x") == "x"
    with pytest.raises(UnknownIndex):
        c.position("z")


def test_finite_types():
    assert finite_type_cartan("A", 3).entries == tuple(map(tuple, a_table(3)))
    assert finite_type_cartan("A", 1).entries == ((2,),)
    g2 = finite_type_cartan("G", 2)
    assert g2.entries == ((2, -3), (-1, 2))
    assert g2.symmetrizer == (1, 3)
    assert finite_type_cartan("B", 3).symmetrizer == (1, 1, 2)
    assert finite_type_cartan("C", 3).symmetrizer == (2, 2, 1)
    assert finite_type_cartan("F", 4).symmetrizer == (1, 1, 2, 2)
    e8 = finite_type_cartan("E", 8)
    assert e8.c(2, 4) == -1 and e8.c(2, 3) == 0
    assert finite_type_cartan("D", 5).c(3, 5) == -1


@pytest.mark.parametrize("t", [("Q", 2), ("E", 5), ("G", 3), ("D", 3), ("A", 0)])
def test_unknown_type(t):
    with pytest.raises(UnknownType):
        finite_type_cartan(*t)
    with pytest.raises(UnknownType):
        standard_involution(*t)


def test_involution_values():
    assert dict(standard_involution("A", 3).star) == {1: 3, 2: 2, 3: 1}
    assert dict(standard_involution("D", 4).star) == {i: i for i in range(1, 5)}
    assert dict(standard_involution("A", 1).star) == {1: 1}
    assert standard_involution("D", 5).star[4] == 5
    assert standard_involution("E", 6).star[1] == 6
    assert dict(standard_involution("B", 3).star) == {1: 1, 2: 2, 3: 3}


ALL_TYPES = [("A", n) for n in range(1, 7)] + [("B", n) for n in range(2, 6)] + \
    [("C", n) for n in range(2, 6)] + [("D", n) for n in range(4, 8)] + \
    [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]


@pytest.mark.parametrize("t", ALL_TYPES)
def test_invariants_every_finite_type(t):
    c = finite_type_cartan(*t)
    n = c.rank
    for i in range(n):
        for j in range(n):
            # diag(d) C is symmetric
            assert c.symmetrizer[i] * c.entries[i][j] == c.symmetrizer[j] * c.entries[j][i]
    star = standard_involution(*t)
    assert star.is_involution()
    assert star.is_automorphism_of(c)
