from itertools import combinations

import pytest

from symprat import braid


def test_sphere_braid_presentation():
    p = braid.sphere_braid_presentation(3)
    assert len(p.generators) == 2 and len(p.relators) == 2
    assert braid.sphere_braid_presentation(2).relators == ((1, 1),)


@pytest.mark.parametrize("n", range(2, 7))
def test_sphere_braid_abelianization_is_cyclic(n):
    free, torsion = braid.sphere_braid_presentation(n).abelianization()
    assert free == 0 and torsion == [2 * (n - 1)]


def test_pure_generator_examples():
    assert braid.pure_generator(1, 2, 3) == (1, 1)
    assert braid.pure_generator(1, 3, 3) == (2, 1, 1, -2)
    assert braid.pure_generator(2, 4, 5) == (3, 2, 2, -3)
    assert braid.pure_generator(4, 2, 5) == braid.pure_generator(2, 4, 5)
    with pytest.raises(ValueError):
        braid.pure_generator(0, 2, 3)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_word_lengths(n):
    for i, j in combinations(range(1, n + 1), 2):
        assert len(braid.pure_generator(i, j, n)) == 2 * (j - i - 1) + 2


def test_surface_relation_examples():
    idx = braid._pair_index(5)
    assert braid.surface_relation(4, 5) == tuple(idx[p] for p in [(1, 4), (2, 4), (3, 4), (4, 5)])
    idx4 = braid._pair_index(4)
    assert braid.surface_relation(1, 4) == tuple(idx4[p] for p in [(1, 2), (1, 3), (1, 4)])


@pytest.mark.parametrize("n", [4, 5, 6])
def test_incidence_rows(n):
    rows = braid.pure_braid_presentation(n).relation_matrix().rows
    pairs = braid.pairs(n)
    for j, row in enumerate(rows, start=1):
        assert row == tuple(int(j in p) for p in pairs)
    assert [sum(col) for col in zip(*rows)] == [2] * len(pairs)


def test_ab_ranks():
    assert braid.pure_braid_ab_rank(5, True) == (5, ())
    assert braid.pure_braid_ab_rank(4, True) == (2, ())
    assert braid.pure_braid_ab_rank(5, False)[0] == 5
    with pytest.raises(ValueError):
        braid.pure_braid_ab_rank(7, True)


def test_smith_certificate():
    S = braid.pure_braid_smith(5, True)
    M = braid.pure_braid_presentation(5, True).relation_matrix()
    assert S.U @ M @ S.V == S.D
    assert [d for d in S.diagonal if d] == [1] * 5


def test_free_group():
    assert braid.free_group_ab_rank(3) == 3
    assert braid.free_group_ab_rank(0) == 0
    assert braid.free_group_ab_rank(2) == braid.pure_braid_ab_rank(4, True)[0]


def test_generating_sets():
    assert braid.check_generating_in_ab(["A12", "A13", "A14", "A23", "A24"], 5)
    assert braid.check_generating_in_ab(["A13", "A14", "A15", "A23", "A24", "A25"], 5)
    assert not braid.check_generating_in_ab(["A12"], 5)
    with pytest.raises(ValueError):
        braid.check_generating_in_ab(["A16"], 5)


def test_forgetting_sequence():
    assert braid.forgetting_rank_check()
    assert not braid.forgetting_rank_check(fiber_rank=4)


def test_presentation_validation():
    with pytest.raises(ValueError):
        braid.FinitePresentation(("x",), ((2,),))
    p = braid.FinitePresentation(("x", "y"), ((1, 2, -2, -1, 1),))
    assert p.relators == ((1,),)
    assert p.format_word((1, -2)) == "x y^-1"
    assert braid.parse_pair("A_24") == (2, 4) and braid.parse_pair("A4,2") == (2, 4)
