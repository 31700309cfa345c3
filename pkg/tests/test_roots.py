from fractions import Fraction as F

import pytest

from symprat.cone import all_faces, sample_face
from symprat.lattice import E, H, HomologyClass, SymplecticVector, area, canonical_class, pairing
from symprat.roots import (
    NotARootError,
    SphereFamily,
    classify_negative_sphere_class,
    enumerate_exceptional,
    enumerate_roots,
    from_root_coordinates,
    is_positive_root,
    min_area_exceptional,
    positive_roots,
    root_coordinates,
    simple_roots,
)

ROOT_COUNTS = {3: 8, 4: 20, 5: 40, 6: 72, 7: 126, 8: 240}
EXCEPTIONAL_COUNTS = {1: 1, 2: 3, 3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}


@pytest.mark.parametrize("k,n", ROOT_COUNTS.items())
def test_root_counts(k, n):
    datum = enumerate_roots(k)
    assert len(datum.roots) == n
    K = canonical_class(k)
    for r in datum.roots:
        assert r.square() == -2 and pairing(r, K) == 0
        assert -r in datum.roots


@pytest.mark.parametrize("k,n", EXCEPTIONAL_COUNTS.items())
def test_exceptional_counts(k, n):
    ex = enumerate_exceptional(k)
    assert len(ex) == n
    K = canonical_class(k)
    assert all(e.square() == -1 and pairing(e, K) == -1 for e in ex)


def test_exceptional_small_cases():
    assert set(enumerate_exceptional(2)) == {E(1, 2), E(2, 2), H(2) - E(1, 2) - E(2, 2)}
    assert enumerate_exceptional(1) == [E(1, 1)]
    shapes = sorted(e.a for e in enumerate_exceptional(5))
    assert shapes.count(0) == 5 and shapes.count(1) == 10 and shapes.count(2) == 1


@pytest.mark.parametrize("k", [2, 9])
def test_root_range(k):
    with pytest.raises(ValueError):
        enumerate_roots(k)


@pytest.mark.parametrize("k", range(3, 9))
def test_positive_roots_split(k):
    pos = set(positive_roots(k))
    neg = {-r for r in pos}
    assert not pos & neg
    assert pos | neg == set(enumerate_roots(k).roots)


def test_positive_examples():
    ls = simple_roots(5)
    assert is_positive_root(ls[1] + ls[2])
    assert ls[1] + ls[2] == E(1, 5) - E(3, 5)
    assert not is_positive_root(-ls[0])


def test_root_coordinates_examples():
    assert root_coordinates(simple_roots(5)[0]) == (1, 0, 0, 0, 0)
    assert root_coordinates(E(1, 5) - E(3, 5)) == (0, 1, 1, 0, 0)
    with pytest.raises(NotARootError):
        root_coordinates(HomologyClass.of(2, 1, 1, 1, 1, 2))


@pytest.mark.parametrize("k", range(3, 9))
def test_root_coordinates_invert(k):
    seen = set()
    for r in enumerate_roots(k).roots:
        x = root_coordinates(r)
        assert from_root_coordinates(x, k) == r
        assert all(t >= 0 for t in x) or all(t <= 0 for t in x)
        seen.add(x)
    assert len(seen) == ROOT_COUNTS[k]


def test_sphere_families_bf_basis():
    # E'_1 - E'_2 = 0 B + 0 F - (-1) E'_1 - (1) E'_2
    c = classify_negative_sphere_class((0, 0, -1, 1, 0, 0), basis="bf")
    assert c.family is SphereFamily.E and c.index == 1
    c = classify_negative_sphere_class((1, -1, 0, 0, 0, 0), basis="bf")
    assert c.family is SphereFamily.B_MINUS_KF and c.twist == 1 and c.r == (0, 0, 0, 0)
    assert classify_negative_sphere_class((0, 1, 1, 0, 0, 0), basis="bf").family is SphereFamily.F


def test_sphere_families_h_basis():
    # in the H basis E_1 - E_2 is B - F
    c = classify_negative_sphere_class(E(1, 5) - E(2, 5))
    assert c.family is SphereFamily.B_MINUS_KF and c.twist == 1
    c = classify_negative_sphere_class(E(3, 5) - E(4, 5))
    assert c.family is SphereFamily.E and c.index == 2
    assert classify_negative_sphere_class(HomologyClass.of(3, 2, 2, 2, 1, 1)).family is SphereFamily.UNLISTED
    with pytest.raises(ValueError):
        classify_negative_sphere_class(H(5))


def test_exceptional_spheres_are_listed():
    for e in enumerate_exceptional(5):
        assert classify_negative_sphere_class(e).family is not SphereFamily.UNLISTED


@pytest.mark.parametrize(
    "text,expected",
    [("1|1/3,1/3,1/3,1/3,1/3", F(1, 3)), ("1|1/2,1/4,1/4,1/4,1/4", F(1, 4)), ("1|2/5,3/10,3/10,1/5,1/10", F(1, 10))],
)
def test_min_area_exceptional(text, expected):
    w = SymplecticVector.parse(text)
    e = min_area_exceptional(w)
    assert e == E(5, 5) and area(w, e) == expected
    assert area(w, e) == min(area(w, x) for x in enumerate_exceptional(5))


def test_min_area_exceptional_on_faces():
    for face in all_faces(5):
        w = sample_face(face)
        assert area(w, min_area_exceptional(w)) == min(area(w, x) for x in enumerate_exceptional(5))


def test_min_area_requires_reduced():
    with pytest.raises(ValueError):
        min_area_exceptional(SymplecticVector.parse("1|1/8,1/4,1/4,1/4,1/4"))
