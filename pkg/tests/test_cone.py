import random
from fractions import Fraction as F

import pytest
from hypothesis import given

from conftest import reduced_forms
from symprat.cone import (
    FaceLabel,
    all_faces,
    classify_face,
    is_representable,
    monotone,
    sample_face,
    vertex,
    vertices,
)
from symprat.cremona import NotReducedError, is_reduced
from symprat.lattice import E, SymplecticVector, area
from symprat.roots import simple_roots

T = F(1, 3)


def test_vertices_k5():
    vs = vertices(5)
    assert [v.c for v in vs] == [
        (T,) * 5,
        (0,) * 5,
        (1, 0, 0, 0, 0),
        (F(1, 2), F(1, 2), 0, 0, 0),
        (T, T, T, 0, 0),
        (T, T, T, T, 0),
    ]
    assert all(v.nu == 1 for v in vs)


def test_vertices_other_k():
    assert vertex(3, 3).c == (F(1, 2), F(1, 2), 0)
    assert len(vertices(4)) == 5
    with pytest.raises(ValueError):
        vertices(2)


def test_face_count_and_names():
    faces = all_faces(5)
    assert len(faces) == 32 and len({f.name for f in faces}) == 32
    assert faces[0].name == "M" and faces[0].positive_set == frozenset()
    assert faces[-1].name == "MOABCD"


def test_face_label_parse():
    assert FaceLabel.parse("MOA", 5).positive_set == {1, 2}
    for bad in ("OA", "MAO", "MZ", "MAA"):
        with pytest.raises(ValueError):
            FaceLabel.parse(bad, 5)
    with pytest.raises(ValueError):
        FaceLabel.parse("MD", 4)


def test_classify_examples():
    assert classify_face(SymplecticVector.parse("1|1/3,1/3,1/3,1/3,1/3")).name == "M"
    assert classify_face(SymplecticVector.parse("2|2/3,2/3,2/3,2/3,2/3")).name == "M"
    assert classify_face(SymplecticVector.parse("1|1/2,2/5,1/20,1/30,1/40")).name == "MOABCD"
    assert classify_face(SymplecticVector.parse("1|1/4,1/4,1/4,1/4,1/4")).name == "MO"
    assert classify_face(SymplecticVector.parse("1|9/20,7/20,4/20,3/20,2/20")).name == "MABCD"


def test_classify_refuses_non_reduced():
    with pytest.raises(NotReducedError, match="c5 > 0"):
        classify_face(SymplecticVector.parse("1|1/2,1/4,1/4,0,0"))
    with pytest.raises(NotReducedError, match="c1\\+c2\\+c3"):
        classify_face(SymplecticVector.parse("1|2/5,2/5,2/5,1/5,1/5"))


@pytest.mark.parametrize("k", range(3, 9))
def test_sample_then_classify_is_identity(k):
    for face in all_faces(k):
        assert classify_face(sample_face(face)) == face


@pytest.mark.parametrize("k", [3, 4, 5])
def test_two_samples_agree(k):
    rng = random.Random(k)
    for face in all_faces(k):
        a, b = sample_face(face, rng), sample_face(face, rng)
        assert classify_face(a) == classify_face(b) == face


def test_sample_examples():
    assert sample_face(FaceLabel.parse("M", 5)) == monotone(5)
    mo = sample_face(FaceLabel.parse("MO", 5))
    assert len(set(mo.c)) == 1 and mo.c[0] < T


@given(reduced_forms())
def test_reduced_pairs_nonnegatively(w):
    assert is_reduced(w)
    ls = [area(w, l) for l in simple_roots(5)]
    assert all(a >= 0 for a in ls)
    assert all(area(w, E(i, 5)) > 0 for i in range(1, 6))
    if all(a == 0 for a in ls):
        assert w == monotone(5)


@pytest.mark.parametrize(
    "text,ok",
    [("1|1/3,1/3,1/3,1/3,1/3", True), ("1|1/2,1/2", False), ("1|1/3,1/3", True), ("1|1/3,1/2,1/3,1/3,1/3", True)],
)
def test_representable_examples(text, ok):
    assert is_representable(SymplecticVector.parse(text)) is ok


def test_non_representable_negative_square():
    assert not is_representable(SymplecticVector.parse("1|1,1,1"))
