import pytest
from hypothesis import given
from hypothesis import strategies as st

from symprat.snf import IntegerMatrix, abelian_invariants, smith_normal_form

matrices = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m
        ).map(lambda rows: IntegerMatrix.from_rows(rows, n))
    )
)


@given(matrices)
def test_smith_form_properties(M):
    S = smith_normal_form(M)
    assert S.U @ M @ S.V == S.D
    assert abs(S.U.det()) == 1 and abs(S.V.det()) == 1
    for i, row in enumerate(S.D.rows):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0
    d = S.diagonal
    nz = [x for x in d if x]
    assert all(x > 0 for x in nz)
    assert d[: len(nz)] == nz  # zeros trail
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


def test_known_example():
    M = IntegerMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert smith_normal_form(M).diagonal == [2, 6, 12]
    assert abelian_invariants(M) == (0, [2, 6, 12])


def test_det_and_shapes():
    assert IntegerMatrix.from_rows([[1, 2], [3, 4]]).det() == -2
    assert IntegerMatrix.identity(3).det() == 1
    with pytest.raises(ValueError):
        IntegerMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ValueError):
        IntegerMatrix.from_rows([[1, 2]]).det()
    assert abelian_invariants(IntegerMatrix((), 3)) == (3, [])
