import math

from hypothesis import strategies as st

from symprat.cone import random_reduced
from symprat.lattice import HomologyClass


@st.composite
def positive_square_classes(draw, k=5, bound=20):
    b = draw(st.lists(st.integers(-bound, bound), min_size=k, max_size=k))
    low = math.isqrt(sum(x * x for x in b)) + 1
    a = draw(st.integers(low, low + bound))
    sign = draw(st.sampled_from((1, -1)))
    return HomologyClass(k, tuple(sign * x for x in (a, *b)))


def classes(k=5, bound=6):
    return st.lists(st.integers(-bound, bound), min_size=k + 1, max_size=k + 1).map(
        lambda v: HomologyClass(k, tuple(v))
    )


@st.composite
def reduced_forms(draw, k=5):
    import random

    return random_reduced(k, random.Random(draw(st.integers(0, 2**32))))
