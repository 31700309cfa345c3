"""Independent brute-force oracles used to cross-check the fast code paths.

* ``orbit_canonical``: breadth-first search over the Cremona/permutation/flip
  orbit of an integral class, returning the orbit element of least H-coefficient.
* ``weyl_orbit_order``: order of a reflection group, by enumerating the images
  of its simple roots.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import combinations, product

from .cremona import reflect
from .lattice import HomologyClass
from .roots import simple_roots
from .smcg import DynkinType


def _canon(v: tuple[int, ...]) -> tuple[int, ...]:
    """Representative modulo signed permutations of the E_i."""
    return (v[0], *sorted((abs(x) for x in v[1:]), reverse=True))


@lru_cache(maxsize=None)
def _orbit_min(start: tuple[int, ...]) -> tuple[int, ...]:
    k = len(start) - 1
    bound = start[0]
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for idx in combinations(range(1, k + 1), 3):
            for signs in product((1, -1), repeat=3):
                w = list(v)
                for i, s in zip(idx, signs):
                    w[i] *= s
                d = w[0] - sum(w[i] for i in idx)
                w[0] += d
                for i in idx:
                    w[i] += d
                c = _canon(tuple(w))
                # a > 0 is kept; the orbit is cut at the starting a, which the
                # minimum never exceeds
                if 0 < c[0] <= bound and c not in seen:
                    seen.add(c)
                    queue.append(c)
    low = min(s[0] for s in seen)
    minima = [s for s in seen if s[0] == low]
    if len(minima) != 1:
        raise AssertionError(f"orbit of {start} has {len(minima)} minimal elements: {minima}")
    return minima[0]


def orbit_canonical(A: HomologyClass) -> HomologyClass:
    """Orbit element with least positive H-coefficient (A must have positive square)."""
    if A.square() <= 0:
        raise ValueError("the orbit oracle needs a class of positive square")
    v = A.coeffs if A.a > 0 else tuple(-x for x in A.coeffs)
    if A.k < 3:
        return HomologyClass(A.k, _canon(v))
    return HomologyClass(A.k, _orbit_min(_canon(v)))


def weyl_orbit_order(simple: list[HomologyClass]) -> int:
    """Count distinct images of the simple-root tuple under the reflection group.

    The group acts trivially on the orthogonal complement of the roots, so an
    element is determined by where it sends the simple roots.
    """
    if not simple:
        return 1
    start = tuple(simple)
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for r in simple:
            img = tuple(reflect(x, r) for x in t)
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return len(seen)


def realize(letter: str, n: int) -> list[HomologyClass]:
    """Simple roots of a component A_n, D_n or E_n inside some R_k."""
    if letter == "A":
        ls = simple_roots(n + 1) if n + 1 >= 3 else simple_roots(3)
        return ls[1 : n + 1] if n + 1 >= 3 else ls[1:2]
    if letter == "D":
        if not 4 <= n <= 7:
            raise ValueError("D_n is realized here for 4 <= n <= 7")
        ls = simple_roots(n + 1)
        return [ls[0]] + ls[2 : n + 1]
    if letter == "E" and n in (6, 7, 8):
        return simple_roots(n)
    raise ValueError(f"cannot realize {letter}{n}")


def oracle_weyl_order(t: DynkinType) -> int:
    total = 1
    for letter, n in t.components:
        total *= weyl_orbit_order(realize(letter, n))
    return total
