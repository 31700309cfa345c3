"""Root systems R_k, exceptional classes, simple roots and sphere-class families."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterator

from .lattice import (
    E,
    H,
    HomologyClass,
    SymplecticVector,
    area,
    canonical_class,
    pairing,
    to_bf_basis,
)


class NotARootError(ValueError):
    pass


class ConsistencyError(RuntimeError):
    """An internal identity that the theory guarantees has failed."""


def _check_root_k(k: int) -> None:
    if not isinstance(k, int) or not 3 <= k <= 8:
        raise ValueError(f"root systems are enumerated for 3 <= k <= 8, got {k!r}")


def _vectors(k: int, total: int, sumsq: int) -> Iterator[tuple[int, ...]]:
    """All integer k-vectors with the given coordinate sum and sum of squares."""
    if k == 0:
        if total == 0 and sumsq == 0:
            yield ()
        return
    # Cauchy-Schwarz on the remaining coordinates: total^2 <= k * sumsq
    if sumsq < 0 or total * total > k * sumsq:
        return
    r = isqrt(sumsq)
    for x in range(-r, r + 1):
        for rest in _vectors(k - 1, total - x, sumsq - x * x):
            yield (x, *rest)


def _classes_with(k: int, square: int, k_pairing: int) -> list[HomologyClass]:
    """Classes A with A.A = square and A.K = k_pairing (for k <= 8 a finite set).

    With A = aH - sum b_i E_i we need sum b_i = 3a + k_pairing and
    sum b_i^2 = a^2 - square; Cauchy-Schwarz (sum b)^2 <= k sum b^2 then bounds
    a because 9 - k > 0.
    """

    def feasible(a: int) -> bool:
        s = 3 * a + k_pairing
        return s * s <= k * (a * a - square)

    out = []
    # feasible set in a is an interval around the vertex of a convex quadratic
    lo = hi = 0
    while feasible(hi + 1):
        hi += 1
    while feasible(lo - 1):
        lo -= 1
    for a in range(lo, hi + 1):
        for b in _vectors(k, 3 * a + k_pairing, a * a - square):
            out.append(HomologyClass(k, (a, *b)))
    return sorted(out, key=lambda c: c.coeffs)


@lru_cache(maxsize=None)
def _roots(k: int) -> tuple[HomologyClass, ...]:
    # |a| <= floor(sqrt(2k / (9 - k))) falls out of the same bound
    return tuple(_classes_with(k, -2, 0))


def simple_roots(k: int) -> list[HomologyClass]:
    """l_1 = H - E_1 - E_2 - E_3 and l_i = E_{i-1} - E_i for 2 <= i <= k."""
    if k < 3:
        raise ValueError("simple roots l_1..l_k need k >= 3")
    out = [H(k) - E(1, k) - E(2, k) - E(3, k)]
    out += [E(i - 1, k) - E(i, k) for i in range(2, k + 1)]
    return out


@dataclass(frozen=True)
class RootDatum:
    k: int
    roots: tuple[HomologyClass, ...]
    simple: tuple[HomologyClass, ...]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "roots": [r.to_json() for r in self.roots],
            "simple": [r.to_json() for r in self.simple],
        }


def enumerate_roots(k: int) -> RootDatum:
    _check_root_k(k)
    return RootDatum(k, _roots(k), tuple(simple_roots(k)))


@lru_cache(maxsize=None)
def _exceptional(k: int) -> tuple[HomologyClass, ...]:
    return tuple(_classes_with(k, -1, -1))


def enumerate_exceptional(k: int) -> list[HomologyClass]:
    """All classes with square -1 and K-pairing -1."""
    if not isinstance(k, int) or not 1 <= k <= 8:
        raise ValueError(f"k must be in 1..8, got {k!r}")
    return list(_exceptional(k))


def root_coordinates(A: HomologyClass) -> tuple[int, ...]:
    """Coefficients x with A = sum x_i l_i.

    Triangular in the l_i: x_1 is the H-coefficient, then each E_j-coefficient
    determines the next x.  The last E-coefficient is a consistency check.
    """
    k = A.k
    if k < 3 or A.square() != -2 or pairing(A, canonical_class(k)) != 0:
        raise NotARootError(f"{A} is not a root of R_{k}")
    a, b = A.a, A.b
    x = [a, a - b[0]]
    for j in range(2, k):
        # b_j = x_1 [j <= 3] + x_j - x_{j+1}
        x.append(a * (j <= 3) + x[j - 1] - b[j - 1])
    if b[k - 1] != a * (k <= 3) + x[k - 1]:
        raise NotARootError(f"{A} is not in the span of the simple roots")
    return tuple(x)


def from_root_coordinates(x, k: int) -> HomologyClass:
    total = HomologyClass(k, (0,) * (k + 1))
    for xi, li in zip(x, simple_roots(k)):
        total = total + xi * li
    return total


def is_positive_root(A: HomologyClass) -> bool:
    x = root_coordinates(A)
    if all(t >= 0 for t in x):
        return True
    if all(t <= 0 for t in x):
        return False
    raise ConsistencyError(f"root {A} has mixed-sign simple-root coordinates {x}")


@lru_cache(maxsize=None)
def _positive(k: int) -> tuple[HomologyClass, ...]:
    return tuple(r for r in _roots(k) if is_positive_root(r))


def positive_roots(k: int) -> list[HomologyClass]:
    _check_root_k(k)
    return list(_positive(k))


class SphereFamily(enum.Enum):
    B_MINUS_KF = "B-kF-sum r_i E_i"
    F = "F-sum r_i E_i"
    E = "E_j-sum r_i E_i"
    UNLISTED = "not of listed form"


@dataclass(frozen=True)
class SphereClassification:
    family: SphereFamily
    p: int
    q: int
    r: tuple[int, ...]
    twist: int | None = None  # the k in B - kF
    index: int | None = None  # the j in E_j - ...


def classify_negative_sphere_class(coords, basis: str = "h") -> SphereClassification:
    """Match a negative-square class against the three sphere families.

    ``basis="h"``: ``coords`` is a HomologyClass on X_k, converted to
    ``pB + qF - sum r_i E'_i``.  ``basis="bf"``: ``coords`` is the tuple
    ``(p, q, r_1, ..., r_n)`` directly.
    """
    if basis == "h":
        if not isinstance(coords, HomologyClass):
            raise TypeError("basis 'h' expects a HomologyClass")
        if coords.square() >= 0:
            raise ValueError(f"{coords} does not have negative square")
        v = to_bf_basis(coords)
        p, q, r = int(v.f), int(v.mu), tuple(int(t) for t in v.a)
    elif basis == "bf":
        p, q, *r = (int(t) for t in coords)
        r = tuple(r)
        if 2 * p * q - sum(t * t for t in r) >= 0:
            raise ValueError(f"{coords} does not have negative square")
    else:
        raise ValueError(f"unknown basis {basis!r}")

    binary = all(t in (0, 1) for t in r)
    if p == 1 and q <= 1 and binary:
        return SphereClassification(SphereFamily.B_MINUS_KF, p, q, r, twist=-q)
    if p == 0 and q == 1 and binary:
        return SphereClassification(SphereFamily.F, p, q, r)
    if p == 0 and q == 0:
        nz = [i for i, t in enumerate(r) if t != 0]
        if nz and r[nz[0]] == -1 and all(t in (0, 1) for t in r[nz[0] + 1:]):
            return SphereClassification(SphereFamily.E, p, q, r, index=nz[0] + 1)
    return SphereClassification(SphereFamily.UNLISTED, p, q, r)


def min_area_exceptional(w: SymplecticVector) -> HomologyClass:
    """E_k, after confirming it attains the minimum area over all exceptional classes."""
    from .cremona import is_reduced, reduced_violations

    if not is_reduced(w):
        raise ValueError(f"{w} is not reduced: {'; '.join(reduced_violations(w))}")
    smallest = min(area(w, e) for e in enumerate_exceptional(w.k))
    ek = E(w.k, w.k)
    if area(w, ek) != smallest:
        raise ConsistencyError(f"E_{w.k} is not area-minimal for reduced {w}")
    return ek


def exceptional_areas(w: SymplecticVector) -> list[Fraction]:
    return [area(w, e) for e in enumerate_exceptional(w.k)]
