"""The normalized reduced cone P_k, its vertices and its 2^k open faces."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .cremona import NotReducedError, ReductionError, is_reduced, reduce, reduced_violations
from .lattice import SymplecticVector, area
from .roots import simple_roots

# vertex G_i <-> letter; the letter also names the simple root l_i
LETTERS = "OABCDEFG"
THIRD = Fraction(1, 3)


def _check_cone_k(k: int) -> None:
    if not isinstance(k, int) or not 3 <= k <= 8:
        raise ValueError(f"P_k is described for 3 <= k <= 8, got {k!r}")


@dataclass(frozen=True, order=True)
class FaceLabel:
    k: int
    positive_set: frozenset[int]

    def __post_init__(self):
        _check_cone_k(self.k)
        ps = frozenset(self.positive_set)
        if not ps <= set(range(1, self.k + 1)):
            raise ValueError(f"positive set {sorted(ps)} not inside 1..{self.k}")
        object.__setattr__(self, "positive_set", ps)

    @classmethod
    def parse(cls, text: str, k: int) -> "FaceLabel":
        s = text.strip()
        if not s.startswith("M"):
            raise ValueError(f"face labels start with the vertex M: {text!r}")
        idx = []
        for ch in s[1:]:
            pos = LETTERS.find(ch)
            if pos < 0 or pos >= k:
                raise ValueError(f"letter {ch!r} is not a vertex of P_{k}")
            idx.append(pos + 1)
        if len(set(idx)) != len(idx) or idx != sorted(idx):
            raise ValueError(f"letters must be distinct and in order {LETTERS[:k]}: {text!r}")
        return cls(k, frozenset(idx))

    @property
    def name(self) -> str:
        return "M" + "".join(LETTERS[i - 1] for i in sorted(self.positive_set))

    @property
    def dimension(self) -> int:
        return len(self.positive_set)

    def __str__(self) -> str:
        return self.name


def all_faces(k: int) -> list[FaceLabel]:
    """Open faces by dimension, then in vertex order (the order used in the tables)."""
    _check_cone_k(k)
    out = []
    for p in range(k + 1):
        for combo in combinations(range(1, k + 1), p):
            out.append(FaceLabel(k, frozenset(combo)))
    return out


def monotone(k: int) -> SymplecticVector:
    return SymplecticVector(k, Fraction(1), (THIRD,) * k)


def vertex(i: int, k: int) -> SymplecticVector:
    """G_i: zeros, (1,0,..), (1/2,1/2,0,..), then 1/3 on the first i-1 entries."""
    if i == 1:
        c = [Fraction(0)] * k
    elif i == 2:
        c = [Fraction(1)] + [Fraction(0)] * (k - 1)
    elif i == 3:
        c = [Fraction(1, 2)] * 2 + [Fraction(0)] * (k - 2)
    else:
        c = [THIRD] * (i - 1) + [Fraction(0)] * (k - i + 1)
    return SymplecticVector(k, Fraction(1), tuple(c))


def vertices(k: int) -> list[SymplecticVector]:
    """[M_k, G_1, ..., G_k]."""
    _check_cone_k(k)
    return [monotone(k)] + [vertex(i, k) for i in range(1, k + 1)]


def classify_face(w: SymplecticVector) -> FaceLabel:
    """The open face containing w: the simple roots l_i of positive area."""
    _check_cone_k(w.k)
    u = w.normalized()
    bad = reduced_violations(u)
    if bad:
        raise NotReducedError(f"{w} is not reduced: violates {'; '.join(bad)}")
    areas = [area(u, l) for l in simple_roots(w.k)]
    return FaceLabel(w.k, frozenset(i for i, a in enumerate(areas, start=1) if a > 0))


def _combine(weights: list[Fraction], points: list[SymplecticVector], k: int) -> SymplecticVector:
    total = sum(weights)
    c = [sum((wt * p.c[j] for wt, p in zip(weights, points)), Fraction(0)) / total for j in range(k)]
    return SymplecticVector(k, Fraction(1), tuple(c))


def sample_face(label: FaceLabel, rng: random.Random | None = None) -> SymplecticVector:
    """A rational point in the open face: a convex combination of M and the chosen G_i.

    All weights are positive, and M carries weight, so c_k > 0 and c_1 < 1.
    Without ``rng`` the weights are fixed near the barycenter, slightly
    perturbed so that no accidental extra coincidences occur.
    """
    idx = sorted(label.positive_set)
    points = [monotone(label.k)] + [vertex(i, label.k) for i in idx]
    if rng is None:
        weights = [Fraction(1) + Fraction(j, 7 * (len(points) + 1)) for j in range(len(points))]
    else:
        weights = [Fraction(rng.randint(1, 997), 997) for _ in points]
    return _combine(weights, points, label.k)


def random_reduced(k: int, rng: random.Random) -> SymplecticVector:
    """A random strictly reduced normalized form: random face, random weights."""
    faces = all_faces(k)
    return sample_face(faces[rng.randrange(len(faces))], rng)


def is_representable(w: SymplecticVector) -> bool:
    """Whether the class carries a symplectic form: reduce, then check.

    For 3 <= k <= 8 any strictly reduced class is symplectic; for k <= 2 one
    also needs nu > c_1 + c_2.
    """
    try:
        out = reduce(w).output
    except ReductionError:
        return False
    if not is_reduced(out):
        return False
    if out.k <= 2:
        return out.nu > sum(out.c)
    return True
