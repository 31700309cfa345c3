"""Reflections, Cremona reduction to the reduced chamber, packing and balanced forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .lattice import (
    HomologyClass,
    SymplecticVector,
    Vector,
    canonical_class,
    pairing,
)
from .roots import ConsistencyError, NotARootError


class NotReducedError(ValueError):
    pass


class ReductionError(ValueError):
    """The input cannot be reduced (square <= 0 or zero H-coefficient)."""


def reflect(A: HomologyClass, r: HomologyClass) -> HomologyClass:
    """s_r(A) = A + (A.r) r for a root r."""
    if r.square() != -2 or pairing(r, canonical_class(r.k)) != 0:
        raise NotARootError(f"{r} is not a root")
    return A + pairing(A, r) * r


# -- moves -------------------------------------------------------------------


@dataclass(frozen=True)
class Perm:
    """New E-coefficient t is the old coefficient at ``order[t]`` (1-based)."""

    order: tuple[int, ...]

    def apply(self, v: tuple) -> tuple:
        return (v[0], *(v[i] for i in self.order))

    def to_json(self) -> dict:
        return {"perm": list(self.order)}


@dataclass(frozen=True)
class Flip:
    """E_i -> -E_i."""

    index: int

    def apply(self, v: tuple) -> tuple:
        out = list(v)
        out[self.index] = -out[self.index]
        return tuple(out)

    def to_json(self) -> dict:
        return {"flip": self.index}


@dataclass(frozen=True)
class Cremona:
    """Reflection in H - E_i - E_j - E_k."""

    indices: tuple[int, int, int]

    def apply(self, v: tuple) -> tuple:
        i, j, k = self.indices
        d = v[0] - v[i] - v[j] - v[k]
        out = list(v)
        out[0] += d
        for t in self.indices:
            out[t] += d
        return tuple(out)

    def to_json(self) -> dict:
        return {"cremona": list(self.indices)}


Move = Union[Perm, Flip, Cremona]


def move_from_json(data: dict) -> Move:
    if "perm" in data:
        return Perm(tuple(data["perm"]))
    if "flip" in data:
        return Flip(int(data["flip"]))
    if "cremona" in data:
        return Cremona(tuple(data["cremona"]))
    raise ValueError(f"unknown move {data!r}")


def _rebuild(template: Vector, coeffs: tuple) -> Vector:
    if isinstance(template, HomologyClass):
        return HomologyClass(template.k, coeffs)
    return SymplecticVector(template.k, coeffs[0], coeffs[1:])


@dataclass(frozen=True)
class ReductionTrace:
    input: Vector
    output: Vector
    steps: tuple[Move, ...]
    negated: bool = False

    def replay(self) -> Vector:
        v = tuple(-x for x in self.input.coeffs) if self.negated else self.input.coeffs
        for m in self.steps:
            v = m.apply(v)
        return _rebuild(self.input, v)

    @property
    def is_identity(self) -> bool:
        return not self.steps and not self.negated

    def to_json(self) -> dict:
        return {
            "input": self.input.to_json(),
            "negated": self.negated,
            "steps": [m.to_json() for m in self.steps],
            "output": self.output.to_json(),
        }


def reduce(A: Vector) -> ReductionTrace:
    """Move a positive-square class into the closed reduced chamber.

    Accepts integral classes and exact symplectic vectors alike.  The output
    satisfies a >= b_1 >= ... >= b_k >= 0 and a >= b_1 + b_2 + b_3.
    """
    v = A.coeffs
    if A.square() <= 0:
        raise ReductionError(f"{A} has square {A.square()} <= 0")
    negated = v[0] < 0
    if negated:
        v = tuple(-x for x in v)
    if v[0] == 0:
        raise ReductionError("degenerate input: H-coefficient is zero")
    k = A.k
    steps: list[Move] = []
    while True:
        for i in range(1, k + 1):
            if v[i] < 0:
                m = Flip(i)
                steps.append(m)
                v = m.apply(v)
        order = tuple(sorted(range(1, k + 1), key=lambda i: -v[i]))
        if order != tuple(range(1, k + 1)):
            m = Perm(order)
            steps.append(m)
            v = m.apply(v)
        if k >= 3 and v[0] < v[1] + v[2] + v[3]:
            # a' - a = a - b_1 - b_2 - b_3 < 0, and a > 0 throughout: a^2 > sum b^2
            # gives b_1 + b_2 + b_3 < sqrt(3) a < 2a, so a' > 0.  Flips and sorts
            # keep a, hence a strictly decreasing positive sequence; with the
            # denominators fixed this terminates.
            m = Cremona((1, 2, 3))
            steps.append(m)
            v = m.apply(v)
            continue
        break
    out = _rebuild(A, v)
    if not is_reduced(out, relaxed=True):
        raise ConsistencyError(f"reduction of {A} ended at non-reduced {out}")
    return ReductionTrace(A, out, tuple(steps), negated)


# -- predicates --------------------------------------------------------------


def reduced_violations(x: Vector, relaxed: bool = False) -> list[str]:
    """Human-readable list of the reducedness inequalities that fail.

    Strict: nu > c_1 >= ... >= c_k > 0 and nu >= c_1 + c_2 + c_3.
    Relaxed (closed chamber): nu >= c_1 and c_k >= 0.
    """
    nu, c = x.coeffs[0], x.coeffs[1:]
    bad = []
    if relaxed:
        if nu < c[0]:
            bad.append("nu >= c1")
    elif not nu > c[0]:
        bad.append("nu > c1")
    for i in range(len(c) - 1):
        if c[i] < c[i + 1]:
            bad.append(f"c{i + 1} >= c{i + 2}")
    last = c[-1]
    if relaxed:
        if last < 0:
            bad.append(f"c{len(c)} >= 0")
    elif not last > 0:
        bad.append(f"c{len(c)} > 0")
    if len(c) >= 3 and nu < c[0] + c[1] + c[2]:
        bad.append("nu >= c1+c2+c3")
    return bad


def is_reduced(x: Vector, relaxed: bool = False) -> bool:
    return not reduced_violations(x, relaxed=relaxed)


def _require_k5(w: SymplecticVector) -> None:
    if w.k != 5:
        raise ValueError(f"defined on CP^2 # 5(-CP^2) only, got k={w.k}")


def is_packing_form(w: SymplecticVector) -> bool:
    """c_i < nu/2 for all i and c_1 + ... + c_5 < 2 nu."""
    _require_k5(w)
    return all(2 * ci < w.nu for ci in w.c) and sum(w.c) < 2 * w.nu


def balanced_indices(w: SymplecticVector) -> list[int]:
    _require_k5(w)
    if not is_reduced(w):
        raise NotReducedError(f"{w} is not reduced: {'; '.join(reduced_violations(w))}")
    c = w.c
    return [i for i in (1, 2, 3) if c[i - 1] < c[i] + c[i + 1]]


def is_balanced(w: SymplecticVector) -> bool:
    return bool(balanced_indices(w))


def balanced_to_packing(w: SymplecticVector, index: int | None = None) -> tuple[SymplecticVector, Cremona]:
    """Cremona-transform a balanced reduced form into a standard packing form.

    The new basis is h = 2H - E_i - E_{i+1} - E_{i+2}, e_1..e_3 = the images of
    E_i, E_{i+1}, E_{i+2}, and e_4, e_5 = the untouched E_j in index order; the
    result is rescaled so that omega(h) = 1.
    """
    choices = balanced_indices(w)
    if not choices:
        raise ValueError(f"{w} is not balanced: no Cremona move to a packing form")
    i = choices[0] if index is None else index
    if i not in choices:
        raise ValueError(f"c{i} < c{i + 1} + c{i + 2} fails for {w}")
    nu, c = w.nu, w.c
    ci, cj, ck = c[i - 1], c[i], c[i + 1]
    h = 2 * nu - ci - cj - ck
    e = [nu - cj - ck, nu - ci - ck, nu - ci - cj]
    e += [c[t] for t in range(5) if t not in (i - 1, i, i + 1)]
    out = SymplecticVector(5, Fraction(1), tuple(x / h for x in e))
    if not is_packing_form(out):
        raise ConsistencyError(f"Cremona image {out} of balanced {w} is not a packing form")
    return out, Cremona((i, i + 1, i + 2))
