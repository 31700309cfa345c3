"""Lagrangian root systems, symplectic (-2)-sphere counts and the SMCG invariants.

For k = 5 this produces the Torelli group, the Weyl group order and the rank
of pi_1(Symp); for k = 2, 3, 4 the rank follows the known relations
rank = N_omega + 2 (k = 2, 3) and rank = N_omega (k = 4).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from . import braid
from .cone import FaceLabel, classify_face
from .cremona import NotReducedError, is_balanced, is_packing_form, reduced_violations
from .lattice import E, HomologyClass, SymplecticVector, area, pairing, to_bf_basis
from .roots import ConsistencyError, enumerate_exceptional, enumerate_roots, positive_roots, simple_roots


class UnsupportedDiagram(ValueError):
    pass


# -- Dynkin types --------------------------------------------------------------

_E_POSITIVE = {6: 36, 7: 63, 8: 120}
_E_WEYL = {6: 51840, 7: 2903040, 8: 696729600}


@dataclass(frozen=True)
class DynkinType:
    components: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(sorted(self.components)))

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        s = text.strip()
        if s == "trivial":
            return cls(())
        return cls(tuple((part[0], int(part[1:])) for part in s.split("x")))

    @property
    def rank(self) -> int:
        return sum(n for _, n in self.components)

    @property
    def positive_root_count(self) -> int:
        total = 0
        for letter, n in self.components:
            if letter == "A":
                total += n * (n + 1) // 2
            elif letter == "D":
                total += n * (n - 1)
            else:
                total += _E_POSITIVE[n]
        return total

    @property
    def is_type_A(self) -> bool:
        return all(letter == "A" for letter, _ in self.components)

    def __str__(self) -> str:
        if not self.components:
            return "trivial"
        return "x".join(f"{letter}{n}" for letter, n in self.components)


def _component_type(nodes: list[int], adj: dict[int, set[int]]) -> tuple[str, int]:
    n = len(nodes)
    edges = sum(len(adj[v]) for v in nodes) // 2
    degrees = sorted(len(adj[v]) for v in nodes)
    if edges != n - 1:
        raise UnsupportedDiagram("diagram component contains a cycle")
    if n == 1 or degrees[-1] <= 2:
        return ("A", n)
    branch = [v for v in nodes if len(adj[v]) >= 3]
    if len(branch) != 1 or len(adj[branch[0]]) != 3:
        raise UnsupportedDiagram("component is neither a path nor a single three-armed star")
    center = branch[0]
    arms = []
    for start in adj[center]:
        length, prev, cur = 1, center, start
        while True:
            nxt = [u for u in adj[cur] if u != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return ("D", n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return ("E", n)
    raise UnsupportedDiagram(f"star with arms {arms}")


def dynkin_type(simple: Sequence[HomologyClass]) -> DynkinType:
    """Type of the root system spanned by a set of simple roots.

    Nodes are joined when their intersection number is nonzero; components
    are recognized by shape (path, or one degree-3 node).
    """
    nodes = list(range(len(simple)))
    adj = {i: {j for j in nodes if j != i and pairing(simple[i], simple[j]) != 0} for i in nodes}
    seen: set[int] = set()
    comps = []
    for v in nodes:
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for t in adj[u]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        comps.append(_component_type(comp, adj))
    return DynkinType(tuple(comps))


def dynkin_type_of_indices(indices: Sequence[int], k: int) -> DynkinType:
    """Type of the subdiagram on {l_i : i in indices} (1-based)."""
    ls = simple_roots(k)
    return dynkin_type([ls[i - 1] for i in sorted(indices)])


def weyl_order(t: DynkinType) -> int:
    total = 1
    for letter, n in t.components:
        if letter == "A":
            total *= factorial(n + 1)
        elif letter == "D":
            total *= 2 ** (n - 1) * factorial(n)
        else:
            total *= _E_WEYL[n]
    return total


# -- Lagrangian system and sphere counts -----------------------------------------------


def _require_reduced(w: SymplecticVector) -> None:
    bad = reduced_violations(w)
    if bad:
        raise NotReducedError(f"{w} is not reduced: violates {'; '.join(bad)}")


def _positive_roots_any(k: int) -> list[HomologyClass]:
    if k >= 3:
        return positive_roots(k)
    if k == 2:
        return [E(1, 2) - E(2, 2)]
    return []


@dataclass(frozen=True)
class LagrangianSystem:
    roots: tuple[HomologyClass, ...]
    simple: tuple[int, ...]  # indices i of the l_i with zero area
    type: DynkinType


def lagrangian_system(w: SymplecticVector) -> LagrangianSystem:
    """Roots of zero area, with the zero-area l_i as simple roots."""
    _require_reduced(w)
    k = w.k
    if not 3 <= k <= 8:
        raise ValueError("Lagrangian root systems are computed for 3 <= k <= 8")
    roots = tuple(r for r in enumerate_roots(k).roots if area(w, r) == 0)
    simple = tuple(i for i, l in enumerate(simple_roots(k), start=1) if area(w, l) == 0)
    return LagrangianSystem(roots, simple, dynkin_type_of_indices(simple, k))


def gamma_type(w: SymplecticVector) -> DynkinType:
    if w.k == 2:
        _require_reduced(w)
        return DynkinType((("A", 1),)) if w.c[0] == w.c[1] else DynkinType()
    return lagrangian_system(w).type


def count_symplectic_minus2(w: SymplecticVector) -> tuple[int, int]:
    """(N_omega, N_L): positive roots of positive and of zero area."""
    _require_reduced(w)
    n_sym = n_lag = 0
    for r in _positive_roots_any(w.k):
        a = area(w, r)
        if a > 0:
            n_sym += 1
        elif a == 0:
            n_lag += 1
        else:
            raise ConsistencyError(f"positive root {r} has negative area on {w}")
    return n_sym, n_lag


# -- Torelli group and ranks ---------------------------------------------------------


class Torelli(enum.Enum):
    TRIVIAL = "Trivial"
    MCG_S2_4 = "MCG(S2,4)"
    MCG_S2_5 = "MCG(S2,5)"

    @property
    def strands(self) -> int | None:
        return {Torelli.MCG_S2_4: 4, Torelli.MCG_S2_5: 5}.get(self)

    @property
    def description(self) -> str:
        if self is Torelli.TRIVIAL:
            return "trivial"
        n = self.strands
        return f"pi0(Diff+(S^2,{n})) = PB_{n}(S^2)/Z_2"


def torelli_ab_rank(t: Torelli) -> int:
    """Free rank of the abelianization, via Smith normal form of PB_n(S^2)/<tau>."""
    if t.strands is None:
        return 0
    free, _ = braid.pure_braid_ab_rank(t.strands, True)
    return free


def _require_k5(w: SymplecticVector) -> None:
    if w.k != 5:
        raise ValueError(f"the Torelli computation is for k = 5, got k = {w.k}")


def torelli_smcg(w: SymplecticVector) -> Torelli:
    _require_k5(w)
    n_sym, _ = count_symplectic_minus2(w)
    if n_sym > 8:
        return Torelli.TRIVIAL
    if n_sym == 8:
        return Torelli.MCG_S2_4
    if n_sym == 0:
        return Torelli.MCG_S2_5
    raise ConsistencyError(f"N_omega = {n_sym} does not occur on a reduced form of X_5")


def pi1_rank(w: SymplecticVector) -> int:
    """Rank of pi_1(Symp_h(X_k, omega)) for 2 <= k <= 5."""
    n_sym, _ = count_symplectic_minus2(w)
    if w.k == 5:
        return n_sym - 5 + torelli_ab_rank(torelli_smcg(w))
    if w.k == 4:
        return n_sym
    if w.k in (2, 3):
        return n_sym + 2
    raise ValueError(f"pi_1 rank is known here for 2 <= k <= 5, got k = {w.k}")


def face_x2(w: SymplecticVector) -> str:
    """The two strata of X_2: 'OB' (c_1 = c_2) and 'BOA' (c_1 != c_2)."""
    _require_reduced(w)
    if w.k != 2:
        raise ValueError("face_x2 is for k = 2")
    return "OB" if w.c[0] == w.c[1] else "BOA"


# -- blow-up upper bounds --------------------------------------------------------------


@dataclass(frozen=True)
class BaseSurface:
    name: str
    rank: int
    b2: int
    # smallest exceptional area; None when the surface has no exceptional classes
    min_exceptional: Fraction | None = None


CP2 = BaseSurface("CP2", 0, 1)
S2xS2_MONOTONE = BaseSurface("S2xS2 monotone", 0, 2)
S2xS2 = BaseSurface("S2xS2 non-monotone", 1, 2)


def x1_base(c1) -> BaseSurface:
    """CP^2 # (-CP^2) with E_1 of area c1 (Symp is U(2) up to homotopy: rank 1)."""
    return BaseSurface("X1", 1, 2, Fraction(c1))


def xk_base(w: SymplecticVector) -> BaseSurface:
    """A reduced X_k (2 <= k <= 4) with rank read off the table relations."""
    smallest = min(area(w, e) for e in enumerate_exceptional(w.k))
    return BaseSurface(f"X{w.k}", pi1_rank(w), w.k + 1, smallest)


def blowup_pi1_upper_bound(base: BaseSurface, sizes: Sequence) -> int:
    """Upper bound on rank pi_1(Symp) after blowing up balls of the given sizes.

    Sizes are processed in groups of equal value, largest first; a group of m
    equal blow-ups on a surface with b_2 = r adds m r, then b_2 grows by m.
    Distinct sizes therefore give r k + k(k-1)/2.
    """
    values = [Fraction(s) for s in sizes]
    if any(s <= 0 for s in values):
        raise ValueError("blow-up sizes must be positive")
    if base.min_exceptional is not None and any(s >= base.min_exceptional for s in values):
        raise ValueError(
            f"blow-up sizes must be smaller than every exceptional area of {base.name} "
            f"(smallest {base.min_exceptional})"
        )
    rank, b2 = base.rank, base.b2
    for _, m in sorted(Counter(values).items(), reverse=True):
        rank += m * b2
        b2 += m
    return rank


@dataclass(frozen=True)
class TypeABound:
    face: str
    case: int
    base: BaseSurface
    sizes: tuple[Fraction, ...]
    bound: int
    expected: int  # N_omega - 5

    @property
    def holds(self) -> bool:
        return self.bound == self.expected


def type_A_upper_bound(w: SymplecticVector) -> TypeABound:
    """Blow down the smallest exceptional spheres and bound the rank from the base.

    Cases by the vertices of the face: D present -> blow down E_5 onto X_4;
    else C -> E_4, E_5 onto X_3; else B -> E_3..E_5 onto X_2 (with O) or a
    base change onto S^2 x S^2 (without O); else A -> X_1; else O -> CP^2.
    """
    _require_k5(w)
    u = w.normalized()
    face = classify_face(u)
    ls = lagrangian_system(u)
    if not ls.type.is_type_A:
        raise ValueError(f"face {face} has Lagrangian system {ls.type}, not of type A")
    name = face.name
    c = u.c
    n_sym, _ = count_symplectic_minus2(u)
    if "D" in name:
        case, base, sizes = 1, xk_base(SymplecticVector(4, 1, c[:4])), c[4:]
    elif "C" in name:
        case, base, sizes = 2, xk_base(SymplecticVector(3, 1, c[:3])), c[3:]
    elif "B" in name:
        case = 3
        if "O" in name:
            base, sizes = xk_base(SymplecticVector(2, 1, c[:2])), c[2:]
        else:
            bf = to_bf_basis(u)
            base = S2xS2_MONOTONE if bf.mu == bf.f else S2xS2
            sizes = bf.a
    elif "A" in name:
        case, base, sizes = 4, x1_base(c[0]), c[1:]
    elif "O" in name:
        case, base, sizes = 5, CP2, c
    else:
        raise ValueError("the monotone point is of type D")
    bound = blowup_pi1_upper_bound(base, sizes)
    return TypeABound(name, case, base, tuple(sizes), bound, n_sym - 5)


def verify_type_A_rank(w: SymplecticVector) -> bool:
    return type_A_upper_bound(w).holds


# -- reports ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SMCGReport:
    k: int
    vector: SymplecticVector
    face: str
    gamma_L: DynkinType
    N_omega: int
    N_L: int
    weyl_order: int
    pi1_rank: int
    torelli: Torelli | None = None
    pi0: dict = field(default_factory=dict)
    packing: bool | None = None
    balanced: bool | None = None

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "omega": self.vector.to_json(),
            "face": self.face,
            "gamma_L": str(self.gamma_L),
            "N_omega": self.N_omega,
            "N_L": self.N_L,
            "torelli": None if self.torelli is None else self.torelli.value,
            "torelli_ab_rank": None if self.torelli is None else torelli_ab_rank(self.torelli),
            "weyl_order": self.weyl_order,
            "pi0": self.pi0,
            "pi1_rank": self.pi1_rank,
            "packing": self.packing,
            "balanced": self.balanced,
        }


def full_report(w: SymplecticVector) -> SMCGReport:
    _require_reduced(w)
    k = w.k
    if not 2 <= k <= 5:
        raise ValueError(f"reports are produced for 2 <= k <= 5, got k = {k}")
    u = w.normalized()
    n_sym, n_lag = count_symplectic_minus2(u)
    gt = gamma_type(u)
    face = face_x2(u) if k == 2 else classify_face(u).name
    if n_sym + n_lag != len(_positive_roots_any(k)):
        raise ConsistencyError("N_omega + N_L differs from the number of positive roots")
    if gt.positive_root_count != n_lag:
        raise ConsistencyError(f"type {gt} has {gt.positive_root_count} positive roots, N_L = {n_lag}")
    W = weyl_order(gt)
    if k < 5:
        return SMCGReport(k, w, face, gt, n_sym, n_lag, W, pi1_rank(u))
    tor = torelli_smcg(u)
    rank = n_sym - 5 + torelli_ab_rank(tor)
    pi0 = {"kernel": tor.description, "quotient": f"W({gt})", "quotient_order": W}
    return SMCGReport(
        k, w, face, gt, n_sym, n_lag, W, rank, tor, pi0, is_packing_form(u), is_balanced(u)
    )
