"""Sphere braid groups, pure braid generators A_ij and their abelianizations.

Words are tuples of nonzero integers: ``+g`` is generator ``g`` (1-based) and
``-g`` its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .snf import IntegerMatrix, SmithForm, abelian_invariants, smith_normal_form

Word = tuple[int, ...]


def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


@dataclass(frozen=True)
class FinitePresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        n = len(self.generators)
        rels = tuple(free_reduce(r) for r in self.relators)
        for r in rels:
            for x in r:
                if x == 0 or abs(x) > n:
                    raise ValueError(f"relator {r} uses an undeclared generator")
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", rels)

    def relation_matrix(self) -> IntegerMatrix:
        """Exponent sums: one row per relator, one column per generator."""
        rows = []
        for r in self.relators:
            row = [0] * len(self.generators)
            for x in r:
                row[abs(x) - 1] += 1 if x > 0 else -1
            rows.append(row)
        return IntegerMatrix.from_rows(rows, len(self.generators))

    def abelianization(self) -> tuple[int, list[int]]:
        return abelian_invariants(self.relation_matrix())

    def format_word(self, word: Sequence[int]) -> str:
        if not word:
            return "1"
        return " ".join(self.generators[abs(x) - 1] + ("^-1" if x < 0 else "") for x in word)

    def to_json(self) -> dict:
        return {"generators": list(self.generators), "relators": [list(r) for r in self.relators]}


def sphere_braid_presentation(n: int) -> FinitePresentation:
    """Br_n(S^2) on the Artin generators sigma_1..sigma_{n-1}."""
    if n < 2:
        raise ValueError("need at least 2 strands")
    gens = tuple(f"s{i}" for i in range(1, n))
    rels: list[Word] = []
    for i in range(1, n - 1):
        j = i + 1
        rels.append((i, j, i, -j, -i, -j))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append((i, j, -i, -j))
    rels.append(tuple(range(1, n)) + tuple(range(n - 1, 0, -1)))
    return FinitePresentation(gens, tuple(rels))


def pure_generator(i: int, j: int, n: int) -> Word:
    """A_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1, with A_ij = A_ji."""
    if i > j:
        i, j = j, i
    if not 1 <= i < j <= n:
        raise ValueError(f"A_{i}{j} needs 1 <= i < j <= {n}")
    conj = tuple(range(j - 1, i, -1))
    return free_reduce(conj + (i, i) + inverse(conj))


def pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: t for t, p in enumerate(pairs(n), start=1)}


def pair_name(p: tuple[int, int]) -> str:
    return f"A{p[0]}{p[1]}" if max(p) < 10 else f"A{p[0]},{p[1]}"


def surface_relation(j: int, n: int) -> Word:
    """(A_1j ... A_{j-1,j})(A_{j,j+1} ... A_{jn}) as a word in the pair generators."""
    if not 1 <= j <= n:
        raise ValueError(f"strand {j} out of range 1..{n}")
    idx = _pair_index(n)
    return tuple(idx[(i, j)] for i in range(1, j)) + tuple(idx[(j, k)] for k in range(j + 1, n + 1))


def full_twist(n: int) -> Word:
    """tau = prod_{j=2..n} (A_1j A_2j ... A_{j-1,j}), every pair once."""
    idx = _pair_index(n)
    return tuple(idx[(i, j)] for j in range(2, n + 1) for i in range(1, j))


def pure_braid_presentation(n: int, quotient_full_twist: bool = False) -> FinitePresentation:
    """PB_n(S^2) on the pair generators, keeping the relators that survive abelianization.

    The disk pure-braid relators are commutators and contribute zero rows, so
    only the n surface relations (and optionally tau) are recorded.
    """
    if n < 2:
        raise ValueError("need at least 2 strands")
    rels = [surface_relation(j, n) for j in range(1, n + 1)]
    if quotient_full_twist:
        rels.append(full_twist(n))
    return FinitePresentation(tuple(pair_name(p) for p in pairs(n)), tuple(rels))


@lru_cache(maxsize=None)
def pure_braid_ab_rank(n: int, quotient_full_twist: bool) -> tuple[int, tuple[int, ...]]:
    """(free rank, torsion) of Ab(PB_n(S^2)) or Ab(PB_n(S^2)/<tau>)."""
    if not 2 <= n <= 6:
        raise ValueError("n must be in 2..6")
    free, torsion = pure_braid_presentation(n, quotient_full_twist).abelianization()
    return free, tuple(torsion)


def pure_braid_smith(n: int, quotient_full_twist: bool) -> SmithForm:
    return smith_normal_form(pure_braid_presentation(n, quotient_full_twist).relation_matrix())


def free_group_ab_rank(r: int) -> int:
    if r < 0:
        raise ValueError("rank must be non-negative")
    free, _ = FinitePresentation(tuple(f"x{i}" for i in range(1, r + 1)), ()).abelianization()
    return free


def parse_pair(text: str) -> tuple[int, int]:
    s = text.strip().upper().lstrip("A").replace("_", "")
    if "," in s:
        i, j = (int(t) for t in s.split(","))
    elif len(s) == 2 and s.isdigit():
        i, j = int(s[0]), int(s[1])
    else:
        raise ValueError(f"cannot read pair generator {text!r}")
    return (min(i, j), max(i, j))


def check_generating_in_ab(candidates: Iterable, n: int, quotient_full_twist: bool = True) -> bool:
    """Do the images of the candidate A_ij span the abelianization (over Z)?"""
    idx = _pair_index(n)
    cand = [parse_pair(c) if isinstance(c, str) else (min(c), max(c)) for c in candidates]
    for p in cand:
        if p not in idx:
            raise ValueError(f"A_{p[0]}{p[1]} is not a pair generator for n={n}")
    rel = pure_braid_presentation(n, quotient_full_twist).relation_matrix()
    units = IntegerMatrix.from_rows(
        [[int(idx[p] == t) for t in range(1, len(idx) + 1)] for p in cand], len(idx)
    )
    free, torsion = abelian_invariants(rel.vstack(units))
    return free == 0 and not torsion


def forgetting_rank_check(fiber_rank: int | None = None) -> bool:
    """Ab-rank additivity along 0 -> pi_1(S^2 - 4 pts) -> PB_5/Z_2 -> PB_4/Z_2 -> 0."""
    fiber = free_group_ab_rank(3) if fiber_rank is None else fiber_rank
    return fiber + pure_braid_ab_rank(4, True)[0] == pure_braid_ab_rank(5, True)[0]
