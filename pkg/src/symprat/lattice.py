"""The lattice H_2(X_k; Z) of CP^2 # k(-CP^2) and its symplectic area pairing.

A homology class ``aH - b_1 E_1 - ... - b_k E_k`` is stored as the integer
tuple ``(a, b_1, ..., b_k)``, so exceptional classes such as ``E_i`` carry a
*negative* entry and classes like ``H - E_1 - E_2`` carry positive ones.
A symplectic class ``(nu | c_1, ..., c_k)`` records the areas of ``H`` and the
``E_i``; its Poincare dual is ``nu H - sum c_i E_i``.

Everything is exact: integers for classes and :class:`fractions.Fraction`
for areas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

MAX_K = 8


class DimensionError(ValueError):
    """Raised when objects living on different X_k are combined."""


class WallError(ZeroDivisionError):
    """Raised when a normalization divides by an area that vanishes."""


def as_fraction(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: wall membership has to be decided exactly.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not areas")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s:
            raise ValueError("empty rational literal")
        if any(ch in s for ch in ".eE"):
            raise ValueError(f"not an exact rational literal: {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def _check_k(k: int, lo: int = 1) -> None:
    if not isinstance(k, int) or not lo <= k <= MAX_K:
        raise ValueError(f"k must be an integer in {lo}..{MAX_K}, got {k!r}")


@dataclass(frozen=True)
class HomologyClass:
    k: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_k(self.k)
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.k + 1:
            raise DimensionError(
                f"expected {self.k + 1} coefficients for k={self.k}, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def of(cls, a: int, *b: int) -> "HomologyClass":
        return cls(len(b), (a, *b))

    @property
    def a(self) -> int:
        return self.coeffs[0]

    @property
    def b(self) -> tuple[int, ...]:
        return self.coeffs[1:]

    def _same_k(self, other: "HomologyClass") -> None:
        if self.k != other.k:
            raise DimensionError(f"classes live on X_{self.k} and X_{other.k}")

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        if not isinstance(other, HomologyClass):
            return NotImplemented
        self._same_k(other)
        return HomologyClass(self.k, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        if not isinstance(other, HomologyClass):
            return NotImplemented
        self._same_k(other)
        return HomologyClass(self.k, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(self.k, tuple(-x for x in self.coeffs))

    def __rmul__(self, n: int) -> "HomologyClass":
        if not isinstance(n, int):
            return NotImplemented
        return HomologyClass(self.k, tuple(n * x for x in self.coeffs))

    def square(self) -> int:
        return pairing(self, self)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "HomologyClass":
        return cls(len(data) - 1, tuple(data))

    def __str__(self) -> str:
        terms = []
        if self.a:
            terms.append(_term(self.a, "H"))
        for i, bi in enumerate(self.b, start=1):
            if bi:
                terms.append(_term(-bi, f"E{i}"))
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out


def _term(coef: int, name: str) -> str:
    if coef == 1:
        return name
    if coef == -1:
        return "-" + name
    return f"{coef}{name}"


def H(k: int) -> HomologyClass:
    return HomologyClass(k, (1,) + (0,) * k)


def E(i: int, k: int) -> HomologyClass:
    """The exceptional class E_i (1-based) on X_k."""
    if not 1 <= i <= k:
        raise ValueError(f"E_{i} does not exist on X_{k}")
    b = [0] * k
    b[i - 1] = -1
    return HomologyClass(k, (0, *b))


def pairing(A: HomologyClass, B: HomologyClass) -> int:
    """Intersection number for the diagonal form diag(1, -1, ..., -1)."""
    A._same_k(B)
    return A.a * B.a - sum(x * y for x, y in zip(A.b, B.b))


def canonical_class(k: int) -> HomologyClass:
    """K = -3H + E_1 + ... + E_k, the canonical class of a reduced form."""
    _check_k(k)
    return HomologyClass(k, (-3,) + (-1,) * k)


@dataclass(frozen=True)
class SymplecticVector:
    """Areas ``(nu | c_1, ..., c_k)`` of H, E_1, ..., E_k."""

    k: int
    nu: Fraction
    c: tuple[Fraction, ...]

    def __post_init__(self):
        _check_k(self.k)
        nu = as_fraction(self.nu)
        c = tuple(as_fraction(x) for x in self.c)
        if len(c) != self.k:
            raise DimensionError(f"expected {self.k} areas c_i, got {len(c)}")
        if nu <= 0:
            raise ValueError(f"nu must be positive, got {nu}")
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "c", c)

    @classmethod
    def of(cls, nu, *c) -> "SymplecticVector":
        return cls(len(c), nu, tuple(c))

    @classmethod
    def parse(cls, text: str) -> "SymplecticVector":
        """Parse ``"nu|c1,...,ck"``, e.g. ``"1|1/3,1/3,1/3"``."""
        if "|" not in text:
            raise ValueError(f"expected 'nu|c1,...,ck', got {text!r}")
        head, tail = text.split("|", 1)
        cs = [s for s in tail.split(",")]
        if not tail.strip():
            raise ValueError("no areas after '|'")
        return cls(len(cs), as_fraction(head), tuple(as_fraction(s) for s in cs))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return (self.nu, *self.c)

    @property
    def lam(self) -> Fraction:
        """c_1 + c_2 + c_3."""
        return sum(self.c[:3], Fraction(0))

    def normalized(self) -> "SymplecticVector":
        return SymplecticVector(self.k, Fraction(1), tuple(x / self.nu for x in self.c))

    def square(self) -> Fraction:
        return self.nu * self.nu - sum(x * x for x in self.c)

    def to_json(self) -> list[str]:
        return [str(x) for x in self.coeffs]

    def __str__(self) -> str:
        return f"({self.nu}|{','.join(str(x) for x in self.c)})"


def area(w: SymplecticVector, A: HomologyClass) -> Fraction:
    """omega(A) = nu a - sum c_i b_i."""
    if w.k != A.k:
        raise DimensionError(f"form on X_{w.k}, class on X_{A.k}")
    return w.nu * A.a - sum((ci * bi for ci, bi in zip(w.c, A.b)), Fraction(0))


Vector = Union[HomologyClass, SymplecticVector]


@dataclass(frozen=True)
class BFVector:
    """Pairings with the S^2 x S^2 basis B, F, E'_1, ..., E'_{k-1}.

    ``mu``, ``f`` and ``a`` are the values on B, F and the E'_i.  For a
    symplectic class these are the areas omega(B), omega(F), omega(E'_i).  For
    an integral class A they are intersection numbers, and A itself equals
    ``f B + mu F - sum a_i E'_i`` (B and F are dual to each other).
    """

    k: int
    mu: Fraction
    f: Fraction
    a: tuple[Fraction, ...]
    kind: str  # "form" or "class"

    def normalized(self) -> "BFVector":
        """Rescale so that the F-value is 1."""
        if self.f == 0:
            raise WallError("class on wall: F-value is zero, normalization undefined")
        return BFVector(self.k, self.mu / self.f, Fraction(1), tuple(x / self.f for x in self.a), self.kind)


def bf_basis_classes(k: int) -> tuple[HomologyClass, HomologyClass, list[HomologyClass]]:
    """B = H - E_2, F = H - E_1, E'_1 = H - E_1 - E_2, E'_i = E_{i+1}."""
    if k < 2:
        raise ValueError("the S^2 x S^2 basis needs k >= 2")
    B = H(k) - E(2, k)
    F = H(k) - E(1, k)
    primes = [H(k) - E(1, k) - E(2, k)] + [E(i + 1, k) for i in range(2, k)]
    return B, F, primes


def to_bf_basis(x: Vector) -> BFVector:
    # (nu - c_2, nu - c_1, nu - c_1 - c_2, c_3, ..., c_k); same shape for classes
    if x.k < 2:
        raise ValueError("the S^2 x S^2 basis needs k >= 2")
    a, b = x.coeffs[0], x.coeffs[1:]
    kind = "form" if isinstance(x, SymplecticVector) else "class"
    return BFVector(
        x.k,
        Fraction(a - b[1]),
        Fraction(a - b[0]),
        (Fraction(a - b[0] - b[1]), *(Fraction(t) for t in b[2:])),
        kind,
    )


def to_h_basis(v: BFVector) -> Vector:
    a = v.mu + v.f - v.a[0]
    b = (v.mu - v.a[0], v.f - v.a[0], *v.a[1:])
    if v.kind == "form":
        return SymplecticVector(v.k, a, b)
    coeffs = (a, *b)
    if any(x.denominator != 1 for x in coeffs):
        raise ValueError("BF vector of kind 'class' has non-integral H-coordinates")
    return HomologyClass(v.k, tuple(int(x) for x in coeffs))


def normalized_bf(w: SymplecticVector) -> BFVector:
    """mu = (nu-c_2)/(nu-c_1), a_1 = (nu-c_1-c_2)/(nu-c_1), a_i = c_{i+1}/(nu-c_1)."""
    return to_bf_basis(w).normalized()


def parse_class(text: str) -> HomologyClass:
    """Parse ``"a;b1,...,bk"`` into aH - sum b_i E_i."""
    if ";" not in text:
        raise ValueError(f"expected 'a;b1,...,bk', got {text!r}")
    head, tail = text.split(";", 1)
    if not tail.strip():
        raise ValueError("no E-coefficients after ';'")
    try:
        a = int(head)
        b = [int(s) for s in tail.split(",")]
    except ValueError as exc:
        raise ValueError(f"not an integer vector: {text!r}") from exc
    return HomologyClass(len(b), (a, *b))


def sum_classes(classes: Iterable[HomologyClass], k: int) -> HomologyClass:
    total = HomologyClass(k, (0,) * (k + 1))
    for c in classes:
        total = total + c
    return total
