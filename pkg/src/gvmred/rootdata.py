"""Root data for sl(n,C) and so(2n,C).

Weyl vector, fundamental weights, the shifted weight z1*xi_p + z2*xi_q + rho
for two-parameter scalar highest weights, nilpotency classification of
parabolic subalgebras by highest-root multiplicities, and the nilradical
dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .exact import ExactScalar


class IndexOutOfRange(ValueError):
    """A simple-root or coordinate index outside the valid range."""


class InvalidParabolic(ValueError):
    """The requested parabolic is not two-step nilpotent non-maximal."""

    def __init__(self, message: str, step: int | None = None, maximal: bool | None = None):
        super().__init__(message)
        self.step = step
        self.maximal = maximal


@dataclass(frozen=True)
class LieType:
    """kind "A" means sl(n,C) (rank n-1), kind "D" means so(2n,C).

    Weight vectors have length n in both cases.
    """

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("A", "D"):
            raise ValueError(f"unknown Lie type kind {self.kind!r}")
        if self.kind == "A" and self.n < 2:
            raise ValueError("type A needs n >= 2")
        if self.kind == "D" and self.n < 4:
            raise ValueError("type D needs n >= 4")

    @property
    def simple_root_count(self) -> int:
        return self.n - 1 if self.kind == "A" else self.n


@dataclass(frozen=True)
class WeightVector:
    entries: tuple[ExactScalar, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[ExactScalar]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __add__(self, other: "WeightVector") -> "WeightVector":
        if len(self) != len(other):
            raise ValueError("weight vectors have different lengths")
        return WeightVector(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


@lru_cache(maxsize=None)
def weyl_vector(lie: LieType) -> WeightVector:
    """Half the sum of positive roots, in e_1..e_n coordinates."""
    n = lie.n
    if lie.kind == "A":
        entries = tuple(ExactScalar(Fraction(n - 2 * i + 1, 2)) for i in range(1, n + 1))
    else:
        entries = tuple(ExactScalar(n - i) for i in range(1, n + 1))
    return WeightVector(entries)


@lru_cache(maxsize=None)
def fundamental_weight(lie: LieType, i: int) -> WeightVector:
    """The fundamental weight dual to the i-th simple coroot."""
    n = lie.n
    if not 1 <= i <= lie.simple_root_count:
        raise IndexOutOfRange(f"fundamental weight index {i} out of range for {lie}")
    if lie.kind == "A":
        head, tail = Fraction(n - i, n), Fraction(-i, n)
        entries = tuple(ExactScalar(head if j < i else tail) for j in range(n))
    elif i <= n - 2:
        entries = tuple(ExactScalar(1 if j < i else 0) for j in range(n))
    else:
        half = Fraction(1, 2)
        last = -half if i == n - 1 else half
        entries = tuple(ExactScalar(half) for _ in range(n - 1)) + (ExactScalar(last),)
    return WeightVector(entries)


@dataclass(frozen=True)
class NilpotencyReport:
    step: int
    maximal: bool


def highest_root_multiplicity(lie: LieType, i: int) -> int:
    """Multiplicity of the i-th simple root in the highest root."""
    if not 1 <= i <= lie.simple_root_count:
        raise IndexOutOfRange(f"simple root index {i} out of range for {lie}")
    if lie.kind == "A":
        return 1
    return 1 if i in (1, lie.n - 1, lie.n) else 2


def classify_parabolic(lie: LieType, removed: Iterable[int]) -> NilpotencyReport:
    """Nilpotency step and maximality of the parabolic dropping ``removed``.

    The step of the nilradical is the sum over the removed simple roots of
    their multiplicities in the highest root; the parabolic is maximal when
    a single root is removed.
    """
    removed = sorted(set(removed))
    if not removed:
        raise IndexOutOfRange("removed set must be nonempty")
    step = sum(highest_root_multiplicity(lie, i) for i in removed)
    return NilpotencyReport(step=step, maximal=len(removed) == 1)


@dataclass(frozen=True)
class ParabolicSetup:
    """A two-step nilpotent non-maximal parabolic: simple roots p < q removed.

    Construction rejects anything that is not two-step non-maximal; the
    raised error carries the computed step count.
    """

    lie: LieType
    p: int
    q: int

    def __post_init__(self):
        if not self.p < self.q:
            raise InvalidParabolic(f"need p < q, got p={self.p}, q={self.q}")
        report = classify_parabolic(self.lie, (self.p, self.q))
        if report.maximal or report.step != 2:
            raise InvalidParabolic(
                f"parabolic removing ({self.p},{self.q}) from {self.lie.kind}, n={self.lie.n} "
                f"is {report.step}-step nilpotent"
                + (" and maximal" if report.maximal else ""),
                step=report.step,
                maximal=report.maximal,
            )

    @property
    def n(self) -> int:
        return self.lie.n

    @property
    def middle(self) -> int:
        """Size of the Levi block between the two removed roots."""
        return self.q - self.p

    @property
    def outer_min(self) -> int:
        return min(self.p, self.n - self.q)

    @property
    def outer_max(self) -> int:
        return max(self.p, self.n - self.q)

    @property
    def dim_u(self) -> int:
        return dim_nilradical(self)


def dim_nilradical(setup: ParabolicSetup) -> int:
    """Dimension of the nilradical of the parabolic."""
    n, p, q = setup.n, setup.p, setup.q
    if setup.lie.kind == "A":
        return q * (n - q) + p * (q - p)
    return (n * n + n - 2) // 2


def shifted_weight(setup: ParabolicSetup, z1, z2) -> WeightVector:
    """The shifted weight z1*xi_p + z2*xi_q + rho as exact scalars."""
    z1 = z1 if isinstance(z1, ExactScalar) else ExactScalar(z1)
    z2 = z2 if isinstance(z2, ExactScalar) else ExactScalar(z2)
    xi_p = fundamental_weight(setup.lie, setup.p)
    xi_q = fundamental_weight(setup.lie, setup.q)
    rho = weyl_vector(setup.lie)
    entries = tuple(
        z1 * a.rational + z2 * b.rational + r
        for a, b, r in zip(xi_p, xi_q, rho)
    )
    return WeightVector(entries)
