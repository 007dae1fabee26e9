"""Reducibility verdicts: GK-dimension oracle and closed-form criteria.

The oracle declares the scalar generalized Verma module reducible exactly
when the GK dimension of its simple quotient drops below the nilradical
dimension.  The closed-form criteria evaluate the case trees over the two
parameters directly; sweeps cross-check the two answers point by point.

Coset membership such as "z in c + Z>=0" is decided exactly: a scalar with
a nonzero symbol part never lies in a rational coset and never passes an
ordering threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import ExactScalar
from .gk import (
    NonIntegralWeight,
    gk_dimension,
    integrality_classes,
    fold_class,
    is_integral,
)
from .rootdata import (
    IndexOutOfRange,
    ParabolicSetup,
    WeightVector,
    dim_nilradical,
    shifted_weight,
)
from .tableaux import conjugate, even_odd_counts, minus_double, rs_shape


class WrongLieType(ValueError):
    """A criterion was called for the other Lie type."""


class EqualParameters(ValueError):
    """The off-diagonal criterion was called with z1 = z2."""


@dataclass(frozen=True)
class Verdict:
    gk: int
    dim_u: int
    reducible: bool
    criterion: bool | None = None
    agree: bool | None = None


def _coerce(z) -> ExactScalar:
    return z if isinstance(z, ExactScalar) else ExactScalar(z)


def _int_at_least(z: ExactScalar, bound) -> bool:
    """z is a plain integer >= bound."""
    return z.is_integer and z.rational >= bound


def _half_step_at_least(z: ExactScalar, bound) -> bool:
    """z lies in bound + (1/2)Z>=0."""
    if z.generic:
        return False
    return (2 * (z.rational - bound)).denominator == 1 and z.rational >= bound


def _int_step_at_least(z: ExactScalar, bound) -> bool:
    """z lies in bound + Z>=0 (bound may be a half-integer)."""
    if z.generic:
        return False
    return (z.rational - bound).denominator == 1 and z.rational >= bound


def reducible_oracle(setup: ParabolicSetup, z1, z2) -> Verdict:
    """Verdict from the GK-dimension oracle alone."""
    gk = gk_dimension(setup, z1, z2)
    du = dim_nilradical(setup)
    return Verdict(gk=gk, dim_u=du, reducible=gk < du)


def criterion_a_diagonal(setup: ParabolicSetup, z) -> bool:
    """Type A closed form on the diagonal z1 = z2 = z."""
    if setup.lie.kind != "A":
        raise WrongLieType("diagonal type A criterion needs a type A setup")
    z = _coerce(z)
    gap, lo, hi = setup.middle, setup.outer_min, setup.outer_max
    if z.is_integer:
        if lo >= gap - 1:
            half_lo = (lo + 1) // 2 if gap % 2 == 0 else lo // 2
            first = -half_lo - (gap - 1) // 2
        elif lo > 0:
            first = -max((gap + lo + 1) // 2, hi) + 1 if hi < gap else -gap + 1
        else:
            first = -min(hi, gap) + 1
        return z.rational >= first
    # non-integral: reducible only for half-integers past the open boundary
    if lo < 1 or not z.is_half_integer:
        return False
    return z.rational > Fraction(-(gap + lo), 2)


def criterion_a_offdiagonal(setup: ParabolicSetup, z1, z2) -> bool:
    """Type A closed form for z1 != z2 (consolidated coset form)."""
    if setup.lie.kind != "A":
        raise WrongLieType("off-diagonal type A criterion needs a type A setup")
    z1, z2 = _coerce(z1), _coerce(z2)
    if z1 == z2:
        raise EqualParameters("off-diagonal criterion needs z1 != z2")
    n, p = setup.n, setup.p
    gap, lo = setup.middle, setup.outer_min
    tail = n - setup.q
    if tail == 0:
        return _int_at_least(z1, 1 - min(p, gap))
    s = z1 + z2
    return (
        _int_at_least(z2, 1 - min(gap, tail))
        or _int_at_least(z1, 1 - min(p, gap))
        or _int_at_least(s, -gap - lo + 1)
    )


def criterion_a_offdiagonal_cases(setup: ParabolicSetup, z1, z2) -> bool:
    """Type A for z1 != z2, following the fine case split on integrality.

    Kept as an independent second route; sweeps assert it agrees with the
    consolidated form everywhere.
    """
    if setup.lie.kind != "A":
        raise WrongLieType("off-diagonal type A criterion needs a type A setup")
    z1, z2 = _coerce(z1), _coerce(z2)
    if z1 == z2:
        raise EqualParameters("off-diagonal criterion needs z1 != z2")
    n, p = setup.n, setup.p
    gap, lo = setup.middle, setup.outer_min
    tail = n - setup.q
    if tail == 0:
        return _int_at_least(z1, 1 - min(p, n - p))
    i1, i2 = z1.is_integer, z2.is_integer
    if not i1 and not i2:
        return _int_at_least(z1 + z2, -gap - lo + 1)
    if not i1:
        return _int_at_least(z2, 1 - min(gap, tail))
    if not i2:
        return _int_at_least(z1, 1 - min(p, gap))
    if z1.rational >= 0 or z2.rational >= 0:
        return True
    return (
        z1.rational + z2.rational > -gap - lo
        or z1.rational > -min(gap, p)
        or z2.rational > -min(gap, tail)
    )


def criterion_d(setup: ParabolicSetup, z1, z2) -> bool:
    """Type D closed form, both removed-root patterns, both parities."""
    if setup.lie.kind != "D":
        raise WrongLieType("type D criterion needs a type D setup")
    z1, z2 = _coerce(z1), _coerce(z2)
    n = setup.n
    odd = n % 2 == 1
    if setup.p == 1:
        # q = n-1 or n
        if _int_at_least(z1, 0):
            return True
        if (not z1.is_integer and not z2.is_integer) or z1 == ExactScalar(-1):
            if _int_at_least(z1 + z2, -n + 2):
                return True
        if z1 == z2 and not z1.is_integer:
            if _int_step_at_least(z1, (-n) // 2 + Fraction(3, 2)):
                return True
        return _int_at_least(z2, -n + 3 if odd else -n + 4)
    # p = n-1, q = n
    if _int_at_least(z1, 0) or _int_at_least(z2, 0):
        return True
    if z1 == z2:
        bound = Fraction(-n + 1, 2) if odd else Fraction(-n + 2, 2)
        if _half_step_at_least(z1, bound):
            return True
    return _int_at_least(z1 + z2, -n + 1 if odd else -n + 2)


def criterion(setup: ParabolicSetup, z1, z2) -> bool:
    """Dispatch to the matching closed form for the setup and parameters."""
    z1, z2 = _coerce(z1), _coerce(z2)
    if setup.lie.kind == "D":
        return criterion_d(setup, z1, z2)
    if z1 == z2:
        return criterion_a_diagonal(setup, z1)
    return criterion_a_offdiagonal(setup, z1, z2)


def evaluate(setup: ParabolicSetup, z1, z2, criterion_fn=None) -> Verdict:
    """Oracle verdict plus criterion answer and agreement flag."""
    fn = criterion_fn or criterion
    base = reducible_oracle(setup, z1, z2)
    crit = fn(setup, z1, z2)
    return Verdict(
        gk=base.gk,
        dim_u=base.dim_u,
        reducible=base.reducible,
        criterion=crit,
        agree=base.reducible == crit,
    )


def single_weight_reducible(n: int, p: int, z) -> bool:
    """Reducibility for the one-parameter weight z * xi_p in type A."""
    if not 1 <= p <= n - 1:
        raise IndexOutOfRange(f"p={p} out of range for sl({n})")
    return _int_at_least(_coerce(z), 1 - min(p, n - p))


def has_maximal_shape(setup: ParabolicSetup, weight: WeightVector) -> bool:
    """Whether the insertion tableau of an integral type A weight has the
    three-column shape with column lengths {p, q-p, n-q} (zeros dropped).

    For integral weights this holds exactly when the GK dimension attains
    the nilradical dimension.
    """
    if setup.lie.kind != "A":
        raise WrongLieType("the three-column shape test is for type A")
    entries = tuple(weight)
    if not is_integral(entries, setup.lie):
        raise NonIntegralWeight("the three-column shape test needs an integral weight")
    columns = conjugate(rs_shape(entries))
    target = tuple(
        sorted((c for c in (setup.p, setup.middle, setup.n - setup.q) if c), reverse=True)
    )
    return columns == target


def irreducible_shape_diagnostic(setup: ParabolicSetup, z1, z2) -> bool:
    """Type D shape witness for irreducibility (diagnostic only).

    True when some labeled class x has even-box row counts of its doubled
    sequence equal to (2, 1, ..., 1) or (1, 1, ..., 1), or some unlabeled
    class folds to a tableau of shape (2, 1^(n-2)) or (1^(n-1)).  Checked
    one-directionally against the oracle: irreducible implies a witness.
    """
    if setup.lie.kind != "D":
        raise WrongLieType("the shape diagnostic is for type D")
    n = setup.n
    targets = ((2,) + (1,) * (n - 2), (1,) * (n - 1))
    dec = integrality_classes(tuple(shifted_weight(setup, z1, z2)), setup.lie)
    for labeled in (dec.integer_class, dec.half_class):
        if labeled:
            ev, _ = even_odd_counts(rs_shape(minus_double(labeled)))
            while ev and ev[-1] == 0:
                ev = ev[:-1]
            if ev in targets:
                return True
    for other in dec.other_classes:
        if rs_shape(fold_class(other)) in targets:
            return True
    return False
