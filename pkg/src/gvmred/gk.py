"""Integrality classes of a shifted weight and Gelfand-Kirillov dimension.

The entries of the shifted weight are partitioned into maximal classes:
for type A two entries are related when their difference is an integer,
for type D when their difference or their sum is.  Each class keeps the
original entry order.  The GK dimension of the simple quotient is the
type's triangular bound minus shape statistics of the classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import CosetClass, ExactScalar, sub_is_integer, sum_is_integer
from .rootdata import LieType, ParabolicSetup, shifted_weight
from .tableaux import (
    ScalarSequence,
    depth_sum,
    even_depth_sum,
    minus_double,
)


class NonIntegralWeight(ValueError):
    """A weight required to be integral has several integrality classes."""


@dataclass(frozen=True)
class ClassDecomposition:
    """Integrality classes of a weight, in order of first occurrence.

    For type D the classes are additionally labeled: ``integer_class``
    (all entries integers), ``half_class`` (all entries in 1/2 + Z) and
    ``other_classes`` (the rest).  There is at most one of each labeled
    kind, since any two all-integer entries are related.
    """

    classes: tuple[ScalarSequence, ...]
    integer_class: ScalarSequence | None = None
    half_class: ScalarSequence | None = None
    other_classes: tuple[ScalarSequence, ...] = ()


def integrality_classes(entries, lie: LieType) -> ClassDecomposition:
    entries = tuple(entries)
    use_sum = lie.kind == "D"
    reps: list[ExactScalar] = []
    groups: list[list[ExactScalar]] = []
    for e in entries:
        for rep, group in zip(reps, groups):
            if sub_is_integer(e, rep) or (use_sum and sum_is_integer(e, rep)):
                group.append(e)
                break
        else:
            reps.append(e)
            groups.append([e])
    classes = tuple(tuple(g) for g in groups)
    if not use_sum:
        return ClassDecomposition(classes=classes)
    integer_class = None
    half_class = None
    others = []
    for rep, group in zip(reps, classes):
        kind = rep.coset_class()
        if kind is CosetClass.INTEGER:
            integer_class = group
        elif kind is CosetClass.HALF_INTEGER:
            half_class = group
        else:
            others.append(group)
    return ClassDecomposition(
        classes=classes,
        integer_class=integer_class,
        half_class=half_class,
        other_classes=tuple(others),
    )


def fold_class(x: ScalarSequence) -> ScalarSequence:
    """Rearrange a mixed difference-or-sum class into one difference class.

    Entries whose difference with the first entry is integral are kept in
    order; the remaining entries (integral sum with the first) are negated
    and appended in reversed order.  The result is totally ordered: all
    entries share one symbol part.
    """
    if not x:
        return ()
    first = x[0]
    keep = []
    flip = []
    for e in x:
        if sub_is_integer(e, first):
            keep.append(e)
        else:
            if not sum_is_integer(e, first):
                raise ValueError(f"{e} is unrelated to {first}; not a single class")
            flip.append(e)
    folded = tuple(keep) + tuple(-e for e in reversed(flip))
    assert all(f.generic == first.generic for f in folded)
    return folded


def is_integral(weight, lie: LieType) -> bool:
    """Integral in the weight-lattice sense: a single labeled class.

    Type A: all pairwise differences integral.  Type D: all entries in Z
    or all in 1/2 + Z.
    """
    dec = integrality_classes(tuple(weight), lie)
    if len(dec.classes) != 1:
        return False
    if lie.kind == "A":
        return True
    return not dec.other_classes


def gk_dimension_of_weight(weight, lie: LieType) -> int:
    """GK dimension of the simple module with this shifted weight."""
    entries = tuple(weight)
    n = lie.n
    if len(entries) != n:
        raise ValueError(f"weight has length {len(entries)}, expected {n}")
    dec = integrality_classes(entries, lie)
    if lie.kind == "A":
        return n * (n - 1) // 2 - sum(depth_sum(x) for x in dec.classes)
    total = n * n - n
    if dec.integer_class:
        total -= even_depth_sum(minus_double(dec.integer_class))
    if dec.half_class:
        total -= even_depth_sum(minus_double(dec.half_class))
    for x in dec.other_classes:
        total -= depth_sum(fold_class(x))
    return total


def gk_dimension_integral(weight, lie: LieType) -> int:
    """Single-class specialization, kept as an independent cross-check.

    Treats the whole weight as one sequence: for type A the triangular
    bound minus the depth sum, for type D minus the even depth sum of the
    doubled sequence.
    """
    entries = tuple(weight)
    n = lie.n
    if len(entries) != n:
        raise ValueError(f"weight has length {len(entries)}, expected {n}")
    if not is_integral(entries, lie):
        raise NonIntegralWeight(f"weight {entries} is not integral for {lie}")
    if lie.kind == "A":
        return n * (n - 1) // 2 - depth_sum(entries)
    return n * n - n - even_depth_sum(minus_double(entries))


def gk_dimension(setup: ParabolicSetup, z1, z2) -> int:
    """GK dimension at the scalar highest weight z1*xi_p + z2*xi_q."""
    return gk_dimension_of_weight(shifted_weight(setup, z1, z2), setup.lie)
