"""Robinson-Schensted shape statistics over exact scalars.

Row insertion bumps the leftmost entry strictly greater than the inserted
value, so rows are weakly increasing and equal values accumulate in one
row.  Only the shape of the insertion tableau matters downstream; the full
tableau is kept solely for the CLI's debug rendering.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from typing import Sequence

from .exact import ExactScalar, IncomparableScalars

Shape = tuple[int, ...]
ScalarSequence = tuple[ExactScalar, ...]


def _order_keys(seq: Sequence[ExactScalar]) -> list[Fraction]:
    """Rational sort keys; requires all entries to share one symbol part."""
    if not seq:
        return []
    lead = seq[0].generic
    for e in seq[1:]:
        if e.generic != lead:
            raise IncomparableScalars(
                f"sequence mixes symbol parts: {seq[0]} vs {e}"
            )
    return [e.rational for e in seq]


def rs_shape(seq: Sequence[ExactScalar]) -> Shape:
    """Shape of the insertion tableau of ``seq``, processed left to right."""
    rows: list[list[Fraction]] = []
    for v in _order_keys(seq):
        for row in rows:
            if v >= row[-1]:
                row.append(v)
                break
            j = bisect_right(row, v)
            row[j], v = v, row[j]
        else:
            rows.append([v])
    return tuple(len(r) for r in rows)


def rs_tableau(seq: Sequence[ExactScalar]) -> tuple[ScalarSequence, ...]:
    """Full insertion tableau (row-major), for debug output."""
    keys = _order_keys(seq)
    key_rows: list[list[Fraction]] = []
    val_rows: list[list[ExactScalar]] = []
    for k, s in zip(keys, seq):
        v_key, v_val = k, s
        for krow, vrow in zip(key_rows, val_rows):
            if v_key >= krow[-1]:
                krow.append(v_key)
                vrow.append(v_val)
                break
            j = bisect_right(krow, v_key)
            krow[j], v_key = v_key, krow[j]
            vrow[j], v_val = v_val, vrow[j]
        else:
            key_rows.append([v_key])
            val_rows.append([v_val])
    return tuple(tuple(r) for r in val_rows)


def render_tableau(tableau: tuple[ScalarSequence, ...]) -> str:
    """Plain-text grid, one row per line, entries separated by spaces."""
    return "\n".join(" ".join(str(e) for e in row) for row in tableau)


def minus_double(seq: Sequence[ExactScalar]) -> ScalarSequence:
    """``seq`` followed by its reversed negation; length doubles."""
    return tuple(seq) + tuple(-e for e in reversed(seq))


def even_odd_counts(shape: Shape) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Per-row counts of even and odd boxes.

    Box (i, j) is even when i + j is even (1-indexed), so row i holds
    ceil(p_i / 2) even boxes when i is odd and floor(p_i / 2) when i is
    even; the odd count is the complement.
    """
    ev = []
    odd = []
    for i, p in enumerate(shape, start=1):
        e = (p + 1) // 2 if i % 2 == 1 else p // 2
        ev.append(e)
        odd.append(p - e)
    return tuple(ev), tuple(odd)


def conjugate(shape: Shape) -> Shape:
    """Column lengths of the diagram (the transposed partition)."""
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p >= j) for j in range(1, shape[0] + 1))


def depth_sum(seq: Sequence[ExactScalar]) -> int:
    """Sum over boxes of the insertion shape of (row index - 1)."""
    return sum(i * p for i, p in enumerate(rs_shape(seq)))


def even_depth_sum(seq: Sequence[ExactScalar]) -> int:
    """Like depth_sum but counting only even boxes."""
    ev, _ = even_odd_counts(rs_shape(seq))
    return sum(i * e for i, e in enumerate(ev))
