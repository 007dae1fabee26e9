"""Parameter grids, bulk sweeps, criterion-vs-oracle verification, diagrams.

A standard grid walks both parameters over a half-step rational range that
extends past every reducibility boundary, adds a non-half-integral rational
and the generic symbols tau and sigma on each axis, and couples symbol
offsets (a+tau, b-tau) so the "integral sum, non-integral parts" branches
are exercised.  Sweeps are deterministic: rows are emitted in grid order no
matter how the points were evaluated.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .exact import ExactScalar, symbol
from .rootdata import LieType, ParabolicSetup
from .verdict import Verdict, criterion, evaluate


class UnsupportedGrid(ValueError):
    """The report's grid cannot be drawn as a lattice diagram."""


Point = tuple[ExactScalar, ExactScalar]


@dataclass(frozen=True)
class GridSpec:
    lo: Fraction
    hi: Fraction
    step: Fraction = Fraction(1, 2)
    extra_rationals: tuple[Fraction, ...] = (Fraction(1, 3),)
    generic_names: tuple[str, ...] = ("tau", "sigma")

    def rationals(self) -> list[Fraction]:
        values = []
        v = self.lo
        while v <= self.hi:
            values.append(v)
            v += self.step
        return values


@dataclass(frozen=True)
class ParameterGrid:
    z1_values: tuple[ExactScalar, ...]
    z2_values: tuple[ExactScalar, ...]
    pairing: str = "cartesian"  # cartesian | diagonal
    extra_points: tuple[Point, ...] = ()

    def __post_init__(self):
        if self.pairing not in ("cartesian", "diagonal"):
            raise ValueError(f"unknown pairing {self.pairing!r}")
        if self.pairing == "diagonal" and len(self.z1_values) != len(self.z2_values):
            raise ValueError("diagonal pairing needs equal-length value lists")

    def points(self) -> tuple[Point, ...]:
        seen: dict[Point, None] = {}
        if self.pairing == "cartesian":
            for a in self.z1_values:
                for b in self.z2_values:
                    seen.setdefault((a, b))
        else:
            for a, b in zip(self.z1_values, self.z2_values):
                seen.setdefault((a, b))
        for pt in self.extra_points:
            seen.setdefault(pt)
        return tuple(seen)

    def __len__(self) -> int:
        return len(self.points())


def grid_from_spec(spec: GridSpec) -> ParameterGrid:
    """Cartesian grid over one axis list, plus coupled symbol offsets."""
    rationals = spec.rationals()
    axis = [ExactScalar(v) for v in rationals]
    axis.extend(ExactScalar(v) for v in spec.extra_rationals)
    axis.extend(symbol(name) for name in spec.generic_names)
    lead = spec.generic_names[0] if spec.generic_names else None
    extra: list[Point] = []
    if lead is not None:
        tau = symbol(lead)
        extra.extend(
            (ExactScalar(a) + tau, ExactScalar(b) - tau)
            for a in rationals
            for b in rationals
        )
        extra.extend((ExactScalar(a) + tau, ExactScalar(a) + tau) for a in rationals)
    values = tuple(axis)
    return ParameterGrid(z1_values=values, z2_values=values, extra_points=tuple(extra))


def standard_grid(setup: ParabolicSetup) -> ParameterGrid:
    """Rational range [-(n+2), 3] step 1/2 with the generic augmentations.

    Every boundary reducible point of the criteria lies within
    [-(n+2), 0], so both sides of each boundary are sampled.
    """
    n = setup.n
    return grid_from_spec(GridSpec(lo=Fraction(-(n + 2)), hi=Fraction(3)))


@dataclass(frozen=True)
class SweepRow:
    z1: ExactScalar
    z2: ExactScalar
    verdict: Verdict


@dataclass
class SweepReport:
    setup: ParabolicSetup
    rows: list[SweepRow]
    errors: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        reducible = sum(1 for r in self.rows if r.verdict.reducible)
        mismatches = sum(1 for r in self.rows if r.verdict.agree is False)
        return {
            "points": len(self.rows) + len(self.errors),
            "reducible": reducible,
            "irreducible": len(self.rows) - reducible,
            "mismatches": mismatches,
            "errors": len(self.errors),
        }


def _eval_chunk(args) -> list[SweepRow]:
    setup, points = args
    return [SweepRow(z1, z2, evaluate(setup, z1, z2)) for z1, z2 in points]


def sweep(
    setup: ParabolicSetup,
    grid: ParameterGrid,
    criterion_fn: Callable | None = None,
    threads: int | None = None,
) -> SweepReport:
    """Evaluate oracle and criterion at every grid point, in grid order.

    ``threads`` (or the GVM_THREADS environment variable) caps process
    parallelism; custom criterion functions force the serial path.
    """
    points = grid.points()
    if threads is None:
        threads = int(os.environ.get("GVM_THREADS", "1") or "1")
    report = SweepReport(setup=setup, rows=[])
    if criterion_fn is None and threads > 1 and len(points) >= 64:
        size = max(1, -(-len(points) // threads))
        chunks = [points[i : i + size] for i in range(0, len(points), size)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for rows in pool.map(_eval_chunk, [(setup, c) for c in chunks]):
                report.rows.extend(rows)
        return report
    for z1, z2 in points:
        try:
            report.rows.append(SweepRow(z1, z2, evaluate(setup, z1, z2, criterion_fn)))
        except Exception as exc:  # collected, not fatal
            report.errors.append((str(z1), str(z2), repr(exc)))
    return report


@dataclass
class MismatchReport:
    mismatches: list[tuple[ParabolicSetup, SweepRow]]
    setups_checked: int = 0
    points_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches


def family_setups(kind: str, n_max: int) -> list[ParabolicSetup]:
    """All two-step non-maximal setups of the given kind up to rank n_max."""
    setups = []
    if kind == "A":
        for n in range(3, n_max + 1):
            lie = LieType("A", n)
            for p in range(1, n - 1):
                for q in range(p + 1, n):
                    setups.append(ParabolicSetup(lie, p, q))
    elif kind == "D":
        for n in range(4, n_max + 1):
            lie = LieType("D", n)
            for p, q in ((1, n - 1), (1, n), (n - 1, n)):
                setups.append(ParabolicSetup(lie, p, q))
    else:
        raise ValueError(f"unknown family kind {kind!r}")
    return setups


def verify_family(
    kind: str,
    n_max: int,
    criterion_fn: Callable | None = None,
    threads: int | None = None,
) -> MismatchReport:
    """Sweep every setup of the family and collect criterion/oracle clashes."""
    report = MismatchReport(mismatches=[])
    for setup in family_setups(kind, n_max):
        swept = sweep(setup, standard_grid(setup), criterion_fn, threads)
        report.setups_checked += 1
        report.points_checked += len(swept.rows)
        report.mismatches.extend(
            (setup, row) for row in swept.rows if row.verdict.agree is False
        )
    return report


# ---------------------------------------------------------------------------
# serialization

CSV_HEADER = "type,n,p,q,z1,z2,gk,dim_u,reducible,criterion,agree"


def _bool_str(value: bool | None) -> str:
    if value is None:
        return ""
    return "true" if value else "false"


def row_record(setup: ParabolicSetup, row: SweepRow) -> dict:
    v = row.verdict
    return {
        "type": setup.lie.kind,
        "n": setup.lie.n,
        "p": setup.p,
        "q": setup.q,
        "z1": str(row.z1),
        "z2": str(row.z2),
        "gk": v.gk,
        "dim_u": v.dim_u,
        "reducible": v.reducible,
        "criterion": v.criterion,
        "agree": v.agree,
    }


def report_to_csv(report: SweepReport) -> str:
    lines = [CSV_HEADER]
    for row in report.rows:
        r = row_record(report.setup, row)
        lines.append(
            ",".join(
                [
                    r["type"],
                    str(r["n"]),
                    str(r["p"]),
                    str(r["q"]),
                    r["z1"],
                    r["z2"],
                    str(r["gk"]),
                    str(r["dim_u"]),
                    _bool_str(r["reducible"]),
                    _bool_str(r["criterion"]),
                    _bool_str(r["agree"]),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def report_to_json(report: SweepReport) -> str:
    payload = {
        "setup": {
            "type": report.setup.lie.kind,
            "n": report.setup.lie.n,
            "p": report.setup.p,
            "q": report.setup.q,
            "dim_u": report.setup.dim_u,
        },
        "rows": [row_record(report.setup, row) for row in report.rows],
        "summary": report.summary,
    }
    return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------------------
# diagrams

UNIT = 40  # SVG user units per lattice unit
MARGIN = 60


def _rational_rows(report: SweepReport) -> list[SweepRow]:
    return [
        r for r in report.rows if r.z1.is_rational and r.z2.is_rational
    ]


def _detect_lines(report: SweepReport):
    """Fully reducible loci in the sweep data.

    A vertical (resp. horizontal) line needs every sampled point of the
    column (resp. row) reducible, including a generic-offset sample, so it
    genuinely stands for "the other parameter is arbitrary".  Anti-diagonal
    lines are read off the coupled symbol points the same way.
    """
    verticals: list[Fraction] = []
    horizontals: list[Fraction] = []
    antidiagonals: list[Fraction] = []
    by_z1: dict[Fraction, list[SweepRow]] = {}
    by_z2: dict[Fraction, list[SweepRow]] = {}
    by_sum: dict[Fraction, list[SweepRow]] = {}
    for row in report.rows:
        if row.z1.is_rational:
            by_z1.setdefault(row.z1.rational, []).append(row)
        if row.z2.is_rational:
            by_z2.setdefault(row.z2.rational, []).append(row)
        s = row.z1 + row.z2
        if s.is_rational:
            by_sum.setdefault(s.rational, []).append(row)
    for a, rows in sorted(by_z1.items()):
        if any(not r.z2.is_rational for r in rows) and all(
            r.verdict.reducible for r in rows
        ):
            verticals.append(a)
    for b, rows in sorted(by_z2.items()):
        if any(not r.z1.is_rational for r in rows) and all(
            r.verdict.reducible for r in rows
        ):
            horizontals.append(b)
    for s, rows in sorted(by_sum.items()):
        if any(not r.z1.is_rational for r in rows) and all(
            r.verdict.reducible for r in rows
        ):
            antidiagonals.append(s)
    return verticals, horizontals, antidiagonals


def render_diagram(report: SweepReport, format: str = "svg") -> str:
    """Lattice picture of the reducible locus (z1 horizontal, z2 vertical).

    Rational reducible points become filled marks; loci that are reducible
    for an arbitrary value of one parameter become lines.  Generic-offset
    findings enter the legend rather than the plot.
    """
    if format not in ("svg", "ascii"):
        raise UnsupportedGrid(f"unknown diagram format {format!r}")
    if not report.rows:
        return _render_empty(format)
    rational = _rational_rows(report)
    if not rational:
        raise UnsupportedGrid("no rational cartesian points to draw")
    xs = sorted({r.z1.rational for r in rational})
    ys = sorted({r.z2.rational for r in rational})
    if len({r.z1.rational for r in rational}) * len(
        {r.z2.rational for r in rational}
    ) != len(rational):
        raise UnsupportedGrid("rational points do not form a cartesian grid")
    verticals, horizontals, antidiagonals = _detect_lines(report)
    generic_rows = [r for r in report.rows if not (r.z1.is_rational and r.z2.is_rational)]
    generic_reducible = sum(1 for r in generic_rows if r.verdict.reducible)
    legend = [
        f"setup: type {report.setup.lie.kind}, n={report.setup.n}, "
        f"p={report.setup.p}, q={report.setup.q}, dim_u={report.setup.dim_u}",
        f"generic-offset points: {generic_reducible} reducible / "
        f"{len(generic_rows) - generic_reducible} irreducible",
        f"lines: z1 in {{{', '.join(map(str, verticals))}}}; "
        f"z2 in {{{', '.join(map(str, horizontals))}}}; "
        f"z1+z2 in {{{', '.join(map(str, antidiagonals))}}}",
    ]
    if format == "ascii":
        return _render_ascii(rational, xs, ys, legend)
    return _render_svg(rational, xs, ys, verticals, horizontals, antidiagonals, legend)


def _render_empty(format: str) -> str:
    if format == "ascii":
        return "(empty sweep)\n"
    size = 2 * MARGIN
    mid = MARGIN
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">\n'
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>\n'
        f'<line x1="0" y1="{mid}" x2="{size}" y2="{mid}" stroke="lightgray"/>\n'
        f'<line x1="{mid}" y1="0" x2="{mid}" y2="{size}" stroke="lightgray"/>\n'
        "</svg>\n"
    )


def _render_ascii(rational, xs, ys, legend) -> str:
    marks = {(r.z1.rational, r.z2.rational): r.verdict.reducible for r in rational}
    lines = []
    for y in reversed(ys):
        row = "".join("R" if marks.get((x, y)) else "·" for x in xs)
        lines.append(f"{str(y):>6} {row}")
    lines.append(f"{'':>6} z1: {xs[0]} .. {xs[-1]}")
    lines.extend(legend)
    return "\n".join(lines) + "\n"


def _render_svg(rational, xs, ys, verticals, horizontals, antidiagonals, legend) -> str:
    lo_x, hi_x = xs[0], xs[-1]
    lo_y, hi_y = ys[0], ys[-1]

    def px(x: Fraction) -> float:
        return float(MARGIN + (x - lo_x) * UNIT)

    def py(y: Fraction) -> float:
        return float(MARGIN + (hi_y - y) * UNIT)

    width = px(hi_x) + MARGIN
    height = py(lo_y) + MARGIN + 20 * (len(legend) + 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}">',
        f'<rect x="0" y="0" width="{width:g}" height="{height:g}" fill="white"/>',
        f'<line x1="{px(lo_x):g}" y1="{py(Fraction(0)):g}" x2="{px(hi_x):g}" '
        f'y2="{py(Fraction(0)):g}" stroke="lightgray"/>'
        if lo_y <= 0 <= hi_y
        else "",
        f'<line x1="{px(Fraction(0)):g}" y1="{py(lo_y):g}" x2="{px(Fraction(0)):g}" '
        f'y2="{py(hi_y):g}" stroke="lightgray"/>'
        if lo_x <= 0 <= hi_x
        else "",
    ]
    for a in verticals:
        parts.append(
            f'<line x1="{px(a):g}" y1="{py(hi_y):g}" x2="{px(a):g}" '
            f'y2="{py(lo_y):g}" stroke="black" stroke-width="2"/>'
        )
    for b in horizontals:
        parts.append(
            f'<line x1="{px(lo_x):g}" y1="{py(b):g}" x2="{px(hi_x):g}" '
            f'y2="{py(b):g}" stroke="black" stroke-width="2"/>'
        )
    for s in antidiagonals:
        # clip z1 + z2 = s to the bounding box
        x_start = max(lo_x, s - hi_y)
        x_end = min(hi_x, s - lo_y)
        if x_start <= x_end:
            parts.append(
                f'<line x1="{px(x_start):g}" y1="{py(s - x_start):g}" '
                f'x2="{px(x_end):g}" y2="{py(s - x_end):g}" '
                f'stroke="black" stroke-width="1"/>'
            )
    for r in rational:
        if r.verdict.reducible:
            parts.append(
                f'<circle cx="{px(r.z1.rational):g}" cy="{py(r.z2.rational):g}" '
                f'r="4" fill="black"/>'
            )
    y_text = py(lo_y) + MARGIN / 2
    for i, line in enumerate(legend):
        parts.append(
            f'<text x="{MARGIN}" y="{y_text + 20 * i:g}" font-size="12">{line}</text>'
        )
    parts.append("</svg>")
    return "\n".join(p for p in parts if p) + "\n"
