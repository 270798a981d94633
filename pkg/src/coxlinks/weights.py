"""Torus weights of chart coordinates and fixed-locus dimension counts.

Weight vectors ``w_x, w_y`` are defined by the pivot recursion starting from
``w_x^n = w_y^n = 0``: an x-pivot ``(i, j)`` forces ``w_x^i = w_x^j + 1`` and
``w_y^i = w_y^j``, mirrored for y-pivots.  Equivalently ``w_x^i`` is the
X-degree of the monomial attached to flag step ``n + 1 - i``.

Tangent records store the localization exponents

    (i,j) ∈ N_x:  (dx, dy) = (w_x^i - w_x^j + 1,  w_y^i - w_y^j),
    (i,j) ∈ N_y:  (dx, dy) = (w_x^i - w_x^j,      w_y^i - w_y^j + 1),

and obstruction records (pairs with j - i > 1) store

    (ox, oy) = (w_x^i - w_x^j + 1,  w_y^i - w_y^j + 1).

A caution that the rest of the package depends on: these displayed exponents
are *formula* data (they feed the denominator and numerator products of the
fixed-point sum), not the literal scaling weights of the torus action.  A
direct gauge computation — rescale (X, Y), then conjugate back to pivot form
by a diagonal matrix — shows the coordinate entry values scale as

    x_{ij} value ↦ t^{Δx-1} s^{Δy} · x_{ij},
    y_{ij} value ↦ t^{Δx}   s^{Δy-1} · y_{ij},       Δ = w^i - w^j,

(``torus_rescaling_check`` verifies this exactly), so a tangent direction is
torus-fixed iff Δ = (1, 0) on the x side / (0, 1) on the y side, and a
commutator entry [X,Y]_{ij} — the equation cutting the commuting locus —
scales by ``t^{Δx-1} s^{Δy-1}`` and is fixed iff Δ = (1, 1).  The
fixed-locus counts in ``fixed_dim_check`` use these honest conditions;
that is the only bookkeeping under which the fixed-dimension inequality
dimOb0 ≥ dimT0 holds for every chart with n ≤ 6 (verified exhaustively;
counting literal (dx,dy) = (0,0) records instead already fails on the
explicit degenerate n = 4 chart, whose zero record y_{12} marks a vanishing
*denominator factor*, not a fixed tangent direction — the chart's family is
a torus orbit, not fixed points).  The vanishing-factor count is reported
separately and drives degenerate-chart detection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .charts import Chart
from .errors import ConsistencyError

IndexPair = Tuple[int, int]


@dataclass(frozen=True)
class TangentRecord:
    """Weight exponents of one free coordinate."""

    side: str  # "x" or "y"
    index: IndexPair
    dx: int
    dy: int

    def is_zero(self) -> bool:
        """True iff the denominator factor (1 - Q^dx T^dy) vanishes."""
        return self.dx == 0 and self.dy == 0

    def is_fixed_direction(self) -> bool:
        """True iff the coordinate direction has zero torus scaling weight.

        The entry value scales by ``t^{Δx-1} s^{Δy}`` (x side) respectively
        ``t^{Δx} s^{Δy-1}`` (y side); with the stored exponents this reads
        (dx, dy) = (2, 0) on the x side and (0, 2) on the y side.
        """
        if self.side == "x":
            return self.dx == 2 and self.dy == 0
        return self.dx == 0 and self.dy == 2

    def to_record(self) -> dict:
        return {"side": self.side, "index": list(self.index), "dx": self.dx, "dy": self.dy}


@dataclass(frozen=True)
class ObstructionRecord:
    """Weight exponents of one obstruction pair (j - i > 1 by default)."""

    index: IndexPair
    ox: int
    oy: int

    def is_zero(self) -> bool:
        return self.ox == 0 and self.oy == 0

    def is_equation_fixed(self) -> bool:
        """True iff the commutator entry [X,Y]_{ij} has zero scaling weight.

        The entry's value scales by ``t^{Δx-1} s^{Δy-1}`` and the stored
        exponents are (ox, oy) = (Δx+1, Δy+1), so the condition reads
        ox == 2 and oy == 2.
        """
        return self.ox == 2 and self.oy == 2

    def to_record(self) -> dict:
        return {"index": list(self.index), "ox": self.ox, "oy": self.oy}


@dataclass(frozen=True)
class WeightData:
    """All weight data of one chart."""

    chart: Chart
    wx: Tuple[int, ...]
    wy: Tuple[int, ...]
    tangent: Tuple[TangentRecord, ...]
    obstruction: Tuple[ObstructionRecord, ...]

    def to_record(self) -> dict:
        return {
            "wx": list(self.wx),
            "wy": list(self.wy),
            "tangent": [rec.to_record() for rec in self.tangent],
            "obstruction": [rec.to_record() for rec in self.obstruction],
        }


def weight_vectors(chart: Chart) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """The weight vectors (w_x, w_y), indices 1..n, from the pivot recursion.

    Raises:
        ConsistencyError: if some index is never reached by a pivot (the
            chart would be malformed; cannot happen for built charts).
    """
    n = chart.n
    wx: List[int | None] = [None] * (n + 1)
    wy: List[int | None] = [None] * (n + 1)
    wx[n] = wy[n] = 0
    pivot_of_level: Dict[int, tuple[str, int]] = {}
    for i, j in chart.px:
        pivot_of_level[i] = ("x", j)
    for i, j in chart.py:
        pivot_of_level[i] = ("y", j)
    for level in range(n - 1, 0, -1):
        if level not in pivot_of_level:
            raise ConsistencyError(f"no pivot at level {level}; chart is malformed")
        side, j = pivot_of_level[level]
        if wx[j] is None:
            raise ConsistencyError(
                f"pivot at level {level} points at index {j} with unset weight"
            )
        wx[level] = wx[j] + (1 if side == "x" else 0)
        wy[level] = wy[j] + (1 if side == "y" else 0)
    return tuple(wx[1:]), tuple(wy[1:])


def tangent_weights(chart: Chart) -> Tuple[TangentRecord, ...]:
    """One record per free coordinate, with the side-dependent +1 applied."""
    wx, wy = weight_vectors(chart)
    records = []
    for i, j in sorted(chart.nx):
        records.append(
            TangentRecord("x", (i, j), wx[i - 1] - wx[j - 1] + 1, wy[i - 1] - wy[j - 1])
        )
    for i, j in sorted(chart.ny):
        records.append(
            TangentRecord("y", (i, j), wx[i - 1] - wx[j - 1], wy[i - 1] - wy[j - 1] + 1)
        )
    n = chart.n
    if len(records) != n * (n - 1) // 2:
        raise ConsistencyError(
            f"expected {n * (n - 1) // 2} tangent records, got {len(records)}"
        )
    return tuple(records)


def obstruction_weights(
    chart: Chart, link_s: Sequence[int] = ()
) -> Tuple[ObstructionRecord, ...]:
    """One record per obstruction pair.

    The default index set is {(i,j) : j - i > 1}.  For the quasi-Coxeter
    braid that skips the generators in ``link_s`` the equation set grows by
    the adjacent pairs (i, i+1) for i in ``link_s`` — those commutator
    entries are no longer killed by the skipped crossing.

    Args:
        chart: a built chart.
        link_s: strictly increasing generator indices in {1..n-1} (the set S
            of skipped Coxeter generators); empty for the plain case.
    """
    n = chart.n
    link = sorted(set(link_s))
    if link and not (1 <= link[0] and link[-1] <= n - 1):
        raise ValueError(f"link_s entries must lie in 1..{n - 1}, got {link}")
    wx, wy = weight_vectors(chart)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 2, n + 1)]
    pairs += [(i, i + 1) for i in link]
    records = tuple(
        ObstructionRecord(
            (i, j), wx[i - 1] - wx[j - 1] + 1, wy[i - 1] - wy[j - 1] + 1
        )
        for i, j in sorted(pairs)
    )
    base_count = (n - 1) * (n - 2) // 2
    if len(records) != base_count + len(link):
        raise ConsistencyError(
            f"expected {base_count + len(link)} obstruction records, got {len(records)}"
        )
    return records


def weight_data(chart: Chart, link_s: Sequence[int] = ()) -> WeightData:
    """Bundle weight vectors, tangent, and obstruction records for a chart."""
    wx, wy = weight_vectors(chart)
    return WeightData(
        chart=chart,
        wx=wx,
        wy=wy,
        tangent=tangent_weights(chart),
        obstruction=obstruction_weights(chart, link_s),
    )


def fixed_dim_check(chart: Chart) -> dict:
    """Fixed-locus dimension counts and the degenerate-factor count.

    Returns a dict with:

    * ``dimT0`` — dimension of the torus-fixed tangent subspace: tangent
      records whose coordinate direction has zero scaling weight (see
      ``TangentRecord.is_fixed_direction``).
    * ``dimOb0`` — dimension of the torus-fixed obstruction subspace:
      records whose commutator equation has zero scaling weight.
    * ``inequality`` — whether dimOb0 >= dimT0 (the virtual-dimension-zero
      expectation; holds for every chart with n <= 6).
    * ``vanishing_factors`` — number of tangent records with the stored
      exponents (dx, dy) = (0, 0), i.e. vanishing denominator factors of
      the fixed-point sum.  A nonzero count marks the chart as degenerate
      for localization (the explicit n = 4 chart has one, at y_{12}).
    * ``vanishing_obstruction_factors`` — same literal count on the
      obstruction side, for the numerator product.
    """
    tangent = tangent_weights(chart)
    obstruction = obstruction_weights(chart)
    dim_t0 = sum(1 for rec in tangent if rec.is_fixed_direction())
    dim_ob0 = sum(1 for rec in obstruction if rec.is_equation_fixed())
    return {
        "dimT0": dim_t0,
        "dimOb0": dim_ob0,
        "inequality": dim_ob0 >= dim_t0,
        "vanishing_factors": sum(1 for rec in tangent if rec.is_zero()),
        "vanishing_obstruction_factors": sum(1 for rec in obstruction if rec.is_zero()),
    }


def torus_rescaling_check(chart: Chart, t: Fraction, s: Fraction) -> bool:
    """Exact check that the weight vectors produce a torus action on the chart.

    Builds a sample point of the chart with distinct rational free
    coordinates, applies the two one-parameter rescalings

        X ↦ t⁻¹ · D X D⁻¹,   Y ↦ s⁻¹ · D Y D⁻¹,   D = diag(t^{w_x^i} s^{w_y^i}),

    and verifies the result is again a point of the chart (pivots 1, zeros
    0) whose free entries scaled exactly by ``t^{Δx-1} s^{Δy}`` (x-side) or
    ``t^{Δx} s^{Δy-1}`` (y-side).

    Args:
        chart: a built chart.
        t, s: nonzero rationals, the torus parameters.

    Raises:
        ValueError: if t or s is zero.
    """
    if t == 0 or s == 0:
        raise ValueError("torus parameters must be nonzero")
    n = chart.n
    wx, wy = weight_vectors(chart)

    def sample(side_free, pivots):
        m = [[Fraction(0)] * n for _ in range(n)]
        for i, j in pivots:
            m[i - 1][j - 1] = Fraction(1)
        for counter, (i, j) in enumerate(sorted(side_free), start=2):
            m[i - 1][j - 1] = Fraction(counter, counter + 1)
        return m

    mx = sample(chart.nx, chart.px)
    my = sample(chart.ny, chart.py)
    d = [t ** wx[i] * s ** wy[i] for i in range(n)]

    def rescaled(m, overall):
        return [
            [overall * d[i] / d[j] * m[i][j] for j in range(n)]
            for i in range(n)
        ]

    new_x = rescaled(mx, 1 / t)
    new_y = rescaled(my, 1 / s)
    for matrix, pivots, zeros, free, source, side in (
        (new_x, chart.px, chart.zx, chart.nx, mx, "x"),
        (new_y, chart.py, chart.zy, chart.ny, my, "y"),
    ):
        for i, j in pivots:
            if matrix[i - 1][j - 1] != 1:
                return False
        for i, j in zeros:
            if matrix[i - 1][j - 1] != 0:
                return False
        for i, j in free:
            dx = wx[i - 1] - wx[j - 1]
            dy = wy[i - 1] - wy[j - 1]
            if side == "x":
                expected = t ** (dx - 1) * s ** dy * source[i - 1][j - 1]
            else:
                expected = t ** dx * s ** (dy - 1) * source[i - 1][j - 1]
            if matrix[i - 1][j - 1] != expected:
                return False
    return True
