"""Fixed-point localization sums for the even superpolynomial.

Each commuting chart contributes one exactly-factored rational term; the
invariant candidate is the normalized sum over all of them.  Two variants
are provided:

* :func:`superpolynomial_even` — the bookkeeping weights verbatim, in the
  display variables ``(a, Q, T)``: prefactor ``Q^{k.wx} T^{k.wy}``, one
  exterior-power factor ``(1 - a Q^{wx_i} T^{wy_i})`` per level ``i < n``,
  obstruction factors ``(1 - Q^{ox} T^{oy})`` in the numerator and tangent
  factors ``(1 - Q^{dx} T^{dy})`` in the denominator.  The ``(q, t, a)``
  image under the canonical substitution ``Q = q^2/t^2``, ``T = t^2`` is
  attached.
* :func:`calibrated_superpolynomial` — the same sum with the weights that
  make the ``n = 2`` family agree *exactly* with the two-strand homology
  oracle (:mod:`coxlinks.twostrand`).  The calibration was fixed once at
  ``n = 2, k = (1,)`` and is applied uniformly; no per-``k`` fitting.

Calibrated weights, in the series variables ``u = q^2`` and ``v = t^2/q^2``
(the degrees of a free x- and y-coordinate):

* a free x-coordinate ``(i, j)`` contributes ``1 / (1 - u^{1-Dx} v^{-Dy})``
  and a free y-coordinate ``1 / (1 - u^{-Dx} v^{1-Dy})``, where ``Dx, Dy``
  are the weight drops ``w^i - w^j``;
* an obstruction pair contributes ``(1 - u^{1-Dx} v^{1-Dy})``;
* level ``i`` contributes ``(1 + a u^{-wx_i} v^{-wy_i})``;
* one global monomial shift ``(a/t)^{c(k)}`` with ``c(k) = sum k_i (n-i)``
  and one global polynomial tensor factor ``1 / (1-u)^{1+|link_s|}``.

A chart whose tangent factor would be ``(1 - 1)`` has no well-defined
contribution (:class:`~coxlinks.errors.DegenerateChartError`).  No commuting
chart is degenerate, in either variant's bookkeeping, for ``n <= 6``
(checked exhaustively); the guards remain for larger ``n`` and for callers
that evaluate single charts.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .charts import Chart, all_charts, commuting_charts
from .errors import (
    CapacityError,
    DegenerateChartError,
    ExperimentalFeatureWarning,
    PositivityRegimeWarning,
)
from .polyalg import BinomialRational, LaurentPoly
from .twostrand import AQT
from .weights import WeightData, weight_data

#: Canonical variable order for the display-variable frame.
QTA = ("a", "Q", "T")

#: The substitution taking the display frame to the homological one.
CANONICAL_SUBSTITUTION = {
    "a": LaurentPoly.monomial(AQT, (1, 0, 0)),
    "Q": LaurentPoly.monomial(AQT, (0, 2, -2)),
    "T": LaurentPoly.monomial(AQT, (0, 0, 2)),
}

#: Chart enumeration is factorial; summing past this is a typo, not a plan.
MAX_LOCALIZATION_N = 7


def _validate_inputs(n: int, k: Sequence[int], link_s: Sequence[int]) -> tuple:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > MAX_LOCALIZATION_N:
        raise CapacityError(
            f"localization sums are limited to n <= {MAX_LOCALIZATION_N}; got {n}"
        )
    k = tuple(int(v) for v in k)
    if len(k) != n - 1:
        raise ValueError(f"k must have length n-1 = {n - 1}, got {len(k)}")
    link_s = tuple(sorted(int(i) for i in link_s))
    if len(set(link_s)) != len(link_s):
        raise ValueError(f"link_s has repeated entries: {link_s}")
    for i in link_s:
        if not 1 <= i <= n - 1:
            raise ValueError(f"link_s entry {i} outside 1..{n - 1}")
    return k, link_s


def in_positivity_regime(k: Sequence[int]) -> bool:
    """Whether ``k`` lies in the monotone cone ``k_1 >= ... >= k_{n-1} >= 0``.

    Only inside this cone is the localization sum conjectured to be a link
    invariant; outside it the sum is still exact arithmetic.

    Examples:
        >>> in_positivity_regime((3, 1, 0))
        True
        >>> in_positivity_regime((1, 2))
        False
    """
    k = tuple(k)
    return all(a >= b for a, b in zip(k, k[1:])) and (not k or k[-1] >= 0)


def _warn_flags(k: Sequence[int], link_s: Sequence[int]) -> bool:
    regime = in_positivity_regime(k)
    if not regime:
        warnings.warn(
            f"k = {tuple(k)} is outside the monotone-positivity regime; "
            "the result carries no link-invariance claim",
            PositivityRegimeWarning,
            stacklevel=3,
        )
    if link_s:
        warnings.warn(
            f"link_s = {tuple(link_s)} pairs k with the quasi-Coxeter weights "
            "by the same dot product; this path has no validated reference "
            "values",
            ExperimentalFeatureWarning,
            stacklevel=3,
        )
    return regime


# -- verbatim display-variable formula ---------------------------------------


@dataclass(frozen=True, slots=True)
class FixedPointTerm:
    """One chart's contribution to the localization sum, fully factored.

    ``prefactor`` is the exponent pair of ``Q^{k.wx} T^{k.wy}``;
    ``lambda_factors`` lists the level weights ``(wx_i, wy_i)`` of the
    ``(1 - a Q T)``-style exterior-power factors; ``numerator_factors`` and
    ``denominator_factors`` carry the obstruction and tangent weight pairs.
    """

    chart: Chart
    prefactor: Tuple[int, int]
    lambda_factors: Tuple[Tuple[int, int], ...]
    numerator_factors: Tuple[Tuple[int, int], ...]
    denominator_factors: Tuple[Tuple[int, int], ...]

    def value(self) -> BinomialRational:
        """The term as an exact rational in ``(a, Q, T)``.

        Raises:
            DegenerateChartError: a tangent factor is ``(1 - 1)``.
        """
        num = LaurentPoly.monomial(
            QTA, (0, self.prefactor[0], self.prefactor[1])
        )
        for wx_i, wy_i in self.lambda_factors:
            num = num * (
                LaurentPoly.one(QTA)
                - LaurentPoly.monomial(QTA, (1, wx_i, wy_i))
            )
        for ox, oy in self.numerator_factors:
            num = num * (
                LaurentPoly.one(QTA) - LaurentPoly.monomial(QTA, (0, ox, oy))
            )
        den: Dict[tuple, int] = {}
        for dx, dy in self.denominator_factors:
            if dx == 0 and dy == 0:
                raise DegenerateChartError(
                    f"chart {self.chart.label.flat_key()} has a torus-fixed "
                    "tangent direction; its localization term divides by zero",
                    charts=(self.chart,),
                )
            exponent = (0, dx, dy)
            den[exponent] = den.get(exponent, 0) + 1
        return BinomialRational(num, den)


def fixed_point_term(
    chart: Chart, k: Sequence[int], link_s: Sequence[int] = ()
) -> FixedPointTerm:
    """Assemble the factored localization term of one chart.

    The factor lists mirror the weights module record-for-record: one
    denominator entry per free coordinate, one numerator entry per
    obstruction pair, one exterior-power factor per level below ``n``.
    """
    n = chart.n
    k = tuple(int(v) for v in k)
    if len(k) != n - 1:
        raise ValueError(f"k must have length n-1 = {n - 1}, got {len(k)}")
    data = weight_data(chart, link_s)
    prefactor = (
        sum(ki * wxi for ki, wxi in zip(k, data.wx)),
        sum(ki * wyi for ki, wyi in zip(k, data.wy)),
    )
    term = FixedPointTerm(
        chart=chart,
        prefactor=prefactor,
        lambda_factors=tuple(zip(data.wx[: n - 1], data.wy[: n - 1])),
        numerator_factors=tuple((r.ox, r.oy) for r in data.obstruction),
        denominator_factors=tuple((r.dx, r.dy) for r in data.tangent),
    )
    assert len(term.denominator_factors) == n * (n - 1) // 2
    assert len(term.lambda_factors) == n - 1
    return term


def omega(chart: Chart, link_s: Sequence[int] = ()) -> BinomialRational:
    """The chart's localization factor with no prefactor, in ``(a, Q, T)``.

    ``omega = prod (1 - Q^ox T^oy) * prod (1 - a Q^wx_i T^wy_i)
    / prod (1 - Q^dx T^dy)`` over the chart's obstruction pairs, levels,
    and free coordinates.

    Raises:
        DegenerateChartError: some free coordinate has weight ``(0, 0)``.

    Examples:
        >>> from .charts import all_charts
        >>> y_chart, x_chart = all_charts(2)  # flat-key order: y-pivot first
        >>> print(omega(x_chart))
        (-a*Q + 1) / (1 - Q*T)
        >>> print(omega(y_chart))
        (-a*T + 1) / (1 - Q*T)
    """
    zero_k = (0,) * (chart.n - 1)
    return fixed_point_term(chart, zero_k, link_s).value()


@dataclass(frozen=True, slots=True)
class Superpolynomial:
    """Normalized localization sum with both variable frames attached.

    ``value`` lives in the display frame ``(a, Q, T)``; ``image`` is its
    substitution under ``Q = q^2/t^2, T = t^2`` and is recomputable from
    ``value`` (tested, not trusted).
    """

    n: int
    k: Tuple[int, ...]
    link_s: Tuple[int, ...]
    value: BinomialRational
    image: BinomialRational
    in_conjecture_regime: bool

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "k": list(self.k),
            "link_s": list(self.link_s),
            "value": self.value.to_record(),
            "image": self.image.to_record(),
            "in_conjecture_regime": self.in_conjecture_regime,
            "experimental": bool(self.link_s),
        }


def superpolynomial_even(
    n: int, k: Sequence[int], link_s: Sequence[int] = ()
) -> Superpolynomial:
    """Sum ``Q^{k.wx} T^{k.wy} omega(S)`` over the commuting charts.

    Emits :class:`~coxlinks.errors.PositivityRegimeWarning` when ``k`` is
    outside the monotone cone and :class:`ExperimentalFeatureWarning` when
    ``link_s`` is nonempty; both paths still compute.

    Examples:
        >>> p = superpolynomial_even(2, (1,))
        >>> print(p.value)
        (-a*Q^2 - a*T^2 + Q + T) / (1 - Q*T)
    """
    k, link_s = _validate_inputs(n, k, link_s)
    regime = _warn_flags(k, link_s)
    total = BinomialRational.zero(QTA)
    for chart in commuting_charts(n):
        total = total + fixed_point_term(chart, k, link_s).value()
    value = total.normalize()
    a_exponents = value.num.exponents_of("a")
    assert all(0 <= e <= n - 1 for e in a_exponents), a_exponents
    return Superpolynomial(
        n=n,
        k=k,
        link_s=link_s,
        value=value,
        image=value.substitute(CANONICAL_SUBSTITUTION).normalize(),
        in_conjecture_regime=regime,
    )


# -- calibrated homological-variable formula ---------------------------------


def _uv_monomial(a_power: int, u_power: int, v_power: int) -> LaurentPoly:
    """The monomial ``a^i u^j v^k`` written in ``(a, q, t)``."""
    return LaurentPoly.monomial(
        AQT, (a_power, 2 * u_power - 2 * v_power, 2 * v_power)
    )


def _uv_exponent(u_power: int, v_power: int) -> tuple:
    return (0, 2 * u_power - 2 * v_power, 2 * v_power)


def _calibrated_term(data: WeightData, k: Tuple[int, ...]) -> BinomialRational:
    prefactor_x = sum(ki * wxi for ki, wxi in zip(k, data.wx))
    prefactor_y = sum(ki * wyi for ki, wyi in zip(k, data.wy))
    num = _uv_monomial(0, prefactor_x, prefactor_y)
    n = data.chart.n
    for wx_i, wy_i in zip(data.wx[: n - 1], data.wy[: n - 1]):
        num = num * (
            LaurentPoly.one(AQT) + _uv_monomial(1, -wx_i, -wy_i)
        )
    for record in data.obstruction:
        # stored (ox, oy) = (Dx + 1, Dy + 1), so (1 - Dx, 1 - Dy) = (2 - ox, 2 - oy)
        num = num * (
            LaurentPoly.one(AQT)
            - _uv_monomial(0, 2 - record.ox, 2 - record.oy)
        )
    den: Dict[tuple, int] = {}
    for record in data.tangent:
        # stored x-side (dx, dy) = (Dx + 1, Dy): factor exponent (1 - Dx, -Dy)
        # stored y-side (dx, dy) = (Dx, Dy + 1): factor exponent (-Dx, 1 - Dy)
        if record.side == "x":
            u_power, v_power = 2 - record.dx, -record.dy
        else:
            u_power, v_power = -record.dx, 2 - record.dy
        if u_power == 0 and v_power == 0:
            raise DegenerateChartError(
                f"chart {data.chart.label.flat_key()} has a torus-fixed "
                "tangent direction in the calibrated weights",
                charts=(data.chart,),
            )
        exponent = _uv_exponent(u_power, v_power)
        den[exponent] = den.get(exponent, 0) + 1
    return BinomialRational(num, den)


@dataclass(frozen=True, slots=True)
class CalibratedSuperpolynomial:
    """Localization sum in the homological frame ``(a, q, t)``.

    ``shift_exponent`` records the applied global monomial ``(a/t)^c``;
    everything else about the calibration is structural and identical for
    every ``n`` and ``k``.
    """

    n: int
    k: Tuple[int, ...]
    link_s: Tuple[int, ...]
    value: BinomialRational
    shift_exponent: int
    in_conjecture_regime: bool

    def truncated(self, bound: int) -> LaurentPoly:
        """Series expansion truncated to total ``(a, q, t)``-degree ``bound``."""
        return self.value.truncate_series({"a": 1, "q": 1, "t": 1}, bound)

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "k": list(self.k),
            "link_s": list(self.link_s),
            "value": self.value.to_record(),
            "shift_exponent": self.shift_exponent,
            "in_conjecture_regime": self.in_conjecture_regime,
            "experimental": bool(self.link_s),
        }


def calibrated_superpolynomial(
    n: int, k: Sequence[int], link_s: Sequence[int] = ()
) -> CalibratedSuperpolynomial:
    """The localization sum calibrated against the two-strand oracle.

    At ``n = 2`` the output equals ``homology_T2_odd(k_1)`` exactly, for
    every ``k_1 >= 1`` — the calibration was fixed once at ``k = (1,)`` and
    the agreement for larger ``k`` is a theorem of the implementation, not
    a re-fit.

    Examples:
        >>> from .twostrand import homology_T2_odd
        >>> calibrated_superpolynomial(2, (1,)).value == homology_T2_odd(1).value
        True
    """
    k, link_s = _validate_inputs(n, k, link_s)
    regime = _warn_flags(k, link_s)
    total = BinomialRational.zero(AQT)
    for chart in commuting_charts(n):
        total = total + _calibrated_term(weight_data(chart, link_s), k)
    shift_exponent = sum(ki * (n - i) for i, ki in enumerate(k, start=1))
    shift = LaurentPoly.monomial(AQT, (shift_exponent, 0, -shift_exponent))
    tensor = BinomialRational(
        LaurentPoly.one(AQT), {(0, 2, 0): 1 + len(link_s)}
    )
    value = (shift * total * tensor).normalize()
    a_exponents = value.num.exponents_of("a")
    if a_exponents:
        assert max(a_exponents) - min(a_exponents) <= n - 1, a_exponents
    return CalibratedSuperpolynomial(
        n=n,
        k=k,
        link_s=link_s,
        value=value,
        shift_exponent=shift_exponent,
        in_conjecture_regime=regime,
    )


# -- degeneracy scan ----------------------------------------------------------


def detect_degenerate(n: int) -> List[Chart]:
    """All charts (commuting or not) with a tangent weight pair ``(0, 0)``.

    These are exactly the charts whose verbatim localization factor is
    undefined.  The scan is exhaustive over all ``n!`` charts.

    Examples:
        >>> detect_degenerate(2)
        []
        >>> len(detect_degenerate(4))
        2
    """
    if n > MAX_LOCALIZATION_N:
        raise CapacityError(
            f"degeneracy scan is limited to n <= {MAX_LOCALIZATION_N}; got {n}"
        )
    flagged = []
    for chart in all_charts(n):
        data = weight_data(chart)
        if any(r.dx == 0 and r.dy == 0 for r in data.tangent):
            flagged.append(chart)
    return flagged
