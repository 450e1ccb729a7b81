"""Diameter recovery from side lengths alone.

A chord of length a on a circle of diameter d subtends the central
angle 2*asin(a/d).  The sides fit consecutively on a semicircle exactly
when those angles fill the half turn, so the diameter is the unique
root of

    arc_sum(d) = sum_i 2*asin(a_i / d) = pi,

which is strictly decreasing in d.  The root is bracketed a priori:
at d = max(sides) the largest side alone contributes the full half
turn, and at d = sum(sides) the sum falls short because asin(x) < x*pi/2
for x < 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError
from .geometry import CentralAngles, InscribedPolygon, vertices_from_angles

#: Iteration cap shared by the bisection and Newton phases.
MAX_ITERATIONS = 200

#: Bisect until the bracket is this fraction of the largest side, then
#: switch to Newton; asin's derivative blows up at d = max(sides), so
#: Newton is unsafe near the lower bracket edge.
_NEWTON_SWITCH = 1e-3

#: Arc-sum residual reachable for well-conditioned side sets.  When one
#: side is within a few ulps of the diameter the asin evaluation alone
#: carries more noise than this, so the solver stops at the bracket's
#: floating-point resolution and reports whatever residual remains
#: rather than failing: d itself is still accurate to the last bit.
RESIDUAL_TOL = 1e-12

#: Stop iterating once the residual is safely below RESIDUAL_TOL.
_TARGET = 1e-13

#: Ratios may exceed 1 by this much before counting as a domain error.
_CLAMP_SLACK = 1e-15


@dataclass(frozen=True, slots=True)
class DiameterSolution:
    """Solved diameter with its bracket certificate."""

    d: float
    bracket_low: float
    bracket_high: float
    iterations: int
    arc_sum_residual: float


def arc_sum(d: float, sides) -> float:
    """Total central angle subtended by ``sides`` on diameter ``d``.

    Strictly decreasing and continuous in d on [max(sides), inf).
    Ratios a/d infinitesimally above 1 (floating-point noise) are
    clamped; anything beyond the slack is a domain error.
    """
    sides = tuple(float(s) for s in sides)
    if not sides:
        raise DomainError("need at least one side")
    if d <= 0.0:
        raise DomainError(f"diameter must be positive, got {d!r}")
    total = 0.0
    for a in sides:
        if a < 0.0:
            raise DomainError(f"sides must be non-negative, got {a!r}")
        ratio = a / d
        if ratio > 1.0:
            if ratio > 1.0 + _CLAMP_SLACK:
                raise DomainError(f"side {a!r} exceeds diameter {d!r}")
            ratio = 1.0
        total += math.asin(ratio)
    return 2.0 * total


def _arc_sum_slope(d: float, sides: tuple[float, ...]) -> float:
    """d/dd of arc_sum; negative for d above the largest side."""
    total = 0.0
    for a in sides:
        gap = (d - a) * (d + a)
        if gap <= 0.0:
            return -math.inf
        total += a / (d * math.sqrt(gap))
    return -2.0 * total


def solve_diameter(sides) -> DiameterSolution:
    """Find the unique diameter on which the sides fill a semicircle.

    Bisection narrows the a-priori bracket [max(sides), sum(sides)],
    then Newton polishes, falling back to a bisection step whenever the
    Newton iterate would leave the bracket.  Iteration stops when the
    residual target is met or the bracket has collapsed to adjacent
    floats; only exhausting the iteration cap raises.
    """
    sides = tuple(float(s) for s in sides)
    if len(sides) < 2:
        raise DomainError("need at least 2 sides to form a polygon on the semicircle")
    if any(s <= 0.0 for s in sides):
        raise DomainError("all sides must be strictly positive")
    lo = max(sides)
    hi = sum(sides)

    def g(t: float) -> float:
        return arc_sum(t, sides) - math.pi

    iterations = 0
    d = None
    gd = 0.0

    switch_width = _NEWTON_SWITCH * lo
    while hi - lo > switch_width:
        if iterations >= MAX_ITERATIONS:
            raise ConvergenceError("bisection exceeded the iteration cap", lo, hi)
        iterations += 1
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        gm = g(mid)
        if gm > 0.0:
            lo = mid
        elif gm < 0.0:
            hi = mid
        else:
            d, gd = mid, 0.0
            break

    if d is None:
        d = min(max(0.5 * (lo + hi), lo), hi)
        gd = g(d)

    while True:
        if gd > 0.0:
            lo = d
        elif gd < 0.0:
            hi = d
        if abs(gd) <= _TARGET:
            break
        if iterations >= MAX_ITERATIONS:
            raise ConvergenceError(
                f"arc-sum residual stalled at {abs(gd):.3e}", lo, hi
            )
        iterations += 1
        nxt = d - gd / _arc_sum_slope(d, sides)
        if not lo < nxt < hi or nxt == d:
            nxt = 0.5 * (lo + hi)
            if nxt == d or not lo <= nxt <= hi:
                break  # bracket at floating-point resolution
        d = nxt
        gd = g(d)

    return DiameterSolution(
        d=d,
        bracket_low=lo,
        bracket_high=hi,
        iterations=iterations,
        arc_sum_residual=abs(gd),
    )


def arcs_from_sides(sides, d: float) -> list[float]:
    """Central angles of the sides on diameter ``d``, summing to pi.

    The largest side's angle is taken as the half-turn complement of
    the others: its ratio to d can sit so close to 1 that asin loses
    several digits, while the complement inherits only the others'
    well-conditioned rounding.
    """
    sides = tuple(float(s) for s in sides)
    arcs = []
    for a in sides:
        ratio = a / d
        if ratio > 1.0:
            if ratio > 1.0 + _CLAMP_SLACK:
                raise DomainError(f"side {a!r} exceeds diameter {d!r}")
            ratio = 1.0
        arcs.append(2.0 * math.asin(ratio))
    widest = max(range(len(sides)), key=lambda i: sides[i])
    arcs[widest] = math.pi - math.fsum(
        arc for i, arc in enumerate(arcs) if i != widest
    )
    return arcs


def inscribe_from_sides(sides) -> InscribedPolygon:
    """Solve the diameter, then realize the polygon on its semicircle."""
    solution = solve_diameter(sides)
    arcs = arcs_from_sides(sides, solution.d)
    return vertices_from_angles(CentralAngles(arcs), 0.5 * solution.d)
