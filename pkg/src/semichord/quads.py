"""Quadrilateral construction from three chord lengths.

Multiplying the 4-vertex identity d^2 = a^2 + b^2 + c^2 + 2abc/d through
by d gives a depressed cubic in the diameter,

    d^3 - (a^2 + b^2 + c^2) d - 2abc = 0,

whose single sign change guarantees exactly one positive root.  That
root is the circumdiameter shared by every ordering of the three
chords, so a quadrilateral with those sides always inscribes in a
semicircle even though an arbitrary planar quadrilateral satisfying
the same relation need not (see :func:`counterexample_report`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

from .errors import DomainError, PlacementError
from .geometry import CentralAngles, InscribedPolygon, diagonal, vertices_from_angles
from .identity import rhs_quadrilateral
from .solver import arcs_from_sides

#: Slack (radians) before two chords count as overshooting the half turn.
_PLACEMENT_SLACK = 1e-12

#: Arrangements whose sorted diagonal pairs agree to this fraction of d
#: are congruent: the side multisets already match by construction, so
#: diagonals are the distinguishing invariant.
_CONGRUENCE_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class QuadArrangement:
    """One circular ordering of three chords between diameter endpoints."""

    ordered_sides: tuple[float, float, float]
    d: float
    polygon: InscribedPolygon
    middle_side: float


@dataclass(frozen=True, slots=True)
class CounterexampleReport:
    """Outcome of the built-in non-inscribable quadrilateral check."""

    relation_holds: bool
    relation_residual: float
    off_circle_distance: float
    inscribable_variant_d: float


def diameter_cubic(a: float, b: float, c: float) -> float:
    """Unique positive root of d^3 - (a^2+b^2+c^2) d - 2abc.

    Found by bracketed bisection on [max(a,b,c), a+b+c] followed by a
    Newton polish; the bracket is guaranteed because the cubic is
    negative at the largest side and positive at the perimeter sum.
    Closed-form resolution is avoided on purpose: the three-real-root
    case needs trigonometric branches, while bisection is unconditional.
    """
    if a <= 0.0 or b <= 0.0 or c <= 0.0:
        raise DomainError("all three sides must be strictly positive")
    s = a * a + b * b + c * c
    p = 2.0 * a * b * c

    def f(d: float) -> float:
        return (d * d - s) * d - p

    lo = max(a, b, c)
    hi = a + b + c
    while hi - lo > 1e-3 * hi:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        if f(mid) < 0.0:
            lo = mid
        else:
            hi = mid

    d = min(max(0.5 * (lo + hi), lo), hi)
    fd = f(d)
    for _ in range(100):
        if fd < 0.0:
            lo = d
        elif fd > 0.0:
            hi = d
        else:
            break
        slope = 3.0 * d * d - s
        nxt = d - fd / slope if slope > 0.0 else 0.5 * (lo + hi)
        if not lo < nxt < hi or nxt == d:
            nxt = 0.5 * (lo + hi)
            if nxt == d or not lo <= nxt <= hi:
                break  # bracket at floating-point resolution
        d = nxt
        fd = f(d)
    return d


def closing_side(a: float, b: float, d: float) -> float:
    """Fourth side of the inscribed quadrilateral with sides a, b on d.

    Walks two chords of lengths a and b along the semicircle of
    diameter d and measures the straight-line gap from the end of the
    second chord back to the far diameter endpoint.
    """
    if d <= 0.0:
        raise DomainError(f"diameter must be positive, got {d!r}")
    if not 0.0 < a < d or not 0.0 < b < d:
        raise DomainError("chords must be positive and shorter than the diameter")
    arc_a = 2.0 * math.asin(a / d)
    arc_b = 2.0 * math.asin(b / d)
    remaining = math.pi - arc_a - arc_b
    if remaining < 0.0:
        if remaining < -_PLACEMENT_SLACK:
            raise PlacementError(
                f"chords {a!r} and {b!r} overshoot the semicircle of diameter {d!r}"
            )
        remaining = 0.0
    radius = 0.5 * d
    cx = radius * math.cos(remaining)
    cy = radius * math.sin(remaining)
    return math.hypot(radius - cx, cy)


def enumerate_incongruent_quads(a: float, b: float, c: float) -> list[QuadArrangement]:
    """All incongruent inscribed quadrilaterals with short sides a, b, c.

    Every ordering shares the diameter from :func:`diameter_cubic`; a
    mirrored ordering gives a congruent figure, so orderings collapse
    to 3 arrangements for pairwise-distinct sides, 2 with one repeat,
    and 1 when all three agree.
    """
    d = diameter_cubic(a, b, c)
    radius = 0.5 * d
    arrangements: list[QuadArrangement] = []
    kept_diagonals: list[tuple[float, float]] = []
    for order in sorted(set(permutations((float(a), float(b), float(c))))):
        arcs = arcs_from_sides(order, d)
        poly = vertices_from_angles(CentralAngles(arcs), radius)
        pair = tuple(sorted((diagonal(poly, 0, 2), diagonal(poly, 1, 3))))
        if any(
            abs(pair[0] - seen[0]) <= _CONGRUENCE_TOL * d
            and abs(pair[1] - seen[1]) <= _CONGRUENCE_TOL * d
            for seen in kept_diagonals
        ):
            continue
        kept_diagonals.append(pair)
        arrangements.append(
            QuadArrangement(
                ordered_sides=order, d=d, polygon=poly, middle_side=order[1]
            )
        )
    return arrangements


def _circle_intersection_upper(
    p: tuple[float, float], rp: float, q: tuple[float, float], rq: float
) -> tuple[float, float]:
    """Intersection of two circles, picking the higher of the two points."""
    ex, ey = q[0] - p[0], q[1] - p[1]
    dist = math.hypot(ex, ey)
    along = (rp * rp - rq * rq + dist * dist) / (2.0 * dist)
    height_sq = rp * rp - along * along
    if height_sq < 0.0:
        raise DomainError("circles do not intersect")
    height = math.sqrt(height_sq)
    ux, uy = ex / dist, ey / dist
    first = (p[0] + along * ux - height * uy, p[1] + along * uy + height * ux)
    second = (p[0] + along * ux + height * uy, p[1] + along * uy - height * ux)
    return first if first[1] >= second[1] else second


def counterexample_report() -> CounterexampleReport:
    """Check the built-in quadrilateral that defeats the naive converse.

    Sides (sqrt(2), 3+sqrt(5), 3-sqrt(5)) against the long side
    4*sqrt(2) satisfy the diameter relation exactly, yet the planar
    quadrilateral with a right angle between the first short side and
    the long side places its second vertex well off the semicircle on
    the long side: the relation alone does not force inscribability.
    The same three sides in a different shape do inscribe, on exactly
    that diameter.
    """
    a = math.sqrt(2.0)
    b = 3.0 + math.sqrt(5.0)
    c = 3.0 - math.sqrt(5.0)
    d = 4.0 * math.sqrt(2.0)

    first = (0.0, 0.0)
    last = (d, 0.0)
    corner = (0.0, a)  # right angle at the first vertex
    third = _circle_intersection_upper(corner, b, last, c)
    if (
        abs(math.hypot(third[0] - corner[0], third[1] - corner[1]) - b) > 1e-9
        or abs(math.hypot(third[0] - last[0], third[1] - last[1]) - c) > 1e-9
    ):
        raise DomainError("counterexample construction failed to close")

    relation_residual = abs(d * d - rhs_quadrilateral(a, b, c, d))
    center = (0.5 * d, 0.0)
    radius = 0.5 * d
    off_circle = abs(math.hypot(corner[0] - center[0], corner[1] - center[1]) - radius)
    return CounterexampleReport(
        relation_holds=relation_residual <= 1e-12 * d * d,
        relation_residual=relation_residual,
        off_circle_distance=off_circle,
        inscribable_variant_d=diameter_cubic(a, b, c),
    )
