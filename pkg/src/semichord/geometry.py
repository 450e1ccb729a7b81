"""Coordinate geometry on the semicircle.

Polygons live on the upper half of a circle of radius R, with the first
vertex pinned at (-R, 0) and the last at (R, 0) so the diameter is always
a side.  The canonical parametrization is the list of central angles
(arcs) subtended by the short sides; arcs make the semicircle constraint
linear (they sum to a half turn) and every identity in this package is
testable by construction from them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InvalidAnglesError

#: Absolute tolerance on the arc partition summing to a half turn.
ARC_SUM_TOL = 1e-12

#: Relative tolerance (scaled by R or R^2) for on-circle vertex checks.
VERTEX_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class CentralAngles:
    """Partition of the half turn into n-1 non-negative arcs (n >= 3)."""

    arcs: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(float(a) for a in self.arcs))
        if len(self.arcs) < 2:
            raise InvalidAnglesError("need at least 2 arcs (3 vertices)")
        if any(a < 0.0 for a in self.arcs):
            raise InvalidAnglesError("arcs must be non-negative")
        total = math.fsum(self.arcs)
        if abs(total - math.pi) > ARC_SUM_TOL:
            raise InvalidAnglesError(
                f"arcs must sum to pi, got {total!r} (off by {total - math.pi:.3e})"
            )
        if sum(1 for a in self.arcs if a > 0.0) < 2:
            raise InvalidAnglesError("at least two arcs must be strictly positive")

    def __len__(self) -> int:
        return len(self.arcs)

    @property
    def n_vertices(self) -> int:
        return len(self.arcs) + 1

    def reversed(self) -> CentralAngles:
        return CentralAngles(self.arcs[::-1])


@dataclass(frozen=True, slots=True)
class InscribedPolygon:
    """Vertices on the upper semicircle, diameter endpoints first and last."""

    radius: float
    vertices: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "vertices", tuple((float(x), float(y)) for x, y in self.vertices)
        )
        R = self.radius
        if R <= 0.0:
            raise DomainError("radius must be positive")
        pts = self.vertices
        if len(pts) < 3:
            raise InvalidAnglesError("polygon needs at least 3 vertices")
        tol = VERTEX_TOL * R
        x0, y0 = pts[0]
        xn, yn = pts[-1]
        if math.hypot(x0 + R, y0) > tol or math.hypot(xn - R, yn) > tol:
            raise InvalidAnglesError("diameter endpoints must sit at (-R, 0) and (R, 0)")
        prev_angle = math.pi
        for x, y in pts:
            if abs(x * x + y * y - R * R) > VERTEX_TOL * R * R:
                raise InvalidAnglesError(f"vertex ({x!r}, {y!r}) is off the circle")
            if y < -tol:
                raise InvalidAnglesError(f"vertex ({x!r}, {y!r}) is below the diameter")
            angle = math.atan2(y, x)
            # Non-increasing sweep from pi down to 0; ties = coincident vertices.
            if angle > prev_angle + ARC_SUM_TOL:
                raise InvalidAnglesError("vertices must descend in polar angle")
            prev_angle = angle

    @property
    def n(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True, slots=True)
class ChordSet:
    """Side lengths plus diameter; pure metric data with no embedding."""

    sides: tuple[float, ...]
    diameter: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "sides", tuple(float(s) for s in self.sides))
        if any(s < 0.0 for s in self.sides):
            raise DomainError("sides must be non-negative")
        if self.diameter <= 0.0:
            raise DomainError("diameter must be positive")
        if self.sides and self.diameter < max(self.sides):
            raise DomainError("a chord cannot exceed the diameter")

    @classmethod
    def from_polygon(cls, poly: InscribedPolygon) -> ChordSet:
        return cls(tuple(side_lengths(poly)), diagonal(poly, 0, poly.n - 1))


def chord_from_angle(arc: float, radius: float) -> float:
    """Length of the chord subtending ``arc`` on a circle of ``radius``.

    Monotone increasing in ``arc`` on [0, pi]; the half-turn chord is the
    diameter.
    """
    if radius <= 0.0:
        raise DomainError("radius must be positive")
    if not 0.0 <= arc <= math.pi:
        raise DomainError(f"arc must lie in [0, pi], got {arc!r}")
    return 2.0 * radius * math.sin(0.5 * arc)


def vertices_from_angles(angles: CentralAngles, radius: float) -> InscribedPolygon:
    """Place vertices on the upper semicircle from an arc partition.

    Vertex k sits at polar angle pi minus the sum of the first k arcs.
    The diameter endpoints are snapped exactly onto (-R, 0) and (R, 0);
    the arc-sum invariant bounds the snap below the vertex tolerance.
    """
    if radius <= 0.0:
        raise DomainError("radius must be positive")
    pts = [(-radius, 0.0)]
    theta = math.pi
    for arc in angles.arcs[:-1]:
        theta -= arc
        pts.append((radius * math.cos(theta), radius * math.sin(theta)))
    pts.append((radius, 0.0))
    return InscribedPolygon(radius, tuple(pts))


def side_lengths(poly: InscribedPolygon) -> list[float]:
    """Euclidean distances between consecutive vertices (n-1 values)."""
    pts = poly.vertices
    return [
        math.hypot(pts[i + 1][0] - pts[i][0], pts[i + 1][1] - pts[i][1])
        for i in range(len(pts) - 1)
    ]


def diagonal(poly: InscribedPolygon, i: int, j: int) -> float:
    """Euclidean distance between vertices ``i`` and ``j`` (i < j)."""
    if not 0 <= i < j < poly.n:
        raise IndexError(f"need 0 <= i < j < {poly.n}, got i={i}, j={j}")
    (xi, yi), (xj, yj) = poly.vertices[i], poly.vertices[j]
    return math.hypot(xj - xi, yj - yi)


def mirror(poly: InscribedPolygon) -> InscribedPolygon:
    """Reflect across the vertical axis; reverses vertex order.

    Pure coordinate transform (x -> -x), so every pairwise distance is
    preserved bit for bit.
    """
    pts = tuple((-x, y) for x, y in reversed(poly.vertices))
    return InscribedPolygon(poly.radius, pts)
