"""Squared-diameter identities for semicircle-inscribed polygons.

For a polygon whose longest side is the diameter d, the square of the
diameter equals the sum of the squared short sides plus a chain of
cross terms, each built from two fan diagonals and the side between
them:

    d^2 = sum(sides^2) + 2 * sum_k (D1_k * s_k * D2_k) / d

where, numbering vertices 1..n along the arc, D1_k is the chord from
vertex 1 to vertex k+1, s_k the side from k+1 to k+2, and D2_k the
chord from vertex k+2 to vertex n.  Closed forms for 4, 5, and 6
vertices are provided alongside the general evaluator; diagonals are
always measured from coordinates here, never solved from sides, so the
evaluators stay independent of the diameter solver.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .geometry import InscribedPolygon, diagonal, side_lengths


@dataclass(frozen=True, slots=True)
class CrossTerm:
    """One summand of the cross-term chain (1-indexed by k)."""

    k: int
    first_diagonal: float
    side: float
    second_diagonal: float
    term_value: float


@dataclass(frozen=True, slots=True)
class IdentityReport:
    """Both sides of the identity plus residuals, fully recomputable."""

    n: int
    lhs: float
    sum_of_squares: float
    cross_terms: tuple[CrossTerm, ...]
    rhs: float
    residual_abs: float
    residual_rel: float


def _require_non_negative(**lengths: float) -> None:
    for name, value in lengths.items():
        if value < 0.0:
            raise DomainError(f"{name} must be non-negative, got {value!r}")


def rhs_quadrilateral(a: float, b: float, c: float, d: float) -> float:
    """Right side of the 4-vertex identity: a^2 + b^2 + c^2 + 2abc/d.

    Symmetric in (a, b, c).  With any short side zero this collapses to
    the right-triangle sum of two squares.
    """
    if d <= 0.0:
        raise DomainError(f"diameter must be positive, got {d!r}")
    _require_non_negative(a=a, b=b, c=c)
    return a * a + b * b + c * c + 2.0 * a * b * c / d


def rhs_pentagon(
    a: float, b: float, c: float, d: float, R: float, x: float, y: float
) -> float:
    """Right side of the 5-vertex identity.

    ``x`` is the chord from the first vertex to the third, ``y`` the
    chord from the third to the last.  All four squared short sides
    appear in the sum; the cross terms are (a*b*y + x*c*d)/R.
    """
    if R <= 0.0:
        raise DomainError(f"radius must be positive, got {R!r}")
    _require_non_negative(a=a, b=b, c=c, d=d, x=x, y=y)
    return a * a + b * b + c * c + d * d + (a * b * y + x * c * d) / R


def rhs_hexagon(
    a: float,
    b: float,
    c: float,
    d: float,
    e: float,
    R: float,
    x: float,
    y: float,
    z: float,
    u: float,
) -> float:
    """Right side of the 6-vertex identity.

    Diagonals: ``y`` joins vertices 1-3, ``u`` joins 1-4, ``z`` joins
    3-6, ``x`` joins 4-6.  Cross terms are (a*b*z + y*c*x + u*d*e)/R.
    """
    if R <= 0.0:
        raise DomainError(f"radius must be positive, got {R!r}")
    _require_non_negative(a=a, b=b, c=c, d=d, e=e, x=x, y=y, z=z, u=u)
    return a * a + b * b + c * c + d * d + e * e + (a * b * z + y * c * x + u * d * e) / R


def evaluate_general(poly: InscribedPolygon) -> IdentityReport:
    """Measure every side and needed diagonal, evaluate the identity.

    The residual is reported both absolutely and relative to the left
    side d^2, which is strictly positive for any valid polygon.
    """
    n = poly.n
    sides = side_lengths(poly)
    d = diagonal(poly, 0, n - 1)
    sum_sq = sum(s * s for s in sides)
    terms = []
    for k in range(1, n - 2):
        first = diagonal(poly, 0, k)
        side = sides[k]
        second = diagonal(poly, k + 1, n - 1)
        terms.append(CrossTerm(k, first, side, second, first * side * second))
    rhs = sum_sq + 2.0 * sum(t.term_value for t in terms) / d
    lhs = d * d
    residual_abs = abs(lhs - rhs)
    return IdentityReport(
        n=n,
        lhs=lhs,
        sum_of_squares=sum_sq,
        cross_terms=tuple(terms),
        rhs=rhs,
        residual_abs=residual_abs,
        residual_rel=residual_abs / lhs,
    )


def nested_quadrilateral_check(poly: InscribedPolygon, k: int) -> IdentityReport:
    """Apply the 4-vertex identity to vertices (1, k+1, k+2, n).

    Those four points lie on the same semicircle with the same diameter
    side, so the quadrilateral relation must hold for every k in
    [1, n-3].
    """
    n = poly.n
    if not 1 <= k <= n - 3:
        raise IndexError(f"need 1 <= k <= {n - 3}, got k={k}")
    a = diagonal(poly, 0, k)
    b = diagonal(poly, k, k + 1)
    c = diagonal(poly, k + 1, n - 1)
    d = diagonal(poly, 0, n - 1)
    rhs = rhs_quadrilateral(a, b, c, d)
    lhs = d * d
    residual_abs = abs(lhs - rhs)
    return IdentityReport(
        n=4,
        lhs=lhs,
        sum_of_squares=a * a + b * b + c * c,
        cross_terms=(CrossTerm(1, a, b, c, a * b * c),),
        rhs=rhs,
        residual_abs=residual_abs,
        residual_rel=residual_abs / lhs,
    )


def corner_identity_residual(poly: InscribedPolygon) -> float:
    """Relative residual of the law-of-cosines step at the last corner.

    For the last three vertices P, Q, E (E the right diameter endpoint),
    Thales' theorem turns the cosine at Q into a ratio of chords from
    the first vertex:  |PE|^2 = |PQ|^2 + |QE|^2 + 2|PQ||QE|·|A1P|/|A1E|.
    Needs at least 4 vertices.
    """
    n = poly.n
    if n < 4:
        raise IndexError("corner identity needs at least 4 vertices")
    p, q, e = n - 3, n - 2, n - 1
    pq = diagonal(poly, p, q)
    qe = diagonal(poly, q, e)
    pe = diagonal(poly, p, e)
    ap = diagonal(poly, 0, p)
    ae = diagonal(poly, 0, e)
    lhs = pe * pe
    if lhs == 0.0:
        return 0.0
    rhs = pq * pq + qe * qe + 2.0 * pq * qe * ap / ae
    return abs(lhs - rhs) / lhs
