"""The canonical foliation by chains through a distinguished point.

Fixing a boundary point omega, the chains through it fibrate the rest of
the boundary; the quotient (the base) carries a metric in which the
projection is 1-Lipschitz and restricts to an isometry on every R-line.
With omega at infinity the fibers are the vertical lines of the chart
and the base is the horizontal coordinate space C^(k-1) with the
Euclidean metric; all other omega are handled by conjugation.

Besides the projection and the base distance, this module provides
Busemann functions of R-lines (closed form and the defining limit),
vertical shifts, pure homotheties, and the holonomy of horizontal lifts:
lifting the sides of a closed base polygon returns to the starting fiber
shifted vertically by minus four times the enclosed signed area.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    BoundaryPoint,
    GeometryError,
    dist_w,
    heis_inv,
    point,
    same_point,
)
from .circles import CCircle, RCircle, _chain_point_away_from, mu
from .projective import (
    MoebiusMap,
    make_dilation,
    make_inversion,
    make_translation,
)

__all__ = [
    "Polygon",
    "project_base",
    "base_dist",
    "busemann",
    "vertical_shift",
    "pure_homothety",
    "horizontal_lift",
    "tau",
    "signed_area",
]

_LIMIT_SCALES = [2.0 ** j for j in range(4, 21)]


def _translation_to_origin(p: BoundaryPoint) -> MoebiusMap:
    q = heis_inv(p)
    return make_translation(q.z, q.t)


def _normalizer(omega: BoundaryPoint) -> MoebiusMap:
    if omega.infinite:
        return MoebiusMap.identity(omega.k)
    from .circles import normalize_to_infinity

    return normalize_to_infinity(omega)


def _chart_scale(omega: BoundaryPoint, n: MoebiusMap) -> float:
    """Factor between the inverted metric at omega and chart gauge distances."""
    if omega.infinite:
        return 1.0
    k = omega.k
    ninv = n.inverse()
    p0 = ninv(point(np.zeros(k - 1), 0.0))
    p1 = ninv(point(np.zeros(k - 1), 1.0))
    return dist_w(omega, p0, p1)


def project_base(omega: BoundaryPoint, x: BoundaryPoint) -> np.ndarray:
    """Base coordinate of x under the fibration by chains through omega.

    Returned as a complex vector scaled so that distances between base
    points equal the base metric; two points share a fiber exactly when
    their projections agree.
    """
    if same_point(x, omega, tol=1e-14):
        raise GeometryError("the distinguished point has no base coordinate")
    n = _normalizer(omega)
    x1 = n(x)
    if x1.infinite:
        raise GeometryError("x is indistinguishable from omega in the chart")
    return _chart_scale(omega, n) * x1.z


def base_dist(omega: BoundaryPoint, F: CCircle, Fp: CCircle) -> float:
    """Distance between two fibers: |x' mu_F(x')| for any x' on the second.

    Well defined (independent of x'), and equal to the Euclidean distance
    of the fibers' base coordinates.
    """
    for fiber in (F, Fp):
        if not fiber.contains(omega):
            raise GeometryError("base distance needs fibers through omega")
    xp = _chain_point_away_from(Fp, omega)
    return dist_w(omega, xp, mu(F, omega, xp))


# ---------------------------------------------------------------------------
# Busemann functions
# ---------------------------------------------------------------------------

def _rline_chart(omega: BoundaryPoint, sigma: RCircle, o: BoundaryPoint) -> MoebiusMap:
    k = sigma.k
    if not sigma.contains(omega):
        raise GeometryError("the R-circle must pass through omega")
    if not sigma.contains(o):
        raise GeometryError("the basepoint must lie on the R-circle")
    if same_point(o, omega, tol=1e-12):
        raise GeometryError("basepoint and omega coincide")
    minv = sigma.map.inverse()
    om1 = minv(omega)
    if om1.infinite:
        c = minv
    else:
        c = (make_inversion(k) @ _translation_to_origin(om1)) @ minv
    o1 = c(o)
    if o1.infinite:
        raise GeometryError("degenerate chart for the R-line")
    return _translation_to_origin(o1) @ c


def busemann(omega: BoundaryPoint, sigma: RCircle, o: BoundaryPoint,
             x: BoundaryPoint, method: str = "closed_form") -> float:
    """Busemann function of the R-line sigma in the space with omega remote.

    Normalized to vanish at ``o`` and to decrease along the direction of
    increasing canonical parameter of ``sigma``; on the line itself it is
    minus the arclength from ``o``.  ``method="limit"`` evaluates the
    defining limit of distance differences on a doubling scale sequence
    with one Richardson extrapolation step.
    """
    if same_point(x, omega, tol=1e-14):
        raise GeometryError("the Busemann function is defined away from omega")
    k = sigma.k
    g = _rline_chart(omega, sigma, o)
    so = sigma.map.inverse()(o).z[0].real
    ahead = sigma.point_at(so + 1.0)
    a1 = g(ahead)
    cval = a1.z[0].real
    if abs(cval) < 1e-13:
        raise GeometryError("could not orient the R-line chart")
    sgn = math.copysign(1.0, cval)
    lam = dist_w(omega, o, ahead) / abs(cval)

    x1 = g(x)
    if x1.infinite:
        raise GeometryError("x has no finite chart image")
    if method == "closed_form":
        return -sgn * x1.z[0].real * lam
    if method != "limit":
        raise GeometryError(f"unknown Busemann method {method!r}")

    # distance differences evaluated in the chart, where the ray points
    # stay exact coordinates; the chart factor lam converts back
    from .core import dist as _dist

    e1 = np.zeros(k - 1, dtype=complex)
    e1[0] = 1.0
    vals = []
    for s in _LIMIT_SCALES:
        ps1 = point(sgn * s * e1, 0.0)
        vals.append(lam * (_dist(x1, ps1) - s))
    # first-order Richardson step on the doubling sequence
    return 2.0 * vals[-1] - vals[-2]


# ---------------------------------------------------------------------------
# Automorphisms adapted to the foliation
# ---------------------------------------------------------------------------

def vertical_shift(omega: BoundaryPoint, s: float) -> MoebiusMap:
    """Isometry shifting every fiber by displacement sqrt(|s|).

    In the chart with omega at infinity it is (z, t) -> (z, t + s).
    """
    k = omega.k
    if omega.infinite:
        return make_translation(np.zeros(k - 1), float(s))
    n = _normalizer(omega)
    lam = _chart_scale(omega, n)
    inner = make_translation(np.zeros(k - 1), float(s) / (lam * lam))
    return n.inverse() @ inner @ n


def pure_homothety(o: BoundaryPoint, omega: BoundaryPoint, lam: float) -> MoebiusMap:
    """Homothety of coefficient lam fixing o and omega.

    Scales the metric with omega remote by lam and preserves every
    R-line through o.
    """
    if not lam > 0:
        raise GeometryError(f"homothety coefficient must be positive, got {lam}")
    if same_point(o, omega, tol=1e-12):
        raise GeometryError("homothety endpoints must be distinct")
    n = _normalizer(omega)
    o1 = n(o)
    if o1.infinite:
        raise GeometryError("degenerate homothety chart")
    c = _translation_to_origin(o1) @ n
    return c.inverse() @ make_dilation(float(lam), o.k) @ c


# ---------------------------------------------------------------------------
# Horizontal lifts of base polygons
# ---------------------------------------------------------------------------

def horizontal_lift(b1: np.ndarray, b2: np.ndarray, t: float) -> float:
    """Endpoint height of the R-line segment over [b1, b2] starting at height t.

    The horizontal line through (b1, t) toward b2 reaches the fiber over
    b2 at t + 2 Im<b1, b2>.
    """
    b1 = np.atleast_1d(np.asarray(b1, dtype=complex))
    b2 = np.atleast_1d(np.asarray(b2, dtype=complex))
    return float(t) + 2.0 * complex(np.sum(b1 * np.conj(b2))).imag


@dataclass(frozen=True)
class Polygon:
    """Closed oriented polygon in the base, with a marked starting vertex.

    Closure is implicit (the last vertex connects back to the first);
    consecutive vertices must be distinct.  Two vertices are allowed so
    that degenerate forth-and-back loops can be folded.
    """

    vertices: np.ndarray
    base_index: int = 0

    def __post_init__(self) -> None:
        v = np.atleast_2d(np.asarray(self.vertices, dtype=complex))
        object.__setattr__(self, "vertices", v)
        m = v.shape[0]
        if m < 2:
            raise GeometryError("a polygon needs at least two vertices")
        for i in range(m):
            if np.linalg.norm(v[i] - v[(i + 1) % m]) == 0.0:
                raise GeometryError("consecutive polygon vertices must be distinct")
        if not 0 <= self.base_index < m:
            raise GeometryError("base index out of range")

    def ordered(self) -> np.ndarray:
        v = self.vertices
        return np.roll(v, -self.base_index, axis=0)

    def scaled(self, lam: float) -> "Polygon":
        return Polygon(vertices=lam * self.vertices, base_index=self.base_index)


def tau(P: Polygon, t0: float) -> tuple:
    """Fold the horizontal lift around the polygon; returns (t_end, displacement).

    The height change t_end - t0 does not depend on t0 and equals
    -4 times the signed area for polygons inside a complex coordinate
    line of the base; the resulting map of the starting fiber is the
    vertical shift by that change.
    """
    v = P.ordered()
    t = float(t0)
    for i in range(v.shape[0]):
        t = horizontal_lift(v[i], v[(i + 1) % v.shape[0]], t)
    return t, math.sqrt(abs(t - float(t0)))


def signed_area(P: Polygon) -> float:
    """Shoelace area of a polygon lying in the first complex coordinate line."""
    v = P.vertices
    if v.shape[1] == 0:
        raise GeometryError("the base of a 1-dimensional boundary is a point")
    if v.shape[1] > 1 and float(np.max(np.abs(v[:, 1:]))) > 1e-12 * max(
        1.0, float(np.max(np.abs(v)))
    ):
        raise GeometryError("signed area needs a polygon in the first coordinate line")
    w = v[:, 0]
    x, y = w.real, w.imag
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    return 0.5 * float(np.sum(x * yn - xn * y))
