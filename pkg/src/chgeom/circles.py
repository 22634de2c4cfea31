"""Chains (C-circles) and R-circles on the boundary sphere.

A chain is the boundary of a complex geodesic: through infinity it is a
vertical line of the Heisenberg chart, and every chain is the image of
the canonical one (vertical axis plus infinity) under a Moebius map.  An
R-circle is the boundary of a totally real plane; the canonical one is
the horizontal first-axis line plus infinity.  Circles are stored as a
Moebius map carrying the canonical model onto them, with witness points.

Membership is decided in the projective model: a chain is the null cone
of a complex 2-plane, an R-circle the null cone of a phase times a real
3-space, so both residuals are scale-free and need no chart branches.

The constructions here realize the incidence structure: the unique chain
through two points, the unique R-circle through a chain point and an
outside point that meets the chain again, the projection ``mu`` onto a
chain, the induced fixed-point-free involution ``eta`` of a chain, the
reflection across a chain with its conjugate poles, and spheres between
two points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    BoundaryPoint,
    GeometryError,
    dist,
    dist_w,
    gauge,
    harmonicity_residual,
    heis_inv,
    infinity,
    point,
    same_point,
)
from .projective import (
    MoebiusMap,
    axis_reflection,
    lift,
    make_dilation,
    make_inversion,
    make_rotation,
    make_translation,
)

__all__ = [
    "CCircle",
    "RCircle",
    "Sphere",
    "MEMBERSHIP_TOL",
    "normalize_to_infinity",
    "chain_chart",
    "ccircle_through",
    "rcircle_through_hitting",
    "mu",
    "eta",
    "conjugate_pole",
    "reflection_in_ccircle",
    "sphere_between",
    "sphere_contains",
    "circle_pointset_residual",
    "unitary_with_first_column",
]

# Membership tolerance for points constructed to lie on a circle, after
# the configuration is normalized to unit scale; inversion amplifies
# error near poles, which is why this is looser than machine epsilon.
MEMBERSHIP_TOL = 1e-8

# Points with membership residual above this are safely off the circle.
OFF_CIRCLE_MARGIN = 1e-6

_DEFAULT_PARAMS = (0.0, 1.0, -1.0, 0.5, 2.0, -2.0, math.inf)


@dataclass(frozen=True)
class CCircle:
    """A chain, as the image of the vertical axis + infinity under ``map``."""

    map: MoebiusMap
    span: tuple

    @property
    def k(self) -> int:
        return self.map.k

    def point_at(self, tau: float) -> BoundaryPoint:
        """Image of the canonical chain point (0, tau); tau = inf allowed."""
        if math.isinf(tau):
            return self.map(infinity(self.k))
        return self.map(point(np.zeros(self.k - 1), tau))

    def sample_points(self, n: int, rng=None) -> list:
        if rng is None:
            taus = list(_DEFAULT_PARAMS)[:n]
            while len(taus) < n:
                taus.append(0.37 * (len(taus) - 2))
        else:
            taus = np.tan(rng.uniform(-0.47 * math.pi, 0.47 * math.pi, size=n)) * 2.0
        return [self.point_at(float(t)) for t in taus]

    def _plane_basis(self) -> np.ndarray:
        Q = getattr(self, "_q_cache", None)
        if Q is None:
            M = self.map.g[:, [0, self.k]]
            Q, _ = np.linalg.qr(M)
            object.__setattr__(self, "_q_cache", Q)
        return Q

    def membership_residual(self, p: BoundaryPoint) -> float:
        """Squared distance of the unit null lift from the chain's complex 2-plane.

        Quadratic in the transverse displacement, so machine-exact
        constructions score near 1e-16 while genuinely off-circle points
        score far above the membership tolerance.
        """
        Q = self._plane_basis()
        X = lift(p)
        return float(np.linalg.norm(X - Q @ (Q.conj().T @ X)) ** 2)

    def contains(self, p: BoundaryPoint, tol: float = MEMBERSHIP_TOL) -> bool:
        return self.membership_residual(p) <= tol


@dataclass(frozen=True)
class RCircle:
    """An R-circle, as the image of the horizontal first axis + infinity."""

    map: MoebiusMap
    witnesses: tuple

    @property
    def k(self) -> int:
        return self.map.k

    def point_at(self, s: float) -> BoundaryPoint:
        if math.isinf(s):
            return self.map(infinity(self.k))
        z = np.zeros(self.k - 1, dtype=complex)
        z[0] = s
        return self.map(point(z, 0.0))

    def sample_points(self, n: int, rng=None) -> list:
        if rng is None:
            ss = list(_DEFAULT_PARAMS)[:n]
            while len(ss) < n:
                ss.append(0.41 * (len(ss) - 2))
        else:
            ss = np.tan(rng.uniform(-0.47 * math.pi, 0.47 * math.pi, size=n)) * 2.0
        return [self.point_at(float(s)) for s in ss]

    def membership_residual(self, p: BoundaryPoint) -> float:
        """Squared deviation of the pulled-back lift from phase times a real vector.

        The canonical circle is the null cone of the real span of
        (e_0, e_1, e_k); the residual combines the off-span components
        with the best-phase imaginary part inside the span.  Reported
        squared (quadratic in the transverse displacement): the phase
        minimum is a difference of order-one terms whose square root
        would bottom out at sqrt(eps), above the membership tolerance.
        """
        k = self.k
        ginv = getattr(self, "_ginv_cache", None)
        if ginv is None:
            ginv = self.map.inverse().g
            object.__setattr__(self, "_ginv_cache", ginv)
        Y = ginv @ lift(p)
        Y = Y / np.linalg.norm(Y)
        tail = Y[2:k]
        v = np.array([Y[0], Y[1], Y[k]])
        # min over phases of || Im(e^{-i a} v) ||^2 = (|v|^2 - |v.v|) / 2
        phase_part = 0.5 * (float(np.sum(np.abs(v) ** 2)) - abs(np.sum(v * v)))
        return float(np.sum(np.abs(tail) ** 2)) + max(phase_part, 0.0)

    def contains(self, p: BoundaryPoint, tol: float = MEMBERSHIP_TOL) -> bool:
        return self.membership_residual(p) <= tol


# ---------------------------------------------------------------------------
# Chart normalizations
# ---------------------------------------------------------------------------

def normalize_to_infinity(p: BoundaryPoint) -> MoebiusMap:
    """A Moebius map sending ``p`` to infinity.

    Identity if p is already infinite, otherwise the gauge inversion
    after translating p to the origin.
    """
    if p.infinite:
        return MoebiusMap.identity(p.k)
    q = heis_inv(p)
    return make_inversion(p.k) @ make_translation(q.z, q.t)


def _chain_point_away_from(F: CCircle, avoid: BoundaryPoint) -> BoundaryPoint:
    best, best_d = None, -1.0
    for tau in (math.inf, 0.0, 1.0, -1.0, 3.0):
        q = F.point_at(tau)
        d = dist(q, avoid)
        d = d if math.isfinite(d) else 1e30
        if d > best_d:
            best, best_d = q, d
    if best_d <= 0.0:
        raise GeometryError("degenerate chain")
    return best


def chain_chart(F: CCircle, omega: BoundaryPoint, o: BoundaryPoint | None = None) -> MoebiusMap:
    """Chart sending omega to infinity and F to the vertical axis.

    With ``o`` given (a point of F), o goes to the origin; otherwise the
    axis position is fixed by an arbitrary second point of F.
    """
    if not F.contains(omega):
        raise GeometryError("omega must lie on the chain")
    n = normalize_to_infinity(omega)
    if o is None:
        o = _chain_point_away_from(F, omega)
    elif not F.contains(o):
        raise GeometryError("o must lie on the chain")
    o1 = n(o)
    if o1.infinite:
        raise GeometryError("chart anchor collides with omega")
    return make_translation(*_pair(heis_inv(o1))) @ n


def _pair(p: BoundaryPoint):
    return p.z, p.t


# ---------------------------------------------------------------------------
# Existence constructions
# ---------------------------------------------------------------------------

def ccircle_through(p: BoundaryPoint, q: BoundaryPoint) -> CCircle:
    """The unique chain through two distinct points."""
    if same_point(p, q, tol=1e-12):
        raise GeometryError("a chain needs two distinct points")
    n = normalize_to_infinity(p)
    q1 = n(q)
    if q1.infinite:
        raise GeometryError("points are not distinguishable in the chart")
    m = n.inverse() @ make_translation(q1.z, q1.t)
    return CCircle(map=m, span=(p, q))


def unitary_with_first_column(w: np.ndarray) -> np.ndarray:
    """A unitary matrix whose first column is the unit vector ``w``."""
    m = w.shape[0]
    A = np.eye(m, dtype=complex)
    A[:, 0] = w
    # Replace the standard basis column most parallel to w to keep rank.
    j = int(np.argmax(np.abs(w)))
    if j != 0:
        A[:, j] = np.eye(m, dtype=complex)[:, 0]
    Q, _ = np.linalg.qr(A)
    lam = complex(np.vdot(w, Q[:, 0]))
    Q[:, 0] = Q[:, 0] * np.conj(lam) / abs(lam)
    return Q


def _hit_chart(F: CCircle, omega: BoundaryPoint, u: BoundaryPoint):
    k = F.k
    if k < 2:
        raise GeometryError("R-circles need complex dimension k >= 2")
    if not F.contains(omega):
        raise GeometryError("omega must lie on the chain")
    if F.membership_residual(u) <= OFF_CIRCLE_MARGIN:
        raise GeometryError("u must lie off the chain")
    n = chain_chart(F, omega)
    u1 = n(u)
    if np.linalg.norm(u1.z) <= 1e-14:
        raise GeometryError("u projects onto omega; configuration is degenerate")
    # the chart axis sits at z = 0, so the horizontal line through u1
    # toward the axis lands on the fiber coordinate (0, t_u)
    return n, u1, point(np.zeros(k - 1), u1.t)


def _chain_hit(F: CCircle, omega: BoundaryPoint, u: BoundaryPoint) -> BoundaryPoint:
    n, _, hit1 = _hit_chart(F, omega, u)
    return n.inverse()(hit1)


def _rcircle_and_hit(F: CCircle, omega: BoundaryPoint, u: BoundaryPoint):
    k = F.k
    n, u1, hit1 = _hit_chart(F, omega, u)
    zu, tu = u1.z, u1.t
    w = -zu
    nw = float(np.linalg.norm(w))
    U = unitary_with_first_column(w / nw)
    line = make_translation(zu, tu) @ make_rotation(U) @ make_dilation(nw, k)
    ninv = n.inverse()
    hit = ninv(hit1)
    circ = RCircle(map=ninv @ line, witnesses=(omega, u, hit))
    return circ, hit


def rcircle_through_hitting(F: CCircle, omega: BoundaryPoint, u: BoundaryPoint) -> RCircle:
    """The unique R-circle through omega (on F) and u (off F) meeting F again.

    In the chart where omega is infinite and F is the vertical axis this
    is the horizontal line s -> (z_u + s(z_F - z_u), t_u + 2 s Im<z_u, z_F - z_u>).
    """
    circ, _ = _rcircle_and_hit(F, omega, u)
    return circ


def mu(F: CCircle, omega: BoundaryPoint, u: BoundaryPoint) -> BoundaryPoint:
    """Retraction of the boundary onto the chain F determined by omega.

    Identity on F; otherwise the second intersection with F of the
    R-circle through omega and u that meets F.
    """
    if F.contains(u):
        return u
    return _chain_hit(F, omega, u)


def eta(F: CCircle, u: BoundaryPoint, omega: BoundaryPoint) -> BoundaryPoint:
    """The involution of F induced by the outside point u: eta_u(omega) = mu(u).

    Fixed-point free on F, and Moebius as a map of F.
    """
    if F.membership_residual(u) <= OFF_CIRCLE_MARGIN:
        raise GeometryError("u must lie off the chain")
    return _chain_hit(F, omega, u)


def reflection_in_ccircle(F: CCircle) -> MoebiusMap:
    """The reflection of the boundary whose fixed point set is the chain F.

    Conjugate of the chart reflection (z, t) -> (-z, t); an involution
    that maps every R-circle meeting F at two points onto itself.
    Cached per chain.
    """
    phi = getattr(F, "_refl_cache", None)
    if phi is None:
        phi = F.map @ axis_reflection(F.k) @ F.map.inverse()
        object.__setattr__(F, "_refl_cache", phi)
    return phi


def conjugate_pole(F: CCircle, u: BoundaryPoint) -> BoundaryPoint:
    """The second pole v paired with u across the chain F.

    For every x on F the tuple (x, u, eta_u(x), v) is harmonic and lies
    on one R-circle; v is the image of u under the reflection across F.
    """
    if F.membership_residual(u) <= OFF_CIRCLE_MARGIN:
        raise GeometryError("conjugate pole degenerates for points on the chain")
    return reflection_in_ccircle(F)(u)


# ---------------------------------------------------------------------------
# Spheres between two points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Sphere:
    """Sphere between two poles: the harmonicity class of x relative to them.

    In the chart where omega_prime is infinite this is the metric sphere
    centered at omega through x; sending any of its points to infinity
    turns it into the bisector between the poles.
    """

    omega: BoundaryPoint
    omega_prime: BoundaryPoint
    x: BoundaryPoint

    @property
    def k(self) -> int:
        return self.x.k

    def membership_residual(self, p: BoundaryPoint) -> float:
        return harmonicity_residual(self.omega, self.x, self.omega_prime, p)

    def contains(self, p: BoundaryPoint, tol: float = MEMBERSHIP_TOL) -> bool:
        return self.membership_residual(p) <= tol

    def radius(self) -> float:
        """Radius of the sphere in the metric sending omega_prime to infinity."""
        return dist_w(self.omega_prime, self.omega, self.x)

    def sample_points(self, n: int, rng) -> list:
        """Points on the sphere, constructed in the centered chart."""
        c = normalize_to_infinity(self.omega_prime)
        w0 = c(self.omega)
        c = make_translation(*_pair(heis_inv(w0))) @ c
        r = gauge(c(self.x))
        cinv = c.inverse()
        out = []
        m = self.k - 1
        for _ in range(n):
            phi = rng.uniform(-0.5 * math.pi, 0.5 * math.pi)
            t = r * r * math.sin(phi)
            zn = math.sqrt(max(math.cos(phi), 0.0)) * r
            if m:
                direction = rng.standard_normal(m) + 1j * rng.standard_normal(m)
                direction /= np.linalg.norm(direction)
                z = zn * direction
            else:
                z = np.zeros(0, dtype=complex)
                t = r * r * math.copysign(1.0, math.sin(phi) if phi else 1.0)
            out.append(cinv(point(z, t)))
        return out


def sphere_between(omega: BoundaryPoint, omega_prime: BoundaryPoint,
                   x: BoundaryPoint) -> Sphere:
    """The sphere between two distinct points through a third one."""
    if same_point(omega, omega_prime, tol=1e-12):
        raise GeometryError("sphere poles must be distinct")
    if same_point(x, omega, tol=1e-12) or same_point(x, omega_prime, tol=1e-12):
        raise GeometryError("the anchor point must differ from both poles")
    return Sphere(omega=omega, omega_prime=omega_prime, x=x)


def sphere_contains(sphere: Sphere, p: BoundaryPoint,
                    tol: float = MEMBERSHIP_TOL) -> bool:
    """Membership of p in a sphere handle; function form of Sphere.contains."""
    return sphere.contains(p, tol)


# ---------------------------------------------------------------------------
# Point-set comparison
# ---------------------------------------------------------------------------

def circle_pointset_residual(a, b, n: int = 3) -> float:
    """Symmetric membership residual between two circles of the same kind.

    Zero (within membership tolerance) exactly when the circles agree as
    point sets; a Moebius circle is pinned by three of its points.
    """
    worst = 0.0
    for p in a.sample_points(n):
        worst = max(worst, b.membership_residual(p))
    for q in b.sample_points(n):
        worst = max(worst, a.membership_residual(q))
    return worst
