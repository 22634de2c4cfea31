"""Heisenberg-chart model of the ideal boundary of complex hyperbolic space.

The boundary sphere of CH^k with one point removed is identified with the
Heisenberg group C^{k-1} x R.  A point carries a horizontal coordinate
``z`` (complex vector of dimension k-1) and a vertical coordinate ``t``;
the removed point is represented by a first-class infinity variant.  The
Koranyi gauge ``(|z|^4 + t^2)^(1/4)`` induces a left-invariant metric on
the group, and adding the infinity point with the usual conventions gives
an extended metric space whose Moebius structure is the object of study.

This module provides the gauge, the extended metric, its inversions
(moving the infinitely remote point), cross-ratio triples of admissible
quadruples, harmonicity, and the Ptolemy defect.  Everything here is a
pure function of immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "GeometryError",
    "SpaceConfig",
    "BoundaryPoint",
    "CrossRatioTriple",
    "point",
    "origin",
    "infinity",
    "heis_mul",
    "heis_inv",
    "gauge",
    "dist",
    "dist_batch",
    "dist_w",
    "pairing",
    "same_point",
    "chordal",
    "chordal_sq",
    "is_admissible",
    "crt",
    "harmonicity_residual",
    "is_harmonic",
    "ptolemy_defect",
    "ptolemy_defect_squared",
]

DEFAULT_TOL = 1e-9

# Points closer than this (in gauge distance) count as equal when checking
# admissibility of quadruples; sampled configurations keep separations at
# least three orders of magnitude above it.
COINCIDENCE_TOL = 1e-12


class GeometryError(ValueError):
    """Raised when an operation is applied outside its geometric domain."""


@dataclass(frozen=True)
class SpaceConfig:
    """Ambient parameters: complex dimension k, relative tolerance, seed.

    The boundary of CH^k has real dimension 2k-1; the horizontal chart
    coordinate lives in C^(k-1), so k = 1 is the degenerate case with no
    horizontal directions at all.
    """

    k: int
    tol_rel: float = DEFAULT_TOL
    seed: int = 0

    def __post_init__(self) -> None:
        if self.k < 1:
            raise GeometryError(f"complex dimension must be >= 1, got {self.k}")
        if not self.tol_rel > 0:
            raise GeometryError(f"tolerance must be positive, got {self.tol_rel}")

    @property
    def horizontal_dim(self) -> int:
        return self.k - 1


@dataclass(frozen=True, eq=False)
class BoundaryPoint:
    """A boundary point: finite Heisenberg coordinates (z, t) or infinity.

    ``z`` always has shape (k-1,), also for the infinite point, so every
    point knows the ambient dimension.  Use :func:`same_point` for
    tolerance-aware comparison; componentwise equality is meaningless
    under the gauge metric.
    """

    z: np.ndarray
    t: float
    infinite: bool = False

    @property
    def k(self) -> int:
        return self.z.shape[0] + 1

    def __repr__(self) -> str:
        if self.infinite:
            return f"BoundaryPoint(inf, k={self.k})"
        zs = np.array2string(self.z, precision=6, suppress_small=True)
        return f"BoundaryPoint(z={zs}, t={self.t:.6g})"


def point(z, t: float) -> BoundaryPoint:
    """Finite boundary point with horizontal coordinate ``z`` and height ``t``.

    ``z`` may be a scalar (k = 2), a sequence, or an empty sequence (k = 1).
    """
    z = np.atleast_1d(np.asarray(z, dtype=complex)).reshape(-1)
    t = float(t)
    if not (np.all(np.isfinite(z.view(float))) and math.isfinite(t)):
        raise GeometryError("finite points need finite coordinates")
    return BoundaryPoint(z=z, t=t)


def origin(k: int) -> BoundaryPoint:
    return BoundaryPoint(z=np.zeros(k - 1, dtype=complex), t=0.0)


def infinity(k: int) -> BoundaryPoint:
    return BoundaryPoint(z=np.zeros(k - 1, dtype=complex), t=0.0, infinite=True)


# ---------------------------------------------------------------------------
# Heisenberg group operations
# ---------------------------------------------------------------------------

def _herm(z: np.ndarray, w: np.ndarray) -> complex:
    # <z, w> = sum z_i conj(w_i) = conj(vdot(z, w))
    return complex(np.vdot(z, w)).conjugate()


def heis_mul(p: BoundaryPoint, q: BoundaryPoint) -> BoundaryPoint:
    """Heisenberg product (z,t)(z',t') = (z+z', t+t'+2 Im<z,z'>)."""
    if p.infinite or q.infinite:
        raise GeometryError("group product is defined for finite points only")
    return BoundaryPoint(z=p.z + q.z, t=p.t + q.t + 2.0 * _herm(p.z, q.z).imag)


def heis_inv(p: BoundaryPoint) -> BoundaryPoint:
    if p.infinite:
        raise GeometryError("group inverse is defined for finite points only")
    return BoundaryPoint(z=-p.z, t=-p.t)


def gauge(p: BoundaryPoint) -> float:
    """Koranyi gauge (|z|^4 + t^2)^(1/4); zero exactly at the origin."""
    if p.infinite:
        raise GeometryError("gauge of the infinite point is undefined")
    zz = complex(np.vdot(p.z, p.z)).real
    return (zz * zz + p.t * p.t) ** 0.25


def dist(p: BoundaryPoint, q: BoundaryPoint) -> float:
    """Left-invariant gauge distance, with d(p, inf) = inf and d(inf, inf) = 0."""
    if p.infinite and q.infinite:
        return 0.0
    if p.infinite or q.infinite:
        return math.inf
    dz = q.z - p.z
    dt = q.t - p.t + 2.0 * complex(np.vdot(p.z, q.z)).imag
    zz = complex(np.vdot(dz, dz)).real
    return (zz * zz + dt * dt) ** 0.25


def dist_batch(Z1, T1, Z2, T2):
    """Gauge distance for batched finite chart coordinates, broadcasting.

    ``Z*`` hold horizontal coordinates along the last axis, ``T*`` the
    heights; agrees with :func:`dist` entrywise.
    """
    dz = Z2 - Z1
    cross = np.sum(Z1 * np.conj(Z2), axis=-1).imag
    dt = T2 - T1 - 2.0 * cross
    zz = np.sum((dz * np.conj(dz)).real, axis=-1)
    return (zz * zz + dt * dt) ** 0.25


def dist_w(omega: BoundaryPoint, p: BoundaryPoint, q: BoundaryPoint) -> float:
    """Metric inversion of :func:`dist` with respect to ``omega``.

    d_w(p, q) = d(p, q) / (d(p, w) d(q, w)); for w at infinity this is the
    plain gauge distance.  The point ``omega`` becomes infinitely remote:
    d_w(p, omega) = inf for p != omega, and the old infinity lands at
    distance 1/d(q, omega) from finite q.
    """
    if omega.infinite:
        return dist(p, q)
    p_is_w = same_point(p, omega)
    q_is_w = same_point(q, omega)
    if p_is_w and q_is_w:
        return 0.0
    if p_is_w or q_is_w:
        return math.inf
    if p.infinite and q.infinite:
        return 0.0
    if p.infinite:
        return 1.0 / dist(q, omega)
    if q.infinite:
        return 1.0 / dist(p, omega)
    return dist(p, q) / (dist(p, omega) * dist(q, omega))


def pairing(p: BoundaryPoint, q: BoundaryPoint) -> float:
    """Magnitude of the Hermitian pairing of affine null lifts of p and q.

    With finite points lifted to null vectors normalized against the lift
    of infinity, the pairing magnitude equals dist(p,q)^2 / 2; pairs with
    exactly one infinite member give 1, and the self-pairing of infinity
    vanishes.  Cross-ratio triples built from these values need no special
    case for infinity.
    """
    if p.infinite and q.infinite:
        return 0.0
    if p.infinite or q.infinite:
        return 1.0
    d = dist(p, q)
    return 0.5 * d * d


def same_point(p: BoundaryPoint, q: BoundaryPoint, tol: float = COINCIDENCE_TOL) -> bool:
    """Equality up to tolerance in the gauge metric."""
    if p.infinite or q.infinite:
        return p.infinite and q.infinite
    return dist(p, q) <= tol


def chordal(p: BoundaryPoint, q: BoundaryPoint) -> float:
    """Bounded comparison metric d(p,q) / sqrt((1+g(p)^2)(1+g(q)^2)).

    Extends continuously to infinity (where the value is
    1/sqrt(1+g^2) against finite points) and stays scale free.
    """
    if p.infinite and q.infinite:
        return 0.0
    if p.infinite or q.infinite:
        other = q if p.infinite else p
        return 1.0 / math.sqrt(1.0 + gauge(other) ** 2)
    return dist(p, q) / math.sqrt((1.0 + gauge(p) ** 2) * (1.0 + gauge(q) ** 2))


def chordal_sq(p: BoundaryPoint, q: BoundaryPoint) -> float:
    """Squared chordal gap, the canonical point-coincidence residual.

    The gauge distance is a fourth root, so machine-size coordinate
    perturbations already read as ~1e-8 in plain distance; the squared
    gap is first order in coordinate error and separates genuinely
    distinct points at order one.
    """
    return chordal(p, q) ** 2


# ---------------------------------------------------------------------------
# Cross-ratio triples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CrossRatioTriple:
    """Projective triple of nonnegative reals, stored with max component 1."""

    a: float
    b: float
    c: float

    @classmethod
    def from_components(cls, a: float, b: float, c: float) -> "CrossRatioTriple":
        m = max(a, b, c)
        if not m > 0 or not math.isfinite(m):
            raise GeometryError(f"degenerate cross-ratio triple ({a}, {b}, {c})")
        return cls(a / m, b / m, c / m)

    def components(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c])

    def max_difference(self, other: "CrossRatioTriple") -> float:
        return float(np.max(np.abs(self.components() - other.components())))

    def isclose(self, other: "CrossRatioTriple", tol: float = DEFAULT_TOL) -> bool:
        return self.max_difference(other) <= tol


def is_admissible(points, tol: float = COINCIDENCE_TOL) -> bool:
    """True if no entry of the tuple occurs three or more times."""
    n = len(points)
    for i in range(n):
        copies = sum(1 for j in range(n) if same_point(points[i], points[j], tol))
        if copies >= 3:
            return False
    return True


def _require_admissible(points) -> None:
    if not is_admissible(points):
        raise GeometryError("quadruple is not admissible (an entry repeats 3+ times)")


def crt(x: BoundaryPoint, y: BoundaryPoint, z: BoundaryPoint,
        u: BoundaryPoint) -> CrossRatioTriple:
    """Cross-ratio triple (d(x,y)d(z,u) : d(x,z)d(y,u) : d(x,u)d(y,z)).

    Computed from null-lift pairings, so entries at infinity need no
    branch and the result does not depend on which metric of the Moebius
    structure is used.
    """
    _require_admissible((x, y, z, u))
    a = math.sqrt(pairing(x, y) * pairing(z, u))
    b = math.sqrt(pairing(x, z) * pairing(y, u))
    c = math.sqrt(pairing(x, u) * pairing(y, z))
    return CrossRatioTriple.from_components(a, b, c)


def harmonicity_residual(x: BoundaryPoint, z: BoundaryPoint, y: BoundaryPoint,
                         u: BoundaryPoint) -> float:
    """|first - third| of the normalized cross-ratio triple of (x,z,y,u).

    Vanishes exactly when d(x,z)d(y,u) = d(x,u)d(y,z), the harmonic
    position of the 4-tuple.
    """
    t = crt(x, z, y, u)
    return abs(t.a - t.c)


def is_harmonic(x: BoundaryPoint, z: BoundaryPoint, y: BoundaryPoint,
                u: BoundaryPoint, tol: float = DEFAULT_TOL) -> bool:
    return harmonicity_residual(x, z, y, u) <= tol


# ---------------------------------------------------------------------------
# Ptolemy defect
# ---------------------------------------------------------------------------

def _ptolemy_terms(x, y, z, u, power: float):
    pts = (x, y, z, u)
    n_inf = sum(1 for p in pts if p.infinite)
    if n_inf > 1:
        raise GeometryError("at most one entry of a Ptolemy quadruple may be infinite")
    if n_inf == 0:
        d = lambda p, q: dist(p, q) ** power
        return (d(x, z) * d(y, u), d(x, y) * d(z, u), d(x, u) * d(y, z))
    # One entry infinite: each product carries exactly one infinite factor,
    # which cancels between the three terms, leaving a triangle comparison
    # among the remaining points.
    d = lambda p, q: 1.0 if (p.infinite or q.infinite) else dist(p, q) ** power
    return (d(x, z) * d(y, u), d(x, y) * d(z, u), d(x, u) * d(y, z))


def ptolemy_defect(x: BoundaryPoint, y: BoundaryPoint, z: BoundaryPoint,
                   u: BoundaryPoint) -> float:
    """|xz||yu| - |xy||zu| - |xu||yz| in the gauge metric.

    Nonpositive on every admissible quadruple (Ptolemy inequality), zero
    on 4-tuples in cyclic order along a circle Moebius-equivalent to the
    extended real line.  With one entry at infinity the infinite factors
    cancel and the value is the corresponding triangle defect.
    """
    t1, t2, t3 = _ptolemy_terms(x, y, z, u, 1.0)
    return t1 - t2 - t3


def ptolemy_defect_squared(x: BoundaryPoint, y: BoundaryPoint, z: BoundaryPoint,
                           u: BoundaryPoint) -> float:
    """Defect of the squared-distance Ptolemy identity; zero on chains."""
    t1, t2, t3 = _ptolemy_terms(x, y, z, u, 2.0)
    return t1 - t2 - t3
