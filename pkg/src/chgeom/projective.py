"""Projective null-vector model of the boundary and its Moebius maps.

Points of the boundary sphere are null lines of a Hermitian form of
signature (k, 1) on C^(k+1).  The form is written with two isotropic
coordinate directions (indices 0 and k),

    <X, Y> = X_0 conj(Y_k) + X_k conj(Y_0) + sum_{1 <= i <= k-1} X_i conj(Y_i),

so both the infinite point (direction e_0) and the chart origin
(direction e_k) are coordinate axes and no construction needs to
special-case infinity.  Form-preserving matrices act on the boundary and
preserve all cross-ratio triples; the generators below realize the chart
automorphisms: Heisenberg translations, horizontal rotations, dilations
and the gauge inversion.

The chart embedding sends a finite point (z, t) to the null direction

    lift(z, t) ~ ((-|z|^2 + i t)/2, z, 1),

calibrated so that dist(p, q)^2 = 2 |<X_p, X_q>| for lifts normalized
against the lift of infinity.  The constant 2 is pinned by the vertical,
unit-horizontal and translated-horizontal anchor distances; see
``distance_pairing_constant``.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .core import (
    BoundaryPoint,
    GeometryError,
    dist,
    infinity,
    origin,
    point,
    CrossRatioTriple,
    is_admissible,
)



__all__ = [
    "NullVector",
    "MoebiusMap",
    "form_matrix",
    "herm",
    "lift",
    "drop",
    "apply",
    "make_translation",
    "make_rotation",
    "make_dilation",
    "make_inversion",
    "axis_reflection",
    "crt_projective",
    "distance_pairing_constant",
]

# A null vector is a plain complex ndarray of shape (k+1,), unit Euclidean
# norm by convention, considered up to complex scale.
NullVector = np.ndarray

# Form-preservation drift above this triggers renormalization on compose.
RENORM_THRESHOLD = 1e-8
NULL_TOL = 1e-6
# Last coordinates at roundoff level mark the direction of infinity.
INFINITY_SLICE_TOL = 1e-13
# A finite reading whose chart-rescaled null relation is violated worse
# than this is noise around the direction of infinity, not a point.
FINITE_CONSISTENCY_TOL = 1e-6


@lru_cache(maxsize=None)
def form_matrix(k: int) -> np.ndarray:
    """Matrix H of the signature-(k,1) Hermitian form, with H^2 = I."""
    H = np.zeros((k + 1, k + 1), dtype=complex)
    H[0, k] = 1.0
    H[k, 0] = 1.0
    for i in range(1, k):
        H[i, i] = 1.0
    H.setflags(write=False)
    return H


def herm(X: np.ndarray, Y: np.ndarray) -> complex:
    """Hermitian pairing <X, Y>, antilinear in the second argument."""
    k = X.shape[0] - 1
    middle = complex(np.sum(X[1:k] * np.conj(Y[1:k]))) if k > 1 else 0.0
    return X[0] * np.conj(Y[k]) + X[k] * np.conj(Y[0]) + middle


def _affine_lift(p: BoundaryPoint) -> np.ndarray:
    k = p.k
    X = np.zeros(k + 1, dtype=complex)
    if p.infinite:
        X[0] = 1.0
        return X
    zz = complex(np.vdot(p.z, p.z)).real
    X[0] = 0.5 * (-zz + 1j * p.t)
    X[1:k] = p.z
    X[k] = 1.0
    return X


def lift(p: BoundaryPoint) -> NullVector:
    """Unit-norm null vector representing ``p``; lift of infinity is e_0."""
    X = _affine_lift(p)
    return X / np.linalg.norm(X)


def drop(X: NullVector) -> BoundaryPoint:
    """Boundary point of a null direction; inverse of :func:`lift`.

    Raises for vectors that are not null within tolerance.  A direction
    is the infinite point when its last coordinate sits at roundoff
    level, or when reading it as finite contradicts the null relation
    Re(X_0/X_k) = -|z|^2/2 rescaled to the chart (a roundoff-size null
    defect explodes under division by a near-zero last coordinate, which
    is exactly the signature of a blurred image of infinity).
    """
    X = np.asarray(X, dtype=complex)
    k = X.shape[0] - 1
    norm = np.linalg.norm(X)
    if not norm > 0:
        raise GeometryError("zero vector does not define a boundary point")
    if abs(herm(X, X)) > NULL_TOL * norm * norm:
        raise GeometryError("vector is not null within tolerance")
    if abs(X[k]) <= INFINITY_SLICE_TOL * norm:
        return infinity(k)
    w = X[0] / X[k]
    z = X[1:k] / X[k]
    zz = complex(np.vdot(z, z)).real
    if abs(w.real + 0.5 * zz) > FINITE_CONSISTENCY_TOL * (1.0 + abs(w)):
        return infinity(k)
    # coordinates are finite by the checks above; skip point() validation
    return BoundaryPoint(z=z, t=2.0 * w.imag)


class MoebiusMap:
    """A form-preserving matrix acting on the boundary.

    Composition is ``@``; the inverse uses the form (g^-1 = H g* H) and is
    therefore as accurate as the form preservation of ``g`` itself.  The
    drift away from the form group grows only at roundoff rate per
    product, so compositions carry a product counter and re-measure the
    drift every few dozen factors instead of at every multiplication.
    """

    __slots__ = ("g", "muls")

    def __init__(self, g: np.ndarray, *, check: bool = True, muls: int = 0):
        g = np.asarray(g, dtype=complex)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise GeometryError("a Moebius map needs a square matrix")
        self.g = g
        self.muls = muls
        if check and self.form_residual() > 1e-6:
            raise GeometryError("matrix does not preserve the Hermitian form")

    @property
    def k(self) -> int:
        return self.g.shape[0] - 1

    @classmethod
    def identity(cls, k: int) -> "MoebiusMap":
        return cls(np.eye(k + 1, dtype=complex), check=False)

    def form_residual(self) -> float:
        """Deviation from form preservation, relative to the matrix scale.

        Form-preserving matrices can have large entries (high powers of
        dilations do), so the drift of g* H g from H is measured against
        the squared entry scale of g.
        """
        H = form_matrix(self.k)
        drift = float(np.max(np.abs(self.g.conj().T @ H @ self.g - H)))
        scale = max(1.0, float(np.max(np.abs(self.g))) ** 2)
        return drift / scale

    def renormalized(self) -> "MoebiusMap":
        """Project the matrix back onto the form-preserving group.

        Two Newton steps for the inverse square root of E = H g* H g
        reduce a drift of size eps to O(eps^4); valid only while the
        drift is small, which the compose threshold guarantees.
        """
        H = form_matrix(self.k)
        g = self.g
        I = np.eye(self.k + 1, dtype=complex)
        for _ in range(2):
            E = H @ g.conj().T @ H @ g
            if np.max(np.abs(E - I)) > 0.25:
                raise GeometryError("matrix is too far from the form group to project")
            g = g @ (1.5 * I - 0.5 * E)
        return MoebiusMap(g, check=False, muls=0)

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        out = MoebiusMap(self.g @ other.g, check=False,
                         muls=self.muls + other.muls + 1)
        if out.muls >= 48:
            if out.form_residual() > RENORM_THRESHOLD:
                out = out.renormalized()
            out.muls = 0
        return out

    def inverse(self) -> "MoebiusMap":
        H = form_matrix(self.k)
        return MoebiusMap(H @ self.g.conj().T @ H, check=False, muls=self.muls)

    def __call__(self, p: BoundaryPoint) -> BoundaryPoint:
        return drop(self.g @ lift(p))

    def acts_like(self, other: "MoebiusMap", tol: float = 1e-9) -> bool:
        """Projective equality decided by action on k+3 generic points.

        Compared in the squared chordal gap, which is first order in
        coordinate differences.
        """
        from .core import chordal_sq

        worst = 0.0
        for p in _generic_points(self.k):
            worst = max(worst, chordal_sq(self(p), other(p)))
        return worst <= tol

    def __repr__(self) -> str:
        return f"MoebiusMap(k={self.k}, form_residual={self.form_residual():.2e})"


def _generic_points(k: int):
    pts = [infinity(k), origin(k), point(np.zeros(k - 1), 1.0)]
    for i in range(k - 1):
        e = np.zeros(k - 1, dtype=complex)
        e[i] = 1.0
        pts.append(point(e, 0.0))
        pts.append(point((0.5 + 0.25j) * e, -1.0))
    return pts[: k + 3] if len(pts) >= k + 3 else pts


def apply(g: MoebiusMap, p: BoundaryPoint) -> BoundaryPoint:
    """Boundary action drop(g . lift(p))."""
    return g(p)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def make_translation(z0, t0: float) -> MoebiusMap:
    """Left Heisenberg translation by (z0, t0); fixes infinity."""
    z0 = np.atleast_1d(np.asarray(z0, dtype=complex)).reshape(-1)
    k = z0.shape[0] + 1
    zz = complex(np.vdot(z0, z0)).real
    g = np.eye(k + 1, dtype=complex)
    g[0, 1:k] = -np.conj(z0)
    g[0, k] = 0.5 * (-zz + 1j * float(t0))
    g[1:k, k] = z0
    return MoebiusMap(g, check=False)


def make_rotation(U) -> MoebiusMap:
    """Horizontal rotation (z, t) -> (U z, t) for unitary U of size k-1."""
    U = np.asarray(U, dtype=complex)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        raise GeometryError("rotation needs a square unitary matrix")
    m = U.shape[0]
    if m and np.max(np.abs(U.conj().T @ U - np.eye(m))) > 1e-10:
        raise GeometryError("rotation matrix is not unitary")
    g = np.eye(m + 2, dtype=complex)
    g[1 : m + 1, 1 : m + 1] = U
    return MoebiusMap(g, check=False)


def make_dilation(lam: float, k: int) -> MoebiusMap:
    """Dilation (z, t) -> (lam z, lam^2 t), fixing the origin and infinity."""
    if not lam > 0:
        raise GeometryError(f"dilation coefficient must be positive, got {lam}")
    d = np.ones(k + 1, dtype=complex)
    d[0] = lam
    d[k] = 1.0 / lam
    return MoebiusMap(np.diag(d), check=False)


def make_inversion(k: int) -> MoebiusMap:
    """Gauge inversion swapping the origin and infinity.

    Satisfies d(ip, iq) gauge(p) gauge(q) = d(p, q), the metric-inversion
    contract at the origin, and maps the gauge-1 sphere to itself.
    """
    g = np.zeros((k + 1, k + 1), dtype=complex)
    # Coordinate swap X_0 <-> X_k inverts with an extra factor 2 in the
    # metric; the dilation by 1/2 folded in here removes it.
    g[0, k] = 0.5
    g[k, 0] = 2.0
    for i in range(1, k):
        g[i, i] = 1.0
    return MoebiusMap(g, check=False)


def axis_reflection(k: int) -> MoebiusMap:
    """Chart reflection (z, t) -> (-z, t), fixing the vertical chain."""
    d = np.ones(k + 1, dtype=complex)
    d[1:k] = -1.0
    return MoebiusMap(np.diag(d), check=False)


# ---------------------------------------------------------------------------
# Cross-ratio triple in the projective model
# ---------------------------------------------------------------------------

def crt_projective(x: BoundaryPoint, y: BoundaryPoint, z: BoundaryPoint,
                   u: BoundaryPoint) -> CrossRatioTriple:
    """Cross-ratio triple from Hermitian pairings of unit null lifts.

    Independent route to the chart computation in :mod:`chgeom.core`; the
    two must agree on all admissible quadruples.
    """
    if not is_admissible((x, y, z, u)):
        raise GeometryError("quadruple is not admissible (an entry repeats 3+ times)")
    Xs = [lift(p) for p in (x, y, z, u)]
    pair = lambda i, j: abs(herm(Xs[i], Xs[j]))
    a = math.sqrt(pair(0, 1) * pair(2, 3))
    b = math.sqrt(pair(0, 2) * pair(1, 3))
    c = math.sqrt(pair(0, 3) * pair(1, 2))
    return CrossRatioTriple.from_components(a, b, c)


def distance_pairing_constant(k: int) -> float:
    """Calibration constant c0 in dist^2 = c0 |<X_p, X_q>| / (|<X_p, W>| |<X_q, W>|).

    Computed from anchor pairs (vertical, unit horizontal where available)
    and checked to be mutually consistent; equals 2 in this model for
    every k.
    """
    W = lift(infinity(k))
    anchors = [(origin(k), point(np.zeros(k - 1), 4.0))]
    if k >= 2:
        e1 = np.zeros(k - 1, dtype=complex)
        e1[0] = 1.0
        anchors.append((origin(k), point(e1, 0.0)))
        anchors.append((point(e1, 0.0), point(2 * e1, 0.0)))
    values = []
    for p, q in anchors:
        Xp, Xq = lift(p), lift(q)
        denom = abs(herm(Xp, W)) * abs(herm(Xq, W))
        values.append(dist(p, q) ** 2 * denom / abs(herm(Xp, Xq)))
    c0 = values[0]
    if any(abs(v - c0) > 1e-12 * c0 for v in values):
        raise GeometryError("anchor distances give inconsistent calibration")
    return c0
