"""Linear tangent model of CH^k: curvature tensor and unitary reflections.

The tangent space is C^k with the real inner product Re<u, v> and the
complex structure J v = i v.  The curvature tensor of the complex space
form normalized to sectional curvatures in [-4, -1] is

    R(x, y) z = -( <y,z> x - <x,z> y + <Jy,z> Jx - <Jx,z> Jy - 2 <Jx,y> Jz ),

all products real.  Holomorphic planes have curvature -4, totally real
ones -1, and on an adapted frame the tensor satisfies R(x, Jx) z = 2 Jz
for z in the complex orthogonal complement of x, the identity behind the
holonomy of the normal bundle of a complex plane.

The second half of the module works with unitary involutive reflections
of C^2 (unitary g with g^2 = 1 whose fixed set is a complex line) and
constructs short words of them carrying any unit vector to any other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import GeometryError

__all__ = [
    "TangentVector",
    "UnitaryReflection",
    "inner",
    "J",
    "riem",
    "riem_vec",
    "sec_k",
    "sectional",
    "euler_interp",
    "riem_polarized",
    "curvature_operator_spectrum",
    "holonomy_check",
    "adapted_frame",
    "reflection_word",
    "word_matrix",
    "rotation_reflections",
]

# Tangent vectors are complex ndarrays of shape (k,); the real dimension
# of the model is 2k.
TangentVector = np.ndarray


def inner(u: TangentVector, v: TangentVector) -> float:
    """Real inner product Re<u, v> of the underlying metric."""
    return float(np.sum(u * np.conj(v)).real)


def J(v: TangentVector) -> TangentVector:
    """The complex structure, J v = i v, with J^2 = -1 and g(Ju, Jv) = g(u, v)."""
    return 1j * v


def riem_vec(x: TangentVector, y: TangentVector, z: TangentVector) -> TangentVector:
    """The curvature vector R(x, y) z of the complex space form."""
    return -(
        inner(y, z) * x
        - inner(x, z) * y
        + inner(J(y), z) * J(x)
        - inner(J(x), z) * J(y)
        - 2.0 * inner(J(x), y) * J(z)
    )


def riem(x: TangentVector, y: TangentVector, z: TangentVector,
         w: TangentVector) -> float:
    """The (4,0) curvature tensor <R(x, y) z, w>."""
    return inner(riem_vec(x, y, z), w)


def sec_k(p: TangentVector, q: TangentVector) -> float:
    """Unnormalized biquadratic form <R(p, q) q, p>.

    Equals the sectional curvature for orthonormal p, q and scales as
    |p|^2 |q|^2 on orthogonal pairs.
    """
    return riem(p, q, q, p)


def sectional(u: TangentVector, v: TangentVector) -> float:
    """Sectional curvature of the plane spanned by independent u, v."""
    denom = inner(u, u) * inner(v, v) - inner(u, v) ** 2
    if denom <= 1e-14 * max(inner(u, u) * inner(v, v), 1e-300):
        raise GeometryError("sectional curvature needs independent vectors")
    return sec_k(u, v) / denom


def euler_interp(K0: float, K_half_pi: float, alpha: float) -> float:
    """Interpolation K(alpha) = K0 cos^2(alpha) + K(pi/2) sin^2(alpha)."""
    c, s = math.cos(alpha), math.sin(alpha)
    return K0 * c * c + K_half_pi * s * s


def riem_polarized(x: TangentVector, y: TangentVector, z: TangentVector,
                   w: TangentVector) -> float:
    """The 14-term polarization of the tensor: equals 6 <R(x, y) z, w>."""
    k = sec_k
    return (
        k(x + w, y + z) - k(y + w, x + z)
        - k(x + w, y) - k(x + w, z) - k(x, y + z) - k(w, y + z)
        + k(y + w, x) + k(y + w, z) + k(y, x + z) + k(w, x + z)
        + k(x, z) + k(w, y) - k(y, z) - k(w, x)
    )


def _real_basis(k: int):
    basis = []
    for i in range(k):
        e = np.zeros(k, dtype=complex)
        e[i] = 1.0
        basis.append(e)
        basis.append(1j * e)
    return basis


def curvature_operator_spectrum(u: TangentVector) -> np.ndarray:
    """Sorted eigenvalues of v -> R(v, u) u on the real tangent model.

    For unit u the operator kills u itself and acts on the orthogonal
    complement with eigenvalue -4 on Ju and -1 on the remaining 2k - 2
    directions, so the sorted spectrum is (-4, -1, ..., -1, 0).
    """
    u = u / np.linalg.norm(u)
    k = u.shape[0]
    basis = _real_basis(k)
    M = np.array([[inner(riem_vec(e, u, u), f) for e in basis] for f in basis])
    return np.sort(np.linalg.eigvalsh(M))


def adapted_frame(k: int, rng=None):
    """An adapted frame (x, y=Jx, z, u=Jz, v) with z complex-orthogonal to x.

    ``v`` is orthogonal to z and Jz inside the complex orthogonal
    complement of x and is None for k < 3.
    """
    if k < 2:
        raise GeometryError("adapted frames need complex dimension k >= 2")
    if rng is None:
        x = np.zeros(k, dtype=complex)
        x[0] = 1.0
        z = np.zeros(k, dtype=complex)
        z[1] = 1.0
        v = None
        if k >= 3:
            v = np.zeros(k, dtype=complex)
            v[2] = 1.0
    else:
        sample = lambda: rng.standard_normal(k) + 1j * rng.standard_normal(k)
        x = sample()
        x /= np.linalg.norm(x)
        z = sample()
        z -= complex(np.vdot(x, z)) * x  # complex projection kills x and Jx
        z /= np.linalg.norm(z)
        v = None
        if k >= 3:
            v = sample()
            v -= complex(np.vdot(x, v)) * x
            v -= inner(v, z) * z + inner(v, 1j * z) * (1j * z)
            v /= np.linalg.norm(v)
    return x, J(x), z, J(z), v


def holonomy_check(k: int, trials: int = 32, rng=None) -> dict:
    """Verify R(x, Jx) z = 2 Jz on sampled adapted frames.

    Trivial content for k < 2 (reported as vacuous); for k >= 3 the
    off-plane component against v is checked as well.
    """
    if k < 2:
        return {"k": k, "vacuous": True, "identity_residual": 0.0,
                "offplane_residual": 0.0, "trials": 0}
    rng = np.random.default_rng(0) if rng is None else rng
    worst_id = 0.0
    worst_off = 0.0
    for _ in range(trials):
        x, y, z, u, v = adapted_frame(k, rng)
        worst_id = max(worst_id, float(np.linalg.norm(riem_vec(x, y, z) - 2.0 * u)))
        if v is not None:
            worst_off = max(worst_off, abs(riem(x, y, z, v)))
    return {"k": k, "vacuous": False, "identity_residual": worst_id,
            "offplane_residual": worst_off, "trials": trials}


# ---------------------------------------------------------------------------
# Unitary involutive reflections of C^2
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnitaryReflection:
    """Unitary involution of C^2 fixing the complex line spanned by ``line``."""

    line: np.ndarray

    def matrix(self) -> np.ndarray:
        w = self.line / np.linalg.norm(self.line)
        return 2.0 * np.outer(w, np.conj(w)) - np.eye(2, dtype=complex)

    def __call__(self, v: np.ndarray) -> np.ndarray:
        return self.matrix() @ v


def word_matrix(word) -> np.ndarray:
    """Product of a word of reflections; the last element acts first."""
    out = np.eye(2, dtype=complex)
    for r in word:
        out = out @ r.matrix()
    return out


def rotation_reflections(theta: float, f1: np.ndarray, f2: np.ndarray):
    """Two reflections whose product rotates by theta in the real span of f1, f2.

    ``f1``, ``f2`` must be unitary-orthonormal with real Gram pairing; the
    product fixes the orthogonal complement of the plane only up to the
    complex structure, but acts on the plane as the rotation by theta.
    """
    f = lambda phi: math.cos(phi) * f1 + math.sin(phi) * f2
    return [UnitaryReflection(line=f(0.5 * theta)), UnitaryReflection(line=f(0.0))]


def _axis_target(u: np.ndarray, coord: int) -> np.ndarray:
    a = np.zeros(2, dtype=complex)
    comp = u[coord]
    a[coord] = comp / abs(comp) if abs(comp) > 1e-13 else 1.0
    return a


def _swap_reflection(u: np.ndarray, a: np.ndarray) -> UnitaryReflection:
    # reflection across the bisector line exchanges u and a; the phase of
    # a is chosen so that <a, u> is real and the bisector never degenerates
    return UnitaryReflection(line=(u + a) / np.linalg.norm(u + a))


def reflection_word(u: np.ndarray, v: np.ndarray, tol: float = 1e-12) -> list:
    """A word of unitary involutive reflections carrying unit u to unit v.

    Empty for u = v; otherwise u is reflected onto the first coordinate
    axis, rotated onto the second inside the real plane the axes span,
    and reflected onto v.  Applying :func:`word_matrix` of the result to
    u reproduces v.
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    for name, vec in (("u", u), ("v", v)):
        if abs(np.linalg.norm(vec) - 1.0) > 1e-10:
            raise GeometryError(f"{name} must be a unit vector")
    if np.linalg.norm(u - v) <= tol:
        return []
    a1 = _axis_target(u, 0)
    r1 = _swap_reflection(u, a1)
    a2 = _axis_target(v, 1)
    r2 = _swap_reflection(v, a2)
    rot = rotation_reflections(0.5 * math.pi, a1, a2)
    return [r2, *rot, r1]
