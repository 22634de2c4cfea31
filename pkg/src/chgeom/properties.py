"""Registered verification properties, one per geometric invariant.

Each property is a single-trial function ``fn(cfg, rng) -> residual``
drawing its own configuration from the generator; the harness runs it
over independent per-trial streams and compares the worst residual with
the property's tolerance.  Residuals are normalized (relative to the
largest term of the identity under test, or squared-chordal for point
coincidences), so tolerances are dimensionless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import foliation as fo
from . import tangent as tg
from .core import (
    SpaceConfig,
    chordal_sq,
    crt,
    dist,
    dist_batch,
    dist_w,
    gauge,
    harmonicity_residual,
    infinity,
    origin,
    point,
    ptolemy_defect,
    ptolemy_defect_squared,
)
from .circles import (
    ccircle_through,
    circle_pointset_residual,
    conjugate_pole,
    eta,
    mu,
    rcircle_through_hitting,
    reflection_in_ccircle,
    sphere_between,
)
from .ortho import (
    InvolutionOnCircle,
    OrthoComplement,
    canonical_fiber,
    are_orthogonal,
    fixset_psi_residual,
    intercept_distances,
    join_decompose,
    ortho_membership_residuals,
    positive_root,
    standard_rcircle,
)
from .projective import (
    crt_projective,
    distance_pairing_constant,
    drop,
    herm,
    lift,
    make_dilation,
    make_inversion,
    make_rotation,
    make_translation,
)
from .sampling import (
    MIN_SEPARATION,
    canonical_chain,
    canonical_rcircle,
    random_moebius,
    random_unitary,
    sample_admissible_quadruple,
    sample_chain,
    sample_distinct_points,
    sample_ortho_complement,
    sample_orthopair,
    sample_point,
    sample_rcircle,
)

OFF_MARGIN = 1e-6


@dataclass(frozen=True)
class Property:
    name: str
    suite: str
    module: str
    statement: str
    tol: float
    base_trials: int
    fn: Callable[[SpaceConfig, np.random.Generator], float]
    min_k: int = 1


def _rel(value: float, scale: float) -> float:
    return abs(value) / max(scale, 1e-300)


def _transport(g, pts):
    return [g(p) for p in pts]


def _point_off_chain(cfg, rng, F, margin=1e-3):
    for _ in range(100):
        u = sample_point(cfg, rng)
        if F.membership_residual(u) > margin:
            return u
    raise RuntimeError("could not sample a point off the chain")


def _distinct_taus(rng, n, lo=-2.5, hi=2.5, sep=0.05):
    for _ in range(100):
        taus = np.sort(rng.uniform(lo, hi, size=n))
        if np.all(np.diff(taus) > sep):
            return taus
    raise RuntimeError("could not sample separated parameters")


# ---------------------------------------------------------------------------
# ptolemy suite
# ---------------------------------------------------------------------------

def p_metric_triangle(cfg, rng):
    x, y, z, w = sample_distinct_points(cfg, rng, 4)
    worst = 0.0
    for d in (dist, lambda p, q: dist_w(w, p, q)):
        dxz, dxy, dyz = d(x, z), d(x, y), d(y, z)
        worst = max(worst, _rel(max(0.0, dxz - dxy - dyz), max(dxz, dxy, dyz)))
    return worst


def _point_batch(cfg, rng, shape):
    m = cfg.horizontal_dim
    if m:
        g = rng.standard_normal((*shape, m)) + 1j * rng.standard_normal((*shape, m))
        norms = np.linalg.norm(g, axis=-1, keepdims=True)
        radii = 2.0 * rng.uniform(size=(*shape, 1)) ** (1.0 / (2 * m))
        Z = g / norms * radii
    else:
        Z = np.zeros((*shape, 0), dtype=complex)
    T = rng.uniform(-4.0, 4.0, size=shape)
    return Z, T


def _pairwise_dists(Z, T):
    return dist_batch(Z[..., :, None, :], T[..., :, None],
                      Z[..., None, :, :], T[..., None, :])


_PTOLEMY_BATCH = 100


def p_ptolemy_inequality(cfg, rng):
    # one trial sweeps a batch of quadruples, in the plain gauge metric
    # and in the inversion at the fifth sampled point
    Z, T = _point_batch(cfg, rng, (_PTOLEMY_BATCH, 5))
    D = _pairwise_dists(Z, T)
    iu0, iu1 = np.triu_indices(5, 1)
    D = D[D[:, iu0, iu1].min(axis=1) >= MIN_SEPARATION]
    if D.shape[0] == 0:
        return 0.0

    def defect(M):
        t1 = M[:, 0, 2] * M[:, 1, 3]
        t2 = M[:, 0, 1] * M[:, 2, 3]
        t3 = M[:, 0, 3] * M[:, 1, 2]
        scale = np.maximum(np.maximum(t1, t2), t3)
        return float(np.max(np.maximum(0.0, t1 - t2 - t3) / scale))

    worst = defect(D)
    dw = D[:, :4, 4]
    Dw = D[:, :4, :4] / (dw[:, :, None] * dw[:, None, :])
    return max(worst, defect(Dw))


def p_rcircle_equality(cfg, rng):
    sigma = sample_rcircle(cfg, rng)
    ss = _distinct_taus(rng, 4)
    pts = [sigma.point_at(float(s)) for s in ss]
    defect = ptolemy_defect(*pts)
    scale = max(dist(pts[0], pts[2]) * dist(pts[1], pts[3]), 1e-12)
    return _rel(defect, scale)


def p_ccircle_squared_equality(cfg, rng):
    F = sample_chain(cfg, rng)
    ss = _distinct_taus(rng, 4)
    pts = [F.point_at(float(s)) for s in ss]
    defect = ptolemy_defect_squared(*pts)
    scale = max((dist(pts[0], pts[2]) * dist(pts[1], pts[3])) ** 2, 1e-12)
    return _rel(defect, scale)


def p_metric_double_inversion(cfg, rng):
    # inverting at w and then at the image of the old infinity returns the
    # original metric; checked through cross-ratio products of a quadruple
    pts = sample_distinct_points(cfg, rng, 5)
    w, quad = pts[0], pts[1:]
    quad[rng.integers(0, 4)] = infinity(cfg.k)

    def doubly_inverted(p, q):
        if p.infinite and q.infinite:
            return 0.0
        if p.infinite or q.infinite:
            fin = q if p.infinite else p
            return dist_w(w, p, q) * dist(fin, w)
        return dist_w(w, p, q) * dist(p, w) * dist(q, w)

    x, y, z, u = quad
    t_ref = crt(x, y, z, u)
    a = math.sqrt(_pair_with(doubly_inverted, x, y) * _pair_with(doubly_inverted, z, u))
    b = math.sqrt(_pair_with(doubly_inverted, x, z) * _pair_with(doubly_inverted, y, u))
    c = math.sqrt(_pair_with(doubly_inverted, x, u) * _pair_with(doubly_inverted, y, z))
    m = max(a, b, c)
    return float(np.max(np.abs(np.array([a, b, c]) / m - t_ref.components())))


def _pair_with(metric, p, q):
    # pairing-style product used to form crt from an explicit metric; the
    # infinite entries follow the same cancellation convention as crt
    if p.infinite and q.infinite:
        return 0.0
    if p.infinite or q.infinite:
        return 1.0
    return 0.5 * metric(p, q) ** 2


# ---------------------------------------------------------------------------
# distance_formula suite
# ---------------------------------------------------------------------------

def p_distance_formula(cfg, rng):
    g = random_moebius(cfg, rng)
    F0 = canonical_chain(cfg.k)
    omega = g(infinity(cfg.k))
    o0 = point(np.zeros(cfg.k - 1), rng.uniform(-4.0, 4.0))
    u0 = _point_off_chain(cfg, rng, F0)
    if dist(u0, o0) < 5e-3:
        return 0.0
    F = _chain_map(g, F0)
    o, u = g(o0), g(u0)
    # the projection is equivariant, so its chart value transports; every
    # twentieth trial also runs the full projection machinery against it
    z = g(point(np.zeros(cfg.k - 1), u0.t))
    worst = 0.0
    if rng.uniform() < 0.05:
        worst = chordal_sq(z, mu(F, omega, u))
    r = dist_w(omega, o, u)
    a = dist_w(omega, z, u)
    b = dist_w(omega, o, z)
    return max(worst, _rel(r ** 4 - a ** 4 - b ** 4, max(r ** 4, a ** 4, b ** 4)))


def _chain_map(g, F0):
    from .circles import CCircle

    return CCircle(map=g @ F0.map, span=tuple(g(p) for p in F0.span))


def p_wharm_product(cfg, rng):
    F = sample_chain(cfg, rng)
    u = _point_off_chain(cfg, rng, F)
    t1, t2 = _distinct_taus(rng, 2)
    x, z = F.point_at(float(t1)), F.point_at(float(t2))
    y = eta(F, u, x)
    omega = eta(F, u, z)
    lhs = dist_w(omega, x, z) * dist_w(omega, z, y)
    rhs = dist_w(omega, z, u) ** 2
    return _rel(lhs - rhs, max(lhs, rhs))


# ---------------------------------------------------------------------------
# axioms_e suite
# ---------------------------------------------------------------------------

def p_ec_uniqueness(cfg, rng):
    p, q = sample_distinct_points(cfg, rng, 2)
    F = ccircle_through(p, q)
    worst = max(F.membership_residual(p), F.membership_residual(q))
    t1, t2 = _distinct_taus(rng, 2)
    F2 = ccircle_through(F.point_at(float(t1)), F.point_at(float(t2)))
    return max(worst, circle_pointset_residual(F, F2))


def p_er_existence_uniqueness(cfg, rng):
    F = sample_chain(cfg, rng)
    omega = F.point_at(float(rng.uniform(-2, 2)))
    u = _point_off_chain(cfg, rng, F)
    sigma = rcircle_through_hitting(F, omega, u)
    hit = mu(F, omega, u)
    worst = max(
        sigma.membership_residual(omega),
        sigma.membership_residual(u),
        F.membership_residual(hit),
        sigma.membership_residual(hit),
    )
    # uniqueness: rebuilding from the hit point recovers the same circle
    sigma2 = rcircle_through_hitting(F, hit, u)
    return max(worst, circle_pointset_residual(sigma, sigma2))


# ---------------------------------------------------------------------------
# axioms_o suite
# ---------------------------------------------------------------------------

def _orthogonal_config(cfg, rng):
    """Chain F and R-circle sigma with common points o, omega, transported."""
    k = cfg.k
    m = k - 1
    g = random_moebius(cfg, rng)
    direction = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    direction /= np.linalg.norm(direction)
    o, omega = origin(k), infinity(k)
    return g, direction, o, omega


def p_oc_harmonicity(cfg, rng):
    g, direction, o, omega = _orthogonal_config(cfg, rng)
    s = math.exp(rng.uniform(-1.0, 1.0))
    u, v = point(s * direction, 0.0), point(-s * direction, 0.0)
    go, gom, gu, gv = _transport(g, [o, omega, u, v])
    worst = harmonicity_residual(go, gu, gom, gv)  # premise on the circle
    for tau in (-1.3, 0.4, 2.0, math.inf):
        w = infinity(cfg.k) if math.isinf(tau) else point(np.zeros(cfg.k - 1), tau)
        worst = max(worst, harmonicity_residual(g(w), gu, go, gv))
    return worst


def p_or_harmonicity(cfg, rng):
    g, direction, o, omega = _orthogonal_config(cfg, rng)
    tau = math.exp(rng.uniform(-1.0, 1.0))
    x, y = point(np.zeros(cfg.k - 1), tau), point(np.zeros(cfg.k - 1), -tau)
    gx, gy, go, gom = _transport(g, [x, y, o, omega])
    worst = harmonicity_residual(go, gx, gom, gy)
    for lam in (-2.0, -0.7, 0.5, 1.8):
        w = g(point(lam * direction, 0.0))
        worst = max(worst, harmonicity_residual(w, gx, gom, gy))
    return worst


# ---------------------------------------------------------------------------
# circles suite
# ---------------------------------------------------------------------------

def _count_low_clusters(values, threshold):
    low = [v < threshold for v in values]
    count = 0
    for i, flag in enumerate(low):
        if flag and (i == 0 or not low[i - 1]):
            count += 1
    if count >= 2 and low[0] and low[-1]:
        count -= 1  # circular wrap joins first and last run
    return count


def _chain_residuals_along_rcircle(F, sigma, ss):
    """Squared chain-membership residuals at R-circle parameters, batched."""
    k = sigma.k
    n = ss.shape[0]
    # affine lifts of the canonical line points (s e_1, 0), plus infinity
    L = np.zeros((k + 1, n + 1), dtype=complex)
    L[0, :n] = -0.5 * ss * ss
    L[1, :n] = ss
    L[k, :n] = 1.0
    L[0, n] = 1.0
    X = sigma.map.g @ L
    Q = F._plane_basis()
    R = X - Q @ (Q.conj().T @ X)
    return (np.linalg.norm(R, axis=0) / np.linalg.norm(X, axis=0)) ** 2


def p_rc_intersection_bound(cfg, rng):
    sigma = sample_rcircle(cfg, rng)
    s1, s2 = _distinct_taus(rng, 2, sep=0.3)
    F = ccircle_through(sigma.point_at(float(s1)), sigma.point_at(float(s2)))
    ss = np.tan(np.linspace(-0.5 * math.pi, 0.5 * math.pi, 361)[1:-1])
    values = _chain_residuals_along_rcircle(F, sigma, ss)
    clusters = _count_low_clusters(list(values), OFF_MARGIN)
    generic = sample_chain(cfg, rng)
    values_g = _chain_residuals_along_rcircle(generic, sigma, ss)
    clusters_g = _count_low_clusters(list(values_g), OFF_MARGIN)
    return float(max(0, clusters - 2) + max(0, clusters_g - 2))


def p_conjugate_pole(cfg, rng):
    F = sample_chain(cfg, rng)
    u = _point_off_chain(cfg, rng, F)
    v = conjugate_pole(F, u)
    worst = 0.0
    for tau in _distinct_taus(rng, 10, lo=-3.0, hi=3.0):
        x = F.point_at(float(tau))
        y = eta(F, u, x)
        worst = max(worst, harmonicity_residual(x, u, y, v))
        sigma = rcircle_through_hitting(F, x, u)
        worst = max(worst, sigma.membership_residual(v))
        worst = max(worst, chordal_sq(y, eta(F, v, x)))  # eta_u = eta_v
    return worst


def p_moebius_involution_crt(cfg, rng):
    F = sample_chain(cfg, rng)
    u = _point_off_chain(cfg, rng, F)
    v = conjugate_pole(F, u)
    t1, t2 = _distinct_taus(rng, 2)
    x, z = F.point_at(float(t1)), F.point_at(float(t2))
    lhs = crt(x, u, z, v)
    rhs = crt(eta(F, u, x), v, eta(F, u, z), u)
    return lhs.max_difference(rhs)


def p_eta_involution(cfg, rng):
    F = sample_chain(cfg, rng)
    u = _point_off_chain(cfg, rng, F)
    worst = 0.0
    for tau in _distinct_taus(rng, 4):
        w = F.point_at(float(tau))
        worst = max(worst, chordal_sq(eta(F, u, eta(F, u, w)), w))
    return worst


def p_eta_preserves_crt(cfg, rng):
    F = sample_chain(cfg, rng)
    u = _point_off_chain(cfg, rng, F)
    taus = _distinct_taus(rng, 4)
    pts = [F.point_at(float(t)) for t in taus]
    images = [eta(F, u, p) for p in pts]
    return crt(*pts).max_difference(crt(*images))


def p_sphere_bisector(cfg, rng):
    u, v, x = sample_distinct_points(cfg, rng, 3)
    S = sphere_between(u, v, x)
    pts = S.sample_points(4, rng)
    worst = max(S.membership_residual(p) for p in pts)
    worst = max(worst, S.membership_residual(x))
    w, p = pts[0], pts[1]
    du, dv = dist_w(w, p, u), dist_w(w, p, v)
    return max(worst, _rel(du - dv, max(du, dv)))


def p_filling_sphere(cfg, rng):
    from .circles import chain_chart

    omega, omega_p = sample_distinct_points(cfg, rng, 2)
    F = ccircle_through(omega, omega_p)
    c = chain_chart(F, omega_p, omega)
    cinv = c.inverse()
    r2 = math.exp(rng.uniform(-0.5, 0.5))
    x = cinv(point(np.zeros(cfg.k - 1), r2))
    x_opp = cinv(point(np.zeros(cfg.k - 1), -r2))
    S = sphere_between(omega, omega_p, x)
    worst = S.membership_residual(x_opp)
    for u in S.sample_points(2, rng):
        if F.membership_residual(u) < 1e-3:
            continue
        worst = max(worst, chordal_sq(eta(F, u, x), x_opp))
        sigma = rcircle_through_hitting(F, x, u)
        worst = max(worst, sigma.membership_residual(x_opp))
    return worst


def p_property_u(cfg, rng):
    sigma = sample_rcircle(cfg, rng)
    ss = _distinct_taus(rng, 4, sep=0.2)
    x, y, z, u = (sigma.point_at(float(s)) for s in ss)
    scale = max(dist(x, z) * dist(y, u), 1e-12)
    worst = _rel(ptolemy_defect(x, y, z, u), scale)
    worst = max(worst, sigma.membership_residual(u))
    # the equality forces membership: a perturbed point may only satisfy
    # it (within margin) if the perturbation happened to return to sigma
    u_off = point(u.z, u.t + rng.uniform(0.5, 1.5)) if not u.infinite else u
    if not u_off.infinite:
        defect_off = _rel(ptolemy_defect(x, y, z, u_off), scale)
        member_off = sigma.membership_residual(u_off)
        if defect_off < OFF_MARGIN and member_off > 100 * OFF_MARGIN:
            worst = max(worst, 1.0)
    return worst


# ---------------------------------------------------------------------------
# foliation suite
# ---------------------------------------------------------------------------

def _horizontal_line(cfg, rng):
    """A random R-line through infinity (no inversion in the transport)."""
    g = random_moebius(cfg, rng, allow_inversion=False)
    base = canonical_rcircle(cfg.k)
    from .circles import RCircle

    return RCircle(map=g @ base.map, witnesses=tuple(g(p) for p in base.witnesses))


def p_base_projection(cfg, rng):
    omega = infinity(cfg.k)
    sigma = _horizontal_line(cfg, rng)
    s1, s2 = _distinct_taus(rng, 2)
    p1, p2 = sigma.point_at(float(s1)), sigma.point_at(float(s2))
    b1, b2 = fo.project_base(omega, p1), fo.project_base(omega, p2)
    d_amb = dist(p1, p2)
    worst = _rel(np.linalg.norm(b1 - b2) - d_amb, d_amb)
    # fiber constancy and 1-Lipschitz on generic pairs
    F = ccircle_through(omega, sample_point(cfg, rng))
    q1, q2 = F.point_at(0.3), F.point_at(-1.1)
    worst = max(
        worst,
        float(np.linalg.norm(fo.project_base(omega, q1) - fo.project_base(omega, q2))),
    )
    x, y = sample_distinct_points(cfg, rng, 2)
    bx, by = fo.project_base(omega, x), fo.project_base(omega, y)
    worst = max(worst, _rel(max(0.0, np.linalg.norm(bx - by) - dist(x, y)), dist(x, y)))
    return worst


def _fiber_through(cfg, omega, z):
    return ccircle_through(omega, point(z, 0.0))


def p_base_dist_welldefined(cfg, rng):
    omega = infinity(cfg.k)
    m = cfg.k - 1
    z1 = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    z2 = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    if np.linalg.norm(z1 - z2) < 1e-2:
        return 0.0
    F, Fp = _fiber_through(cfg, omega, z1), _fiber_through(cfg, omega, z2)
    ref = float(np.linalg.norm(z1 - z2))
    worst = _rel(fo.base_dist(omega, F, Fp) - ref, ref)
    values = []
    for tau in _distinct_taus(rng, 6, lo=-3, hi=3):
        xp = Fp.point_at(float(tau))
        values.append(dist_w(omega, xp, mu(F, omega, xp)))
    values = np.array(values)
    worst = max(worst, _rel(float(np.max(values) - np.min(values)), ref))
    # the projection between fibers is isometric
    xp, yp = Fp.point_at(0.7), Fp.point_at(-0.9)
    d_im = dist(mu(F, omega, xp), mu(F, omega, yp))
    worst = max(worst, _rel(d_im - dist(xp, yp), dist(xp, yp)))
    return worst


def p_base_parallelogram(cfg, rng):
    if cfg.k < 2:
        return 0.0
    omega = infinity(cfg.k)
    m = cfg.k - 1
    zs = [rng.standard_normal(m) + 1j * rng.standard_normal(m) for _ in range(3)]
    z4 = zs[0] + zs[2] - zs[1]
    fibers = [_fiber_through(cfg, omega, z) for z in (*zs, z4)]
    d = lambda i, j: fo.base_dist(omega, fibers[i], fibers[j])
    sides = 2 * d(0, 1) ** 2 + 2 * d(1, 2) ** 2
    diags = d(0, 2) ** 2 + d(1, 3) ** 2
    return _rel(sides - diags, max(sides, diags))


def p_base_midpoint(cfg, rng):
    if cfg.k < 2:
        return 0.0
    omega = infinity(cfg.k)
    m = cfg.k - 1
    za = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    zb = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    if np.linalg.norm(za - zb) < 1e-2:
        return 0.0
    A, B = _fiber_through(cfg, omega, za), _fiber_through(cfg, omega, zb)
    M = _fiber_through(cfg, omega, 0.5 * (za + zb))
    dAB = fo.base_dist(omega, A, B)
    on_excess = fo.base_dist(omega, A, M) + fo.base_dist(omega, M, B) - dAB
    worst = _rel(on_excess, dAB)
    off = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    off = off / np.linalg.norm(off) * rng.uniform(0.3, 1.0)
    P = _fiber_through(cfg, omega, 0.5 * (za + zb) + off)
    off_excess = fo.base_dist(omega, A, P) + fo.base_dist(omega, P, B) - dAB
    if off_excess <= 0.0:
        worst = max(worst, 1.0)
    return worst


def p_busemann(cfg, rng):
    omega = infinity(cfg.k)
    sigma = _horizontal_line(cfg, rng)
    o = sigma.point_at(float(rng.uniform(-1, 1)))
    line = _horizontal_line(cfg, rng)
    s0, h = rng.uniform(-1, 1), rng.uniform(0.4, 1.2)
    pts = [line.point_at(float(s0 + j * h)) for j in (-1, 0, 1)]
    closed = [fo.busemann(omega, sigma, o, p) for p in pts]
    limits = [fo.busemann(omega, sigma, o, p, method="limit") for p in pts]
    scale = max(1.0, max(abs(b) for b in closed))
    worst = _rel(limits[0] + limits[2] - 2 * limits[1], scale)
    worst = max(worst, max(_rel(c - l, scale) for c, l in zip(closed, limits)))
    # constancy on fibers
    z0 = pts[1]
    if not z0.infinite:
        fib = ccircle_through(omega, z0)
        b1 = fo.busemann(omega, sigma, o, fib.point_at(0.9))
        b2 = fo.busemann(omega, sigma, o, fib.point_at(-1.7))
        worst = max(worst, _rel(b1 - b2, scale))
    return worst


def p_vertical_shift(cfg, rng):
    omega = infinity(cfg.k)
    s = rng.uniform(0.5, 4.0) * (1 if rng.uniform() < 0.5 else -1)
    gamma = fo.vertical_shift(omega, s)
    x, y = sample_distinct_points(cfg, rng, 2)
    worst = _rel(dist(gamma(x), gamma(y)) - dist(x, y), dist(x, y))
    worst = max(worst, _rel(dist(x, gamma(x)) - math.sqrt(abs(s)), math.sqrt(abs(s))))
    s2 = rng.uniform(0.5, 4.0) * math.copysign(1.0, s)
    comp = fo.vertical_shift(omega, s2) @ gamma
    disp_sq = dist(x, comp(x)) ** 2
    return max(worst, _rel(disp_sq - (abs(s) + abs(s2)), abs(s) + abs(s2)))


def p_pure_homothety(cfg, rng):
    o, w = sample_distinct_points(cfg, rng, 2)
    lam = math.exp(rng.uniform(-1.0, 1.0))
    h = fo.pure_homothety(o, w, lam)
    x, y = sample_distinct_points(cfg, rng, 2)
    ref = dist_w(w, x, y)
    worst = _rel(dist_w(w, h(x), h(y)) - lam * ref, lam * ref)
    worst = max(worst, chordal_sq(h(o), o), chordal_sq(h(w), w))
    if cfg.k >= 2:
        F = ccircle_through(o, w)
        u = _point_off_chain(cfg, rng, F)
        sigma = rcircle_through_hitting(F, w, u)
        # lines through o are preserved when sigma passes through o; build one
        hit = mu(F, w, u)
        sigma_o = rcircle_through_hitting(F, w, _shift_to_hit(cfg, F, w, o, u, hit))
        for s in (-1.2, 0.8):
            worst = max(worst, sigma_o.membership_residual(h(sigma_o.point_at(s))))
    return worst


def _shift_to_hit(cfg, F, omega, o, u, hit):
    """Move u along its fiber direction so the R-line through it hits F at o."""
    from .circles import chain_chart

    c = chain_chart(F, omega, o)
    u1 = c(u)
    return c.inverse()(point(u1.z, 0.0))


def _random_polygon(cfg, rng, n):
    m = max(cfg.k - 1, 1)
    verts = rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))
    return fo.Polygon(vertices=verts)


def p_lift_additivity(cfg, rng):
    if cfg.k < 2:
        return 0.0
    P = _random_polygon(cfg, rng, 5)
    v = P.vertices
    i, j = 0, 2
    first = fo.Polygon(vertices=np.vstack([v[i : j + 1]]))
    second = fo.Polygon(vertices=np.vstack([v[j:], v[: i + 1]]))
    dt = lambda Q: fo.tau(Q, 0.0)[0]
    total, split = dt(P), dt(first) + dt(second)
    return _rel(total - split, max(1.0, abs(total)))


def p_lift_homothety(cfg, rng):
    if cfg.k < 2:
        return 0.0
    P = _random_polygon(cfg, rng, 4)
    lam = math.exp(rng.uniform(-1.0, 1.0))
    d1 = fo.tau(P, 0.0)[1]
    d2 = fo.tau(P.scaled(lam), 0.0)[1]
    return _rel(d2 - lam * d1, max(1.0, lam * d1))


def p_lift_triangle_ratio(cfg, rng):
    if cfg.k < 2:
        return 0.0
    m = cfg.k - 1
    pts = rng.standard_normal((3, m)) + 1j * rng.standard_normal((3, m))
    v, y, z = pts
    ratio = rng.uniform(0.05, 0.95) if rng.uniform() < 0.5 else 1.0 / math.pi
    x = v + ratio * (z - v)
    T = fo.Polygon(vertices=np.vstack([v, y, z]))
    P = fo.Polygon(vertices=np.vstack([x, y, z]))
    lhs = fo.tau(P, 0.0)[1] ** 2 * np.linalg.norm(z - v)
    rhs = np.linalg.norm(z - x) * fo.tau(T, 0.0)[1] ** 2
    return _rel(lhs - rhs, max(lhs, rhs, 1e-6))


def p_lift_diagonal_split(cfg, rng):
    if cfg.k < 2:
        return 0.0
    m = cfg.k - 1
    p, a, b = (rng.standard_normal(m) + 1j * rng.standard_normal(m) for _ in range(3))
    T1 = fo.Polygon(vertices=np.vstack([p, p + a, p + a + b]))
    T2 = fo.Polygon(vertices=np.vstack([p, p + a + b, p + b]))
    d1, d2 = fo.tau(T1, 0.0)[0], fo.tau(T2, 0.0)[0]
    return _rel(d1 - d2, max(1.0, abs(d1)))


def p_lift_square(cfg, rng):
    if cfg.k < 2:
        return 0.0
    m = cfg.k - 1
    square = np.zeros((4, m), dtype=complex)
    square[1, 0], square[2, 0], square[3, 0] = 1.0, 1.0 + 1j, 1j
    P = fo.Polygon(vertices=square)
    t_end, disp = fo.tau(P, rng.uniform(-2, 2))
    lam = math.exp(rng.uniform(-0.5, 0.5))
    worst = max(
        _rel(fo.tau(P, 0.0)[0] + 4.0, 4.0),
        _rel(disp - 2.0, 2.0),
        _rel(fo.tau(P.scaled(lam), 0.0)[0] + 4.0 * lam * lam, 4.0 * lam * lam),
        _rel(fo.signed_area(P) - 1.0, 1.0),
    )
    return worst


# ---------------------------------------------------------------------------
# holonomy suite (curvature model)
# ---------------------------------------------------------------------------

def p_curvature_golden(cfg, rng):
    if cfg.k < 2:
        return 0.0
    x, y, z, u, v = tg.adapted_frame(cfg.k)
    checks = [
        (tg.riem(x, y, z, u), 2.0),
        (tg.sec_k(x, z), -1.0),
        (tg.sec_k(x, y), -4.0),
        (tg.sec_k(y + u, x + z), -16.0),
        (tg.sec_k(x + u, y + z), -4.0),
        (tg.riem_polarized(x, y, z, u), 12.0),
    ]
    if v is not None:
        checks += [
            (tg.riem(x, y, z, v), 0.0),
            (tg.sec_k(x + v, y + z), -7.0),
            (tg.sec_k(y + v, x + z), -7.0),
            (tg.sectional((x + v) / math.sqrt(2), (y + z) / math.sqrt(2)), -1.75),
            (tg.euler_interp(-4.0, -1.0, math.pi / 3.0), -1.75),
            (tg.riem_polarized(x, y, z, v), 0.0),
        ]
    return max(abs(got - want) for got, want in checks)


def _random_tangent(cfg, rng):
    return rng.standard_normal(cfg.k) + 1j * rng.standard_normal(cfg.k)


def p_curvature_symmetries(cfg, rng):
    x, y, z, w = (_random_tangent(cfg, rng) for _ in range(4))
    r = tg.riem
    scale = max(1.0, abs(r(x, y, z, w)))
    worst = _rel(r(x, y, z, w) + r(y, x, z, w), scale)
    worst = max(worst, _rel(r(x, y, z, w) + r(x, y, w, z), scale))
    worst = max(worst, _rel(r(x, y, z, w) - r(z, w, x, y), scale))
    bianchi = r(x, y, z, w) + r(y, z, x, w) + r(z, x, y, w)
    return max(worst, _rel(bianchi, scale))


def p_polarization(cfg, rng):
    x, y, z, w = (_random_tangent(cfg, rng) for _ in range(4))
    lhs = tg.riem_polarized(x, y, z, w)
    rhs = 6.0 * tg.riem(x, y, z, w)
    return _rel(lhs - rhs, max(1.0, abs(lhs), abs(rhs)))


def p_curvature_spectrum(cfg, rng):
    k = cfg.k
    u = rng.standard_normal(k) + 1j * rng.standard_normal(k)
    evals = tg.curvature_operator_spectrum(u)
    target = np.concatenate([[-4.0], -np.ones(2 * k - 2), [0.0]])
    return float(np.max(np.abs(evals - target)))


def p_holonomy_identity(cfg, rng):
    x, y, z, u, _ = tg.adapted_frame(cfg.k, rng)
    return float(np.linalg.norm(tg.riem_vec(x, y, z) - 2.0 * u))


def p_sectional_bounds(cfg, rng):
    u, v = _random_tangent(cfg, rng), _random_tangent(cfg, rng)
    try:
        K = tg.sectional(u, v)
    except Exception:
        return 0.0
    return max(0.0, -4.0 - K, K + 1.0)


def p_reflection_transitivity(cfg, rng):
    u = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    v = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    u, v = u / np.linalg.norm(u), v / np.linalg.norm(v)
    word = tg.reflection_word(u, v)
    M = tg.word_matrix(word)
    worst = float(np.linalg.norm(M @ u - v))
    I = np.eye(2, dtype=complex)
    for r in word:
        R = r.matrix()
        worst = max(worst, float(np.max(np.abs(R @ R - I))))
        worst = max(worst, abs(np.linalg.det(R) + 1.0))
        svals = np.linalg.svd(I - R, compute_uv=False)
        worst = max(worst, abs(svals[0] - 2.0), float(svals[1]))
    if len(word) >= 2:
        worst = max(worst, abs(np.linalg.det(word[1].matrix() @ word[0].matrix()) - 1.0))
    # rational-angle rotation pairs have finite order
    q = int(rng.integers(2, 8))
    f1 = np.array([1.0, 0.0], dtype=complex)
    f2 = np.array([0.0, 1.0], dtype=complex)
    rot = tg.word_matrix(tg.rotation_reflections(2.0 * math.pi / q, f1, f2))
    power = np.linalg.matrix_power(rot, q)
    return max(worst, float(np.max(np.abs(power - I))))


# ---------------------------------------------------------------------------
# ortho suite
# ---------------------------------------------------------------------------

def p_ortho_membership_agree(cfg, rng):
    A = sample_ortho_complement(cfg, rng)
    u_on = A.sample_points(1, rng)[0]
    r3, rs = ortho_membership_residuals(A, u_on)
    worst = max(r3, rs)
    for _ in range(40):
        u_off = sample_point(cfg, rng)
        if A.F.membership_residual(u_off) < 1e-3:
            continue
        r3o, rso = ortho_membership_residuals(A, u_off)
        if min(r3o, rso) > 1e-4 or max(r3o, rso) < OFF_MARGIN:
            if (r3o < OFF_MARGIN) != (rso < OFF_MARGIN):
                worst = max(worst, 1.0)
            break
    return worst


def p_ortho_reflection_stability(cfg, rng):
    A = sample_ortho_complement(cfg, rng)
    u = A.sample_points(1, rng)[0]
    v = conjugate_pole(A.F, u)
    r3, rs = ortho_membership_residuals(A, v)
    return max(r3, rs)


def p_canonical_fiber(cfg, rng):
    A = sample_ortho_complement(cfg, rng)
    u = A.sample_points(1, rng)[0]
    fib = canonical_fiber(A, u)
    worst = 0.0
    for tau in _distinct_taus(rng, 5):
        p = fib.point_at(float(tau))
        r3, _ = ortho_membership_residuals(A, p)
        worst = max(worst, r3)
    phi = reflection_in_ccircle(A.F)
    for tau in (0.4, -1.3, math.inf):
        p = fib.point_at(tau)
        worst = max(worst, fib.membership_residual(phi(p)))
    if cfg.k >= 3:
        u2 = A.sample_points(1, rng)[0]
        if fib.membership_residual(u2) > 1e-3:
            fib2 = canonical_fiber(A, u2)
            if min(fib2.membership_residual(fib.point_at(t)) for t in (0.0, 1.0)) < OFF_MARGIN:
                worst = max(worst, 1.0)
    return worst


def p_orthogonal_commute(cfg, rng):
    F, Fp = sample_orthopair(cfg, rng)
    if not (are_orthogonal(F, Fp) and are_orthogonal(Fp, F)):
        return 1.0
    phi, phip = reflection_in_ccircle(F), reflection_in_ccircle(Fp)
    worst = 0.0
    for _ in range(3):
        x = sample_point(cfg, rng)
        worst = max(worst, chordal_sq(phi(phip(x)), phip(phi(x))))
    return worst


def p_fixset_intersection(cfg, rng):
    g = random_moebius(cfg, rng)
    k = cfg.k
    e1 = np.zeros(k - 1, dtype=complex)
    e1[0] = 1.0
    F = _chain_map(g, canonical_chain(k))
    Fp = _transported_through(g, point(e1, 0.0), point(-e1, 0.0))
    A = OrthoComplement(F=F, eta=InvolutionOnCircle(F=F, g=reflection_in_ccircle(Fp)))
    Ap = OrthoComplement(F=Fp, eta=InvolutionOnCircle(F=Fp, g=reflection_in_ccircle(F)))
    worst = 0.0
    if k >= 3:
        e2 = np.zeros(k - 1, dtype=complex)
        e2[1] = 1.0
        u = g(point(e2, 0.0))
        worst = max(worst, fixset_psi_residual(F, Fp, u))
        rA, _ = ortho_membership_residuals(A, u)
        rAp, _ = ortho_membership_residuals(Ap, u)
        worst = max(worst, rA, rAp)
    u_off = sample_point(cfg, rng)
    if min(F.membership_residual(u_off), Fp.membership_residual(u_off)) > 1e-3:
        fixed = fixset_psi_residual(F, Fp, u_off) < OFF_MARGIN
        rA, _ = ortho_membership_residuals(A, u_off)
        rAp, _ = ortho_membership_residuals(Ap, u_off)
        both_in = max(rA, rAp) < OFF_MARGIN
        if fixed != both_in:
            worst = max(worst, 1.0)
    return worst


def _transported_through(g, p, q):
    return ccircle_through(g(p), g(q))


def p_nonfiber_chain(cfg, rng):
    if cfg.k < 3:
        return 0.0
    g = random_moebius(cfg, rng)
    k = cfg.k
    F = _chain_map(g, canonical_chain(k))
    e1 = np.zeros(k - 1, dtype=complex)
    e2 = np.zeros(k - 1, dtype=complex)
    e1[0], e2[1] = 1.0, 1.0
    # the transported unit-sphere complement: conjugate the gauge inversion,
    # whose chain restriction swaps the transported origin and infinity
    eta = InvolutionOnCircle(F=F, g=g @ make_inversion(k) @ g.inverse())
    A = OrthoComplement(F=F, eta=eta)
    C = _transported_through(g, point(e1, 0.0), point(e2, 0.0))
    worst = 0.0
    for tau in (-1.0, 0.0, 1.0, math.inf):
        p = C.point_at(tau)
        r3, _ = ortho_membership_residuals(A, p)
        worst = max(worst, r3)  # the chain lies inside the complement
    # but it is not a fiber: conjugate poles of its points leave it
    for tau in (0.0, 1.0):
        p = C.point_at(tau)
        if C.membership_residual(conjugate_pole(F, p)) < OFF_MARGIN:
            worst = max(worst, 1.0)
    return worst


def p_fiber_involution(cfg, rng):
    A = sample_ortho_complement(cfg, rng)
    u = A.sample_points(1, rng)[0]
    fib = canonical_fiber(A, u)
    phi_fib = reflection_in_ccircle(fib)
    worst = 0.0
    a = A.sample_points(1, rng)[0]
    image = phi_fib(a)
    r3, _ = ortho_membership_residuals(A, image)
    worst = max(worst, r3)
    if fib.membership_residual(a) > 1e-3:
        fa = canonical_fiber(A, a)
        fim = canonical_fiber(A, image)
        for tau in (0.0, 1.0, math.inf):
            worst = max(worst, fim.membership_residual(phi_fib(fa.point_at(tau))))
    return worst


# ---------------------------------------------------------------------------
# join suite
# ---------------------------------------------------------------------------

def p_join_decompose(cfg, rng):
    if cfg.k < 2:
        return 0.0
    A = sample_ortho_complement(cfg, rng)
    F = A.F
    omega = F.point_at(float(rng.uniform(-2, 2)))
    u = _point_off_chain(cfg, rng, F)
    dec = join_decompose(F, A.eta, A, u, omega)
    if dec.b < 1e-6 or dec.a < 1e-3:
        return 0.0
    r_check = dist_w(omega, dec.w, u)
    worst = _rel(r_check - dec.r, dec.r)
    worst = max(worst, dec.sigma.membership_residual(u))
    worst = max(worst, dec.sigma.membership_residual(dec.y))
    worst = max(worst, chordal_sq(dec.y, A.eta(dec.x)))
    worst = max(worst, _rel(dist_w(omega, dec.w, dec.x) - dec.r, dec.r))
    worst = max(worst, _rel(dist_w(omega, dec.w, dec.y) - dec.r, dec.r))
    return worst


def p_join_equations(cfg, rng):
    a = math.exp(rng.uniform(-1.5, 1.5))
    b = math.exp(rng.uniform(-1.5, 1.5))
    rho = math.exp(rng.uniform(-1.0, 1.0))
    X, Y, cc = intercept_distances(a, b, rho)
    worst = _rel(X * Y - rho * rho, rho * rho)
    return max(worst, _rel(X * X - Y * Y - cc, max(1.0, abs(cc), X * X + Y * Y)))


def p_positive_root(cfg, rng):
    b = math.exp(rng.uniform(-1.0, 1.0))
    c = math.exp(rng.uniform(-1.0, 1.0))
    d = c * b ** 4 * (1.0 + math.exp(rng.uniform(-1.0, 2.0)))
    s0 = positive_root(b, c, d)
    coeffs = [1.0 + c, 4 * c * b, 6 * c * b * b, 4 * c * b ** 3, c * b ** 4 - d]
    roots = np.roots(coeffs)
    real_pos = [r.real for r in roots if abs(r.imag) < 1e-8 and r.real > 0]
    if len(real_pos) != 1:
        return 1.0
    resid = abs(s0 ** 4 + c * (s0 + b) ** 4 - d) / abs(d)
    return max(_rel(s0 - real_pos[0], max(s0, 1e-12)), resid)


def p_standard_rcircle(cfg, rng):
    if cfg.k < 2:
        return 0.0
    A = sample_ortho_complement(cfg, rng)
    F = A.F
    u = F.point_at(float(rng.uniform(-2, 2)))
    x = A.sample_points(1, rng)[0]
    std = standard_rcircle(F, A.eta, A, x, u)
    worst = harmonicity_residual(std.u, std.x, std.v, std.y)
    worst = max(worst, std.sigma.membership_residual(std.y))
    worst = max(worst, chordal_sq(std.v, A.eta(u)))
    return worst


def p_standard_intersections(cfg, rng):
    if cfg.k < 2:
        return 0.0
    A = sample_ortho_complement(cfg, rng)
    F = A.F
    u = F.point_at(float(rng.uniform(-2, 2)))
    x1 = A.sample_points(1, rng)[0]
    x2 = A.sample_points(1, rng)[0]
    if chordal_sq(x1, x2) < 1e-4 or chordal_sq(x1, conjugate_pole(F, x2)) < 1e-4:
        return 0.0
    s1 = standard_rcircle(F, A.eta, A, x1, u)
    s2 = standard_rcircle(F, A.eta, A, x2, u)
    worst = max(s2.sigma.membership_residual(s1.u), s2.sigma.membership_residual(s1.v))
    for s in (-1.7, -0.6, 0.5, 1.4):
        p = s1.sigma.point_at(s)
        if min(chordal_sq(p, s1.u), chordal_sq(p, s1.v)) < 1e-3:
            continue
        if s2.sigma.membership_residual(p) < OFF_MARGIN:
            worst = max(worst, 1.0)
    return worst


def p_suspension_foliations(cfg, rng):
    if cfg.k < 2:
        return 0.0
    g = random_moebius(cfg, rng)
    k = cfg.k
    e1 = np.zeros(k - 1, dtype=complex)
    e1[0] = 1.0
    K = _chain_map(g, canonical_chain(k))
    u, v = g(infinity(k)), g(origin(k))
    lam = math.exp(rng.uniform(-0.8, 0.8))
    rho = dist_w(u, v, g(point(e1, 0.0)))
    worst = 0.0
    for _ in range(4):
        theta = rng.uniform(0, 2 * math.pi)
        h = g(point(lam * np.exp(1j * theta) * e1, 0.0))
        # the R-line of the foliation through h passes the opposite pole
        worst = max(worst, chordal_sq(mu(K, u, h), v))
        worst = max(worst, _rel(dist_w(u, v, h) - lam * rho, lam * rho))
    return worst


# ---------------------------------------------------------------------------
# automorphisms suite
# ---------------------------------------------------------------------------

def p_generator_actions(cfg, rng):
    from .core import heis_mul

    k = cfg.k
    p, q = sample_distinct_points(cfg, rng, 2)
    z0 = sample_point(cfg, rng)
    T = make_translation(z0.z, z0.t)
    worst = chordal_sq(T(p), heis_mul(z0, p))
    U = random_unitary(k - 1, rng)
    R = make_rotation(U)
    worst = max(worst, chordal_sq(R(p), point(U @ p.z, p.t)))
    lam = math.exp(rng.uniform(-1, 1))
    D = make_dilation(lam, k)
    worst = max(worst, chordal_sq(D(p), point(lam * p.z, lam * lam * p.t)))
    worst = max(worst, _rel(dist(D(p), D(q)) - lam * dist(p, q), lam * dist(p, q)))
    I = make_inversion(k)
    contract = dist(I(p), I(q)) * gauge(p) * gauge(q)
    worst = max(worst, _rel(contract - dist(p, q), dist(p, q)))
    return worst


def p_form_preservation(cfg, rng):
    g = random_moebius(cfg, rng)
    h = random_moebius(cfg, rng)
    single = (g @ h).form_residual()
    comp = g
    for _ in range(30):
        comp = comp @ random_moebius(cfg, rng)
    # single products must stay below 1e-10, long chains below 1e-8
    return max(single, comp.form_residual() / 100.0)


def p_crt_invariance(cfg, rng):
    quad = sample_admissible_quadruple(cfg, rng)
    g = random_moebius(cfg, rng)
    before = crt(*quad)
    after = crt(*(g(p) for p in quad))
    return before.max_difference(after)


def p_crt_cross_model(cfg, rng):
    quad = sample_admissible_quadruple(cfg, rng)
    return crt(*quad).max_difference(crt_projective(*quad))


def p_conjugation_circles(cfg, rng):
    g = random_moebius(cfg, rng)
    F = sample_chain(cfg, rng)
    imgs = [g(p) for p in F.sample_points(5)]
    F2 = ccircle_through(imgs[0], imgs[1])
    worst = max(F2.membership_residual(p) for p in imgs[2:])
    if cfg.k >= 2:
        # the image circle is pinned by the rebuilt chain through two of its
        # points: the unique R-circle through them meeting that chain again
        # must carry all the other transported points
        sigma = sample_rcircle(cfg, rng)
        pts = [g(p) for p in sigma.sample_points(6)]
        aux = ccircle_through(pts[0], pts[1])
        if aux.membership_residual(pts[2]) > 1e-3:
            sigma2 = rcircle_through_hitting(aux, pts[0], pts[2])
            worst = max(worst, max(sigma2.membership_residual(p) for p in pts[3:]))
    return worst


def p_reflection_involution(cfg, rng):
    F = sample_chain(cfg, rng)
    phi = reflection_in_ccircle(F)
    worst = 0.0
    for _ in range(3):
        x = sample_point(cfg, rng)
        worst = max(worst, chordal_sq(phi(phi(x)), x))
    for tau in (0.0, 1.4, math.inf):
        p = F.point_at(tau)
        worst = max(worst, chordal_sq(phi(p), p))
    if cfg.k >= 2:
        omega = F.point_at(0.6)
        u = _point_off_chain(cfg, rng, F)
        sigma = rcircle_through_hitting(F, omega, u)
        for s in (-1.1, 0.7, math.inf):
            worst = max(worst, sigma.membership_residual(phi(sigma.point_at(s))))
    return worst


def p_lift_roundtrip(cfg, rng):
    p = sample_point(cfg, rng)
    X = lift(p)
    worst = abs(herm(X, X))
    worst = max(worst, chordal_sq(drop(X), p))
    lam = (rng.standard_normal() + 1j * rng.standard_normal()) or 1.0
    worst = max(worst, chordal_sq(drop(lam * X), p))
    worst = max(worst, chordal_sq(drop(lift(infinity(cfg.k))), infinity(cfg.k)))
    worst = max(worst, abs(distance_pairing_constant(cfg.k) - 2.0))
    return worst


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

def _props():
    P = Property
    return [
        # ptolemy
        P("metric_triangle_inequality", "ptolemy", "core",
          "gauge metric and all its inversions satisfy the triangle inequality",
          1e-12, 2000, p_metric_triangle),
        P("ptolemy_inequality", "ptolemy", "core",
          "diagonal distance products never exceed the sum of the side products"
          " (each trial sweeps a batch of 100 quadruples)",
          1e-9, 1000, p_ptolemy_inequality),
        P("rcircle_ptolemy_equality", "ptolemy", "core",
          "cyclically ordered quadruples on an R-circle satisfy the Ptolemy equality",
          1e-9, 2000, p_rcircle_equality, min_k=2),
        P("ccircle_squared_ptolemy_equality", "ptolemy", "core",
          "ordered quadruples on a chain satisfy the squared Ptolemy equality",
          1e-9, 2000, p_ccircle_squared_equality),
        P("metric_double_inversion", "ptolemy", "core",
          "inverting at a point and back at the old infinity returns the metric",
          1e-9, 2000, p_metric_double_inversion),
        # distance_formula
        P("distance_formula_r4", "distance_formula", "circles",
          "fourth powers satisfy r^4 = a^4 + b^4 for the chain projection",
          1e-9, 10000, p_distance_formula, min_k=2),
        P("wharm_product_identity", "distance_formula", "circles",
          "|xz| |zy| = |zu|^2 in the metric inverted at the involution image",
          1e-8, 1000, p_wharm_product, min_k=2),
        # axioms_e
        P("ec_uniqueness", "axioms_e", "circles",
          "through two distinct points there is exactly one chain",
          1e-8, 1000, p_ec_uniqueness),
        P("er_existence_uniqueness", "axioms_e", "circles",
          "one R-circle through a chain point and an outside point meets the chain again",
          1e-8, 1000, p_er_existence_uniqueness, min_k=2),
        # axioms_o
        P("oc_harmonicity", "axioms_o", "circles",
          "harmonic pairs on an orthogonal R-circle are harmonic against every chain point",
          1e-8, 1000, p_oc_harmonicity, min_k=2),
        P("or_harmonicity", "axioms_o", "circles",
          "harmonic pairs on a chain are harmonic against every point of an orthogonal R-circle",
          1e-8, 1000, p_or_harmonicity, min_k=2),
        # circles
        P("rc_intersection_bound", "circles", "circles",
          "a chain and an R-circle share at most two points",
          0.5, 300, p_rc_intersection_bound, min_k=2),
        P("conjugate_pole_cocircular", "circles", "circles",
          "the conjugate pole closes harmonic co-circular 4-tuples over the whole chain",
          1e-8, 200, p_conjugate_pole, min_k=2),
        P("moebius_involution_crt_identity", "circles", "circles",
          "cross-ratios against the two poles swap under the chain involution",
          1e-9, 1000, p_moebius_involution_crt, min_k=2),
        P("eta_involution", "circles", "circles",
          "the induced chain involution squares to the identity",
          1e-8, 500, p_eta_involution, min_k=2),
        P("eta_preserves_crt", "circles", "circles",
          "the induced chain involution preserves cross-ratio triples",
          1e-9, 500, p_eta_preserves_crt, min_k=2),
        P("sphere_bisector_form", "circles", "circles",
          "a sphere between two points is the bisector once one of its points is remote",
          1e-8, 500, p_sphere_bisector),
        P("filling_sphere_rcircles", "circles", "circles",
          "every sphere point lies on an R-circle through the chain intercepts",
          1e-8, 400, p_filling_sphere, min_k=2),
        P("property_u_fourth_point", "circles", "circles",
          "Ptolemy equality with three points on an R-circle forces the fourth onto it",
          1e-8, 400, p_property_u, min_k=2),
        # foliation
        P("base_projection_isometric", "foliation", "foliation",
          "the base projection is 1-Lipschitz and isometric on R-lines",
          1e-10, 1000, p_base_projection, min_k=2),
        P("base_dist_welldefined", "foliation", "foliation",
          "fiber distance is independent of the sample point and matches the chart",
          1e-10, 500, p_base_dist_welldefined, min_k=2),
        P("base_parallelogram_law", "foliation", "foliation",
          "base distances satisfy the parallelogram law",
          1e-10, 1000, p_base_parallelogram, min_k=2),
        P("base_midpoint_uniqueness", "foliation", "foliation",
          "base geodesics are unique: off-segment detours are strictly longer",
          1e-10, 300, p_base_midpoint, min_k=2),
        P("busemann_affine_fibers", "foliation", "foliation",
          "Busemann functions are affine on R-lines and constant on fibers",
          1e-6, 300, p_busemann, min_k=2),
        P("vertical_shift_isometry", "foliation", "foliation",
          "vertical shifts are isometries with displacement sqrt(|s|)",
          1e-12, 1000, p_vertical_shift),
        P("pure_homothety_scaling", "foliation", "foliation",
          "pure homotheties scale the inverted metric and preserve lines through the center",
          1e-8, 500, p_pure_homothety),
        P("lift_additivity", "foliation", "foliation",
          "the polygon lift shift is additive under splitting along a segment",
          1e-12, 1000, p_lift_additivity, min_k=2),
        P("lift_homothety_scaling", "foliation", "foliation",
          "scaling a polygon scales the lift displacement linearly",
          1e-12, 1000, p_lift_homothety, min_k=2),
        P("lift_triangle_area_ratio", "foliation", "foliation",
          "moving a triangle vertex along a side scales the squared displacement by the ratio",
          1e-10, 500, p_lift_triangle_ratio, min_k=2),
        P("lift_diagonal_split", "foliation", "foliation",
          "the two triangles of a parallelogram diagonal have equal lift shifts",
          1e-12, 1000, p_lift_diagonal_split, min_k=2),
        P("lift_square_displacement", "foliation", "foliation",
          "the unit square lifts to the vertical shift by -4, displacement 2",
          1e-12, 200, p_lift_square, min_k=2),
        # holonomy
        P("curvature_golden_values", "holonomy", "tangent",
          "the adapted-frame curvature values match their exact constants",
          1e-12, 1, p_curvature_golden, min_k=2),
        P("curvature_symmetries", "holonomy", "tangent",
          "the curvature tensor has all its symmetries and satisfies the Bianchi sum",
          1e-12, 2000, p_curvature_symmetries),
        P("polarization_identity", "holonomy", "tangent",
          "the 14-term polarization equals six times the tensor",
          1e-10, 1000, p_polarization),
        P("curvature_operator_spectrum", "holonomy", "tangent",
          "the curvature operator has eigenvalues -4 (once) and -1 (2k-2 times)",
          1e-10, 300, p_curvature_spectrum),
        P("holonomy_identity", "holonomy", "tangent",
          "R(x, Jx) z = 2 Jz for z in the complex orthogonal complement",
          1e-12, 1000, p_holonomy_identity, min_k=2),
        P("sectional_bounds", "holonomy", "tangent",
          "sectional curvatures stay pinched between -4 and -1",
          1e-10, 2000, p_sectional_bounds),
        P("unitary_reflection_transitivity", "holonomy", "tangent",
          "words of unitary reflections act transitively on the unit sphere",
          1e-10, 1000, p_reflection_transitivity),
        # ortho
        P("ortho_membership_tests_agree", "ortho", "ortho",
          "the three-point and two-sphere membership tests for the complement agree",
          1e-8, 1000, p_ortho_membership_agree, min_k=2),
        P("ortho_reflection_stability", "ortho", "ortho",
          "the complement contains the conjugate pole of each of its points",
          1e-8, 500, p_ortho_reflection_stability, min_k=2),
        P("canonical_fiber_in_complement", "ortho", "ortho",
          "canonical fibers lie in the complement, are reflection-stable and disjoint",
          1e-8, 300, p_canonical_fiber, min_k=2),
        P("orthogonality_symmetric_commuting", "ortho", "ortho",
          "mutual orthogonality is symmetric and the two reflections commute",
          1e-8, 500, p_orthogonal_commute, min_k=2),
        P("fixset_equals_intersection", "ortho", "ortho",
          "the fixed set of the composed reflections is the intersection of complements",
          1e-8, 500, p_fixset_intersection, min_k=2),
        P("nonfiber_chain_counterexample", "ortho", "ortho",
          "some chain inside the complement is not a canonical fiber",
          1e-8, 50, p_nonfiber_chain, min_k=3),
        P("fiber_involution_preserves", "ortho", "ortho",
          "reflections across canonical fibers preserve the complement and its fibration",
          1e-8, 300, p_fiber_involution, min_k=2),
        # join
        P("join_decompose_radius", "join", "ortho",
          "the join decomposition puts the query point on the mid-sphere, |wu| = r",
          1e-9, 1000, p_join_decompose, min_k=2),
        P("join_equations_algebra", "join", "ortho",
          "the closed-form intercepts solve the product and squared-difference equations",
          1e-12, 2000, p_join_equations),
        P("positive_root_independent", "join", "ortho",
          "the bracketing quartic root matches an independent polynomial solver",
          1e-10, 1000, p_positive_root),
        P("standard_rcircle_harmonic", "join", "ortho",
          "standard circles carry the harmonic 4-tuple of chain and subspace intercepts",
          1e-8, 500, p_standard_rcircle, min_k=2),
        P("standard_rcircles_intersection", "join", "ortho",
          "distinct standard circles meet only inside the chain and the subspace",
          1e-8, 200, p_standard_intersections, min_k=2),
        P("suspension_foliations", "join", "ortho",
          "suspension fibers are R-lines through the poles at scaled constant distance",
          1e-8, 300, p_suspension_foliations, min_k=2),
        # automorphisms
        P("generator_chart_actions", "automorphisms", "projective",
          "translations, rotations, dilations and the inversion act by their chart formulas",
          1e-9, 1000, p_generator_actions),
        P("form_preservation_drift", "automorphisms", "projective",
          "compositions keep preserving the Hermitian form within drift bounds",
          1e-10, 200, p_form_preservation),
        P("crt_moebius_invariance", "automorphisms", "core",
          "cross-ratio triples are invariant under boundary automorphisms",
          1e-9, 2000, p_crt_invariance),
        P("crt_cross_model_agreement", "automorphisms", "projective",
          "chart and projective cross-ratio triples agree",
          1e-9, 10000, p_crt_cross_model),
        P("conjugation_preserves_circles", "automorphisms", "projective",
          "automorphisms map chains to chains and R-circles to R-circles",
          1e-8, 500, p_conjugation_circles),
        P("reflection_involution_fixedset", "automorphisms", "projective",
          "chain reflections are involutions fixing the chain and its crossing R-circles",
          1e-8, 500, p_reflection_involution),
        P("lift_drop_roundtrip", "automorphisms", "projective",
          "null lifts are null, projectively stable, and invert back to the point",
          1e-10, 2000, p_lift_roundtrip),
    ]


REGISTRY = _props()

SUITE_NAMES = [
    "axioms_e", "axioms_o", "ptolemy", "distance_formula", "circles",
    "foliation", "holonomy", "ortho", "join", "automorphisms",
]


def suite_properties(suite: str):
    if suite == "all":
        return list(REGISTRY)
    return [p for p in REGISTRY if p.suite == suite]
