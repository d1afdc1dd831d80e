"""Closed-form collision kernels of the 2D periodic Lorentz gas.

Everything here is an explicit formula: the post-collision density
phi0(xi, w, z), its integral over the previous exit parameter
(phi0_inner), the first-collision density phi(xi, w) built from the
auxiliary functions psi/F/G and the dilogarithm, the three free-path
laws, and the large-xi asymptotics.  All evaluators accept scalars or
numpy arrays and are pure; scalar input yields a Python float.

Conventions: xi is the macroscopic free path length, w the impact
parameter of the next collision, z minus the exit parameter of the
previous one; all of w, z live in (-1, 1).
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from . import quadrature
from .geometry import (Direction, ScatteringModel, angle_between,
                       cross_section, exit_parameter, impact_parameter)

PI2 = math.pi * math.pi
SIX_OVER_PI2 = 6.0 / PI2
TWELVE_OVER_PI2 = 12.0 / PI2

# |w + z| below this routes to the degenerate branch of phi0: the general
# branch divides by |w + z| and suffers catastrophic cancellation there.
DEGENERATE_EPS = 1e-12

# |w| beyond this uses the continuous boundary extension of phi: the
# interior branches contain log(1 - |w|) terms that lose all precision.
BOUNDARY_EPS = 1e-9

# Test hook: added to the middle-branch value of phi; selftest uses it to
# prove the branch-continuity check has teeth.  Leave at 0.0.
_PHI_BRANCH2_OFFSET = 0.0


def _prepare(*args):
    """Broadcast arguments to float arrays; report whether all scalar."""
    scalar = all(np.ndim(a) == 0 for a in args)
    arrs = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in args))
    return ([np.atleast_1d(a) for a in arrs], scalar)


def _finish(out, scalar):
    return float(out[0]) if scalar else out


def upsilon(x):
    """Clamp to [0, 1]: 0 for x <= 0, x in between, 1 for x >= 1."""
    (x,), scalar = _prepare(x)
    return _finish(np.clip(x, 0.0, 1.0), scalar)


def support_xi_max(w, z):
    """Upper endpoint of the xi-support of phi0(., w, z).

    phi0 is positive iff 1/xi > 1 + max(|w|,|z|) - |w+z|, so the support
    ends at the reciprocal of that quantity when it is positive and is
    unbounded otherwise (possible only for |w|, |z| -> 1 with matching
    signs).
    """
    (w, z), scalar = _prepare(w, z)
    if np.any(np.abs(w) >= 1.0) or np.any(np.abs(z) >= 1.0):
        raise ValueError("require |w| < 1 and |z| < 1")
    s = np.abs(w + z)
    denom = 1.0 + np.maximum(np.abs(w), np.abs(z)) - s
    degenerate = s <= DEGENERATE_EPS
    denom = np.where(degenerate, 1.0 + np.abs(w), denom)
    out = np.where(denom > 0.0, 1.0 / np.where(denom > 0.0, denom, 1.0), np.inf)
    return _finish(out, scalar)


def phi0(xi, w, z):
    """Transition density in path/impact coordinates, Eq. form:

        (6/pi^2) * Upsilon(1 + (1/xi - max(|w|,|z|) - 1) / |w+z|)

    with the exact limit branch on |w+z| ~ 0: the value is 0 when
    1/xi < 1 + |w| and 6/pi^2 otherwise.
    """
    (xi, w, z), scalar = _prepare(xi, w, z)
    if np.any(xi <= 0.0):
        raise ValueError("require xi > 0")
    if np.any(np.abs(w) >= 1.0) or np.any(np.abs(z) >= 1.0):
        raise ValueError("require |w| < 1 and |z| < 1")
    s = np.abs(w + z)
    degenerate = s <= DEGENERATE_EPS
    safe_s = np.where(degenerate, 1.0, s)
    xinv = 1.0 / xi
    arg = 1.0 + (xinv - np.maximum(np.abs(w), np.abs(z)) - 1.0) / safe_s
    general = np.clip(arg, 0.0, 1.0)
    limit = np.where(xinv < 1.0 + np.abs(w), 0.0, 1.0)
    out = SIX_OVER_PI2 * np.where(degenerate, limit, general)
    return _finish(out, scalar)


def _xlog(t, num, den):
    """t * log(num/den) with the t -> 0 limit forced to exactly 0.

    The factor t and the log denominator vanish together at the branch
    edges of phi0_inner, so guarding on t removes the 0 * inf there.
    """
    den = np.maximum(den, 1e-300)
    num = np.maximum(num, 1e-300)
    ratio = num / den
    safe = np.where(t != 0.0, ratio, 1.0)
    return np.where(t != 0.0, t * np.log(safe), 0.0)


def phi0_inner(xi, w):
    """Integral of phi0(xi, w, z) over z in (-1, 1), in closed form.

    Four branches with boundaries at xi = 1/2, 1/(1+|w|), 1/(1-|w|);
    continuous across all of them.
    """
    (xi, w), scalar = _prepare(xi, w)
    if np.any(xi <= 0.0):
        raise ValueError("require xi > 0")
    if np.any(np.abs(w) >= 1.0):
        raise ValueError("require |w| < 1")
    aw = np.abs(w)
    xinv = 1.0 / xi
    out = np.zeros_like(xi)

    m1 = xi <= 0.5
    out[m1] = TWELVE_OVER_PI2

    r2 = 1.0 / (1.0 + aw)
    r3 = 1.0 / (1.0 - aw)
    m2 = (~m1) & (xi < r2)
    if np.any(m2):
        xv, a = xinv[m2], aw[m2]
        out[m2] = (TWELVE_OVER_PI2 * (xv - 1.0)
                   + SIX_OVER_PI2 * _xlog(xv - 1.0 + a, 1.0 + a, xv - 1.0 + a)
                   + SIX_OVER_PI2 * _xlog(xv - 1.0 - a, 1.0 - a, xv - 1.0 - a))

    m3 = (~m1) & (xi >= r2) & (xi < r3)
    if np.any(m3):
        xv, a = xinv[m3], aw[m3]
        t1 = _xlog(xv - 1.0 + a, 1.0 + a, 2.0 * a) + (xv - 1.0 + a)
        t2 = _xlog(xv - 1.0 - a, 2.0 * a, 1.0 + a - xv)
        out[m3] = SIX_OVER_PI2 * (t1 + t2)

    return _finish(np.maximum(out, 0.0), scalar)


_LI2_COEFFS = [1.0 / (k * k) for k in range(60, 0, -1)]


def _li2_series(x):
    """Power series sum x^k/k^2, valid to 1e-16 for |x| <= 1/2.

    60 Horner terms: the first neglected term is below (1/2)^61, far
    under the 1e-16 truncation target.
    """
    acc = np.zeros_like(x)
    for c in _LI2_COEFFS:
        acc = (acc + c) * x
    return acc


def dilog(x):
    """Real dilogarithm Li2(x) for |x| <= 1.

    Series on |x| <= 1/2; Euler reflection on (1/2, 1]; Landen's
    transform on [-1, -1/2), whose argument x/(x-1) lands back in the
    series range.
    """
    (x,), scalar = _prepare(x)
    if np.any(np.abs(x) > 1.0):
        raise ValueError("dilog requires |x| <= 1")
    out = np.empty_like(x)

    m_series = np.abs(x) <= 0.5
    out[m_series] = _li2_series(x[m_series])

    m_one = x >= 1.0 - 1e-16
    out[m_one] = PI2 / 6.0

    m_upper = (x > 0.5) & ~m_one
    if np.any(m_upper):
        xu = x[m_upper]
        out[m_upper] = (PI2 / 6.0 - np.log(xu) * np.log1p(-xu)
                        - _li2_series(1.0 - xu))

    m_lower = x < -0.5
    if np.any(m_lower):
        xl = x[m_lower]
        out[m_lower] = (-_li2_series(xl / (xl - 1.0))
                        - 0.5 * np.log1p(-xl) ** 2)

    return _finish(out, scalar)


def psi(a):
    """Antiderivative of (1/a - 1) log|1/a - 1| vanishing at a = 1."""
    (a,), scalar = _prepare(a)
    if np.any(a <= 0.0):
        raise ValueError("psi requires a > 0")
    out = np.zeros_like(a)

    m_lt = a < 1.0
    if np.any(m_lt):
        al = a[m_lt]
        la = np.log(al)
        out[m_lt] = (-dilog(al) + (1.0 - al) * (np.log1p(-al) - la)
                     + la - 0.5 * la * la + PI2 / 6.0)

    m_gt = a > 1.0
    if np.any(m_gt):
        ag = a[m_gt]
        out[m_gt] = (dilog(1.0 / ag) - (ag - 1.0) * np.log1p(-1.0 / ag)
                     + np.log(ag) - PI2 / 6.0)

    return _finish(out, scalar)


def f_aux(xi, w):
    """Middle-branch antiderivative F, defined for 1/2 <= xi <= 1/(1+|w|)."""
    (xi, w), scalar = _prepare(xi, w)
    aw = np.abs(w)
    if np.any(aw >= 1.0):
        raise ValueError("require |w| < 1")
    if np.any(xi < 0.5 - 1e-9) or np.any(xi > 1.0 / (1.0 + aw) + 1e-9):
        raise ValueError("f_aux defined on 1/2 <= xi <= 1/(1+|w|)")
    out = (psi(xi * (1.0 + aw)) + psi(xi * (1.0 - aw)) - 2.0 * np.log(xi)
           + 2.0 * (1.0 + aw * np.log((1.0 - aw) / (1.0 + aw))) * xi)
    return _finish(out, scalar)


def g_aux(xi, w):
    """Outer-branch antiderivative G, defined for 1/(1+|w|) <= xi <= 1/(1-|w|)."""
    (xi, w), scalar = _prepare(xi, w)
    aw = np.abs(w)
    if np.any(aw >= 1.0):
        raise ValueError("require |w| < 1")
    if np.any(xi < 1.0 / (1.0 + aw) - 1e-9) or np.any(xi > 1.0 / (1.0 - aw) + 1e-9):
        raise ValueError("g_aux defined on 1/(1+|w|) <= xi <= 1/(1-|w|)")
    out = (psi(xi * (1.0 + aw)) - np.log(xi)
           + (1.0 - aw + 2.0 * _xlog(aw, 2.0 * aw, 1.0 + aw)) * xi)
    return _finish(out, scalar)


def _phi_boundary(xi):
    """Continuous extension of phi at |w| = 1."""
    out = np.empty_like(xi)
    m = xi <= 0.5
    out[m] = 1.0 - TWELVE_OVER_PI2 * xi[m]
    if np.any(~m):
        xb = xi[~m]
        out[~m] = 1.0 + SIX_OVER_PI2 * (psi(2.0 * xb) - np.log(2.0 * xb) - 1.0)
    return out


def phi(xi, w):
    """First-collision density in path/impact coordinates.

    Piecewise over xi with boundaries 1/2, 1/(1+|w|), 1/(1-|w|); value in
    [0, 1], non-increasing in xi, with compact support [0, 1/(1-|w|)].
    |w| = 1 (and anything within 1e-9 of it) uses the continuous
    boundary extension.
    """
    (xi, w), scalar = _prepare(xi, w)
    if np.any(xi <= 0.0):
        raise ValueError("require xi > 0")
    aw = np.abs(w)
    if np.any(aw > 1.0):
        raise ValueError("require |w| <= 1")
    out = np.zeros_like(xi)

    near1 = aw >= 1.0 - BOUNDARY_EPS
    if np.any(near1):
        out[near1] = _phi_boundary(xi[near1])

    interior = ~near1
    m1 = interior & (xi <= 0.5)
    out[m1] = 1.0 - TWELVE_OVER_PI2 * xi[m1]

    r2 = np.where(interior, 1.0 / (1.0 + aw), np.inf)
    m2 = interior & (xi > 0.5) & (xi <= r2)
    if np.any(m2):
        xv, a = xi[m2], aw[m2]
        out[m2] = (1.0 + SIX_OVER_PI2 * (f_aux(xv, a) - f_aux(0.5, a) - 1.0)
                   + _PHI_BRANCH2_OFFSET)

    r3 = np.where(interior, 1.0 / (1.0 - np.where(interior, aw, 0.0)), np.inf)
    m3 = interior & (xi > r2) & (xi < r3)
    if np.any(m3):
        xv, a = xi[m3], aw[m3]
        out[m3] = SIX_OVER_PI2 * (g_aux(xv, a) - g_aux(1.0 / (1.0 - a), a))

    return _finish(np.clip(out, 0.0, 1.0), scalar)


# ---------------------------------------------------------------------------
# Collision kernels in direction space
# ---------------------------------------------------------------------------

def first_kernel(model: ScatteringModel, v: Direction, xi: float,
                 vplus: Direction) -> float:
    """Density p(v, xi, v+) = sigma(v, v+) * phi(xi, b(v, v+)).

    Inadmissible exit directions get density 0 by convention.
    """
    if xi <= 0.0:
        raise ValueError("require xi > 0")
    if not model.admissible(v, vplus):
        return 0.0
    theta = angle_between(v, vplus)
    b = impact_parameter(model, v, vplus)
    return cross_section(model, theta) * phi(xi, b)


def transition_kernel(model: ScatteringModel, v0: Direction, v: Direction,
                      xi: float, vplus: Direction) -> float:
    """Density sigma(v, v+) * phi0(xi, b(v, v+), -s(v, v0)).

    v0 is the velocity before the previous collision; its exit parameter
    supplies the memory variable z.  Inadmissible pairs give 0.
    """
    if xi <= 0.0:
        raise ValueError("require xi > 0")
    if not (model.admissible(v0, v) and model.admissible(v, vplus)):
        return 0.0
    z = -exit_parameter(model, v, v0)
    b = impact_parameter(model, v, vplus)
    if abs(z) >= 1.0 - 1e-12 or abs(b) >= 1.0 - 1e-12:
        return 0.0
    theta = angle_between(v, vplus)
    return cross_section(model, theta) * phi0(xi, b, z)


# ---------------------------------------------------------------------------
# Free path length laws
# ---------------------------------------------------------------------------

def _w_breakpoints(xi: float) -> list[float]:
    """Kinks of w -> phi/phi0_inner at fixed xi, inside (0, 1)."""
    pts = []
    if 0.5 < xi < 1.0:
        pts.append(1.0 / xi - 1.0)
    if xi > 1.0:
        pts.append(1.0 - 1.0 / xi)
    return pts


def fpl_between(xi: float) -> float:
    """Density of the free path length between consecutive collisions.

    Computed as half the double integral of phi0 over (w, z), i.e. half
    the w-integral of phi0_inner; by symmetry this is the integral over
    w in (0, 1).
    """
    if xi <= 0.0:
        raise ValueError("require xi > 0")
    return quadrature.integrate_between(
        lambda w: phi0_inner(xi, w), 0.0, 1.0,
        breakpoints=_w_breakpoints(xi), abs_tol=1e-11)


def fpl_generic(xi: float) -> float:
    """Density of the free path length from a generic interior point."""
    if xi <= 0.0:
        raise ValueError("require xi > 0")
    return 2.0 * quadrature.integrate_between(
        lambda w: phi(xi, w), 0.0, 1.0,
        breakpoints=_w_breakpoints(xi), abs_tol=1e-11)


def fpl_lattice(xi):
    """Density of the free path length from a lattice point.

    Integral of phi0(xi, 0, z) over z, which collapses to the closed
    form (12/pi^2) c (1 - log c) with c = 1/xi - 1 on 1/2 < xi < 1,
    12/pi^2 below and 0 above.
    """
    (xi,), scalar = _prepare(xi)
    if np.any(xi <= 0.0):
        raise ValueError("require xi > 0")
    out = np.zeros_like(xi)
    out[xi <= 0.5] = TWELVE_OVER_PI2
    mid = (xi > 0.5) & (xi < 1.0)
    if np.any(mid):
        c = 1.0 / xi[mid] - 1.0
        out[mid] = TWELVE_OVER_PI2 * c * (1.0 - np.log(c))
    return _finish(out, scalar)


# ---------------------------------------------------------------------------
# Large-xi asymptotics
# ---------------------------------------------------------------------------

def _require_tail(xi):
    if np.any(xi <= 1.0):
        raise ValueError("asymptotic forms require xi > 1")


def phi0_asymptotic(xi, w, z):
    """Leading term (3/pi^2)(1 - max(u, y))/xi on wz > 0, u, y in [0, 1)."""
    (xi, w, z), scalar = _prepare(xi, w, z)
    _require_tail(xi)
    u = xi * (1.0 - np.abs(w))
    y = xi * (1.0 - np.abs(z))
    on = (w * z > 0.0) & (u < 1.0) & (y < 1.0)
    out = np.where(on, 3.0 / PI2 * (1.0 - np.maximum(u, y)) / xi, 0.0)
    return _finish(out, scalar)


def inner_asymptotic(xi, w):
    """Leading term (3/(2 pi^2))(1 - u^2)/xi^2 of phi0_inner for u in [0, 1)."""
    (xi, w), scalar = _prepare(xi, w)
    _require_tail(xi)
    u = xi * (1.0 - np.abs(w))
    out = np.where(u < 1.0, 1.5 / PI2 * (1.0 - u * u) / (xi * xi), 0.0)
    return _finish(out, scalar)


def phi_asymptotic(xi, w):
    """Leading term (3/(2 pi^2))(1 - u)^2/xi of phi for u in [0, 1)."""
    (xi, w), scalar = _prepare(xi, w)
    _require_tail(xi)
    u = xi * (1.0 - np.abs(w))
    out = np.where(u < 1.0, 1.5 / PI2 * (1.0 - u) ** 2 / xi, 0.0)
    return _finish(out, scalar)


# ---------------------------------------------------------------------------
# Tabulated distribution functions for the free-path laws
# ---------------------------------------------------------------------------

def _simpson_cdf_nodes(pdf_vec, lo, hi, n, kinks):
    """Nodes and cumulative integral of pdf on [lo, hi], Simpson panels.

    Panel edges are aligned on the kinks so each panel is smooth; the
    cumulative values at the nodes then carry ~h^4 accuracy.
    """
    nodes = np.unique(np.concatenate([
        np.linspace(lo, hi, n),
        np.asarray([k for k in kinks if lo < k < hi], dtype=float)]))
    mids = 0.5 * (nodes[:-1] + nodes[1:])
    f_nodes = pdf_vec(nodes)
    f_mids = pdf_vec(mids)
    h = np.diff(nodes)
    masses = h / 6.0 * (f_nodes[:-1] + 4.0 * f_mids + f_nodes[1:])
    cum = np.concatenate([[0.0], np.cumsum(masses)])
    return nodes, cum


def fpl_generic_tail(xi0: float) -> float:
    """Exact tail mass of the generic law beyond xi0 > 1.

    Substituting u = 1/eta turns the semi-infinite integral into one
    over the compact interval (0, 1/xi0]; the integrand extends
    continuously to u = 0.
    """
    if xi0 <= 1.0:
        raise ValueError("tail formula assumes xi0 > 1")

    def integrand(u):
        u = np.atleast_1d(u)
        return np.array([fpl_generic(1.0 / v) / (v * v) for v in u])

    return quadrature.integrate_between(integrand, 0.0, 1.0 / xi0,
                                        abs_tol=1e-10)


@lru_cache(maxsize=4)
def fpl_generic_table(table_end: float = 40.0, n: int = 2049):
    """Dense table of the generic free-path pdf on [0, table_end]."""
    xs = np.unique(np.concatenate([
        np.linspace(1e-9, table_end, n), [0.5, 1.0]]))
    vals = np.array([fpl_generic(x) for x in xs])
    return xs, vals


@lru_cache(maxsize=4)
def _fpl_generic_tail_table(table_end: float = 40.0, n: int = 513):
    """Cumulative tail mass in the variable u = 1/xi, for xi > table_end.

    tail(xi) = integral of the pdf over (xi, inf), which after u = 1/eta
    is the integral of pdf(1/u)/u^2 over (0, 1/xi); tabulating that
    cumulative once makes tail queries O(1).
    """
    us = np.linspace(0.0, 1.0 / table_end, n)

    def g(u):
        return fpl_generic(1.0 / u) / (u * u) if u > 1e-12 else 1.0 / PI2

    g_nodes = np.array([g(u) for u in us])
    g_mids = np.array([g(u) for u in 0.5 * (us[:-1] + us[1:])])
    h = np.diff(us)
    masses = h / 6.0 * (g_nodes[:-1] + 4.0 * g_mids + g_nodes[1:])
    return us, np.concatenate([[0.0], np.cumsum(masses)])


def fpl_generic_tail_fast(xi0: float, table_end: float = 40.0) -> float:
    """Interpolated tail mass of the generic law beyond xi0 >= table_end."""
    us, cum = _fpl_generic_tail_table(table_end)
    return float(np.interp(1.0 / xi0, us, cum))


@lru_cache(maxsize=4)
def fpl_generic_cdf(table_end: float = 40.0, n: int = 2049) -> quadrature.PiecewiseCdf:
    """Distribution function of the generic free-path law.

    Table on [0, table_end] (Simpson on the dense pdf grid), tabulated
    compact-support tail integral beyond.
    """
    xs, pdf = fpl_generic_table(table_end, n)
    mids = 0.5 * (xs[:-1] + xs[1:])
    pdf_mids = np.array([fpl_generic(x) for x in mids])
    h = np.diff(xs)
    masses = h / 6.0 * (pdf[:-1] + 4.0 * pdf_mids + pdf[1:])
    cum = np.concatenate([[0.0], np.cumsum(masses)])
    # The table mass plus the exact tail should reproduce the unit total;
    # rescale the sub-ppm quadrature residue so the cdf is continuous at
    # the splice.
    tail_at_end = fpl_generic_tail(float(xs[-1]))
    scale = (1.0 - tail_at_end) / cum[-1]
    cum = cum * scale
    nodes = np.concatenate([[0.0], xs])
    values = np.concatenate([[0.0], cum])
    return quadrature.PiecewiseCdf(
        nodes=nodes, values=values,
        tail=lambda x: fpl_generic_tail_fast(x, table_end))


@lru_cache(maxsize=4)
def fpl_between_cdf(table_end: float = 40.0, n: int = 2049) -> quadrature.PiecewiseCdf:
    """Distribution function of the between-collision law.

    Uses the exact identity: the tail mass of the between-collision law
    beyond xi equals half the generic pdf there, so the cdf is
    1 - phi(xi)/2 with no quadrature in xi at all.
    """
    xs, pdf = fpl_generic_table(table_end, n)
    nodes = np.concatenate([[0.0], xs])
    values = 1.0 - 0.5 * np.concatenate([[2.0], pdf])
    return quadrature.PiecewiseCdf(nodes=nodes, values=values,
                                   tail=lambda x: 0.5 * fpl_generic(x))


@lru_cache(maxsize=4)
def fpl_lattice_cdf(n: int = 2049) -> quadrature.PiecewiseCdf:
    """Distribution function of the lattice free-path law (support [0, 1])."""

    def pdf_vec(x):
        return np.asarray(fpl_lattice(np.maximum(x, 1e-12)))

    nodes, cum = _simpson_cdf_nodes(pdf_vec, 0.0, 1.0, n, kinks=[0.5])
    cum = cum / cum[-1]
    return quadrature.PiecewiseCdf(nodes=nodes, values=cum, tail=None)


@lru_cache(maxsize=4)
def first_impact_marginal_cdf(n: int = 257) -> quadrature.PiecewiseCdf:
    """Distribution of the signed impact parameter at the first collision.

    Marginal density m(w) of the joint phi(xi, w); it diverges
    logarithmically at |w| = 1 (long corridor flights end in grazing
    hits), but its integral is finite and totals 1.
    """

    def m_of_w(w):
        # Capping |w| away from 1 truncates ~1e-6 of mass, far below the
        # resolution any KS comparison needs.
        aw = min(abs(float(w)), 1.0 - 1e-6)
        end = 1.0 / (1.0 - aw)
        return quadrature.integrate_between(
            lambda x: phi(x, aw), 1e-12, end,
            breakpoints=[0.5, 1.0 / (1.0 + aw)], abs_tol=1e-10)

    half = (n + 1) // 2
    grid = np.unique(np.concatenate([
        np.linspace(0.0, 0.98, half), 1.0 - np.geomspace(0.02, 1e-6, half)]))
    nodes = np.concatenate([-grid[::-1], grid[1:]])
    vals = np.array([m_of_w(x) for x in nodes])
    mids = 0.5 * (nodes[:-1] + nodes[1:])
    vals_mid = np.array([m_of_w(x) for x in mids])
    h = np.diff(nodes)
    masses = h / 6.0 * (vals[:-1] + 4.0 * vals_mid + vals[1:])
    cum = np.concatenate([[0.0], np.cumsum(masses)])
    cum = cum / cum[-1]
    return quadrature.PiecewiseCdf(nodes=nodes, values=cum, tail=None)
