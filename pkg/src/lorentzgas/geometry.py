"""Directions on the circle and the planar scattering-map formalism.

Directions are stored as angles, not Cartesian pairs, so unit norm is
exact by construction and angles between directions are exact modulo
floating point; Cartesian views are computed on demand.  Row-vector
convention throughout: a 2x2 matrix K acts on a direction u as u @ K.

A scattering model maps incoming boundary data (v, w) with v.w < 0 to
outgoing data with v.w > 0.  Specular reflection is the built-in model;
generic models supply their maps as callables and get the cross section
by central finite differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Direction:
    """Unit vector on the circle, stored as an angle in [0, 2*pi)."""

    phi: float

    def __post_init__(self):
        object.__setattr__(self, "phi", float(self.phi) % TWO_PI)

    @classmethod
    def from_xy(cls, x: float, y: float) -> "Direction":
        return cls(math.atan2(y, x))

    @property
    def x(self) -> float:
        return math.cos(self.phi)

    @property
    def y(self) -> float:
        return math.sin(self.phi)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y])

    def rotated(self, angle: float) -> "Direction":
        return Direction(self.phi + angle)

    def opposite(self) -> "Direction":
        return Direction(self.phi + math.pi)

    def dot(self, other: "Direction") -> float:
        return math.cos(other.phi - self.phi)

    def isclose(self, other: "Direction", tol: float = 1e-12) -> bool:
        d = (other.phi - self.phi) % TWO_PI
        return min(d, TWO_PI - d) <= tol


E1 = Direction(0.0)
E2 = Direction(0.5 * math.pi)


def angle_between(v: Direction, u: Direction) -> float:
    """Angle in [0, 2*pi) measured counter-clockwise from v to u."""
    return (u.phi - v.phi) % TWO_PI


def rotation_to_e1(v: Direction) -> np.ndarray:
    """Rotation matrix K(v) with v @ K(v) = e1 (row-vector convention)."""
    c, s = v.x, v.y
    return np.array([[c, -s], [s, c]])


def specular_reflect(v: Direction, w: Direction) -> tuple[Direction, Direction]:
    """Reflect incoming velocity v at boundary point w: v - 2(v.w)w.

    Requires incoming data, v.w < 0; the outgoing pair (v', w) has
    v'.w > 0.
    """
    vw = v.dot(w)
    if vw >= 0.0:
        raise ValueError("specular_reflect requires incoming data (v.w < 0)")
    vx = v.x - 2.0 * vw * w.x
    vy = v.y - 2.0 * vw * w.y
    return Direction.from_xy(vx, vy), w


def _specular_theta_map(v: Direction, w: Direction):
    return specular_reflect(v, w)


def _specular_beta_minus(v: Direction, u: Direction) -> Direction:
    # w = (u - v)/|u - v|; the collision point that scatters v into u.
    return Direction.from_xy(u.x - v.x, u.y - v.y)


def _specular_beta_plus(v: Direction, u: Direction) -> Direction:
    return _specular_beta_minus(v, u)


@dataclass(frozen=True)
class ScatteringModel:
    """Scattering map Theta with its cutoff angle and boundary inverses.

    beta_minus(v, u) is the incoming boundary point w with
    Theta_1(v, w) = u; beta_plus(v, u) = Theta_2(v, beta_minus(v, u)) is
    the outgoing one.  is_specular routes the canonical model to closed
    forms for b, s and sigma.
    """

    b_theta: float = 0.0
    theta_map: Callable = _specular_theta_map
    beta_minus: Callable = _specular_beta_minus
    beta_plus: Callable = _specular_beta_plus
    name: str = "specular"
    is_specular: bool = True

    def admissible(self, v: Direction, u: Direction) -> bool:
        """u in V_v, i.e. b_theta < phi(v, u) < 2*pi - b_theta."""
        ang = angle_between(v, u)
        return self.b_theta < ang < TWO_PI - self.b_theta


SPECULAR = ScatteringModel()


def specular_model() -> ScatteringModel:
    return SPECULAR


@dataclass(frozen=True)
class AdmissibleCone:
    """Open cone V_v of exit directions reachable from velocity v."""

    v: Direction
    b_theta: float = 0.0

    def contains(self, u: Direction) -> bool:
        ang = angle_between(self.v, u)
        return self.b_theta < ang < TWO_PI - self.b_theta


def _require_cone(model: ScatteringModel, v: Direction, u: Direction):
    if not model.admissible(v, u):
        raise ValueError(
            f"direction at angle {angle_between(v, u):.6g} is outside the "
            f"admissible cone ({model.b_theta:.6g}, {TWO_PI - model.b_theta:.6g})")


def _impact_of_angle(model: ScatteringModel, theta: float) -> float:
    """b(theta) evaluated in the e1 frame."""
    if model.is_specular:
        return math.cos(0.5 * theta)
    w = model.beta_minus(E1, Direction(theta))
    return w.y


def impact_parameter(model: ScatteringModel, v: Direction, u: Direction) -> float:
    """Impact parameter b(v, u) = beta^-_{e1}(u K(v)) . e2.

    For specular reflection this is cos(theta/2) with theta = phi(v, u),
    taken at face value on the whole cone, so b is signed: positive for
    theta in (0, pi), negative beyond.
    """
    _require_cone(model, v, u)
    return _impact_of_angle(model, angle_between(v, u))


def exit_parameter(model: ScatteringModel, u: Direction, v: Direction) -> float:
    """Exit parameter s(u, v) = beta^+_{v K(u)}(e1) . e2.

    Here u is the outgoing and v the incoming velocity of the collision;
    for specular reflection s = -cos(theta/2) with theta = phi(u, v).
    """
    _require_cone(model, u, v)
    theta = angle_between(u, v)
    if model.is_specular:
        return -math.cos(0.5 * theta)
    # Rotate the collision so the outgoing velocity is e1: the incoming
    # velocity becomes v K(u), at angle phi(u, v).
    w = model.beta_plus(Direction(theta), E1)
    return w.y


def cross_section(model: ScatteringModel, theta: float) -> float:
    """Differential cross section sigma(theta) = |db/dtheta|.

    Specular reflection uses the closed form |sin(theta/2)|/2; generic
    models are only guaranteed C^1, so they get a central finite
    difference with step 1e-6 rad (shrunk near the cone boundary).
    """
    lo, hi = model.b_theta, TWO_PI - model.b_theta
    if not lo < theta < hi:
        raise ValueError(f"theta={theta:.6g} outside admissible cone ({lo:.6g}, {hi:.6g})")
    if model.is_specular:
        return 0.5 * abs(math.sin(0.5 * theta))
    h = min(1e-6, 0.5 * (theta - lo), 0.5 * (hi - theta))
    bp = _impact_of_angle(model, theta + h)
    bm = _impact_of_angle(model, theta - h)
    return abs(bp - bm) / (2.0 * h)


def direction_from_impact(model: ScatteringModel, v: Direction, b: float,
                          orientation: int = 1) -> Direction:
    """Exit direction u in V_v whose impact parameter has magnitude |b|.

    The orientation sign resolves the two preimages of |b|: positive
    puts phi(v, u) in (0, pi], negative in [pi, 2*pi).  With the signed
    convention b(theta) = cos(theta/2), the returned direction satisfies
    impact_parameter(v, u) = sign(orientation) * |b|.
    """
    mag = abs(b)
    if not mag < 1.0:
        raise ValueError("impact parameter must lie in (-1, 1)")
    if model.is_specular:
        theta = 2.0 * math.acos(mag)
        if orientation < 0:
            theta = TWO_PI - theta
        return v.rotated(theta)
    return _invert_impact_generic(model, v, mag, orientation)


def _invert_impact_generic(model, v, mag, orientation):
    # Bisection on b(theta) = mag over half the cone; assumption (iii)
    # makes b monotone there for any admissible model.
    lo = model.b_theta + 1e-12
    hi = math.pi
    f_lo = _impact_of_angle(model, lo) - mag
    f_hi = _impact_of_angle(model, hi) - mag
    if f_lo * f_hi > 0.0:
        raise ValueError("impact parameter not attained by this model")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f_mid = _impact_of_angle(model, mid) - mag
        if f_lo * f_mid <= 0.0:
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
        if hi - lo < 1e-14:
            break
    theta = 0.5 * (lo + hi)
    if orientation < 0:
        theta = TWO_PI - theta
    return v.rotated(theta)


def boundary_coordinate(w: Direction, v: Direction) -> float:
    """e2 component of the boundary point w in the frame where v -> e1.

    This is the workhorse used by the billiard: with w the hit point and
    v the incoming velocity it equals the impact parameter b; with w the
    exit point and v the outgoing velocity it equals the exit parameter s.
    """
    return math.sin(w.phi - v.phi)
