"""
Sampled measurements of trajectories and pole curves

Everything here looks only at positions: derivatives come from five-point
central stencils over the sampled curve, never from the motion's
polynomials. This is the route by which the Euler-Savary relation is
checked independently of the acceleration formulas.
"""

import math
from typing import Callable, NamedTuple, Tuple, Optional

import numpy as np

from ..plane.numbers import (
    GCNum,
    PAngle,
    I,
    add,
    sub,
    scale,
    mul,
    scalar,
    wedge_raw,
    inverse,
    exp_i,
    NullDivisor,
)
from .motion import (
    MotionSpec,
    InstantInvariants,
    instant_invariants,
    trajectory,
    instantaneous_pole,
    pole_in_moving_plane,
    ray_direction,
)
from .euler_savary import (
    PoleRayStation,
    InfiniteRadius,
    rho_star_geometric,
)


#: sample spacing per radian of rotation
STEP_FACTOR = 1e-3
_OFFSETS = np.arange(-2, 3)
_FIRST = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12
_SECOND = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12

Curve = Callable[[float], GCNum]


class PoleCurveRadii(NamedTuple):
    """Signed curvature radii of the pole curves at an instant"""

    #: radius ``r`` of the moving pole curve
    moving: float
    #: radius ``r'`` of the fixed pole curve
    fixed: float


def sample_step(m: MotionSpec, t: float) -> float:
    """The sample spacing in time, a fixed fraction of one radian of rotation"""
    return STEP_FACTOR / abs(m.angle(t, 1))


def curve_derivatives(curve: Curve, t: float, step: float) -> Tuple[GCNum, GCNum]:
    """First and second derivative of `curve` at `t` from a five-point stencil"""
    samples = np.array([curve(t + offset * step) for offset in _OFFSETS])
    first = _FIRST @ samples / step
    second = _SECOND @ samples / step**2
    return GCNum(*map(float, first)), GCNum(*map(float, second))


def graph_curvature(first: GCNum, second: GCNum) -> float:
    """
    Curvature ``d²y/dx²`` of a curve tangent to the real axis

    In the canonical frame, both pole curves touch the real axis at the pole
    and are locally graphs ``y = f(x)``; their curvature is ``f''(0)``.
    """
    return wedge_raw(first, second) / first.x**3


def _radius(curvature: float) -> float:
    return math.inf if curvature == 0 else 1 / curvature


def pole_curve_radii(
    m: MotionSpec, t: float, inv: Optional[InstantInvariants] = None
) -> PoleCurveRadii:
    """
    Measure the curvature radii ``r`` and ``r'`` of the pole curves at `t`

    The moving pole curve is sampled as it lies in the fixed plane at `t`.
    Radii are positive when the curve bends towards the inflection side.
    """
    inv = instant_invariants(m, t) if inv is None else inv
    step = sample_step(m, t)

    def moving(s: float) -> GCNum:
        return inv.to_canonical(trajectory(m, pole_in_moving_plane(m, s), t))

    def fixed(s: float) -> GCNum:
        return inv.to_canonical(instantaneous_pole(m, s))

    return PoleCurveRadii(
        moving=_radius(graph_curvature(*curve_derivatives(moving, t, step))),
        fixed=_radius(graph_curvature(*curve_derivatives(fixed, t, step))),
    )


def curvature_center(curve: Curve, t: float, step: float, p: float) -> GCNum:
    """
    The center of the osculating p-circle of `curve` at `t`

    :raises InfiniteRadius: if `t` is an inflection point of the curve
    :raises NullDivisor: if the plane is parabolic and has no p-normals
    """
    velocity, accel = curve_derivatives(curve, t, step)
    if p == 0:
        raise NullDivisor(I, p)
    turning = -p * wedge_raw(velocity, accel)
    if turning == 0:
        raise InfiniteRadius("the curvature radius")
    offset = scalar(velocity, velocity, p) / turning
    return add(curve(t), scale(mul(I, velocity, p), offset))


def moving_point(m: MotionSpec, point: GCNum, t: float) -> GCNum:
    """The moving-plane coordinates of the fixed-plane `point` at time `t`"""
    rotation = exp_i(m.angle(t), m.p)
    return mul(inverse(rotation, m.p), sub(point, m.translation(t)), m.p)


def measure_station(
    m: MotionSpec,
    t: float,
    direction: PAngle,
    rho: float,
    inv: Optional[InstantInvariants] = None,
) -> PoleRayStation:
    """
    Measure ``rho'`` and ``rho*`` for the moving point at distance `rho` on a pole ray

    The point's trajectory is sampled around `t` and its curvature center is
    projected onto the ray.
    """
    inv = instant_invariants(m, t) if inv is None else inv
    ray = ray_direction(inv, direction)
    z = moving_point(m, add(inv.pole, scale(ray, rho)), t)
    center = curvature_center(
        lambda s: trajectory(m, z, s), t, sample_step(m, t), m.p
    )
    rho_prime = scalar(sub(center, inv.pole), ray, m.p) / scalar(ray, ray, m.p)
    return PoleRayStation(
        m.p,
        exp_i(direction.theta, m.p),
        direction,
        rho=rho,
        rho_prime=rho_prime,
        rho_star=rho_star_geometric(rho, rho_prime),
    )
