"""
One-parameter planar motion ``K_p/K'_p`` with polynomial rotation and translation

A point ``z`` of the moving plane is carried to ``T(t) + M^p(e^(i theta(t)), z)``
in the fixed plane. Both ``theta`` and ``T`` are polynomials in ``t``, so all
time derivatives used here are exact.
"""

import json
import logging
import math
from typing import Callable, NamedTuple, Tuple, Mapping, Any

import numpy as np
from numpy.polynomial import Polynomial
from scipy.optimize import bisect

from ..typing import Coefficients, PlaneParam
from ..utility import GeometryFailure, slotted
from ..plane.numbers import (
    GCNum,
    PAngle,
    Sector,
    I,
    add,
    sub,
    scale,
    mul,
    scalar,
    norm,
    wedge_raw,
    inverse,
    exp_i,
    is_null,
    check_plane,
    SectorMismatch,
)
from ..plane.trig import sinp


logger = logging.getLogger(__name__)

#: lower end of the inflection bracket, relative to the inflection diameter
BRACKET_LOW = 1e-9
#: upper end of the inflection bracket, relative to the inflection diameter
BRACKET_HIGH = 1e3
#: relative precision of the bisection refinement
ROOT_RTOL = 1e-12
#: largest relative misfit of ``rho* = h sinp(theta)`` accepted for a motion
FIT_TOLERANCE = 1e-8


class NoPole(GeometryFailure):
    """The motion has no instantaneous pole: the angular velocity vanishes"""

    __slots__ = ("t", "reason")

    def __init__(self, t: float, reason: str = "angular velocity is zero"):
        super().__init__(t, reason)
        self.t = t
        self.reason = reason

    def __str__(self):
        return f"no instantaneous pole at t={self.t!r}: {self.reason}"


class DegenerateMotion(GeometryFailure):
    """The instant has no inflection circle, e.g. every trajectory is a p-circle"""

    __slots__ = ("t", "reason")

    def __init__(self, t: float, reason: str):
        super().__init__(t, reason)
        self.t = t
        self.reason = reason

    def __str__(self):
        return f"degenerate motion at t={self.t!r}: {self.reason}"


class NoRoot(GeometryFailure):
    """A pole ray does not meet the inflection locus away from the pole"""

    __slots__ = ("t", "theta", "bracket")

    def __init__(self, t: float, theta: float, bracket: Tuple[float, float]):
        super().__init__(t, theta, bracket)
        self.t = t
        self.theta = theta
        self.bracket = bracket

    def __str__(self):
        low, high = self.bracket
        return (
            f"the pole ray at theta={self.theta!r} meets no inflection point"
            f" within ({low!r}, {high!r}] at t={self.t!r}"
        )


@slotted
class MotionSpec:
    """
    A one-parameter motion given by polynomial ``theta(t)``, ``Tx(t)`` and ``Ty(t)``

    :param p: the plane parameter
    :param theta_coeffs: coefficients of the p-rotation angle, ascending degree
    :param tx_coeffs: coefficients of the translation's real part
    :param ty_coeffs: coefficients of the translation's imaginary part
    """

    __slots__ = (
        "p",
        "theta_coeffs",
        "tx_coeffs",
        "ty_coeffs",
        "_theta",
        "_tx",
        "_ty",
    )

    def __init__(
        self,
        p: PlaneParam,
        theta_coeffs: Coefficients,
        tx_coeffs: Coefficients = (0.0,),
        ty_coeffs: Coefficients = (0.0,),
    ):
        self.p = check_plane(p)
        self.theta_coeffs = _coefficients("theta", theta_coeffs)
        self.tx_coeffs = _coefficients("tx", tx_coeffs)
        self.ty_coeffs = _coefficients("ty", ty_coeffs)
        if not any(self.theta_coeffs[1:]):
            raise NoPole(math.nan, "rotation angle is constant")
        # value, first and second derivative of each polynomial
        self._theta = _derivatives(self.theta_coeffs)
        self._tx = _derivatives(self.tx_coeffs)
        self._ty = _derivatives(self.ty_coeffs)

    def angle(self, t: float, order: int = 0) -> float:
        """The rotation angle ``theta(t)`` or its `order`-th derivative"""
        return float(self._theta[order](t))

    def translation(self, t: float, order: int = 0) -> GCNum:
        """The translation ``T(t)`` or its `order`-th derivative"""
        return GCNum(float(self._tx[order](t)), float(self._ty[order](t)))

    def rescaled(self, factor: float) -> "MotionSpec":
        """The same motion at another pace, ``theta(factor*t)`` and ``T(factor*t)``"""
        return MotionSpec(
            self.p,
            *(
                [coeff * factor**degree for degree, coeff in enumerate(coeffs)]
                for coeffs in (self.theta_coeffs, self.tx_coeffs, self.ty_coeffs)
            ),
        )

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "MotionSpec":
        """Create a motion from its JSON object ``{"p", "theta", "tx", "ty"}``"""
        if not isinstance(data, Mapping):
            raise TypeError(f"expected a JSON object, got {data!r}")
        unknown = set(data) - {"p", "theta", "tx", "ty"}
        if unknown:
            raise ValueError(f"unknown motion keys: {', '.join(sorted(unknown))}")
        try:
            return cls(data["p"], data["theta"], data["tx"], data["ty"])
        except KeyError as err:
            raise ValueError(f"motion is missing key {err.args[0]!r}") from None

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "theta": list(self.theta_coeffs),
            "tx": list(self.tx_coeffs),
            "ty": list(self.ty_coeffs),
        }

    def __getstate__(self):
        return self.to_json()

    def __setstate__(self, state):
        self.__init__(state["p"], state["theta"], state["tx"], state["ty"])


def load(source: str) -> MotionSpec:
    """Read a :py:class:`MotionSpec` from its JSON text"""
    return MotionSpec.from_json(json.loads(source))


def dump(m: MotionSpec) -> str:
    """Write a :py:class:`MotionSpec` as JSON text with stable key order"""
    return json.dumps(m.to_json())


def _coefficients(name: str, coeffs: Coefficients) -> Tuple[float, ...]:
    if isinstance(coeffs, (str, bytes)):
        raise TypeError(f"{name} coefficients must be numbers, got {coeffs!r}")
    values = tuple(float(coeff) for coeff in coeffs)
    if not values:
        raise ValueError(f"{name} coefficients must not be empty")
    if not all(map(math.isfinite, values)):
        raise ValueError(f"{name} coefficients must be finite, got {values}")
    return values


def _derivatives(coeffs: Tuple[float, ...]) -> Tuple[Polynomial, ...]:
    poly = Polynomial(coeffs)
    return poly, poly.deriv(1), poly.deriv(2)


class KinematicState(NamedTuple):
    """Velocity decomposition and acceleration of a point at one instant"""

    absolute: GCNum
    sliding: GCNum
    relative: GCNum
    acceleration: GCNum


class AccelerationTerms(NamedTuple):
    """The absolute acceleration split at the pole"""

    #: acceleration of the moving point instantaneously at the pole
    pole: GCNum
    #: ``w_dot * i * IN``
    tangential: GCNum
    #: ``p * w**2 * IN``, pointing towards the pole for ``p < 0``
    centripetal: GCNum


# point kinematics
def trajectory(m: MotionSpec, z: GCNum, t: float) -> GCNum:
    """Position in the fixed plane of the moving point `z` at time `t`"""
    return add(m.translation(t), mul(exp_i(m.angle(t), m.p), z, m.p))


def absolute_velocity(m: MotionSpec, z: GCNum, t: float) -> GCNum:
    """Exact time derivative of the :py:func:`trajectory` of `z`"""
    p = m.p
    turning = mul(mul(I, exp_i(m.angle(t), p), p), z, p)
    return add(m.translation(t, 1), scale(turning, m.angle(t, 1)))


def acceleration(m: MotionSpec, z: GCNum, t: float) -> GCNum:
    """Exact second time derivative of the :py:func:`trajectory` of `z`"""
    p = m.p
    rotated = mul(exp_i(m.angle(t), p), z, p)
    w, w_dot = m.angle(t, 1), m.angle(t, 2)
    return add(
        m.translation(t, 2),
        add(scale(mul(I, rotated, p), w_dot), scale(rotated, p * w * w)),
    )


def _angular_velocity(m: MotionSpec, t: float) -> float:
    w = m.angle(t, 1)
    if w == 0:
        raise NoPole(t)
    return w


def pole_in_moving_plane(m: MotionSpec, t: float) -> GCNum:
    """
    The moving point with zero absolute velocity at time `t`

    :raises NoPole: if the angular velocity vanishes
    :raises NullDivisor: if ``i`` is a zero divisor, i.e. ``p == 0``
    """
    w = _angular_velocity(m, t)
    turning = mul(I, exp_i(m.angle(t), m.p), m.p)
    return scale(mul(inverse(turning, m.p), m.translation(t, 1), m.p), -1 / w)


def instantaneous_pole(m: MotionSpec, t: float) -> GCNum:
    """
    The instantaneous pole ``I`` in fixed-plane coordinates

    :raises NoPole: if the angular velocity vanishes
    :raises NullDivisor: if ``i`` is a zero divisor, i.e. ``p == 0``
    """
    return trajectory(m, pole_in_moving_plane(m, t), t)


def pole_velocity(m: MotionSpec, t: float) -> GCNum:
    """The pole transfer velocity, i.e. the time derivative of the fixed pole curve"""
    w = _angular_velocity(m, t)
    w_dot = m.angle(t, 2)
    i_inverse = inverse(I, m.p)
    change = sub(
        scale(m.translation(t, 2), 1 / w),
        scale(m.translation(t, 1), w_dot / (w * w)),
    )
    return sub(m.translation(t, 1), mul(i_inverse, change, m.p))


def velocity(m: MotionSpec, z: GCNum, t: float) -> KinematicState:
    """
    Absolute velocity of `z` split into the sliding velocity about the pole
    and the relative velocity of the pole itself
    """
    p = m.p
    absolute = absolute_velocity(m, z, t)
    pole_arm = sub(trajectory(m, z, t), instantaneous_pole(m, t))
    sliding = scale(mul(I, pole_arm, p), m.angle(t, 1))
    return KinematicState(
        absolute=absolute,
        sliding=sliding,
        relative=sub(absolute, sliding),
        acceleration=acceleration(m, z, t),
    )


def acceleration_terms(m: MotionSpec, z: GCNum, t: float) -> AccelerationTerms:
    """Split the :py:func:`acceleration` of `z` into pole, tangential and centripetal"""
    p = m.p
    w, w_dot = m.angle(t, 1), m.angle(t, 2)
    pole_arm = sub(trajectory(m, z, t), instantaneous_pole(m, t))
    return AccelerationTerms(
        pole=acceleration(m, pole_in_moving_plane(m, t), t),
        tangential=scale(mul(I, pole_arm, p), w_dot),
        centripetal=scale(pole_arm, p * w * w),
    )


# instantaneous invariants
@slotted
class InstantInvariants:
    """
    The invariants of a motion at one instant, with its canonical pole frame

    The canonical frame has the pole at its origin and the common tangent of
    the pole curves as its real axis, oriented so that the inflection circle
    lies on the positive side of the common normal.
    """

    __slots__ = (
        "p",
        "t",
        "pole",
        "w",
        "w_dot",
        "pole_accel",
        "h",
        "tangent_dir",
        "h_analytic",
    )

    def __init__(
        self,
        p: PlaneParam,
        t: float,
        pole: GCNum,
        w: float,
        w_dot: float,
        pole_accel: GCNum,
        h: float,
        tangent_dir: GCNum,
        h_analytic: float = math.nan,
    ):
        if w == 0:
            raise NoPole(t)
        self.p = p
        self.t = t
        self.pole = pole
        self.w = w
        self.w_dot = w_dot
        self.pole_accel = pole_accel
        self.h = h
        self.tangent_dir = tangent_dir
        self.h_analytic = h_analytic

    def canonical_vector(self, vector: GCNum) -> GCNum:
        """Express a fixed-plane vector in the canonical frame"""
        return mul(inverse(self.tangent_dir, self.p), vector, self.p)

    def fixed_vector(self, vector: GCNum) -> GCNum:
        """Express a canonical-frame vector in the fixed plane"""
        return mul(self.tangent_dir, vector, self.p)

    def to_canonical(self, point: GCNum) -> GCNum:
        """Express a fixed-plane point in the canonical frame"""
        return self.canonical_vector(sub(point, self.pole))

    def from_canonical(self, point: GCNum) -> GCNum:
        """Express a canonical-frame point in the fixed plane"""
        return add(self.pole, self.fixed_vector(point))


def to_canonical(inv: InstantInvariants, point: GCNum) -> GCNum:
    """Express a fixed-plane `point` in the canonical pole frame of `inv`"""
    return inv.to_canonical(point)


def from_canonical(inv: InstantInvariants, point: GCNum) -> GCNum:
    """Express a canonical-frame `point` of `inv` in the fixed plane"""
    return inv.from_canonical(point)


def _fit_angles(p: PlaneParam) -> Tuple[float, ...]:
    """Ray angles sampling the inflection locus well inside one sector"""
    root = math.sqrt(abs(p))
    if p < 0:
        return tuple(math.pi * k / 6 / root for k in range(1, 6))
    return tuple(0.25 * k / root for k in range(1, 6))


def _inflection_condition(
    m: MotionSpec, t: float, origin: GCNum, direction: GCNum
) -> Callable[[float], float]:
    """``V_a ^ J_a`` for the point at distance ``rho`` along a pole ray"""
    p = m.p
    w, w_dot = m.angle(t, 1), m.angle(t, 2)
    shift, speed, accel = m.translation(t), m.translation(t, 1), m.translation(t, 2)

    def condition(rho: float) -> float:
        arm = sub(add(origin, scale(direction, rho)), shift)
        turned = mul(I, arm, p)
        point_velocity = add(speed, scale(turned, w))
        point_accel = add(accel, add(scale(turned, w_dot), scale(arm, p * w * w)))
        return wedge_raw(point_velocity, point_accel)

    return condition


def _inflection_root(
    m: MotionSpec, t: float, pole: GCNum, direction: GCNum, theta: float, h: float
) -> float:
    condition = _inflection_condition(m, t, pole, direction)
    low, high = BRACKET_LOW * h, BRACKET_HIGH * h
    if not (condition(low) > 0) ^ (condition(high) > 0):
        raise NoRoot(t, theta, (low, high))
    return bisect(condition, low, high, xtol=BRACKET_LOW * low, rtol=ROOT_RTOL)


def instant_invariants(m: MotionSpec, t: float) -> InstantInvariants:
    """
    Compute the pole, angular velocity, pole acceleration and inflection diameter

    The inflection diameter ``h`` is fitted to the inflection points found on
    several pole rays; the closed form ``|J_r(I)|_p / (sqrt|p| w**2)`` is kept
    as ``h_analytic`` for comparison.

    :raises NoPole: if the angular velocity vanishes
    :raises NullDivisor: if the plane is parabolic
    :raises DegenerateMotion: if the pole does not move or the fit fails
    :raises SectorMismatch: if for ``p > 0`` the pole moves beyond the asymptotes
    """
    p = m.p
    w, w_dot = _angular_velocity(m, t), m.angle(t, 2)
    pole = instantaneous_pole(m, t)
    pole_accel = acceleration(m, pole_in_moving_plane(m, t), t)
    transfer = pole_velocity(m, t)
    if pole_accel == (0, 0) or is_null(transfer, p):
        raise DegenerateMotion(t, "the pole is stationary or moves on a null line")
    # a common tangent beyond the asymptotes has no real p-angle to the real axis
    if scalar(transfer, transfer, p) < 0:
        raise SectorMismatch(Sector.HYPERBOLIC_UP, Sector.HYPERBOLIC_RIGHT, p)
    tangent_dir = scale(transfer, -math.copysign(1, w) / norm(transfer, p))
    h_analytic = norm(pole_accel, p) / (math.sqrt(abs(p)) * w * w)
    angles = _fit_angles(p)
    directions = [mul(tangent_dir, exp_i(theta, p), p) for theta in angles]
    rho_stars = np.array(
        [
            _inflection_root(m, t, pole, direction, theta, h_analytic)
            for direction, theta in zip(directions, angles)
        ]
    )
    sines = np.array([[sinp(theta, p)] for theta in angles])
    (h,), *_ = np.linalg.lstsq(sines, rho_stars, rcond=None)
    misfit = float(np.max(np.abs(rho_stars - h * sines[:, 0])))
    logger.debug(
        "t=%r: fitted h=%r, analytic h=%r, misfit %r", t, h, h_analytic, misfit
    )
    if misfit > FIT_TOLERANCE * abs(h):
        raise DegenerateMotion(t, f"inflection points miss a p-circle by {misfit!r}")
    return InstantInvariants(
        p=p,
        t=t,
        pole=pole,
        w=w,
        w_dot=w_dot,
        pole_accel=pole_accel,
        h=float(h),
        tangent_dir=tangent_dir,
        h_analytic=h_analytic,
    )


def ray_direction(inv: InstantInvariants, direction: PAngle) -> GCNum:
    """
    The unit fixed-plane direction of the pole ray at p-angle `direction`

    :raises SectorMismatch: if for ``p > 0`` the ray leaves the tangent's sector
    """
    if inv.p > 0 and direction.sector is not Sector.HYPERBOLIC_RIGHT:
        raise SectorMismatch(direction.sector, Sector.HYPERBOLIC_RIGHT, inv.p)
    return inv.fixed_vector(exp_i(direction.theta, inv.p))


def find_inflection_point(m: MotionSpec, t: float, direction: PAngle) -> float:
    """
    Search the inflection point on a pole ray of the instant `t`

    The ray leaves the pole at p-angle `direction` from the common tangent.
    The returned ``rho*`` is the distance along the ray where the absolute
    velocity and acceleration are parallel, refined by bisection.

    :raises NoRoot: if the ray meets the inflection locus only at the pole
    """
    inv = instant_invariants(m, t)
    return _inflection_root(
        m, t, inv.pole, ray_direction(inv, direction), direction.theta, inv.h
    )
