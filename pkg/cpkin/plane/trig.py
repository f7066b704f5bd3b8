"""
The p-trigonometric kernel, uniform over every real plane parameter ``p``

The kernels never reduce their angle: kinematics needs the unreduced,
differentiable rotation angle. Reduction to a period happens only when
taking the polar form of a number.
"""

import math
from typing import Tuple

from ..typing import PlaneParam
from ..utility import GeometryFailure


#: magnitude of ``cosp`` below which ``tanp`` is considered to hit its pole
TANGENT_POLE_TOLERANCE = 1e-12


class PoleOfTangent(GeometryFailure):
    """The p-tangent is requested where the p-cosine vanishes"""

    __slots__ = ("theta", "p")

    def __init__(self, theta: float, p: PlaneParam):
        super().__init__(theta, p)
        self.theta = theta
        self.p = p

    def __str__(self):
        return f"tanp has a pole at theta={self.theta!r} for p={self.p!r}"


class OutOfRange(GeometryFailure):
    """The p-tangent value lies at or beyond an asymptote of a hyperbolic plane"""

    __slots__ = ("value", "p")

    def __init__(self, value: float, p: PlaneParam):
        super().__init__(value, p)
        self.value = value
        self.p = p

    def __str__(self):
        return (
            f"no p-angle has tanp={self.value!r} for p={self.p!r}"
            f" (|tanp| must stay below {1 / math.sqrt(self.p)!r})"
        )


def cosp(theta: float, p: PlaneParam) -> float:
    """The p-cosine: circular for ``p < 0``, constant for ``p == 0``, hyperbolic else"""
    if p < 0:
        return math.cos(theta * math.sqrt(-p))
    elif p == 0:
        return 1.0
    return math.cosh(theta * math.sqrt(p))


def sinp(theta: float, p: PlaneParam) -> float:
    """The p-sine: circular for ``p < 0``, the angle for ``p == 0``, hyperbolic else"""
    if p < 0:
        root = math.sqrt(-p)
        return math.sin(theta * root) / root
    elif p == 0:
        return theta
    root = math.sqrt(p)
    return math.sinh(theta * root) / root


def tanp(theta: float, p: PlaneParam) -> float:
    """
    The p-tangent ``sinp / cosp``

    :raises PoleOfTangent: if ``cosp`` vanishes, which happens only for ``p < 0``
    """
    cos_value = cosp(theta, p)
    if abs(cos_value) <= TANGENT_POLE_TOLERANCE:
        raise PoleOfTangent(theta, p)
    return sinp(theta, p) / cos_value


def p_trig_derivatives(theta: float, p: PlaneParam) -> Tuple[float, float]:
    """The derivatives ``(d cosp / d theta, d sinp / d theta) == (p sinp, cosp)``"""
    return p * sinp(theta, p), cosp(theta, p)


def atanp(value: float, p: PlaneParam) -> float:
    """
    The principal inverse of :py:func:`tanp`

    For ``p < 0`` the result lies in ``(-pi/(2 sqrt|p|), pi/(2 sqrt|p|))``;
    for ``p == 0`` the p-angle *is* the slope; for ``p > 0`` the value must
    describe a direction strictly inside the asymptotes.

    :raises OutOfRange: if ``p > 0`` and ``|value| * sqrt(p) >= 1``
    """
    if p < 0:
        root = math.sqrt(-p)
        return math.atan(value * root) / root
    elif p == 0:
        return value
    root = math.sqrt(p)
    if abs(value) * root >= 1:
        raise OutOfRange(value, p)
    return math.atanh(value * root) / root


def period(p: PlaneParam) -> float:
    """The period of the p-trigonometric functions, infinite unless ``p < 0``"""
    if p < 0:
        return 2 * math.pi / math.sqrt(-p)
    return math.inf
