"""
The Euler-Savary relation and the inversion images of inflection points

All distances along a pole ray are signed: positive in the direction of the
ray's unit vector ``X``, negative on the opposite side of the pole.
"""

import math
from typing import NamedTuple, Optional

from ..typing import PlaneParam
from ..utility import GeometryFailure, slotted
from ..plane.numbers import (
    GCNum,
    PAngle,
    ONE,
    scale,
    sub,
    norm,
    wedge_raw,
    exp_i,
    is_null,
    NullDivisor,
)
from ..plane.trig import sinp


#: relative mismatch of ``1/rho* == 1/rho - 1/rho'`` tolerated by stations
STATION_TOLERANCE = 1e-10
#: relative size of ``1/a'`` below which the curvature center is at infinity
INFINITE_TOLERANCE = 1e-14
#: largest |sinp theta| of a ray counted as the common tangent
TANGENT_TOLERANCE = 1e-12


class TangentRay(GeometryFailure):
    """The ray is the common tangent, along which ``sinp theta`` vanishes"""

    __slots__ = ("theta",)

    def __init__(self, theta: PAngle):
        super().__init__(theta)
        self.theta = theta

    def __str__(self):
        return f"the ray at theta={self.theta.theta!r} is the common tangent"


class ZeroDistance(GeometryFailure):
    """A distance or radius that must be non-zero is zero"""

    __slots__ = ("quantity",)

    def __init__(self, quantity: str):
        super().__init__(quantity)
        self.quantity = quantity

    def __str__(self):
        return f"{self.quantity} must not be zero"


class CircularTrajectory(GeometryFailure):
    """The point and its curvature center coincide in distance from the pole"""

    __slots__ = ("rho",)

    def __init__(self, rho: float):
        super().__init__(rho)
        self.rho = rho

    def __str__(self):
        return (
            f"point and curvature center both lie at rho={self.rho!r},"
            " the inflection distance is infinite"
        )


class InfiniteRadius(GeometryFailure):
    """A quantity that must be finite is infinite, e.g. at an inflection point"""

    __slots__ = ("quantity",)

    def __init__(self, quantity: str):
        super().__init__(quantity)
        self.quantity = quantity

    def __str__(self):
        return f"{self.quantity} is infinite"


@slotted
class PoleRayStation:
    """
    Distances measured on one pole ray of an instant, in the canonical frame

    :param p: the plane parameter
    :param X: the unit direction of the ray
    :param theta: the p-angle of the ray from the common tangent
    :param rho: distance of the moving point ``N`` from the pole
    :param rho_prime: distance of the curvature center of ``N``'s trajectory
    :param rho_star: distance of the ray's inflection point
    """

    __slots__ = ("p", "X", "theta", "rho", "rho_prime", "rho_star")

    def __init__(
        self,
        p: PlaneParam,
        X: GCNum,
        theta: PAngle,
        rho: Optional[float] = None,
        rho_prime: Optional[float] = None,
        rho_star: Optional[float] = None,
    ):
        if is_null(X, p):
            raise NullDivisor(X, p)
        if not math.isclose(norm(X, p), 1.0, rel_tol=1e-12):
            raise ValueError(f"ray direction must be a unit vector, got {X!r}")
        if None not in (rho, rho_prime, rho_star):
            if 0 in (rho, rho_prime, rho_star):
                raise ValueError(
                    f"distances must not be zero, got rho={rho!r},"
                    f" rho'={rho_prime!r}, rho*={rho_star!r}"
                )
            expected = 1 / rho - 1 / rho_prime
            if not math.isclose(1 / rho_star, expected, rel_tol=STATION_TOLERANCE):
                raise ValueError(
                    f"1/rho*={1 / rho_star!r} disagrees with"
                    f" 1/rho - 1/rho'={expected!r}"
                )
        self.p = p
        self.X = X
        self.theta = theta
        self.rho = rho
        self.rho_prime = rho_prime
        self.rho_star = rho_star


class InversionImage(NamedTuple):
    """The image ``Q = X / rho*`` of an inflection point"""

    Q: GCNum
    #: coordinate of ``Q`` on the common normal
    height: float


def euler_savary_solve(
    r: float, r_prime: float, a: float, theta: PAngle, p: PlaneParam
) -> float:
    """
    Solve the Euler-Savary relation ``1/r' - 1/r = sinp(theta) (1/a' - 1/a)`` for ``a'``

    :param r: curvature radius of the moving pole curve
    :param r_prime: curvature radius of the fixed pole curve
    :param a: distance of the point from the pole along the ray
    :param theta: p-angle of the ray from the common tangent
    :param p: the plane parameter
    :return: distance ``a'`` of the curvature center, :py:data:`math.inf`
        if the point is an inflection point
    """
    sine = sinp(theta.theta, p)
    if sine == 0:
        raise TangentRay(theta)
    if a == 0:
        raise ZeroDistance("a")
    if r == 0 or r_prime == 0:
        raise ZeroDistance("r" if r == 0 else "r'")
    inverse_a = 1 / a + (1 / r_prime - 1 / r) / sine
    if abs(inverse_a) <= INFINITE_TOLERANCE / abs(a):
        return math.inf
    return 1 / inverse_a


def rho_star_geometric(rho: float, rho_prime: float) -> float:
    """The inflection distance ``rho*`` from ``1/rho* = 1/rho - 1/rho'``"""
    if rho == 0 or rho_prime == 0:
        raise ZeroDistance("rho" if rho == 0 else "rho'")
    inverse = 1 / rho - 1 / rho_prime
    if inverse == 0:
        raise CircularTrajectory(rho)
    return 1 / inverse


def inflection_station(h: float, theta: PAngle, p: PlaneParam) -> PoleRayStation:
    """The station of the inflection point ``rho* = h sinp(theta)`` on a ray"""
    return PoleRayStation(
        p, exp_i(theta.theta, p), theta, rho_star=h * sinp(theta.theta, p)
    )


def inversion_image(station: PoleRayStation) -> InversionImage:
    rho_star = station.rho_star
    if rho_star is None or rho_star == 0 or not math.isfinite(rho_star):
        raise InfiniteRadius(f"the inversion image of rho*={rho_star!r}")
    image = scale(station.X, 1 / rho_star)
    return InversionImage(image, image.y)


def collinearity_residual(
    Q1: InversionImage, Q2: InversionImage, Q3: InversionImage
) -> float:
    """Twice the signed area of the triangle of three images, zero iff collinear"""
    q1, q2, q3 = Q1.Q, Q2.Q, Q3.Q
    return wedge_raw(q1, q2) + wedge_raw(q3, q1) + wedge_raw(q2, q3)


def parallelism_residual(Q1: InversionImage, Q2: InversionImage) -> float:
    """Deviation of the line through two images from the common tangent direction"""
    return wedge_raw(ONE, sub(Q2.Q, Q1.Q))
