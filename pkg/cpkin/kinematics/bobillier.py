"""
The Bobillier relation between three pole rays, by geometry and by kinematics

The geometric route measures each ray's inflection distance from the
curvature of sampled trajectories; the kinematic route evaluates it from
the pole acceleration. Both are tied together by
``rho*_1 sinp(theta_23) + rho*_2 sinp(theta_31) + rho*_3 sinp(theta_12) == 0``.
"""

import enum
import math
from typing import Sequence, Tuple, Optional

from ..typing import PlaneParam, Triple
from ..utility import slotted
from ..plane.numbers import (
    GCNum,
    PAngle,
    I,
    scalar,
    wedge_raw,
    exp_i,
    principal_sector,
    sector_of,
    check_plane,
    NullDivisor,
    SectorMismatch,
)
from ..plane.trig import sinp
from .motion import MotionSpec, InstantInvariants, instant_invariants, ray_direction
from .euler_savary import PoleRayStation, TangentRay, TANGENT_TOLERANCE
from .measure import measure_station


class Case(enum.Enum):
    """The special planes in which the relation takes its classical form"""

    ELLIPTICAL = -1.0
    PARABOLIC = 0.0
    HYPERBOLIC = 1.0

    @property
    def p(self) -> PlaneParam:
        return self.value


@slotted
class BobillierConfig:
    """
    Three pole rays of one instant with their inflection distances

    The pairwise angles ``theta_23``, ``theta_31`` and ``theta_12`` are the
    differences of the ray angles and sum to zero exactly.
    """

    __slots__ = ("p", "stations", "angles")

    def __init__(self, p: PlaneParam, stations: Sequence[PoleRayStation]):
        self.p = p = check_plane(p)
        if len(stations) != 3:
            raise ValueError(f"expected three stations, got {len(stations)}")
        sectors = {station.theta.sector for station in stations}
        if p >= 0 and len(sectors) > 1:
            first, second, *_ = sorted(sectors, key=lambda sector: sector.value)
            raise SectorMismatch(first, second, p)
        sector = sectors.pop()
        self.stations = tuple(stations)
        theta_1, theta_2, theta_3 = (station.theta.theta for station in stations)
        theta_23, theta_31 = theta_3 - theta_2, theta_1 - theta_3
        self.angles = (
            PAngle(theta_23, sector),
            PAngle(theta_31, sector),
            PAngle(-(theta_23 + theta_31), sector),
        )

    @classmethod
    def from_rays(
        cls, p: PlaneParam, rho_stars: Triple, thetas: Triple
    ) -> "BobillierConfig":
        """Create a configuration from raw inflection distances and ray angles"""
        if len(rho_stars) != 3 or len(thetas) != 3:
            raise ValueError("expected three inflection distances and three angles")
        sector = principal_sector(p)
        return cls(
            p,
            [
                PoleRayStation(
                    p, exp_i(theta, p), PAngle(theta, sector), rho_star=rho_star
                )
                for rho_star, theta in zip(rho_stars, thetas)
            ],
        )

    @property
    def rho_stars(self) -> Tuple[float, float, float]:
        return tuple(station.rho_star for station in self.stations)


def bobillier_residual(cfg: BobillierConfig) -> float:
    """The signed left-hand side of the Bobillier relation"""
    return sum(
        rho_star * sinp(angle.theta, cfg.p)
        for rho_star, angle in zip(cfg.rho_stars, cfg.angles)
    )


def rho_star_kinematic(inv: InstantInvariants, X: GCNum, p: PlaneParam) -> float:
    """
    The inflection distance on the canonical ray `X`, from the pole acceleration

    Where velocity and acceleration of a point on the ray are parallel,
    ``rho* = -<J, X>_p / (p <X, X>_p w**2)`` with ``J`` the pole acceleration
    in the canonical frame.
    """
    if p == 0:
        raise NullDivisor(I, p)
    pole_accel = inv.canonical_vector(inv.pole_accel)
    return -scalar(pole_accel, X, p) / (p * scalar(X, X, p) * inv.w**2)


def dependence_coefficients(
    X1: GCNum, X2: GCNum, X3: GCNum, p: PlaneParam
) -> Tuple[float, float, float]:
    """
    The coefficients ``lambda`` with ``lambda_1 X1 + lambda_2 X2 + lambda_3 X3 == 0``

    For unit rays of one sector, ``lambda_1 == sinp(theta_23)`` and cyclically.
    """
    if p > 0:
        sectors = [sector_of(X, p) for X in (X1, X2, X3)]
        for sector in sectors[1:]:
            if sector is not sectors[0]:
                raise SectorMismatch(sectors[0], sector, p)
    return wedge_raw(X2, X3), wedge_raw(X3, X1), wedge_raw(X1, X2)


def kinematic_stations(
    m: MotionSpec,
    t: float,
    angles: Sequence[PAngle],
    inv: Optional[InstantInvariants] = None,
) -> Tuple[PoleRayStation, ...]:
    """Stations whose ``rho*`` is evaluated from the pole acceleration"""
    inv = instant_invariants(m, t) if inv is None else inv
    stations = []
    for angle in angles:
        ray_direction(inv, angle)
        X = exp_i(angle.theta, m.p)
        stations.append(
            PoleRayStation(m.p, X, angle, rho_star=rho_star_kinematic(inv, X, m.p))
        )
    return tuple(stations)


def geometric_stations(
    m: MotionSpec,
    t: float,
    angles: Sequence[PAngle],
    inv: Optional[InstantInvariants] = None,
    rhos: Optional[Sequence[float]] = None,
) -> Tuple[PoleRayStation, ...]:
    """
    Stations whose ``rho*`` is measured from the curvature of trajectories

    Without `rhos`, each ray is sampled at half the distance to its
    inflection point, where the curvature center is well separated from
    both the point and infinity.

    :raises TangentRay: if a ray is the common tangent, which has no inflection point
    """
    inv = instant_invariants(m, t) if inv is None else inv
    for angle in angles:
        if abs(sinp(angle.theta, m.p)) <= TANGENT_TOLERANCE:
            raise TangentRay(angle)
    if rhos is None:
        rhos = [inv.h * sinp(angle.theta, m.p) / 2 for angle in angles]
    return tuple(
        measure_station(m, t, angle, rho, inv) for angle, rho in zip(angles, rhos)
    )


def bobillier_kinematic_check(
    m: MotionSpec, t: float, angles: Sequence[PAngle]
) -> float:
    """
    Evaluate the Bobillier relation at an instant of `m` using only its kinematics

    The inflection distances come from the pole acceleration, the ray angles
    from the canonical frame; no curvature radius enters.
    """
    inv = instant_invariants(m, t)
    return bobillier_residual(
        BobillierConfig(m.p, kinematic_stations(m, t, angles, inv))
    )


def route_difference(m: MotionSpec, t: float, angles: Sequence[PAngle]) -> float:
    """Largest difference of geometric and kinematic ``rho*``, relative to ``h``"""
    inv = instant_invariants(m, t)
    kinematic = kinematic_stations(m, t, angles, inv)
    geometric = geometric_stations(m, t, angles, inv)
    return max(
        abs(geo.rho_star - kin.rho_star) / inv.h
        for geo, kin in zip(geometric, kinematic)
    )


def specialized_residual(case: Case, rho_star: Triple, angles: Triple) -> float:
    """
    The Bobillier relation in its classical form for the plane of `case`

    :param rho_star: the inflection distances of the three rays
    :param angles: the pairwise angles ``theta_23``, ``theta_31``, ``theta_12``
    """
    if case is Case.ELLIPTICAL:
        sine = math.sin
    elif case is Case.PARABOLIC:
        sine = float
    else:
        sine = math.sinh
    return sum(rho * sine(theta) for rho, theta in zip(rho_star, angles))

