"""
Arithmetic and metric structure of the generalized complex plane ``C_p``

Numbers are plain coordinate pairs; the plane parameter ``p`` with
``i**2 == p`` is passed to every operation and is never stored on values.
"""

import enum
import math
from typing import NamedTuple

from ..typing import PlaneParam
from ..utility import GeometryFailure
from .trig import cosp, sinp, atanp, period


#: relative size of ``x**2 - p*y**2`` below which a number counts as null
NULL_TOLERANCE = 1e-12


class Geometry(enum.Enum):
    """The geometry selected by the sign of ``p``"""

    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


class Sector(enum.Enum):
    """The region of the plane parameterized by a p-angle"""

    ELLIPTIC = "elliptic"
    GALILEAN_RIGHT = "galilean-right"
    GALILEAN_LEFT = "galilean-left"
    HYPERBOLIC_RIGHT = "hyperbolic-right"
    HYPERBOLIC_UP = "hyperbolic-up"
    HYPERBOLIC_LEFT = "hyperbolic-left"
    HYPERBOLIC_DOWN = "hyperbolic-down"


class GCNum(NamedTuple):
    """A point or vector ``x + iy`` of the generalized complex plane"""

    x: float
    y: float


class PAngle(NamedTuple):
    """A p-rotation angle and the sector of the plane it parameterizes"""

    theta: float
    sector: Sector


class PolarForm(NamedTuple):
    """Decomposition of a non-null number into p-magnitude and p-angle"""

    r_p: float
    angle: PAngle


ZERO = GCNum(0.0, 0.0)
ONE = GCNum(1.0, 0.0)
I = GCNum(0.0, 1.0)  # noqa: E741


class NullDivisor(GeometryFailure):
    """A null number (zero divisor of ``C_p``) is used where an inverse is needed"""

    __slots__ = ("value", "p", "boundary")

    def __init__(self, value: GCNum, p: PlaneParam, boundary: str = ""):
        super().__init__(value, p, boundary)
        self.value = value
        self.p = p
        self.boundary = boundary or null_boundary(value, p)

    def __str__(self):
        return (
            f"{tuple(self.value)!r} is null for p={self.p!r}"
            f" (lies on the {self.boundary})"
        )


class SectorMismatch(GeometryFailure):
    """Two directions lie in sectors that no real p-angle connects"""

    __slots__ = ("first", "second", "p")

    def __init__(self, first: Sector, second: Sector, p: PlaneParam):
        super().__init__(first, second, p)
        self.first = first
        self.second = second
        self.p = p

    def __str__(self):
        return (
            f"no p-angle connects sector {self.first.value} to"
            f" sector {self.second.value} for p={self.p!r}"
        )


def check_plane(p: PlaneParam) -> PlaneParam:
    """Validate a plane parameter, returning it as a float"""
    p = float(p)
    if not math.isfinite(p):
        raise ValueError(f"plane parameter must be finite, got {p!r}")
    return p


def classify(p: PlaneParam) -> Geometry:
    """The geometry of the plane; exact, without a tolerance band around 0"""
    if p < 0:
        return Geometry.ELLIPTIC
    elif p == 0:
        return Geometry.PARABOLIC
    return Geometry.HYPERBOLIC


# basic arithmetic
def add(z1: GCNum, z2: GCNum) -> GCNum:
    return GCNum(z1.x + z2.x, z1.y + z2.y)


def sub(z1: GCNum, z2: GCNum) -> GCNum:
    return GCNum(z1.x - z2.x, z1.y - z2.y)


def scale(z: GCNum, factor: float) -> GCNum:
    return GCNum(z.x * factor, z.y * factor)


def mul(z1: GCNum, z2: GCNum, p: PlaneParam) -> GCNum:
    """The generalized product ``M^p(z1, z2)``"""
    return GCNum(z1.x * z2.x + p * z1.y * z2.y, z1.x * z2.y + z2.x * z1.y)


def conj(z: GCNum) -> GCNum:
    return GCNum(z.x, -z.y)


def scalar(z1: GCNum, z2: GCNum, p: PlaneParam) -> float:
    """The p-scalar product ``Re(M^p(z1, conj(z2)))``"""
    return z1.x * z2.x - p * z1.y * z2.y


def norm(z: GCNum, p: PlaneParam) -> float:
    """The p-magnitude; zero for null numbers"""
    return math.sqrt(abs(scalar(z, z, p)))


def wedge_raw(z1: GCNum, z2: GCNum) -> float:
    """The signed determinant ``x1*y2 - x2*y1`` underlying the p-cross product"""
    return z1.x * z2.y - z2.x * z1.y


def wedge_magnitude(z1: GCNum, z2: GCNum, p: PlaneParam) -> float:
    """The magnitude of the p-cross product ``z1 ^_p z2``"""
    if p == 0:
        return abs(wedge_raw(z1, z2))
    return math.sqrt(abs(p)) * abs(wedge_raw(z1, z2))


# null numbers
def is_null(z: GCNum, p: PlaneParam) -> bool:
    """Whether ``z`` lies on the null cone ``x**2 - p*y**2 == 0``"""
    reference = max(z.x * z.x, abs(p) * z.y * z.y)
    return abs(scalar(z, z, p)) <= NULL_TOLERANCE * reference


def null_boundary(z: GCNum, p: PlaneParam) -> str:
    """Describe the part of the null cone ``z`` lies on"""
    if p < 0 or (z.x == 0 and z.y == 0):
        return "origin"
    elif p == 0:
        return "imaginary axis"
    sign = "+" if (z.x >= 0) == (z.y >= 0) else "-"
    return f"asymptote y = {sign}x/sqrt({p!r})"


def inverse(z: GCNum, p: PlaneParam) -> GCNum:
    """
    The multiplicative inverse of ``z``

    :raises NullDivisor: if ``z`` is null, i.e. a zero divisor of ``C_p``
    """
    if is_null(z, p):
        raise NullDivisor(z, p)
    return scale(conj(z), 1 / scalar(z, z, p))


# polar form
def exp_i(theta: float, p: PlaneParam) -> GCNum:
    """The generalized Euler formula ``e^(i theta) = cosp theta + i sinp theta``"""
    return GCNum(cosp(theta, p), sinp(theta, p))


def sector_of(z: GCNum, p: PlaneParam) -> Sector:
    """
    The sector of a non-null number

    :raises NullDivisor: if ``z`` is null and thus on a sector boundary
    """
    if is_null(z, p):
        raise NullDivisor(z, p)
    if p < 0:
        return Sector.ELLIPTIC
    elif p == 0:
        return Sector.GALILEAN_RIGHT if z.x > 0 else Sector.GALILEAN_LEFT
    elif scalar(z, z, p) > 0:
        return Sector.HYPERBOLIC_RIGHT if z.x > 0 else Sector.HYPERBOLIC_LEFT
    return Sector.HYPERBOLIC_UP if z.y > 0 else Sector.HYPERBOLIC_DOWN


def principal_sector(p: PlaneParam) -> Sector:
    """The sector containing ``exp_i(0, p) == 1``"""
    if p < 0:
        return Sector.ELLIPTIC
    return Sector.GALILEAN_RIGHT if p == 0 else Sector.HYPERBOLIC_RIGHT


def p_angle(theta: float, p: PlaneParam, sector: Sector = None) -> PAngle:
    """
    Create a :py:class:`PAngle`, reducing elliptic angles to one period

    Without a `sector`, the :py:func:`principal_sector` is used.
    """
    if p < 0:
        return PAngle(theta % period(p), Sector.ELLIPTIC)
    return PAngle(theta, principal_sector(p) if sector is None else sector)


def to_polar(z: GCNum, p: PlaneParam) -> PolarForm:
    """
    Decompose ``z`` into p-magnitude and p-angle

    :raises NullDivisor: if ``z`` is null and has no polar form
    """
    sector = sector_of(z, p)
    r_p = norm(z, p)
    if sector is Sector.ELLIPTIC:
        half_turn = period(p) / 2
        if z.x == 0:
            theta = half_turn / 2 if z.y > 0 else -half_turn / 2
        else:
            theta = atanp(z.y / z.x, p) + (half_turn if z.x < 0 else 0.0)
        return PolarForm(r_p, p_angle(theta, p))
    elif sector in (Sector.HYPERBOLIC_UP, Sector.HYPERBOLIC_DOWN):
        # z = +-(r/sqrt(p)) * i * e^(i theta) beyond the asymptotes
        theta = atanp(z.x / (p * z.y), p)
    else:
        theta = atanp(z.y / z.x, p)
    return PolarForm(r_p, PAngle(theta, sector))


def from_polar(polar: PolarForm, p: PlaneParam) -> GCNum:
    """Reconstruct a number from its :py:func:`to_polar` decomposition"""
    r_p, (theta, sector) = polar
    unit = exp_i(theta, p)
    if sector in (Sector.ELLIPTIC, Sector.GALILEAN_RIGHT, Sector.HYPERBOLIC_RIGHT):
        return scale(unit, r_p)
    elif sector in (Sector.GALILEAN_LEFT, Sector.HYPERBOLIC_LEFT):
        return scale(unit, -r_p)
    beyond = scale(mul(I, unit, p), r_p / math.sqrt(p))
    return beyond if sector is Sector.HYPERBOLIC_UP else scale(beyond, -1.0)


def angle_between(z1: GCNum, z2: GCNum, p: PlaneParam) -> PAngle:
    """
    The p-rotation angle from `z1` to `z2`

    The result satisfies ``scalar == s * |z1| |z2| cosp(theta)`` and
    ``wedge_raw == s * |z1| |z2| sinp(theta)``, where ``s`` is the sign of
    ``scalar(z1, z1, p)`` common to both vectors.

    :raises NullDivisor: if either vector is null
    :raises SectorMismatch: if ``p >= 0`` and the vectors lie in different sectors
    """
    first, second = to_polar(z1, p), to_polar(z2, p)
    if first.angle.sector is not second.angle.sector:
        raise SectorMismatch(first.angle.sector, second.angle.sector, p)
    theta = second.angle.theta - first.angle.theta
    return p_angle(theta, p, first.angle.sector)
