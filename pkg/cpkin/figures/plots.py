"""
Figures of unit circles and of the inflection geometry of an instant

Each figure comes with the raw coordinates it shows, as CSV rows of
``(curve, x, y)``. Instant figures are drawn in the canonical pole frame.
"""

import csv
import logging
import math
from pathlib import Path
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from ..utility import slotted, significant
from ..plane.numbers import (
    GCNum,
    PAngle,
    Sector,
    ZERO,
    scale,
    exp_i,
    from_polar,
    PolarForm,
    check_plane,
    principal_sector,
)
from ..plane.trig import sinp, period
from ..kinematics.motion import MotionSpec, instant_invariants
from ..kinematics.measure import measure_station
from ..kinematics.euler_savary import (
    PoleRayStation,
    inversion_image,
    TANGENT_TOLERANCE,
)
from .svg import Figure, Polyline, Segment, Marker


logger = logging.getLogger(__name__)

#: fewest samples accepted for a curve
MIN_SAMPLES = 16
#: where a point ``N`` is placed on its ray, as a fraction of ``rho*``
POINT_FRACTION = 2 / 3

Row = Tuple[str, float, float]


@slotted
class CanonicalInstant:
    """
    An instant given only by its inflection diameter, in its canonical frame

    :param p: the plane parameter
    :param h: the inflection diameter
    :param angles: the ray angles to draw, measured from the common tangent
    """

    __slots__ = ("p", "h", "angles")

    def __init__(self, p: float, h: float, angles: Optional[Sequence[float]] = None):
        self.p = check_plane(p)
        self.h = float(h)
        if not self.h > 0 or not math.isfinite(self.h):
            raise ValueError(f"inflection diameter must be positive, got {h!r}")
        self.angles = tuple(
            float(theta) for theta in (default_angles(p) if angles is None else angles)
        )
        for theta in self.angles:
            if abs(sinp(theta, self.p)) <= TANGENT_TOLERANCE:
                raise ValueError(
                    f"ray angle {theta!r} lies on the common tangent,"
                    " which carries no inflection point"
                )


def default_angles(p: float) -> Tuple[float, float, float]:
    """Three ray angles on the inflection side of the common tangent"""
    if p < 0:
        return tuple(period(p) * fraction for fraction in (1 / 12, 1 / 4, 5 / 12))
    root = math.sqrt(p) if p > 0 else 1.0
    return tuple(value / root for value in (0.4, 0.8, 1.2))


class RayPoints(NamedTuple):
    """The points of one pole ray, in the canonical frame"""

    point: GCNum
    center: GCNum
    inflection: GCNum
    image: GCNum


class InstantGeometry(NamedTuple):
    p: float
    h: float
    rays: Tuple[RayPoints, ...]


def _ray_points(station: PoleRayStation) -> RayPoints:
    X = station.X
    return RayPoints(
        point=scale(X, station.rho),
        center=scale(X, station.rho_prime),
        inflection=scale(X, station.rho_star),
        image=inversion_image(station).Q,
    )


def instant_geometry(
    instant: Union[MotionSpec, CanonicalInstant], t: float = 0.0
) -> InstantGeometry:
    """
    Collect the points of an instant's figure

    For a motion, curvature centers are measured from sampled trajectories;
    for a canonical instant, they follow from ``1/rho* = 1/rho - 1/rho'``.
    """
    p = instant.p
    sector = principal_sector(p)
    rays = []
    if isinstance(instant, CanonicalInstant):
        h = instant.h
        for theta in instant.angles:
            rho_star = h * sinp(theta, p)
            rho = POINT_FRACTION * rho_star
            rho_prime = rho * rho_star / (rho_star - rho)
            station = PoleRayStation(
                p, exp_i(theta, p), PAngle(theta, sector), rho, rho_prime, rho_star
            )
            rays.append(_ray_points(station))
    else:
        inv = instant_invariants(instant, t)
        h = inv.h
        for theta in default_angles(p):
            rho = POINT_FRACTION * h * sinp(theta, p)
            station = measure_station(instant, t, PAngle(theta, sector), rho, inv)
            rays.append(_ray_points(station))
    return InstantGeometry(p, h, tuple(rays))


def inflection_locus(p: float, h: float, samples: int) -> List[GCNum]:
    """
    Points ``h sinp(theta) e^(i theta)`` of the inflection locus

    They satisfy ``x**2 - p y**2 == h y``: a p-circle through the pole, the
    parabola ``y = x**2 / h`` for ``p == 0``, and the hyperbola branch
    through the pole for ``p > 0``.
    """
    if p < 0:
        thetas = np.linspace(0, period(p) / 2, samples)
    else:
        reach = 1.5 / math.sqrt(p) if p > 0 else 2.0
        thetas = np.linspace(-reach, reach, samples)
    return [scale(exp_i(theta, p), h * sinp(theta, p)) for theta in map(float, thetas)]


def unit_circle_points(p: float, samples: int) -> List[Tuple[str, List[GCNum]]]:
    """
    The branches of the unit circle ``|x**2 - p y**2| == 1``

    :return: pairs of branch name and its sampled points
    """
    if samples < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples, got {samples}")
    if p < 0:
        thetas = np.linspace(0, period(p), samples)
        return [("circle", [exp_i(theta, p) for theta in map(float, thetas)])]
    elif p == 0:
        heights = np.linspace(-2.0, 2.0, samples)
        return [
            ("right", [GCNum(1.0, float(y)) for y in heights]),
            ("left", [GCNum(-1.0, float(y)) for y in heights]),
        ]
    thetas = [float(theta) for theta in np.linspace(-2.0, 2.0, samples) / math.sqrt(p)]
    return [
        (
            sector.value,
            [from_polar(PolarForm(1.0, PAngle(theta, sector)), p) for theta in thetas],
        )
        for sector in (
            Sector.HYPERBOLIC_RIGHT,
            Sector.HYPERBOLIC_UP,
            Sector.HYPERBOLIC_LEFT,
            Sector.HYPERBOLIC_DOWN,
        )
    ]


def unit_circle_figure(p: float, samples: int = 256) -> Tuple[Figure, List[Row]]:
    """The unit circle of the plane with its asymptotes or companion cycle"""
    p = check_plane(p)
    branches = unit_circle_points(p, samples)
    metadata = {"p": p, "samples": samples}
    if p > 0:
        metadata["asymptote_slope"] = 1 / math.sqrt(p)
    figure = Figure(f"unit circle of C_p, p={significant(p)}", metadata)
    figure.add(Segment(GCNum(-2.0, 0.0), GCNum(2.0, 0.0), "#999999"))
    figure.add(Segment(GCNum(0.0, -2.0), GCNum(0.0, 2.0), "#999999"))
    for _, points in branches:
        figure.add(Polyline(tuple(points)))
    if p > 0:
        slope = metadata["asymptote_slope"]
        for sign in (1, -1):
            figure.add(
                Segment(
                    GCNum(-2.0, -2.0 * sign * slope),
                    GCNum(2.0, 2.0 * sign * slope),
                    "#cc0000",
                    dashed=True,
                )
            )
    elif p == 0:
        # the cycle y = x**2 / 2, a circle of the plane in the second sense
        cycle = [
            GCNum(float(x), float(x * x / 2)) for x in np.linspace(-2.0, 2.0, samples)
        ]
        figure.add(Polyline(tuple(cycle), "#0066cc", dashed=True))
        figure.add(Marker(GCNum(1.0, 0.5), "cycle y = x²/2", "#0066cc"))
    rows = [(name, point.x, point.y) for name, points in branches for point in points]
    return figure, rows


def instant_figure(
    instant: Union[MotionSpec, CanonicalInstant], t: float = 0.0, samples: int = 256
) -> Tuple[Figure, List[Row]]:
    """
    The inflection geometry of one instant in its canonical frame

    Shows the pole, common tangent and normal, the inflection locus, each
    pole ray with its point ``N``, curvature center, inflection point and
    inversion image, and the line of images at height ``1/h``.
    """
    geometry = instant_geometry(instant, t)
    p, h = geometry.p, geometry.h
    locus = inflection_locus(p, h, samples)
    figure = Figure(
        f"inflection locus, p={significant(p)}, h={significant(h)}",
        {"p": p, "h": h, "t": t},
    )
    reach = max(
        [abs(value) for ray in geometry.rays for point in ray for value in point]
        + [h]
    )
    figure.add(
        Segment(GCNum(-reach, 0.0), GCNum(reach, 0.0)),
        Segment(GCNum(0.0, -reach), GCNum(0.0, reach)),
        Polyline(tuple(locus), "#0066cc"),
        Segment(GCNum(-reach, 1 / h), GCNum(reach, 1 / h), "#cc0000", dashed=True),
        Marker(ZERO, "I"),
    )
    rows: List[Row] = [("pole", 0.0, 0.0)]
    for index, ray in enumerate(geometry.rays, start=1):
        far = max(ray, key=lambda point: abs(point.x) + abs(point.y))
        figure.add(
            Segment(ZERO, far, "#999999", dashed=True),
            Marker(ray.point, f"N{index}"),
            Marker(ray.center, f"γ{index}", "#666666"),
            Marker(ray.inflection, f"N*{index}", "#0066cc"),
            Marker(ray.image, f"Q{index}", "#cc0000"),
        )
        rows.extend(
            (f"{name}{index}", point.x, point.y)
            for name, point in zip(("N", "gamma", "N*", "Q"), ray)
        )
    rows.extend(("locus", point.x, point.y) for point in locus)
    return figure, rows


def write_figure(figure: Figure, rows: Sequence[Row], out_path: Path) -> Path:
    """
    Write a figure as SVG to `out_path` and its points as CSV next to it

    :return: the path of the CSV file
    """
    out_path = Path(out_path)
    csv_path = out_path.with_suffix(".csv")
    out_path.write_text(figure.svg(), encoding="utf-8")
    with open(csv_path, "w", encoding="utf-8", newline="") as stream:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(("curve", "x", "y"))
        writer.writerows((name, significant(x), significant(y)) for name, x, y in rows)
    logger.info("wrote %s and %s", out_path, csv_path)
    return csv_path
