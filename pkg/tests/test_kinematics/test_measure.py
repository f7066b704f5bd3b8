import math

import numpy as np
import pytest

from cpkin.plane.numbers import GCNum, PAngle, Sector, exp_i, NullDivisor
from cpkin.plane.trig import sinp
from cpkin.kinematics.motion import MotionSpec, trajectory, instant_invariants
from cpkin.kinematics.euler_savary import InfiniteRadius, euler_savary_solve
from cpkin.kinematics.measure import (
    sample_step,
    curve_derivatives,
    graph_curvature,
    pole_curve_radii,
    curvature_center,
    moving_point,
    measure_station,
)
from cpkin.verify import sample_instants


def cycloid():
    return MotionSpec(-1.0, [0, 1], [0, 1], [0])


def lorentz():
    return MotionSpec(1.0, [0, 1], [0, 1], [0, 0, 0.25])


def test_curve_derivatives():
    first, second = curve_derivatives(lambda s: GCNum(s**3, s**2), 0.5, 1e-3)
    assert first == pytest.approx((0.75, 1.0), rel=1e-9)
    assert second == pytest.approx((3.0, 2.0), rel=1e-8)


graphs = [
    ((1, 0), (0, 2), 2.0),
    ((-1, 0), (0, 2), 2.0),
    ((2, 0), (5, -8), -2.0),
]


@pytest.mark.parametrize("first, second, expected", graphs)
def test_graph_curvature(first, second, expected):
    assert graph_curvature(GCNum(*first), GCNum(*second)) == expected


def test_sample_step():
    assert sample_step(cycloid(), 0.0) == pytest.approx(1e-3)
    assert sample_step(cycloid().rescaled(-4.0), 0.0) == pytest.approx(2.5e-4)


radii = [
    (cycloid(), 1.0, math.inf),
    (lorentz(), math.inf, -0.5),
]


@pytest.mark.parametrize("m, moving, fixed", radii)
def test_pole_curve_radii(m, moving, fixed):
    measured = pole_curve_radii(m, 0.0)
    assert 1 / measured.moving == pytest.approx(1 / moving, abs=1e-6)
    assert 1 / measured.fixed == pytest.approx(1 / fixed, abs=1e-6)


@pytest.mark.parametrize("p", [-1.0, 1.0])
def test_curvature_center_of_p_circle(p):
    m = MotionSpec(p, [0, 1])
    for radius in (0.5, 2.0):
        center = curvature_center(
            lambda s: trajectory(m, GCNum(radius, 0), s), 0.3, 1e-3, p
        )
        assert center == pytest.approx((0, 0), abs=1e-7)


def test_curvature_center_failures():
    with pytest.raises(InfiniteRadius):
        curvature_center(lambda s: GCNum(2 * s, 0.0), 0.0, 1e-3, -1.0)
    with pytest.raises(NullDivisor):
        curvature_center(lambda s: GCNum(s, s * s), 0.0, 1e-3, 0.0)


@pytest.mark.parametrize("m", [cycloid(), lorentz()])
def test_moving_point(m):
    z = GCNum(0.25, -0.5)
    for t in (-0.3, 0.0, 0.7):
        assert moving_point(m, trajectory(m, z, t), t) == pytest.approx(z, abs=1e-14)


stations = [
    (cycloid(), PAngle(math.pi / 2, Sector.ELLIPTIC), 0.5, 1.0, 1.0),
    (cycloid(), PAngle(math.pi / 6, Sector.ELLIPTIC), 1.0, -1.0, 0.5),
    (lorentz(), PAngle(1.0, Sector.HYPERBOLIC_RIGHT), 0.25, None, 0.5 * math.sinh(1)),
]


@pytest.mark.parametrize("m, direction, rho, rho_prime, rho_star", stations)
def test_measure_station(m, direction, rho, rho_prime, rho_star):
    station = measure_station(m, 0.0, direction, rho)
    assert station.rho == rho
    assert station.theta == direction
    assert station.X == exp_i(direction.theta, m.p)
    assert station.rho_star == pytest.approx(rho_star, rel=1e-6)
    if rho_prime is not None:
        assert station.rho_prime == pytest.approx(rho_prime, rel=1e-6)


@pytest.mark.parametrize("p", [-3.0, -1.0, 1.0, 3.0])
def test_euler_savary_of_measurements(p):
    """Measured pole-curve radii predict the measured curvature centers"""
    rng = np.random.default_rng(29)
    for m, t, inv, angles in sample_instants(rng, p, 4):
        r, r_prime = pole_curve_radii(m, t, inv)
        assert 1 / r_prime - 1 / r == pytest.approx(-1 / inv.h, rel=1e-6)
        for angle in angles:
            rho = inv.h * sinp(angle.theta, p) / 2
            station = measure_station(m, t, angle, rho, inv)
            predicted = euler_savary_solve(r, r_prime, rho, angle, p)
            assert predicted == pytest.approx(station.rho_prime, rel=1e-6)


def test_station_reuses_invariants():
    m = cycloid()
    inv = instant_invariants(m, 0.0)
    direction = PAngle(math.pi / 3, Sector.ELLIPTIC)
    assert measure_station(m, 0.0, direction, 0.4, inv) == measure_station(
        m, 0.0, direction, 0.4
    )
