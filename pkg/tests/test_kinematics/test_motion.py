import math
import pickle

import numpy as np
import pytest

from cpkin.plane.numbers import (
    GCNum,
    PAngle,
    Sector,
    add,
    norm,
    exp_i,
    principal_sector,
    scalar,
    NullDivisor,
    SectorMismatch,
)
from cpkin.kinematics.motion import (
    MotionSpec,
    trajectory,
    absolute_velocity,
    acceleration,
    acceleration_terms,
    velocity,
    instantaneous_pole,
    pole_in_moving_plane,
    pole_velocity,
    instant_invariants,
    find_inflection_point,
    to_canonical,
    from_canonical,
    load,
    dump,
    NoPole,
    NoRoot,
    DegenerateMotion,
)
from cpkin.plane.trig import period
from cpkin.verify import random_motion, sample_instants


def cycloid():
    return MotionSpec(-1.0, [0, 1], [0, 1], [0])


def lorentz():
    return MotionSpec(1.0, [0, 1], [0, 1], [0, 0, 0.25])


def rotation(p=-1.0):
    return MotionSpec(p, [0, 1])


SWEEP = [-3.0, -1.0, 1.0, 3.0]

positions = [
    (rotation(), (1, 0), math.pi / 2, (0, 1)),
    (rotation(1.0), (1, 0), 0.5, (math.cosh(0.5), math.sinh(0.5))),
    (cycloid(), (0, 0), 2.0, (2, 0)),
    (MotionSpec(0.0, [0, 1], [0, 1]), (0, 0), 2.0, (2, 0)),
    (MotionSpec(0.0, [0, 1]), (1, 1), 0.5, (1, 1.5)),
]


@pytest.mark.parametrize("m, z, t, expected", positions)
def test_trajectory(m, z, t, expected):
    assert trajectory(m, GCNum(*z), t) == pytest.approx(expected, abs=1e-15)


def test_motion_spec():
    m = MotionSpec(-1, [0, 2, 3], [1], [0, 0, 1])
    assert m.angle(1.0) == 5
    assert m.angle(1.0, 1) == 8
    assert m.angle(1.0, 2) == 6
    assert m.translation(2.0) == (1, 4)
    assert m.translation(2.0, 1) == (0, 4)
    assert m == MotionSpec(-1.0, (0.0, 2.0, 3.0), (1.0,), (0.0, 0.0, 1.0))
    assert m != cycloid()
    assert hash(m) == hash(MotionSpec(-1, [0, 2, 3], [1], [0, 0, 1]))


@pytest.mark.parametrize(
    "theta, tx",
    [([], [0]), ([0, 1], []), ([0, math.nan], [0]), ([0, 1], [math.inf])],
)
def test_motion_spec_invalid(theta, tx):
    with pytest.raises(ValueError):
        MotionSpec(-1.0, theta, tx)


def test_constant_rotation():
    with pytest.raises(NoPole):
        MotionSpec(-1.0, [0.5], [0, 1])
    with pytest.raises(NoPole):
        MotionSpec(-1.0, [0.5, 0, 0])


def test_serialization():
    m = lorentz()
    assert load(dump(m)) == m
    assert pickle.loads(pickle.dumps(m)) == m
    assert m.to_json() == {"p": 1.0, "theta": [0, 1], "tx": [0, 1], "ty": [0, 0, 0.25]}
    with pytest.raises(ValueError):
        MotionSpec.from_json({"p": 1.0, "theta": [0, 1], "tx": [0], "ty": [0], "q": 0})
    with pytest.raises(ValueError) as exc_info:
        MotionSpec.from_json({"p": 1.0, "theta": [0, 1], "tx": [0]})
    assert "'ty'" in str(exc_info.value)


velocities = [
    (rotation(), (1, 0), 0.0, (0, 1)),
    (rotation(1.0), (1, 0), 0.0, (0, 1)),
    (cycloid(), (0, -1), 0.0, (2, 0)),
    (cycloid(), (0, 1), 0.0, (0, 0)),
    (MotionSpec(0.0, [0, 1]), (1, 5), 3.0, (0, 1)),
]


@pytest.mark.parametrize("m, z, t, expected", velocities)
def test_absolute_velocity(m, z, t, expected):
    assert absolute_velocity(m, GCNum(*z), t) == pytest.approx(expected, abs=1e-15)


accelerations = [
    (rotation(), (1, 0), 0.0, (-1, 0)),
    (rotation(1.0), (1, 0), 0.0, (1, 0)),
    (MotionSpec(-1.0, [0, 0, 0.5]), (1, 0), 0.0, (0, 1)),
    (MotionSpec(0.0, [0, 1], [0, 0, 1]), (3, 4), 1.0, (2, 0)),
]


@pytest.mark.parametrize("m, z, t, expected", accelerations)
def test_acceleration(m, z, t, expected):
    assert acceleration(m, GCNum(*z), t) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("p", [-3.0, -1.0, 0.0, 1.0, 3.0])
def test_derivatives_match_differences(p):
    rng = np.random.default_rng(3)
    for _ in range(50):
        m = random_motion(rng, p)
        z = GCNum(*rng.uniform(-1, 1, 2))
        t = rng.uniform(-0.5, 0.5)
        step = 1e-6
        ahead, behind = trajectory(m, z, t + step), trajectory(m, z, t - step)
        finite = GCNum(*((a - b) / (2 * step) for a, b in zip(ahead, behind)))
        exact = absolute_velocity(m, z, t)
        assert finite == pytest.approx(exact, rel=1e-8, abs=1e-8)
        step = 1e-4
        ahead, behind = trajectory(m, z, t + step), trajectory(m, z, t - step)
        here = trajectory(m, z, t)
        finite = GCNum(
            *((a - 2 * c + b) / step**2 for a, b, c in zip(ahead, behind, here))
        )
        exact = acceleration(m, z, t)
        assert finite == pytest.approx(exact, rel=1e-6, abs=1e-6)


@pytest.mark.parametrize("p", SWEEP)
def test_velocity_decomposition(p):
    rng = np.random.default_rng(5)
    for _ in range(1000):
        m = random_motion(rng, p)
        z = GCNum(*rng.uniform(-1, 1, 2))
        t = rng.uniform(-0.5, 0.5)
        state = velocity(m, z, t)
        assert add(state.relative, state.sliding) == pytest.approx(
            state.absolute, rel=1e-12, abs=1e-12
        )
        assert state.acceleration == acceleration(m, z, t)


@pytest.mark.parametrize("p", SWEEP)
def test_pole(p):
    rng = np.random.default_rng(9)
    for _ in range(200):
        m = random_motion(rng, p)
        t = rng.uniform(-0.5, 0.5)
        z_pole = pole_in_moving_plane(m, t)
        scale = 1 + math.hypot(*z_pole) * abs(m.angle(t, 1))
        assert math.hypot(*absolute_velocity(m, z_pole, t)) <= 1e-10 * scale
        assert instantaneous_pole(m, t) == trajectory(m, z_pole, t)


def test_pole_examples():
    assert instantaneous_pole(rotation(), 1.0) == (0, 0)
    assert instantaneous_pole(cycloid(), 0.0) == pytest.approx((0, 1), abs=1e-15)
    assert instantaneous_pole(lorentz(), 0.0) == pytest.approx((0, -1), abs=1e-15)
    assert pole_velocity(cycloid(), 0.0) == pytest.approx((1, 0), abs=1e-15)
    assert pole_velocity(lorentz(), 0.0) == pytest.approx((0.5, 0), abs=1e-15)
    with pytest.raises(NullDivisor):
        instantaneous_pole(MotionSpec(0.0, [0, 1], [0, 1]), 0.0)
    with pytest.raises(NoPole):
        instantaneous_pole(MotionSpec(-1.0, [0, 0, 1], [0, 1]), 0.0)


@pytest.mark.parametrize("p", SWEEP)
def test_pole_velocity_matches_differences(p):
    rng = np.random.default_rng(13)
    step = 1e-6
    for _ in range(50):
        m = random_motion(rng, p)
        ahead, behind = instantaneous_pole(m, step), instantaneous_pole(m, -step)
        finite = GCNum(*((a - b) / (2 * step) for a, b in zip(ahead, behind)))
        assert finite == pytest.approx(pole_velocity(m, 0.0), rel=1e-6, abs=1e-6)


@pytest.mark.parametrize("p", SWEEP)
def test_acceleration_terms(p):
    rng = np.random.default_rng(17)
    for _ in range(200):
        m = random_motion(rng, p)
        z = GCNum(*rng.uniform(-2, 2, 2))
        terms = acceleration_terms(m, z, 0.0)
        total = add(terms.pole, add(terms.tangential, terms.centripetal))
        assert total == pytest.approx(acceleration(m, z, 0.0), rel=1e-10, abs=1e-10)


def test_centripetal_points_to_pole():
    terms = acceleration_terms(rotation(), GCNum(2, 0), 0.0)
    assert terms.pole == (0, 0)
    assert terms.tangential == (0, 0)
    assert terms.centripetal == pytest.approx((-2, 0))


instants = [
    (cycloid(), 1.0, (0, 1), (-1, 0)),
    (lorentz(), 0.5, (0, -1), (-1, 0)),
]


@pytest.mark.parametrize("m, h, pole, tangent", instants)
def test_instant_invariants(m, h, pole, tangent):
    inv = instant_invariants(m, 0.0)
    assert inv.h == pytest.approx(h, rel=1e-9)
    assert inv.h_analytic == pytest.approx(h, rel=1e-12)
    assert inv.pole == pytest.approx(pole, abs=1e-15)
    assert inv.tangent_dir == pytest.approx(tangent, abs=1e-15)
    assert inv.w == 1 and inv.w_dot == 0
    assert to_canonical(inv, inv.pole) == (0, 0)
    canonical_accel = inv.canonical_vector(inv.pole_accel)
    assert canonical_accel.x == pytest.approx(0, abs=1e-15)
    assert canonical_accel.y > 0


@pytest.mark.parametrize("p", SWEEP)
def test_invariants_of_random_motions(p):
    rng = np.random.default_rng(19)
    for instant in sample_instants(rng, p, 8):
        assert instant is not None
        m, t, inv, _ = instant
        assert inv.t == t
        assert inv.h == pytest.approx(inv.h_analytic, rel=1e-6)
        assert inv.h == pytest.approx(norm(pole_velocity(m, t), p) / abs(inv.w))
        # the pole acceleration lies on the common normal
        magnitude = math.hypot(*inv.pole_accel) * math.hypot(*inv.tangent_dir)
        assert abs(scalar(inv.pole_accel, inv.tangent_dir, p)) <= 1e-10 * max(
            1, abs(p)
        ) * magnitude
        point = GCNum(0.3, -0.7)
        assert from_canonical(inv, to_canonical(inv, point)) == pytest.approx(
            point, rel=1e-9, abs=1e-9
        )


@pytest.mark.parametrize("p", SWEEP)
def test_inflection_locus(p):
    """Inflection points of every pole ray lie on one p-circle through the pole"""
    rng = np.random.default_rng(23)
    (m, t, inv, _), *_ = sample_instants(rng, p, 1)
    reach = period(p) / 2 if p < 0 else 1.5 / math.sqrt(p)
    sector = principal_sector(p)
    for theta in np.linspace(0.1, 0.9, 8) * reach:
        rho_star = find_inflection_point(m, t, PAngle(float(theta), sector))
        x, y = (rho_star * component for component in exp_i(theta, p))
        assert x**2 - p * y**2 == pytest.approx(inv.h * y, rel=1e-8)


def test_rescaled_instant():
    base = instant_invariants(cycloid(), 0.0)
    faster = instant_invariants(cycloid().rescaled(3.0), 0.0)
    assert faster.w == 3 * base.w
    assert faster.h == pytest.approx(base.h, rel=1e-9)
    assert faster.pole == pytest.approx(base.pole, abs=1e-15)


def test_degenerate_motions():
    with pytest.raises(DegenerateMotion):
        instant_invariants(rotation(), 0.0)
    with pytest.raises(DegenerateMotion):
        instant_invariants(rotation(1.0), 0.0)
    with pytest.raises(NullDivisor):
        instant_invariants(MotionSpec(0.0, [0, 1], [0, 1]), 0.0)


inflections = [
    (cycloid(), PAngle(math.pi / 2, Sector.ELLIPTIC), 1.0),
    (cycloid(), PAngle(math.pi / 6, Sector.ELLIPTIC), 0.5),
    (lorentz(), PAngle(0.5, Sector.HYPERBOLIC_RIGHT), 0.5 * math.sinh(0.5)),
]


@pytest.mark.parametrize("m, direction, rho_star", inflections)
def test_find_inflection_point(m, direction, rho_star):
    assert find_inflection_point(m, 0.0, direction) == pytest.approx(
        rho_star, rel=1e-9
    )


@pytest.mark.parametrize("theta", [0.0, math.pi, -math.pi / 2])
def test_no_inflection_point(theta):
    with pytest.raises(NoRoot) as exc_info:
        find_inflection_point(cycloid(), 0.0, PAngle(theta, Sector.ELLIPTIC))
    assert "meets no inflection point" in str(exc_info.value)


def test_inflection_ray_sector():
    with pytest.raises(SectorMismatch):
        find_inflection_point(lorentz(), 0.0, PAngle(0.5, Sector.HYPERBOLIC_UP))


