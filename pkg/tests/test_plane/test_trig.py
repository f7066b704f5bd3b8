import math

import numpy as np
import pytest

from cpkin.plane.trig import (
    cosp,
    sinp,
    tanp,
    atanp,
    period,
    p_trig_derivatives,
    PoleOfTangent,
    OutOfRange,
)


cosp_values = [
    (0.7, 0.0, 1.0),
    (-3.0, 0.0, 1.0),
    (math.pi, -1.0, -1.0),
    (1.0, 4.0, math.cosh(2)),
]
sinp_values = [
    (0.7, 0.0, 0.7),
    (math.pi / 4, -4.0, 0.5),
    (1.0, 1.0, math.sinh(1)),
]
tanp_values = [
    (0.7, 0.0, 0.7),
    (math.pi / 4, -1.0, 1.0),
    (0.5, 1.0, math.tanh(0.5)),
]


@pytest.mark.parametrize("theta, p, expected", cosp_values)
def test_cosp(theta, p, expected):
    assert cosp(theta, p) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("theta, p, expected", sinp_values)
def test_sinp(theta, p, expected):
    assert sinp(theta, p) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("theta, p, expected", tanp_values)
def test_tanp(theta, p, expected):
    assert tanp(theta, p) == pytest.approx(expected, rel=1e-14)


def test_tanp_pole():
    with pytest.raises(PoleOfTangent) as exc_info:
        tanp(math.pi / 2, -1.0)
    assert "pole" in str(exc_info.value)
    assert exc_info.value.p == -1.0


def test_fundamental_identity():
    rng = np.random.default_rng(1)
    for theta, p in zip(rng.uniform(-10, 10, 10_000), rng.uniform(-5, 5, 10_000)):
        cos_value, sin_value = cosp(theta, p), sinp(theta, p)
        magnitude = max(1.0, cos_value**2, abs(p) * sin_value**2)
        assert abs(cos_value**2 - p * sin_value**2 - 1) <= 1e-12 * magnitude


derivative_values = [
    (0.0, -2.0, (0.0, 1.0)),
    (0.0, 3.0, (0.0, 1.0)),
    (1.3, 0.0, (0.0, 1.0)),
    (0.3, -1.0, (-math.sin(0.3), math.cos(0.3))),
    (0.3, 1.0, (math.sinh(0.3), math.cosh(0.3))),
]


@pytest.mark.parametrize("theta, p, expected", derivative_values)
def test_derivatives(theta, p, expected):
    assert p_trig_derivatives(theta, p) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("p", [-3.0, -1.0, -0.4, 0.0, 0.4, 1.0, 3.0])
def test_derivatives_match_differences(p):
    step = 1e-6
    for theta in np.linspace(-2, 2, 41):
        d_cos, d_sin = p_trig_derivatives(theta, p)
        fd_cos = (cosp(theta + step, p) - cosp(theta - step, p)) / (2 * step)
        fd_sin = (sinp(theta + step, p) - sinp(theta - step, p)) / (2 * step)
        assert fd_cos == pytest.approx(d_cos, abs=1e-8 * max(1, abs(d_cos)))
        assert fd_sin == pytest.approx(d_sin, abs=1e-8 * max(1, abs(d_sin)))


@pytest.mark.parametrize("theta", [-2.0, -0.5, 0.0, 0.5, 2.0])
def test_continuous_at_parabolic(theta):
    for p in (1e-8, -1e-8):
        assert abs(cosp(theta, p) - cosp(theta, 0.0)) <= 1e-7
        assert abs(sinp(theta, p) - sinp(theta, 0.0)) <= 1e-7


atanp_values = [
    (0.0, -1.0, 0.0),
    (0.0, 2.0, 0.0),
    (0.3, 0.0, 0.3),
    (-4.0, 0.0, -4.0),
    (math.tanh(0.4), 1.0, 0.4),
    (1.0, -1.0, math.pi / 4),
]


@pytest.mark.parametrize("value, p, expected", atanp_values)
def test_atanp(value, p, expected):
    assert atanp(value, p) == pytest.approx(expected, rel=1e-14, abs=1e-15)


@pytest.mark.parametrize("p", [-3.0, -1.0, 0.0, 0.5, 2.0])
def test_atanp_inverts_tanp(p):
    for theta in np.linspace(-0.5, 0.5, 11):
        assert atanp(tanp(theta, p), p) == pytest.approx(theta, abs=1e-14)


@pytest.mark.parametrize("value, p", [(1.0, 1.0), (-1.0, 1.0), (0.5, 4.0), (2.0, 1.0)])
def test_atanp_out_of_range(value, p):
    with pytest.raises(OutOfRange):
        atanp(value, p)


def test_period():
    assert period(-1.0) == pytest.approx(2 * math.pi)
    assert period(-4.0) == pytest.approx(math.pi)
    assert period(0.0) == math.inf
    assert period(1.0) == math.inf
