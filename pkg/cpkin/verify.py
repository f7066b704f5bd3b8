"""
Property battery over a sweep of plane parameters

Every check draws its samples from a generator seeded by
``(seed, check name, p index)``, so a report depends only on its inputs.
Residuals are normalized per check so that one tolerance applies to all:
each check's ``slack`` divides its raw residual.
"""

import json
import logging
import math
import time
import zlib
from typing import Callable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .utility import GeometryFailure, json_ready
from .plane.numbers import (
    GCNum,
    PAngle,
    mul,
    conj,
    scalar,
    principal_sector,
)
from .plane.trig import cosp, sinp, period, p_trig_derivatives
from .kinematics.motion import (
    MotionSpec,
    InstantInvariants,
    instant_invariants,
    trajectory,
    velocity,
    acceleration,
    pole_in_moving_plane,
    absolute_velocity,
)
from .kinematics.euler_savary import (
    inversion_image,
    collinearity_residual,
    parallelism_residual,
)
from .kinematics.bobillier import (
    Case,
    BobillierConfig,
    bobillier_residual,
    bobillier_kinematic_check,
    kinematic_stations,
    route_difference,
    specialized_residual,
)


logger = logging.getLogger(__name__)

DEFAULT_P_VALUES = (-3.0, -1.0, 0.0, 1.0, 3.0)
DEFAULT_CASES = 10_000
DEFAULT_TOLERANCE = 1e-8
#: most motions drawn per plane by the instant-based checks
MOTION_CASES = 8
#: most samples per plane of the differentiation oracle
ORACLE_CASES = 1000
#: most failures recorded per (check, p) cell
MAX_FAILURES = 20
#: most rejected draws before a motion-based sample counts as failed
MAX_DRAWS = 100


class Failure(NamedTuple):
    check: str
    p: float
    offset: int
    residual: float


class VerifyReport(NamedTuple):
    p_values: Tuple[float, ...]
    seed: int
    cases_run: int
    max_abs_residual: float
    failures: Tuple[Failure, ...]
    timing_ms: dict

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> str:
        """Encode the report with stable key order; non-finite numbers are null"""
        document = {
            "p_values": list(self.p_values),
            "seed": self.seed,
            "cases_run": self.cases_run,
            "max_abs_residual": self.max_abs_residual,
            "failures": [failure._asdict() for failure in self.failures],
            "timing_ms": self.timing_ms,
        }
        return json.dumps(json_ready(document), indent=2, allow_nan=False)


Sampler = Callable[[np.random.Generator, float, int], Iterator[float]]


class Check(NamedTuple):
    name: str
    sampler: Sampler
    #: ratio of this check's acceptance threshold to the battery tolerance
    slack: float = 1.0
    #: the plane parameters the check applies to, or any
    planes: Optional[Callable[[float], bool]] = None


# p-trigonometry
def trig_identity(rng: np.random.Generator, p: float, cases: int) -> Iterator[float]:
    """``cosp**2 - p sinp**2 == 1``, relative to the size of its terms"""
    for theta in rng.uniform(-10.0, 10.0, cases):
        cos_value, sin_value = cosp(theta, p), sinp(theta, p)
        magnitude = max(1.0, cos_value**2, abs(p) * sin_value**2)
        yield abs(cos_value**2 - p * sin_value**2 - 1) / magnitude


def trig_derivatives(
    rng: np.random.Generator, p: float, cases: int
) -> Iterator[float]:
    """Analytic derivatives of ``cosp`` and ``sinp`` against central differences"""
    step = 1e-6
    for theta in rng.uniform(-2.0, 2.0, cases):
        d_cos, d_sin = p_trig_derivatives(theta, p)
        fd_cos = (cosp(theta + step, p) - cosp(theta - step, p)) / (2 * step)
        fd_sin = (sinp(theta + step, p) - sinp(theta - step, p)) / (2 * step)
        yield max(
            abs(fd_cos - d_cos) / max(1.0, abs(d_cos)),
            abs(fd_sin - d_sin) / max(1.0, abs(d_sin)),
        )


def norm_product(rng: np.random.Generator, p: float, cases: int) -> Iterator[float]:
    """Multiplicativity of the squared p-norm and the product form of the scalar"""
    for x1, y1, x2, y2 in rng.uniform(-1.0, 1.0, (cases, 4)):
        z1, z2 = GCNum(x1, y1), GCNum(x2, y2)
        product = mul(z1, z2, p)
        magnitude = (x1 * x1 + abs(p) * y1 * y1) * (x2 * x2 + abs(p) * y2 * y2)
        multiplicative = abs(
            scalar(product, product, p) - scalar(z1, z1, p) * scalar(z2, z2, p)
        )
        product_form = abs(scalar(z1, z2, p) - mul(z1, conj(z2), p).x)
        yield max(multiplicative / magnitude, product_form / math.sqrt(magnitude))


# Bobillier relation of raw rays
def _ray_angles(rng: np.random.Generator, p: float, count: int) -> np.ndarray:
    if p < 0:
        return rng.uniform(0.0, period(p), (count, 3))
    reach = 1.5 / math.sqrt(p) if p > 0 else 3.0
    return rng.uniform(-reach, reach, (count, 3))


def _inflection_config(p: float, h: float, thetas) -> BobillierConfig:
    return BobillierConfig.from_rays(
        p, [h * sinp(theta, p) for theta in thetas], [float(theta) for theta in thetas]
    )


def _magnitude(cfg: BobillierConfig, h: float) -> float:
    return max(
        [h]
        + [
            abs(rho_star * sinp(angle.theta, cfg.p))
            for rho_star, angle in zip(cfg.rho_stars, cfg.angles)
        ]
    )


def bobillier_identity(
    rng: np.random.Generator, p: float, cases: int
) -> Iterator[float]:
    """Rays of one inflection locus satisfy the Bobillier relation"""
    diameters = 10 ** rng.uniform(-1.0, 1.0, cases)
    for h, thetas in zip(diameters, _ray_angles(rng, p, cases)):
        cfg = _inflection_config(p, h, thetas)
        yield abs(bobillier_residual(cfg)) / _magnitude(cfg, h)


def case_reduction(rng: np.random.Generator, p: float, cases: int) -> Iterator[float]:
    """The classical forms agree with the general relation"""
    case = Case(p)
    diameters = 10 ** rng.uniform(-1.0, 1.0, cases)
    for h, thetas in zip(diameters, _ray_angles(rng, p, cases)):
        cfg = _inflection_config(p, h, thetas)
        special = specialized_residual(
            case, cfg.rho_stars, [angle.theta for angle in cfg.angles]
        )
        yield abs(special - bobillier_residual(cfg)) / _magnitude(cfg, h)


# kinematics
def random_motion(rng: np.random.Generator, p: float) -> MotionSpec:
    """A quadratic motion turning at a rate of at least 0.25 for ``|t| <= 0.5``"""
    spin = rng.uniform(0.5, 2.0) * rng.choice((-1.0, 1.0))
    return MotionSpec(
        p,
        [rng.uniform(-1.0, 1.0), spin, rng.uniform(-0.25, 0.25)],
        rng.uniform(-1.0, 1.0, 3),
        rng.uniform(-1.0, 1.0, 3),
    )


def kinematics_oracle(
    rng: np.random.Generator, p: float, cases: int
) -> Iterator[float]:
    """Analytic velocity and acceleration against differences of the trajectory"""
    for _ in range(min(cases, ORACLE_CASES)):
        m = random_motion(rng, p)
        z = GCNum(*rng.uniform(-2.0, 2.0, 2))
        t = float(rng.uniform(-0.5, 0.5))

        def position(s: float) -> np.ndarray:
            return np.array(trajectory(m, z, s))

        step_v, step_a = 1e-6, 1e-4
        fd_velocity = (position(t + step_v) - position(t - step_v)) / (2 * step_v)
        fd_accel = (
            position(t + step_a) - 2 * position(t) + position(t - step_a)
        ) / step_a**2
        exact_velocity = np.array(absolute_velocity(m, z, t))
        exact_accel = np.array(acceleration(m, z, t))
        # differences cancel digits of the position, not of the derivatives
        reach = np.max(np.abs(position(t)))
        residuals = [
            np.max(np.abs(fd_velocity - exact_velocity))
            / max(1.0, reach, np.max(np.abs(exact_velocity))),
            np.max(np.abs(fd_accel - exact_accel))
            / max(1.0, reach, np.max(np.abs(exact_accel)))
            / 100,
        ]
        if p != 0:
            state = velocity(m, z, t)
            split = np.subtract(state.absolute, state.relative) - state.sliding
            residuals.append(
                np.max(np.abs(split)) / max(1.0, np.max(np.abs(state.absolute)))
            )
        yield float(max(residuals))


def pole_speed(rng: np.random.Generator, p: float, cases: int) -> Iterator[float]:
    """The moving pole is at rest, relative to the speed scale of the motion"""
    for _ in range(min(cases, ORACLE_CASES)):
        m = random_motion(rng, p)
        t = float(rng.uniform(-0.5, 0.5))
        speed = np.max(np.abs(absolute_velocity(m, pole_in_moving_plane(m, t), t)))
        yield float(speed / (np.max(np.abs(m.translation(t, 1))) + abs(m.angle(t, 1))))


def _inflection_angles(rng: np.random.Generator, p: float) -> List[PAngle]:
    sector = principal_sector(p)
    if p < 0:
        thetas = rng.uniform(0.1, 0.9, 3) * period(p) / 2
    else:
        thetas = rng.uniform(0.2, 1.2, 3) / math.sqrt(p)
    return [PAngle(float(theta), sector) for theta in np.sort(thetas)]


def sample_instants(
    rng: np.random.Generator, p: float, cases: int
) -> Iterator[Optional[Tuple[MotionSpec, float, InstantInvariants, List[PAngle]]]]:
    """Draw well-conditioned instants of random motions, ``None`` if none is found"""
    for _ in range(min(cases, MOTION_CASES)):
        for _ in range(MAX_DRAWS):
            m = random_motion(rng, p)
            t = float(rng.uniform(-0.5, 0.5))
            angles = _inflection_angles(rng, p)
            try:
                inv = instant_invariants(m, t)
            except GeometryFailure as err:
                logger.debug("rejected motion %r at t=%r: %s", m, t, err)
                continue
            if 0.1 <= inv.h <= 10 and math.hypot(*inv.pole) <= 10 * inv.h:
                yield m, t, inv, angles
                break
        else:
            yield None


def route_equivalence(
    rng: np.random.Generator, p: float, cases: int
) -> Iterator[float]:
    """Measured and kinematic inflection distances agree"""
    for instant in sample_instants(rng, p, cases):
        if instant is None:
            yield math.inf
            continue
        m, t, _, angles = instant
        yield route_difference(m, t, angles)


def kinematic_bobillier(
    rng: np.random.Generator, p: float, cases: int
) -> Iterator[float]:
    """The Bobillier relation from pole acceleration alone"""
    for instant in sample_instants(rng, p, cases):
        if instant is None:
            yield math.inf
            continue
        m, t, inv, angles = instant
        yield abs(bobillier_kinematic_check(m, t, angles)) / inv.h


def collinearity(rng: np.random.Generator, p: float, cases: int) -> Iterator[float]:
    """Inversion images of inflection points lie on a line parallel to the tangent"""
    for instant in sample_instants(rng, p, cases):
        if instant is None:
            yield math.inf
            continue
        m, t, inv, angles = instant
        images = [
            inversion_image(station)
            for station in kinematic_stations(m, t, angles, inv)
        ]
        yield max(
            abs(collinearity_residual(*images)) * inv.h**2,
            abs(parallelism_residual(images[0], images[2])) * inv.h,
        )


def _not_parabolic(p: float) -> bool:
    return p != 0


def _classical(p: float) -> bool:
    return p in (-1.0, 0.0, 1.0)


CHECKS = (
    Check("trig_identity", trig_identity),
    Check("trig_derivatives", trig_derivatives),
    Check("norm_product", norm_product),
    Check("bobillier_identity", bobillier_identity),
    Check("case_reduction", case_reduction, planes=_classical),
    Check("kinematics_oracle", kinematics_oracle),
    Check("route_equivalence", route_equivalence, slack=100, planes=_not_parabolic),
    Check("kinematic_bobillier", kinematic_bobillier, planes=_not_parabolic),
    Check("collinearity", collinearity, planes=_not_parabolic),
    Check("pole_speed", pole_speed, slack=1e-2, planes=_not_parabolic),
)


def run_battery(
    p_values: Sequence[float] = DEFAULT_P_VALUES,
    seed: int = 42,
    cases: int = DEFAULT_CASES,
    tol: float = DEFAULT_TOLERANCE,
    timing: bool = False,
    checks: Sequence[Check] = CHECKS,
) -> VerifyReport:
    """
    Run every check for every plane parameter and collect the failures

    :param p_values: the plane parameters to sweep
    :param seed: the seed of all generators, must be non-negative
    :param cases: the samples drawn per check and plane
    :param tol: the largest normalized residual accepted
    :param timing: whether to record the time spent per check
    """
    if cases < 1:
        raise ValueError(f"cases must be at least 1, got {cases}")
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    p_values = tuple(sorted(float(p) for p in p_values))
    failures: List[Failure] = []
    timings = {}
    max_residual = 0.0
    for check in checks:
        stream = zlib.crc32(check.name.encode())
        elapsed = 0.0
        for p_index, p in enumerate(p_values):
            if check.planes is not None and not check.planes(p):
                continue
            rng = np.random.default_rng([seed, stream, p_index])
            start = time.perf_counter()
            cell_failures = samples = 0
            for offset, raw in enumerate(check.sampler(rng, p, cases)):
                samples += 1
                residual = float(raw) / check.slack
                if not residual <= tol:
                    if cell_failures < MAX_FAILURES:
                        failures.append(Failure(check.name, p, offset, residual))
                    cell_failures += 1
                if math.isnan(residual) or math.isnan(max_residual):
                    max_residual = math.nan
                else:
                    max_residual = max(max_residual, residual)
            elapsed += time.perf_counter() - start
            logger.info(
                "%s at p=%r: %d of %d samples failed",
                check.name,
                p,
                cell_failures,
                samples,
            )
        if timing:
            timings[check.name] = round(elapsed * 1000, 3)
    return VerifyReport(
        p_values=p_values,
        seed=seed,
        cases_run=cases,
        max_abs_residual=max_residual,
        failures=tuple(failures),
        timing_ms=timings,
    )
