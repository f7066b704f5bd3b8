import pytest

from cpkin import import_motion, create_motion, import_instant
from cpkin.api import (
    ParseError,
    read_document,
    read_config,
    create_bobillier,
    import_bobillier,
)
from cpkin.plane.numbers import PAngle, Sector
from cpkin.kinematics.motion import MotionSpec, NoPole
from cpkin.figures.plots import CanonicalInstant


packaged = [
    ("cpkin.motions.cycloid", MotionSpec(-1.0, [0, 1], [0, 1], [0])),
    ("cpkin.motions.lorentz", MotionSpec(1.0, [0, 1], [0, 1], [0, 0, 0.25])),
    ("cpkin.motions.galilean", CanonicalInstant(0.0, 2.0, [0.4, 0.8, 1.2])),
]


@pytest.mark.parametrize("location, expected", packaged)
def test_packaged(location, expected):
    assert import_instant(location) == expected


def test_import_motion():
    assert import_motion("cpkin.motions.cycloid") == MotionSpec(
        -1.0, [0, 1], [0, 1], [0]
    )
    with pytest.raises(ParseError):
        import_motion("cpkin.motions.galilean")
    with pytest.raises(OSError):
        import_motion("cpkin.motions.nonexistent")
    with pytest.raises(FileNotFoundError) as exc_info:
        import_motion("nosuch.motion")
    assert "nosuch.motion" in str(exc_info.value)
    with pytest.raises(ValueError):
        read_config("cycloid")


def test_import_path(tmp_path):
    path = tmp_path / "shear.json"
    path.write_text('{"p": -4, "theta": [0, 2], "tx": [1], "ty": [0, 3]}')
    assert import_instant(str(path)) == MotionSpec(-4.0, [0, 2], [1], [0, 3])
    source, name = read_config(str(path))
    assert name == str(path) and source.startswith("{")


def test_parse_error_position():
    source = '{\n  "p": ,\n  "theta": [0, 1]\n}'
    with pytest.raises(ParseError) as exc_info:
        create_motion(source, "broken.json")
    error = exc_info.value
    assert (error.path, error.line, error.column) == ("broken.json", 2, 8)
    *_, caret, text = str(error).splitlines()
    assert text == '  "p": ,'
    assert caret.index("v") == 7
    assert "line 2, column 8" in str(error)


schema_errors = [
    '{"p": -1, "theta": [0, 1], "tx": [0]}',
    '{"p": -1, "theta": [0, 1], "tx": [0], "ty": [0], "extra": 1}',
    '{"p": -1, "theta": "01", "tx": [0], "ty": [0]}',
    '{"p": null, "theta": [0, 1], "tx": [0], "ty": [0]}',
    "[1, 2, 3]",
]


@pytest.mark.parametrize("source", schema_errors)
def test_schema_errors(source):
    with pytest.raises(ParseError) as exc_info:
        create_motion(source)
    assert exc_info.value.line is None
    assert str(exc_info.value).startswith("in <string>: ")


def test_geometry_passes_through():
    with pytest.raises(NoPole):
        create_motion('{"p": -1, "theta": [2], "tx": [0, 1], "ty": [0]}')


def test_read_document():
    assert read_document('{"a": [1, 2.5]}') == {"a": [1, 2.5]}
    with pytest.raises(ParseError):
        read_document("{'a': 1}")


def test_canonical_instant(tmp_path):
    path = tmp_path / "instant.json"
    path.write_text('{"p": 1, "h": 0.5}')
    instant = import_instant(str(path))
    assert instant.h == 0.5
    assert instant.angles == pytest.approx((0.4, 0.8, 1.2))
    path.write_text('{"p": 1, "h": -0.5}')
    with pytest.raises(ParseError):
        import_instant(str(path))


def test_bobillier_raw():
    request = create_bobillier(
        '{"p": -1, "mode": "raw",'
        ' "raw": {"rho_star": [1, 1, 1], "theta": [0, -2.0943951, -1.0471976]}}'
    )
    assert request.mode == "raw" and request.motion is None
    assert request.config.rho_stars == (1.0, 1.0, 1.0)
    assert request.config.angles[0].sector is Sector.ELLIPTIC


def test_bobillier_motion(tmp_path):
    path = tmp_path / "request.json"
    path.write_text(
        '{"p": 1, "mode": "motion", "motion": {'
        '"spec": {"p": 1, "theta": [0, 1], "tx": [0, 1], "ty": [0, 0, 0.25]},'
        '"t": 0.0, "angles": [0.3, 0.7, 1.1]}}'
    )
    request = import_bobillier(str(path))
    assert request.motion == import_motion("cpkin.motions.lorentz")
    assert request.angles == tuple(
        PAngle(theta, Sector.HYPERBOLIC_RIGHT) for theta in (0.3, 0.7, 1.1)
    )


bobillier_errors = [
    '{"p": -1, "mode": "chord"}',
    '{"p": -1, "raw": {"rho_star": [1, 1], "theta": [0, 1, 2]}}',
    '{"p": -1, "raw": {"rho_star": [1, 1, 1], "theta": [0, 1]}}',
    '{"p": -1, "mode": "motion", "motion": {"spec":'
    ' {"p": 1, "theta": [0, 1], "tx": [0], "ty": [0]}, "angles": [0, 1, 2]}}',
    '{"mode": "raw"}',
]


@pytest.mark.parametrize("source", bobillier_errors)
def test_bobillier_errors(source):
    with pytest.raises(ParseError):
        create_bobillier(source)
