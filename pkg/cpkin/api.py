"""
Reading motions and configurations from JSON documents

Documents may be given as text, as a file path, or as a packaged resource
location such as ``"cpkin.motions.cycloid"``.
"""

from typing import Any, NamedTuple, Optional, Tuple, Union
import importlib.resources
import json
import os

from .utility import GeometryFailure, motion_resource
from .plane.numbers import PAngle, check_plane, principal_sector
from .kinematics.motion import MotionSpec
from .kinematics.bobillier import BobillierConfig
from .figures.plots import CanonicalInstant


def context(source: str, line: int, column: int) -> Tuple[str, str]:
    """Provide the text of ``source`` before and after a line and column"""
    text = source.splitlines()[line - 1] if source.splitlines() else ""
    return text[: column - 1], text[column - 1 :]


class ParseError(ValueError):
    """A configuration document is malformed or does not match its schema"""

    __slots__ = ("message", "source", "path", "line", "column")

    def __init__(
        self,
        message: str,
        source: str,
        path: str = "<string>",
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        super().__init__(message, path, line, column)
        self.message = message
        self.source = source
        self.path = path
        self.line = line
        self.column = column

    def __str__(self):
        if self.line is None:
            return f"in {self.path}: {self.message}"
        head, tail = context(self.source, self.line, self.column)
        return "\n".join(
            (
                f"in {self.path}, line {self.line}, column {self.column}",
                self.message,
                f"{' ' * len(head)}v-[at line {self.line}]",
                head + tail,
            )
        )


def read_document(source: str, path: str = "<string>") -> Any:
    """Decode a JSON `source`, reporting errors with their position"""
    try:
        return json.loads(source)
    except json.JSONDecodeError as err:
        raise ParseError(err.msg, source, path, err.lineno, err.colno) from None


def read_config(location: str) -> Tuple[str, str]:
    """
    Read the text of a configuration from a path or a packaged resource

    :param location: a filesystem path or a module-like resource location
    :return: the text of the configuration and the name it was read from
    """
    if os.path.exists(location) or os.sep in location or location.endswith(".json"):
        with open(location, encoding="utf-8") as stream:
            return stream.read(), location
    package, resource = motion_resource(location)
    try:
        return importlib.resources.read_text(package, resource), location
    except (ImportError, TypeError) as err:
        # missing package, or a module that is not a package
        raise FileNotFoundError(
            f"no packaged configuration {location!r}: {err}"
        ) from err


def _schema(source: str, path: str, build, document):
    try:
        return build(document)
    except (ValueError, TypeError, KeyError) as err:
        if isinstance(err, (ParseError, GeometryFailure)):
            raise
        message = f"missing key {err.args[0]!r}" if isinstance(err, KeyError) else err
        raise ParseError(str(message), source, path) from err


def create_motion(source: str, path: str = "<string>") -> MotionSpec:
    """
    Create a motion from its JSON `source`

    :param source: a JSON object with the keys ``p``, ``theta``, ``tx`` and ``ty``
    :param path: the name of the source for error messages
    """
    document = read_document(source, path)
    return _schema(source, path, MotionSpec.from_json, document)


def import_motion(location: str) -> MotionSpec:
    """
    Import a motion from a path or a packaged `location`

    The `location` ``"cpkin.motions.cycloid"`` looks for a resource named
    ``cycloid.json`` in the package ``cpkin.motions``. Anything that exists
    on the filesystem or looks like a path is read as a file instead.
    """
    return create_motion(*read_config(location))


def _instant(document) -> Union[MotionSpec, CanonicalInstant]:
    if not isinstance(document, dict):
        raise TypeError("expected a JSON object")
    if "h" in document:
        return CanonicalInstant(
            document["p"], document["h"], document.get("angles", None)
        )
    return MotionSpec.from_json(document)


def import_instant(location: str) -> Union[MotionSpec, CanonicalInstant]:
    """
    Import either a motion or a canonical instant ``{"p", "h", "angles"}``

    Canonical instants describe one instant by its inflection diameter alone;
    they are the only way to describe an instant of the parabolic plane.
    """
    source, path = read_config(location)
    return _schema(source, path, _instant, read_document(source, path))


class BobillierRequest(NamedTuple):
    """A Bobillier evaluation, either of raw rays or of an instant of a motion"""

    p: float
    mode: str
    config: Optional[BobillierConfig] = None
    motion: Optional[MotionSpec] = None
    t: float = 0.0
    angles: Tuple[PAngle, ...] = ()


def _angles(p: float, values) -> Tuple[PAngle, ...]:
    if len(values) != 3:
        raise ValueError(f"expected three ray angles, got {len(values)}")
    return tuple(PAngle(float(theta), principal_sector(p)) for theta in values)


def _bobillier(document) -> BobillierRequest:
    p = check_plane(document["p"])
    mode = document.get("mode", "raw")
    if mode == "raw":
        raw = document["raw"]
        config = BobillierConfig.from_rays(
            p,
            [float(value) for value in raw["rho_star"]],
            [angle.theta for angle in _angles(p, raw["theta"])],
        )
        return BobillierRequest(p, mode, config=config)
    elif mode == "motion":
        section = document["motion"]
        motion = MotionSpec.from_json(section["spec"])
        if motion.p != p:
            raise ValueError(f"motion has p={motion.p!r} but configuration p={p!r}")
        return BobillierRequest(
            p,
            mode,
            motion=motion,
            t=float(section.get("t", 0.0)),
            angles=_angles(p, section["angles"]),
        )
    raise ValueError(f"mode must be 'raw' or 'motion', got {mode!r}")


def create_bobillier(source: str, path: str = "<string>") -> BobillierRequest:
    """Create a Bobillier request from its JSON `source`"""
    return _schema(source, path, _bobillier, read_document(source, path))


def import_bobillier(location: str) -> BobillierRequest:
    return create_bobillier(*read_config(location))
