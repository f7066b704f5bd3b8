from typing import Tuple, TypeVar, Type
import math


def motion_resource(location: str) -> Tuple[str, str]:
    """
    Given a module-like location, return the package and resource of a motion

    :param location: a module-like location, such as ``"cpkin.motions.cycloid"``
    :return: a package and resource, such as ``"cpkin.motions", "cycloid.json"``
    """
    package, _, name = location.rpartition(".")
    if not package:
        raise ValueError(f"expected a dotted resource location, got {location!r}")
    return package, f"{name}.json"


def significant(value: float) -> str:
    """Format a float with 17 significant digits, enough to round-trip"""
    return format(value, ".17g")


class GeometryFailure(ValueError):
    """
    Base of all failures caused by degenerate geometry

    A geometry failure is not a programming error: the input is well-formed,
    but the plane, motion or ray it describes has no answer to the question.
    """


T = TypeVar("T")


def slotted(cls: Type[T]) -> Type[T]:
    """
    Class decorator to add ``__repr__``, ``__eq__`` and ``__hash__`` from ``__slots__``
    """
    # use dict comprehension to get unique insertion order
    slots = tuple(
        {
            name: None
            for scls in reversed(cls.__mro__)
            for name in getattr(scls, "__slots__", ())
            if not name.startswith("_")
        }
    )

    def __repr__(self: T):
        members = ", ".join(f"{name}={getattr(self, name)!r}" for name in slots)
        return f"{self.__class__.__name__}({members})"

    def __eq__(self: T, other) -> bool:
        return isinstance(other, type(self)) and all(
            getattr(self, name) == getattr(other, name) for name in slots
        )

    def __hash__(self: T) -> int:
        return hash(
            (*(_hashable(getattr(self, name)) for name in slots), hash(type(self)))
        )

    cls.__repr__ = __repr__
    cls.__eq__ = __eq__
    cls.__hash__ = __hash__
    return cls


def _hashable(value):
    return tuple(value) if isinstance(value, list) else value


def json_ready(value):
    """Replace non-finite floats in a JSON document by ``None``, i.e. ``null``"""
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    elif isinstance(value, dict):
        return {key: json_ready(item) for key, item in value.items()}
    elif isinstance(value, (list, tuple)):
        return [json_ready(item) for item in value]
    return value
