from typing import Sequence, Tuple
from typing_extensions import Protocol


#: The plane parameter ``p`` with ``i**2 == p``; values do not carry it
PlaneParam = float

#: Polynomial coefficients in ascending degree
Coefficients = Sequence[float]

#: Three values, one per pole ray
Triple = Tuple[float, float, float]


class Planar(Protocol):
    """
    Protocol for anything with coordinates in the generalized complex plane

    Matches :py:class:`~cpkin.plane.numbers.GCNum` as well as
    any named tuple or class exposing ``x`` and ``y``.
    """

    @property
    def x(self) -> float:
        raise NotImplementedError

    @property
    def y(self) -> float:
        raise NotImplementedError
