"""cpkin – kinematics in the generalized complex plane"""

__version__ = "0.1.0"

from .api import import_motion, create_motion, import_instant  # noqa: E402

__all__ = ["import_motion", "create_motion", "import_instant"]
