"""Pattern-avoiding rectangulations: enumeration and generating functions."""

from ._rectlab import *  # noqa: F401,F403
from ._rectlab import Drawing, Rect, ResourceLimit  # noqa: F401
