"""Triangle-free graphs with bounded independence number."""

from ._core import *  # noqa: F401,F403
from ._core import Error, Graph  # noqa: F401
