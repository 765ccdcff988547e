"""Tight spectral filter banks on graphs, adapted to signal energy."""

from ._graphspectra import *  # noqa: F401,F403
from ._graphspectra import __version__  # noqa: F401
