"""Artificial bee colony optimizer with interaction-network instrumentation."""

from ._abcnet import *  # noqa: F401,F403
from ._abcnet import __version__  # noqa: F401
