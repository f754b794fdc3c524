"""Cyclic (circulant) motions in E^3."""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
