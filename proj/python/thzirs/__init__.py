# SPDX-License-Identifier: Apache-2.0
"""Spherical-wavefront channel model and link analysis for reflecting
surfaces at terahertz carriers."""

from ._thzirs import *  # noqa: F401,F403
from ._thzirs import __version__  # noqa: F401
