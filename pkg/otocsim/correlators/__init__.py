"""
    OTOC evaluators.

"""

from .otoc import CorrelatorSpec, otoc_moment, otoc_moment_direct, shot_estimate, mixed_state_moment
from .engineconfig import CorrelatorEngine
