"""Interference-alignment schemes for non-linear deterministic K-user channels.

Three constructive codes (primitive-root, vanish-point, and quadratic
decoding schemes), the number theory behind their parameters, and a harness
that verifies zero-error decoding and measures finite-q rate ratios.
"""

from ._kernels import backend_name
from .channel import ChannelSpec, Semantics, channel_outputs, receiver_arguments
from .polynomial import INTEGER_MODE, MultiPoly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "backend_name",
    "ChannelSpec",
    "Semantics",
    "channel_outputs",
    "receiver_arguments",
    "INTEGER_MODE",
    "MultiPoly",
    "parse_poly",
]
