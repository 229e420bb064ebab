"""Lossy-channel model shared by all three protocols.

The only physics here is photon survival.  A protocol run compounds the
per-segment transmission probability once per channel pass (one pass for a
prepare-and-measure scheme, two for a single-photon round trip, four when an
entangled pair makes the trip), and the harness spends a single uniform draw
per round against that compounded probability.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class ConfigError(ValueError):
    """A configuration value is outside its allowed range."""


class Protocol(Enum):
    BB84 = "bb84"
    PP = "pp"
    LM05 = "lm05"

    @property
    def passes(self) -> int:
        """Number of channel traversals a detected round requires."""
        return _PASSES[self]

    @property
    def deterministic(self) -> bool:
        """True when every detected message-mode round yields a key bit."""
        return self is not Protocol.BB84


_PASSES = {Protocol.BB84: 1, Protocol.PP: 4, Protocol.LM05: 2}


@dataclass(frozen=True, slots=True)
class ChannelConfig:
    """Per-segment channel parameters.

    p_segment is the single-pass transmission probability.  Detector
    efficiency is folded into each pass (a photon that survives the fiber
    but misses the detector is indistinguishable from a lost one here).
    Dark counts promote a lost round to a spurious detection whose outcome
    bits are uniformly random.
    """

    p_segment: float = 1.0
    detector_efficiency: float = 1.0
    dark_count_prob: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 < self.p_segment <= 1.0:
            raise ConfigError(f"p_segment must be in (0, 1], got {self.p_segment}")
        if not 0.0 < self.detector_efficiency <= 1.0:
            raise ConfigError(
                f"detector_efficiency must be in (0, 1], got {self.detector_efficiency}"
            )
        if not 0.0 <= self.dark_count_prob < 1.0:
            raise ConfigError(
                f"dark_count_prob must be in [0, 1), got {self.dark_count_prob}"
            )

    def transmittance(self, protocol: Protocol) -> float:
        """Probability that a round of the given protocol is detected."""
        return (self.p_segment * self.detector_efficiency) ** protocol.passes
