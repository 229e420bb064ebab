"""Run orchestration: seeding, chunking, parallelism and aggregate statistics.

Reproducibility contract: a run is fully determined by its
:class:`SimConfig`.  Rounds are processed in fixed-size chunks and every
chunk owns an independent generator substream derived from the master seed
and the chunk index alone, so the schedule (sequential or any worker count)
cannot change a single outcome.  Chunk tallies are plain integer counters
merged by addition, which is order-insensitive; derived statistics are
computed once from the merged integers.  Two runs of the same config
therefore serialize byte-identically at any parallelism.

The stdlib Mersenne generator is used for the inner loop because millions
of scalar draws per run are needed and it is several times faster per draw
than a vectorized generator called with size 1; substream derivation still
goes through numpy's SeedSequence, whose spawn keys give well-separated
streams from (seed, chunk index).
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .adversaries import AttackConfig, validate_attack
from .analysis import binary_entropy
from .channel import ChannelConfig, ConfigError, Protocol
from .protocols import ROUND_FUNCTIONS, Tally

CHUNK_ROUNDS = 4096


@dataclass(frozen=True, slots=True)
class SimConfig:
    """Everything that determines a run's outcome."""

    protocol: Protocol
    rounds: int
    seed: int = 0
    attack: AttackConfig = field(default_factory=AttackConfig)
    cm_prob: float = 0.0
    channel: ChannelConfig = field(default_factory=ChannelConfig)

    def __post_init__(self) -> None:
        if self.rounds < 1:
            raise ConfigError(f"rounds must be positive, got {self.rounds}")
        if self.seed < 0:
            raise ConfigError(f"seed must be non-negative, got {self.seed}")
        if not 0.0 <= self.cm_prob <= 1.0:
            raise ConfigError(f"cm_prob must be in [0, 1], got {self.cm_prob}")
        if self.protocol is Protocol.BB84 and self.cm_prob != 0.0:
            raise ConfigError(
                "the prepare-and-measure protocol has no control mode; "
                "cm_prob must be 0 for bb84"
            )
        validate_attack(self.protocol, self.attack)

    def as_dict(self) -> dict[str, object]:
        """Flat mapping used for output metadata."""
        return {
            "protocol": self.protocol.value,
            "attack": self.attack.strategy.value,
            "q": self.attack.q,
            "rounds": self.rounds,
            "seed": self.seed,
            "cm_prob": self.cm_prob,
            "p_segment": self.channel.p_segment,
            "detector_efficiency": self.channel.detector_efficiency,
            "dark_count_prob": self.channel.dark_count_prob,
        }


@dataclass(frozen=True, slots=True)
class RunStats:
    """Merged counters of a finished run plus derived statistics.

    Counter semantics: ``raw_key`` is the number of message-mode key bits
    the receiver decoded (for the sifted scheme, the basis-matched subset);
    ``eve_mm_rounds`` of those had the attacker present and ``eve_mm_correct``
    are the ones where her copy of the bit is right.  ``l_final`` is what is
    left of the raw key after discarding every bit the attacker holds.
    """

    rounds: int
    lost: int
    dark: int
    mm_rounds: int
    cm_rounds: int
    raw_key: int
    mm_errors: int
    cm_errors: int
    eve_rounds: int
    eve_mm_rounds: int
    eve_mm_correct: int
    eve_cm_rounds: int
    eve_cm_errors: int

    @classmethod
    def from_tally(cls, tally: Tally) -> "RunStats":
        return cls(**tally.as_dict())

    @property
    def yield_fraction(self) -> float:
        """Detected rounds (including dark firings) over all rounds."""
        return (self.rounds - self.lost) / self.rounds

    @property
    def d_mm(self) -> float:
        """Message-mode error rate over the raw key."""
        return self.mm_errors / self.raw_key if self.raw_key else 0.0

    @property
    def d_cm(self) -> float:
        """Control-mode error rate over all detected control rounds."""
        return self.cm_errors / self.cm_rounds if self.cm_rounds else 0.0

    @property
    def d_cm_intercepted(self) -> float:
        """Control-mode error rate over the attacker-present control rounds."""
        return self.eve_cm_errors / self.eve_cm_rounds if self.eve_cm_rounds else 0.0

    @property
    def eve_known_fraction(self) -> float:
        """Fraction of the raw key the attacker holds correctly."""
        return self.eve_mm_correct / self.raw_key if self.raw_key else 0.0

    @property
    def l_final(self) -> int:
        return self.raw_key - self.eve_mm_correct

    @property
    def i_ab_emp(self) -> float:
        """1 - h(d_mm): what the parties share per raw key bit."""
        return 1.0 - binary_entropy(min(self.d_mm, 1.0))

    @property
    def i_ae_emp(self) -> float:
        """Attacker's information per raw key bit, from her coverage and
        her conditional error rate on the rounds she touched."""
        if not self.raw_key or not self.eve_mm_rounds:
            return 0.0
        coverage = self.eve_mm_rounds / self.raw_key
        err = 1.0 - self.eve_mm_correct / self.eve_mm_rounds
        return coverage * (1.0 - binary_entropy(err))

    @property
    def r_emp(self) -> float:
        return self.i_ab_emp - self.i_ae_emp

    def as_dict(self) -> dict[str, object]:
        """Counters first, derived values after, in a fixed order."""
        out: dict[str, object] = {name: getattr(self, name) for name in _COUNTERS}
        for name in _DERIVED:
            out[name] = getattr(self, name)
        return out


_COUNTERS = tuple(Tally.__slots__)
_DERIVED = (
    "yield_fraction",
    "d_mm",
    "d_cm",
    "d_cm_intercepted",
    "eve_known_fraction",
    "l_final",
    "i_ab_emp",
    "i_ae_emp",
    "r_emp",
)


def _chunk_rng(seed: int, index: int) -> random.Random:
    """Independent substream for one chunk, from (seed, chunk index) only."""
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(index,))
    return random.Random(int.from_bytes(ss.generate_state(4).tobytes(), "little"))


def _run_chunk(config: SimConfig, index: int, n_rounds: int) -> Tally:
    rng = _chunk_rng(config.seed, index)
    tally = Tally()
    round_fn = ROUND_FUNCTIONS[config.protocol]
    strategy = config.attack.strategy
    q = config.attack.q
    cm_prob = config.cm_prob
    transmittance = config.channel.transmittance(config.protocol)
    dark = config.channel.dark_count_prob
    for _ in range(n_rounds):
        round_fn(tally, rng, strategy, q, cm_prob, transmittance, dark)
    return tally


def _chunks(rounds: int) -> list[tuple[int, int]]:
    full, rest = divmod(rounds, CHUNK_ROUNDS)
    sizes = [(i, CHUNK_ROUNDS) for i in range(full)]
    if rest:
        sizes.append((full, rest))
    return sizes


def run(config: SimConfig, workers: int = 1) -> RunStats:
    """Execute a run and return its merged statistics.

    ``workers`` only distributes chunks over processes; it is not part of
    the configuration and has no effect on the result.
    """
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    plan = _chunks(config.rounds)
    total = Tally()
    if workers == 1 or len(plan) == 1:
        for index, n in plan:
            total.merge(_run_chunk(config, index, n))
        return RunStats.from_tally(total)

    batch = max(1, len(plan) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for tally in pool.map(
            _run_chunk,
            (config for _ in plan),
            (index for index, _ in plan),
            (n for _, n in plan),
            chunksize=batch,
        ):
            total.merge(tally)
    return RunStats.from_tally(total)
