"""Round-by-round protocol machines.

Each function simulates one complete round (source to final announcement)
and records what happened in a :class:`Tally`.  All randomness comes from
the single ``rng`` argument, and the draw order is part of the contract:
reordering draws changes every downstream outcome for a given seed, so the
sequence below is frozen.

Per-round draw sequence
-----------------------
1. ``u`` for Eve's presence coin.  Always spent, even when the strategy is
   NONE, so that ``q = 0`` with any strategy reproduces the attack-free
   stream byte for byte.
2. (two-way only) ``u`` for the control-mode coin.
3. ``u`` for photon survival, judged against the compounded transmittance;
   a lost round spends one more ``u`` on the dark-count coin when dark
   counts are enabled.
4. Protocol draws in channel order: sender preparation, Eve's forward-leg
   choices, the encoding bit or control measurements, Eve's return-leg
   measurement, receiver measurement.  Born-rule draws are spent even when
   the outcome is certain.

Control mode is decided by the encoding party after the forward leg, so an
interposed attacker has already committed her substitution by the time the
round is declared a check round.  Control rounds have no return leg.

Dark counts are modeled crudely: a lost round that fires the detector
anyway proceeds with uniformly random outcome bits on the measuring side
and contributes no eavesdropper knowledge.
"""

from __future__ import annotations

import random

from .adversaries import InterceptResend, LucamariniAttack, NguyenAttack, Strategy
from .channel import Protocol
from .quantum import (
    Basis,
    BellOutcome,
    BellState,
    PauliOp,
    apply_pauli,
    bell_measure,
    half_wave_plate,
    measure,
    measure_photon,
    prepare_bell,
)

_Z = Basis.Z
_X = Basis.X

# Detection outcomes for the loss stage.
_LOST = 0
_REAL = 1
_DARK = 2


class Tally:
    """Integer round counters.

    Addition is associative and commutative, which is what makes chunked
    and parallel runs merge into byte-identical results regardless of
    schedule.
    """

    __slots__ = (
        "rounds",
        "lost",
        "dark",
        "mm_rounds",
        "cm_rounds",
        "raw_key",
        "mm_errors",
        "cm_errors",
        "eve_rounds",
        "eve_mm_rounds",
        "eve_mm_correct",
        "eve_cm_rounds",
        "eve_cm_errors",
    )

    def __init__(self) -> None:
        for name in self.__slots__:
            setattr(self, name, 0)

    def merge(self, other: "Tally") -> None:
        for name in self.__slots__:
            setattr(self, name, getattr(self, name) + getattr(other, name))

    def as_dict(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in self.__slots__}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tally):
            return NotImplemented
        return all(
            getattr(self, name) == getattr(other, name) for name in self.__slots__
        )


def _presence(rng: random.Random, strategy: Strategy, q: float) -> bool:
    u = rng.random()
    return strategy is not Strategy.NONE and u < q


def _detect(
    tally: Tally, rng: random.Random, transmittance: float, dark_prob: float
) -> int:
    """Spend the loss draw; on loss, roll the dark-count coin if enabled."""
    if rng.random() < transmittance:
        return _REAL
    if dark_prob > 0.0 and rng.random() < dark_prob:
        tally.dark += 1
        return _DARK
    tally.lost += 1
    return _LOST


def bb84_round(
    tally: Tally,
    rng: random.Random,
    strategy: Strategy,
    q: float,
    cm_prob: float,
    transmittance: float,
    dark_prob: float,
) -> None:
    """One prepare-and-measure round with optional intercept-resend."""
    tally.rounds += 1
    eve_present = _presence(rng, strategy, q)
    if eve_present:
        tally.eve_rounds += 1
    detection = _detect(tally, rng, transmittance, dark_prob)
    if detection == _LOST:
        return
    tally.mm_rounds += 1

    a_bit = rng.getrandbits(1)
    a_basis = _Z if rng.getrandbits(1) == 0 else _X

    if detection == _DARK:
        b_basis = _Z if rng.getrandbits(1) == 0 else _X
        if a_basis is b_basis:
            tally.raw_key += 1
            if rng.getrandbits(1) != a_bit:
                tally.mm_errors += 1
        return

    state = a_basis.eigenstate(a_bit)
    eve = None
    if eve_present:
        eve = InterceptResend()
        state = eve.intercept(state, rng)

    b_basis = _Z if rng.getrandbits(1) == 0 else _X
    b_bit, _ = measure(state, b_basis, rng.random())

    if a_basis is not b_basis:
        return
    tally.raw_key += 1
    if b_bit != a_bit:
        tally.mm_errors += 1
    if eve is not None:
        tally.eve_mm_rounds += 1
        if eve.bit == a_bit:
            tally.eve_mm_correct += 1


def pp_round(
    tally: Tally,
    rng: random.Random,
    strategy: Strategy,
    q: float,
    cm_prob: float,
    transmittance: float,
    dark_prob: float,
) -> None:
    """One round of the Bell-pair protocol.

    Bob keeps photon 1 of a psi- pair and sends photon 2.  In message mode
    Alice encodes bit 1 with a zero-degree half-wave plate (toggling the
    pair between psi- and psi+) and returns the photon for Bob's
    beam-splitter Bell analysis: split decodes 0, bunch decodes 1.  In
    control mode both parties measure in the computational basis and check
    anticorrelation; equal outcomes are errors.
    """
    tally.rounds += 1
    eve_present = _presence(rng, strategy, q)
    if eve_present:
        tally.eve_rounds += 1
    is_cm = rng.random() < cm_prob
    detection = _detect(tally, rng, transmittance, dark_prob)
    if detection == _LOST:
        return

    if detection == _DARK:
        if is_cm:
            tally.cm_rounds += 1
            if rng.getrandbits(1) == rng.getrandbits(1):
                tally.cm_errors += 1
        else:
            tally.mm_rounds += 1
            tally.raw_key += 1
            if rng.getrandbits(1) != rng.getrandbits(1):
                tally.mm_errors += 1
        return

    pair = prepare_bell(BellState.PSI_MINUS)
    eve = None
    if eve_present:
        eve = NguyenAttack()
        alice_pair = eve.seize(pair)
    else:
        alice_pair = pair

    if is_cm:
        tally.cm_rounds += 1
        a_bit, remainder = measure_photon(alice_pair, 2, _Z, rng.random())
        if eve is None:
            b_bit, _ = measure(remainder, _Z, rng.random())
        else:
            b_bit, _ = measure_photon(pair, 1, _Z, rng.random())
        error = a_bit == b_bit
        if error:
            tally.cm_errors += 1
        if eve is not None:
            tally.eve_cm_rounds += 1
            if error:
                tally.eve_cm_errors += 1
        return

    tally.mm_rounds += 1
    a_bit = rng.getrandbits(1)
    encoded = half_wave_plate(alice_pair, 2) if a_bit else alice_pair

    if eve is not None:
        eve.read_return(encoded, rng)
        return_pair = eve.replay()
    else:
        return_pair = encoded

    outcome = bell_measure(return_pair, rng.random())
    b_bit = 0 if outcome is BellOutcome.SPLIT else 1

    tally.raw_key += 1
    if b_bit != a_bit:
        tally.mm_errors += 1
    if eve is not None:
        tally.eve_mm_rounds += 1
        if eve.bit == a_bit:
            tally.eve_mm_correct += 1


def lm05_round(
    tally: Tally,
    rng: random.Random,
    strategy: Strategy,
    q: float,
    cm_prob: float,
    transmittance: float,
    dark_prob: float,
) -> None:
    """One round of the single-photon two-way protocol.

    Bob prepares one of the four basis states and sends it.  In message
    mode Alice applies the identity for 0 or the flip Z X for 1 and returns
    the photon; Bob measures in his preparation basis and decodes by
    comparing with the prepared bit.  In control mode Alice measures in a
    random basis and announces basis and outcome; the announcement is an
    error when her basis matches Bob's preparation and the outcome does not.
    """
    tally.rounds += 1
    eve_present = _presence(rng, strategy, q)
    if eve_present:
        tally.eve_rounds += 1
    is_cm = rng.random() < cm_prob
    detection = _detect(tally, rng, transmittance, dark_prob)
    if detection == _LOST:
        return

    prep_bit = rng.getrandbits(1)
    prep_basis = _Z if rng.getrandbits(1) == 0 else _X

    if detection == _DARK:
        if is_cm:
            tally.cm_rounds += 1
            a_basis = _Z if rng.getrandbits(1) == 0 else _X
            if a_basis is prep_basis and rng.getrandbits(1) != prep_bit:
                tally.cm_errors += 1
        else:
            tally.mm_rounds += 1
            tally.raw_key += 1
            if rng.getrandbits(1) != rng.getrandbits(1):
                tally.mm_errors += 1
        return

    state = prep_basis.eigenstate(prep_bit)
    eve = None
    if eve_present:
        eve = LucamariniAttack()
        alice_state = eve.seize(state, rng)
    else:
        alice_state = state

    if is_cm:
        tally.cm_rounds += 1
        a_basis = _Z if rng.getrandbits(1) == 0 else _X
        a_bit, _ = measure(alice_state, a_basis, rng.random())
        error = a_basis is prep_basis and a_bit != prep_bit
        if error:
            tally.cm_errors += 1
        if eve is not None:
            tally.eve_cm_rounds += 1
            if error:
                tally.eve_cm_errors += 1
        return

    tally.mm_rounds += 1
    a_bit = rng.getrandbits(1)
    encoded = apply_pauli(PauliOp.IY, alice_state) if a_bit else alice_state

    if eve is not None:
        eve.read_return(encoded, rng)
        to_bob = eve.replay()
    else:
        to_bob = encoded

    m, _ = measure(to_bob, prep_basis, rng.random())
    b_bit = m ^ prep_bit

    tally.raw_key += 1
    if b_bit != a_bit:
        tally.mm_errors += 1
    if eve is not None:
        tally.eve_mm_rounds += 1
        if eve.bit == a_bit:
            tally.eve_mm_correct += 1


ROUND_FUNCTIONS = {
    Protocol.BB84: bb84_round,
    Protocol.PP: pp_round,
    Protocol.LM05: lm05_round,
}
