"""Independent oracles for the statistical claims the tests pin down.

Everything here is computed by exhaustive enumeration over the protocols'
discrete random choices, using exact rational probabilities and integer
amplitude vectors.  Nothing imports the package under test, so agreement
between these numbers and the simulator is evidence, not tautology.

States are written as (basis, bit) with basis "Z" or "X"; unnormalized
integer amplitude vectors stand in for the physical states where amplitude
arithmetic is needed (|0> = (1,0), |+> = (1,1), psi- = (0,1,-1,0), ...).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

HALF = Fraction(1, 2)

STATES = [("Z", 0), ("Z", 1), ("X", 0), ("X", 1)]

# Integer amplitude vectors (common normalization factors dropped).
VEC = {("Z", 0): (1, 0), ("Z", 1): (0, 1), ("X", 0): (1, 1), ("X", 1): (1, -1)}

# The encoding flip: matrix ((0, 1), (-1, 0)), i.e. Z X.
FLIP = ((0, 1), (-1, 0))


def overlap2(s: tuple[str, int], t: tuple[str, int]) -> Fraction:
    """|<s|t>|^2 for two of the four protocol states."""
    if s[0] == t[0]:
        return Fraction(s[1] == t[1])
    return HALF


def apply_mat(mat, vec):
    return (
        mat[0][0] * vec[0] + mat[0][1] * vec[1],
        mat[1][0] * vec[0] + mat[1][1] * vec[1],
    )


def proportional(u, v) -> bool:
    """u = c v for some nonzero scalar c (2-component integer vectors)."""
    return u[0] * v[1] == u[1] * v[0] and (u != (0, 0)) == (v != (0, 0))


def bb84_intercept_resend() -> tuple[Fraction, Fraction]:
    """(sifted error rate, Eve-correct rate among sifted bits).

    Enumerates sender basis and bit, Eve's basis and Born-weighted outcome,
    receiver basis and Born-weighted outcome, conditioning on matched
    sender/receiver bases.
    """
    p_sift = Fraction(0)
    p_err = Fraction(0)
    p_eve = Fraction(0)
    for (a_basis, a_bit), e_basis in product(STATES, "ZX"):
        w0 = Fraction(1, len(STATES)) * HALF  # preparation x Eve's basis
        for e_bit in (0, 1):
            w1 = w0 * overlap2((e_basis, e_bit), (a_basis, a_bit))
            # Receiver's basis: only the matched case survives sifting.
            w2 = w1 * HALF
            for b_bit in (0, 1):
                w3 = w2 * overlap2((a_basis, b_bit), (e_basis, e_bit))
                p_sift += w3
                if b_bit != a_bit:
                    p_err += w3
                if e_bit == a_bit:
                    p_eve += w3
    return p_err / p_sift, p_eve / p_sift


def psi_minus_zz() -> dict[tuple[int, int], Fraction]:
    """Joint Z x Z outcome distribution of the psi- pair: anticorrelated."""
    return {(0, 1): HALF, (1, 0): HALF}


def pp_cm_intercepted() -> Fraction:
    """Control-mode error rate while the probe substitution is in place.

    The sender measures photon 2 of the attacker's independent psi- pair;
    the receiver measures photon 1 of the original pair.  An error is a
    violated anticorrelation: equal outcomes.
    """
    p_err = Fraction(0)
    for (b_bit, _), w_orig in psi_minus_zz().items():
        for (_, a_bit), w_probe in psi_minus_zz().items():
            if a_bit == b_bit:
                p_err += w_orig * w_probe
    return p_err


def lm05_cm_intercepted() -> Fraction:
    """Control-mode error rate while the decoy substitution is in place.

    The sender measures the decoy in a random basis and announces; the
    announcement is an error iff her basis matches the preparation basis
    and the outcome differs from the prepared bit.  Rate is over all
    control rounds, matched bases or not.
    """
    p_err = Fraction(0)
    for prep, decoy in product(STATES, STATES):
        w0 = Fraction(1, len(STATES)) ** 2
        for a_basis in "ZX":
            w1 = w0 * HALF
            for a_bit in (0, 1):
                w2 = w1 * overlap2((a_basis, a_bit), decoy)
                if a_basis == prep[0] and a_bit != prep[1]:
                    p_err += w2
    return p_err


def lm05_mm_transparent() -> bool:
    """Exhaustive check that the decoy attack reads the encoding exactly
    and that the replayed flip reproduces the no-attack channel.

    Uses only integer amplitude algebra: the flip maps each of the four
    states onto the orthogonal state of the same basis, so measuring in
    the preparation (or decoy) basis reveals the operation with certainty.
    """
    for (basis, bit), encode in product(STATES, (0, 1)):
        vec = VEC[(basis, bit)]
        out = apply_mat(FLIP, vec) if encode else vec
        expect = (basis, bit ^ encode)
        if not proportional(out, VEC[expect]):
            return False
        # Orthogonality to the other basis state of the same basis: the
        # basis measurement outcome is deterministic.
        other = VEC[(basis, 1 - (bit ^ encode))]
        if out[0] * other[0] + out[1] * other[1] != 0:
            return False
    return True


PSI_MINUS4 = (0, 1, -1, 0)
PSI_PLUS4 = (0, 1, 1, 0)


def hwp_photon2(vec4):
    """Sign flip on the second photon's |1> component."""
    return (vec4[0], -vec4[1], vec4[2], -vec4[3])


def _bell_discriminate(vec4) -> int | None:
    """Beam-splitter Bell analysis on an integer 4-vector.

    Split (psi-) weight is proportional to (a1 - a2)^2, bunch (psi+) weight
    to (a1 + a2)^2.  Returns the decoded bit (split = 0, bunch = 1) when
    the outcome is deterministic, None when both weights are nonzero.
    """
    w_split = (vec4[1] - vec4[2]) ** 2
    w_bunch = (vec4[1] + vec4[2]) ** 2
    if w_split and w_bunch:
        return None
    return 0 if w_split else 1


def pp_mm_transparent() -> bool:
    """Exhaustive check of the probe attack on the Bell-pair message mode.

    For both message bits: the attacker's Bell analysis of her encoded
    probe is deterministic and reads the bit correctly, her replay equals
    the pair the sender would have returned unattacked, and the receiver's
    own analysis of the replayed pair decodes the bit with certainty.
    """
    for encode in (0, 1):
        probe = hwp_photon2(PSI_MINUS4) if encode else PSI_MINUS4
        eve_bit = _bell_discriminate(probe)
        if eve_bit != encode:
            return False
        replayed = hwp_photon2(PSI_MINUS4) if eve_bit else PSI_MINUS4
        legit = hwp_photon2(PSI_MINUS4) if encode else PSI_MINUS4
        if replayed != legit:
            return False
        if _bell_discriminate(replayed) != encode:
            return False
    return True


# Frozen values the test modules assert against.
BB84_SIFTED_ERROR = Fraction(1, 4)
BB84_EVE_CORRECT = Fraction(3, 4)
PP_CM_ERROR = Fraction(1, 2)
LM05_CM_ERROR = Fraction(1, 4)
CRITICAL_DISTURBANCE = 0.11002786443835955
