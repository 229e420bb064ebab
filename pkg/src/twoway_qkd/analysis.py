"""Closed-form information quantities for the protocols.

For a prepare-and-measure scheme with symmetric disturbance D the legitimate
parties share I_AB(D) = 1 - h(D) bits per sifted bit while an optimal
individual attack gives the eavesdropper I_AE(D) = h(D); the secret fraction
is their difference and vanishes at the disturbance where the two curves
cross.  For the deterministic two-way schemes under the transparent attacks
the message mode is error free, so I_AB = 1 regardless of the attack rate q,
and the attacker simply owns a q-fraction of the key: I_AE = q.
"""

from __future__ import annotations

import math

import numpy as np

from .channel import Protocol


def binary_entropy(x: float) -> float:
    """Shannon entropy h(x) of a Bernoulli(x) variable, in bits."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"binary_entropy argument must be in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def bb84_mutual_information(d: float) -> tuple[float, float]:
    """(I_AB, I_AE) per sifted bit at disturbance d, for d in [0, 1/2]."""
    if not 0.0 <= d <= 0.5:
        raise ValueError(f"disturbance must be in [0, 0.5], got {d}")
    h = binary_entropy(d)
    return 1.0 - h, h


def bb84_secret_fraction(d: float) -> float:
    """I_AB - I_AE = 1 - 2 h(d).  Negative past the critical disturbance."""
    i_ab, i_ae = bb84_mutual_information(d)
    return i_ab - i_ae


def twoway_mutual_information(q: float) -> tuple[float, float]:
    """(I_AB, I_AE) for a deterministic scheme under a transparent attack
    mounted on a fraction q of the rounds."""
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"q must be in [0, 1], got {q}")
    return 1.0, q


def twoway_secret_fraction(q: float) -> float:
    """Secret fraction 1 - q left after removing the attacker's share."""
    i_ab, i_ae = twoway_mutual_information(q)
    return i_ab - i_ae


def critical_disturbance(tol: float = 1e-12) -> float:
    """Disturbance where I_AB(d) and I_AE(d) cross, by bisection.

    The crossing solves 1 - 2 h(d) = 0 on (0, 1/2), where the secret
    fraction is strictly decreasing, so plain bisection converges; no
    root-finding dependency is worth pulling in for one monotone equation.
    """
    lo, hi = 1e-15, 0.5
    f_lo = bb84_secret_fraction(lo)
    if f_lo <= 0.0:
        raise RuntimeError("secret fraction not positive at the lower bracket")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if bb84_secret_fraction(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def disturbance_grid(start: float, end: float, step: float) -> np.ndarray:
    """Inclusive arithmetic grid with endpoint snapping.

    Accumulated float error in start + k*step can push a nominal endpoint
    just outside the curves' domain (0.5 + 5e-17, say), so values within
    1e-9 of either end are snapped exactly onto it.
    """
    if step <= 0.0:
        raise ValueError(f"grid step must be positive, got {step}")
    if end < start:
        raise ValueError(f"grid end {end} precedes start {start}")
    n = int(round((end - start) / step))
    if abs(start + n * step - end) > 1e-9:
        n = int(math.floor((end - start) / step + 1e-9))
    grid = start + step * np.arange(n + 1)
    grid[np.abs(grid - start) <= 1e-9] = start
    grid[np.abs(grid - end) <= 1e-9] = end
    return grid


def information_table(grid: np.ndarray) -> list[dict[str, float]]:
    """Rows of closed-form quantities over a disturbance grid."""
    rows = []
    for d in grid:
        i_ab, i_ae = bb84_mutual_information(float(d))
        rows.append(
            {
                "d": float(d),
                "i_ab": i_ab,
                "i_ae": i_ae,
                "secret_fraction": i_ab - i_ae,
            }
        )
    return rows


def protocol_comparison(p_segment: float = 1.0) -> list[dict[str, object]]:
    """Side-by-side security properties of the three protocols.

    ``critical_disturbance`` is None for the deterministic schemes: under a
    transparent attack their message mode shows no disturbance at any attack
    rate, so no error threshold separates secure from broken; security rests
    on the control-mode rate instead.
    """
    if not 0.0 < p_segment <= 1.0:
        raise ValueError(f"p_segment must be in (0, 1], got {p_segment}")
    d_star = critical_disturbance()
    rows: list[dict[str, object]] = []
    for protocol in Protocol:
        deterministic = protocol.deterministic
        rows.append(
            {
                "protocol": protocol.value,
                "keying": "deterministic" if deterministic else "probabilistic",
                "modes": "mm+cm" if deterministic else "mm",
                "attack_shows_in": "cm" if deterministic else "mm",
                "critical_disturbance": None if deterministic else d_star,
                "passes": protocol.passes,
                "transmittance": p_segment**protocol.passes,
            }
        )
    return rows
