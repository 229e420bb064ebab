"""Detection yield versus channel quality for the three round geometries.

A bb84 photon crosses the lossy segment once, the single-photon two-way
scheme crosses it twice (out and back), and the Bell-pair scheme is charged
four crossings per round.  The compounding is what limits two-way schemes
in distance: at a per-pass transmission of 0.9 the yields are 0.9, 0.81 and
0.6561, and the gap widens quickly as the channel degrades.

Simulated yields over 200000 rounds are printed next to the exact
compounded probabilities so the agreement is visible directly.
"""

from twoway_qkd import ChannelConfig, Protocol, SimConfig, run

ROUNDS = 200000


def main() -> None:
    print(f"{'p':>5} | {'bb84 (1 pass)':>20} | {'lm05 (2 passes)':>20} | {'pp (4 passes)':>20}")
    print("-" * 75)
    for p in (1.0, 0.95, 0.9, 0.8, 0.7):
        cells = []
        for protocol in (Protocol.BB84, Protocol.LM05, Protocol.PP):
            channel = ChannelConfig(p_segment=p)
            stats = run(
                SimConfig(
                    protocol=protocol,
                    rounds=ROUNDS,
                    seed=int(p * 100),
                    channel=channel,
                )
            )
            exact = channel.transmittance(protocol)
            cells.append(f"{stats.yield_fraction:.4f} (exact {exact:.4f})")
        print(f"{p:5.2f} | {cells[0]:>20} | {cells[1]:>20} | {cells[2]:>20}")
    print()
    print("per round, a detected bb84 round still sifts away half its bits,")
    print("while every detected two-way message round is a key bit; the")
    print("deterministic schemes trade channel passes for sifting overhead.")


if __name__ == "__main__":
    main()
