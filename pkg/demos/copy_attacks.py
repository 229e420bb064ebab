"""The headline result: two-way message modes can be copied without a trace.

Against bb84, intercept-resend at full rate leaves a 25% error rate in the
sifted key, so the parties see the attack in the very bits they keep.  The
two-way protocols behave differently: the probe-substitution attack on the
Bell-pair scheme and the delay-decoy attack on the single-photon scheme
read every message bit while the message-mode error rate stays at exactly
zero.  Only the control mode, which the attacker cannot foresee, shows a
disturbance, at rate 1/2 (Bell pairs) or 1/4 (single photons) per
intercepted control round.
"""

from twoway_qkd import AttackConfig, Protocol, SimConfig, Strategy, run

ROUNDS = 50000
CM_PROB = 0.25


def report(label: str, stats) -> None:
    print(f"  {label}")
    print(f"    message-mode error rate  d_mm = {stats.d_mm:.4f}")
    print(f"    control-mode error rate  d_cm = {stats.d_cm:.4f}")
    print(f"    raw-key bits whose value she holds = {stats.eve_known_fraction:.4f}")
    print(f"    key bits left after removing those = {stats.l_final}")


def main() -> None:
    print(f"{ROUNDS} rounds per run, control-mode probability {CM_PROB}")
    print()

    print("bb84 + intercept-resend at q=1: loud in message mode")
    stats = run(
        SimConfig(
            protocol=Protocol.BB84,
            rounds=ROUNDS,
            seed=2,
            attack=AttackConfig(strategy=Strategy.INTERCEPT_RESEND, q=1.0),
        )
    )
    report("bb84", stats)
    print()

    print("two-way protocols under their copy attacks at q=1: silent in message mode")
    for protocol, strategy in (
        (Protocol.PP, Strategy.NGUYEN),
        (Protocol.LM05, Strategy.LUCAMARINI),
    ):
        stats = run(
            SimConfig(
                protocol=protocol,
                rounds=ROUNDS,
                seed=2,
                attack=AttackConfig(strategy=strategy, q=1.0),
                cm_prob=CM_PROB,
            )
        )
        report(protocol.value, stats)
    print()

    print("partial presence: the attacker owns exactly her q-share of the key")
    for q in (0.1, 0.5, 0.9):
        stats = run(
            SimConfig(
                protocol=Protocol.PP,
                rounds=ROUNDS,
                seed=3,
                attack=AttackConfig(strategy=Strategy.NGUYEN, q=q),
                cm_prob=CM_PROB,
            )
        )
        print(
            f"  q={q:.1f}: d_mm={stats.d_mm:.4f}, "
            f"known fraction={stats.eve_known_fraction:.4f}, "
            f"d_cm={stats.d_cm:.4f}"
        )
    print()
    print("d_mm never moves; the only witness is the control-mode rate,")
    print("which scales with q and with the per-round detection probability.")


if __name__ == "__main__":
    main()
