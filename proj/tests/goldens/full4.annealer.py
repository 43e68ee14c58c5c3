# generated-by: isingforge annealer v1
# Ising sampling on a quantum annealer: 4 qubits, 6 couplers.
# Pass --simulate to use the classical simulated-annealing sampler instead.
import sys

# --- declarations ---
h = {
    0: 1.0,
    1: 1.0,
    2: 1.0,
    3: 1.0,
}
J = {
    (0, 1): 1.0,  # 0-1
    (0, 2): 1.0,  # 0-2
    (0, 3): 1.0,  # 0-3
    (1, 2): 1.0,  # 1-2
    (1, 3): 1.0,  # 1-3
    (2, 3): 1.0,  # 2-3
}
reads = 100
# --- end declarations ---

NUM_QUBITS = 4
SWEEPS = 1000
T_INITIAL = 10.0
T_FINAL = 0.01


def make_sampler():
    if "--simulate" in sys.argv[1:]:
        from dwave.samplers import SimulatedAnnealingSampler

        return SimulatedAnnealingSampler(), {
            "num_sweeps": SWEEPS,
            "beta_range": (1.0 / T_INITIAL, 1.0 / T_FINAL),
            "beta_schedule_type": "geometric",
        }
    from dwave.system import DWaveSampler, EmbeddingComposite

    return EmbeddingComposite(DWaveSampler()), {}


def main():
    sampler, options = make_sampler()
    sampleset = sampler.sample_ising(h, J, num_reads=reads, **options)
    best = sampleset.first
    config = "".join("0" if best.sample[q] == 1 else "1" for q in range(NUM_QUBITS))
    print(f"config={config}")
    print(f"energy={best.energy}")


if __name__ == "__main__":
    main()
