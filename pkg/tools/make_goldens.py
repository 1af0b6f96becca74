"""Regenerate tests/goldens/acceptance.json from the current implementation.

The golden file pins the measured noise-mitigation and delay-sweep numbers.
Regenerating it is a deliberate act that re-baselines those checks, so only
run this when the simulator's behavior is intentionally changed, and review
the diff it produces.
"""

import json
import pathlib

from msetsig import gen
from msetsig.circuit import (
    Component,
    ComponentParams,
    Netlist,
    build_netlist,
    delay_sweep,
    switching_noise_rms,
)

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "goldens" / "acceptance.json"

DT = 0.001
N = 1000
GLITCH_AMP = 0.2
GLITCH_W = 2
CUTOFF_HZ = 50.0
N_SEEDS = 20
SEED = 0


def main() -> None:
    f = gen("sine", DT, N, frequency=1.0)
    g = gen("cosine", DT, N, frequency=1.0)
    inputs = {"f": f, "g": g}

    noisy = build_netlist(
        "common_product",
        ComponentParams(glitch_amplitude=GLITCH_AMP, glitch_width_samples=GLITCH_W),
    )
    unfiltered = switching_noise_rms(noisy, inputs)
    stage = Component("lowpass", "out_lp", (noisy.output,), ComponentParams(), CUTOFF_HZ)
    filtered_net = Netlist(noisy.inputs, (*noisy.components, stage), "out_lp", noisy.kind)
    filtered = switching_noise_rms(filtered_net, inputs)

    rows = delay_sweep(build_netlist("common_product"), inputs, range(6),
                       n_seeds=N_SEEDS, seed=SEED)

    golden = {
        "noise_mitigation": {
            "signal": {"dt": DT, "n": N, "frequency_hz": 1.0},
            "glitch_amplitude": GLITCH_AMP,
            "glitch_width_samples": GLITCH_W,
            "lowpass_cutoff_hz": CUTOFF_HZ,
            "unfiltered_noise_rms": unfiltered,
            "filtered_noise_rms": filtered,
        },
        "delay_sweep": {
            "signal": {"dt": DT, "n": N, "frequency_hz": 1.0},
            "n_seeds": N_SEEDS,
            "seed": SEED,
            "rows": [[s, r] for s, r in rows],
        },
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(golden, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
