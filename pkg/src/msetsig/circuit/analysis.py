"""Accuracy analysis of simulated circuits against the exact operations.

delay_sweep uses common random numbers across spread levels: one latent
perturbation direction is drawn per seed and scaled by the spread, so the
reported mean rms error curve is a smooth function of the spread rather
than a re-randomized Monte-Carlo estimate per level.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import numpy as np

from .. import ops
from ..errors import BadParam, ShapeMismatch
from ..signal import Signal, SignSeries
from .netlist import Netlist
from .sim import SimTrace, simulate


def math_reference(net: Netlist, inputs: Mapping[str, Signal]) -> Signal:
    """Exact mathematical output for a netlist built by build_netlist.

    Sign-valued results come back as ordinary +1/-1 signals so they compare
    directly against the simulated logic levels.
    """
    if net.kind is None:
        raise BadParam("netlist carries no operation tag; pass an explicit reference")
    bound = [inputs[name] for name in net.inputs]
    f = bound[0]
    if net.kind == "sign":
        return Signal(f.dt, f.t0, ops.sign_fn(f).values)
    if net.kind == "absolute":
        return ops.absolute(f)
    g = bound[1]
    if net.kind == "intersection":
        return ops.intersection(f, g)
    if net.kind == "union":
        return ops.union(f, g)
    if net.kind == "conjoint_sign":
        return Signal(f.dt, f.t0, ops.conjoint_sign(f, g).values)
    if net.kind == "signify":
        return ops.signify(f, SignSeries(g.dt, g.t0, g.samples))
    if net.kind == "common_product":
        return ops.common_product(f, g)
    raise BadParam(f"no reference for netlist kind {net.kind!r}")


def compare_to_math(trace: SimTrace, reference: Signal) -> Dict[str, object]:
    """Error statistics of the trace's output node against a reference.

    Returns a dict with rms_error, max_error, and the full error_signal
    (simulated minus reference).
    """
    out = trace.nodes[trace.output]
    if out.shape != reference.samples.shape:
        raise ShapeMismatch(
            f"trace length {out.size} vs reference length {len(reference)}"
        )
    err = out - reference.samples
    return {
        "rms_error": float(np.sqrt(np.mean(err * err))),
        "max_error": float(np.max(np.abs(err))) if err.size else 0.0,
        "error_signal": Signal(reference.dt, reference.t0, err),
    }


def quiet_copy(net: Netlist) -> Netlist:
    """The same netlist with every glitch amplitude forced to zero."""
    comps = tuple(
        replace(c, params=replace(c.params, glitch_amplitude=0.0))
        for c in net.components
    )
    return Netlist(net.inputs, comps, net.output, net.kind)


def switching_noise_rms(
    net: Netlist, inputs: Mapping[str, Signal], oversample: int = 1
) -> float:
    """rms of the switching-noise component of the output.

    Runs the netlist as configured and again with glitches silenced, and
    measures the rms of the difference. Comparing against the quiet run of
    the same topology isolates the noise the switches inject from whatever
    the configuration's nominal response is (a filter's lag, a delay
    chain's latency), which is the number a mitigation stage is trying to
    shrink.
    """
    noisy = simulate(net, inputs, oversample)
    clean = simulate(quiet_copy(net), inputs, oversample)
    diff = noisy.nodes[net.output] - clean.nodes[net.output]
    return float(np.sqrt(np.mean(diff * diff)))


def delay_sweep(
    net: Netlist,
    inputs: Mapping[str, Signal],
    spreads: Iterable[int],
    *,
    n_seeds: int = 20,
    seed: int = 0,
    reference: Optional[Signal] = None,
) -> List[Tuple[int, float]]:
    """Mean rms error of seeded delay perturbations, one row per spread.

    For each of n_seeds trials a perturbation direction in [-1, 1] is drawn
    per component; at spread s the netlist runs with each base delay moved
    by round(direction * s), clamped at zero. Spread 0 therefore runs the
    netlist exactly as given.
    """
    if n_seeds < 1:
        raise BadParam("n_seeds must be >= 1")
    ref = reference if reference is not None else math_reference(net, inputs)
    base = np.array([c.params.delay_samples for c in net.components], dtype=float)
    directions = [
        np.random.default_rng((seed, i)).uniform(-1.0, 1.0, size=base.size)
        for i in range(n_seeds)
    ]
    rows: List[Tuple[int, float]] = []
    for spread in spreads:
        if spread < 0 or spread != int(spread):
            raise BadParam("spread values must be nonnegative integers")
        total = 0.0
        for direction in directions:
            delays = np.maximum(0, np.rint(base + direction * spread)).astype(int)
            trace = simulate(net.with_delays(delays), inputs)
            total += compare_to_math(trace, ref)["rms_error"]
        rows.append((int(spread), total / n_seeds))
    return rows
