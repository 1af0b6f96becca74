"""Netlist constructors for the supported signal operations.

Each builder wires the standard comparator/switch/amp realization of one
operation. The common-product topology keeps the separate absolute-value
and sign-detection branches of the full design, so the sign of each input
is measured twice: once feeding the absolute-value switch and once feeding
the equivalence gate. The duplication is deliberate (the composed circuit
is assembled from the stand-alone sub-circuits, redundancy and all) and is
what gives the documented census of five comparators, four switches, three
inverting amplifiers, and one equivalence gate.

When components carry nonzero delay, reconvergent paths would drift apart,
so every builder runs a balancing pass that inserts pure delay pads until
all inputs of every component arrive with equal total delay. Ground is
exempt (a delayed zero is still zero), and pads do not appear in the
component census.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Optional

from ..errors import BadParam
from .netlist import GROUND, Component, ComponentParams, Netlist

NETLIST_KINDS = (
    "sign",
    "intersection",
    "union",
    "absolute",
    "conjoint_sign",
    "signify",
    "common_product",
)


def _balance_delays(inputs, components, output):
    """Insert pass-through delay pads so that, for every component, all
    non-ground inputs carry the same accumulated delay."""
    arrival = {name: 0 for name in inputs}
    balanced = []
    pad_count = 0
    for comp in components:
        live = [n for n in comp.inputs if n != GROUND]
        target = max((arrival[n] for n in live), default=0)
        wired = []
        for name in comp.inputs:
            if name == GROUND or arrival[name] == target:
                wired.append(name)
                continue
            deficit = target - arrival[name]
            pad_count += 1
            pad_out = f"{name}_pad{pad_count}"
            balanced.append(
                Component(
                    "delay",
                    pad_out,
                    (name,),
                    ComponentParams(delay_samples=deficit),
                )
            )
            arrival[pad_out] = target
            wired.append(pad_out)
        balanced.append(replace(comp, inputs=tuple(wired)))
        arrival[comp.output] = target + comp.params.delay_samples
    return balanced, arrival[output]


def build_netlist(kind: str, params: Optional[ComponentParams] = None) -> Netlist:
    """Build a validated feed-forward netlist realizing the named operation.

    params supplies the behavioral defaults applied to every component.
    With nonzero delay_samples the netlist is delay-balanced; the aligned
    output then lags the ideal result by a fixed whole number of samples.
    """
    if kind not in NETLIST_KINDS:
        raise BadParam(f"unknown netlist kind {kind!r}")
    p = params if params is not None else ComponentParams()

    def comp(ctype, out, *ins, **extra):
        return Component(ctype, out, tuple(ins), p, **extra)

    if kind == "sign":
        inputs = ("f",)
        parts = [comp("comparator", "out", "f", GROUND)]
        output = "out"
    elif kind == "intersection":
        inputs = ("f", "g")
        parts = [
            comp("comparator", "c1", "g", "f"),
            comp("analog_switch", "out", "f", "g", "c1"),
        ]
        output = "out"
    elif kind == "union":
        inputs = ("f", "g")
        parts = [
            comp("comparator", "c1", "f", "g"),
            comp("analog_switch", "out", "f", "g", "c1"),
        ]
        output = "out"
    elif kind == "absolute":
        inputs = ("f",)
        parts = [
            comp("comparator", "c1", "f", GROUND),
            comp("inverting_amp", "a1", "f"),
            comp("analog_switch", "out", "f", "a1", "c1"),
        ]
        output = "out"
    elif kind == "conjoint_sign":
        inputs = ("f", "g")
        parts = [
            comp("comparator", "c1", "f", GROUND),
            comp("comparator", "c2", "g", GROUND),
            comp("equivalence_gate", "out", "c1", "c2"),
        ]
        output = "out"
    elif kind == "signify":
        inputs = ("a", "s")
        parts = [
            comp("inverting_amp", "a1", "a"),
            comp("analog_switch", "out", "a", "a1", "s"),
        ]
        output = "out"
    else:
        # Full common product: two absolute-value branches, a minimum stage,
        # a dedicated sign-measurement pair into the equivalence gate, and a
        # final signification switch.
        inputs = ("f", "g")
        parts = [
            comp("comparator", "c1", "f", GROUND),
            comp("inverting_amp", "a1", "f"),
            comp("analog_switch", "s1", "f", "a1", "c1"),
            comp("comparator", "c2", "g", GROUND),
            comp("inverting_amp", "a2", "g"),
            comp("analog_switch", "s2", "g", "a2", "c2"),
            comp("comparator", "c5", "s2", "s1"),
            comp("analog_switch", "s3", "s1", "s2", "c5"),
            comp("comparator", "c3", "f", GROUND),
            comp("comparator", "c4", "g", GROUND),
            comp("equivalence_gate", "e1", "c3", "c4"),
            comp("inverting_amp", "a3", "s3"),
            comp("analog_switch", "out", "s3", "a3", "e1"),
        ]
        output = "out"

    balanced, _ = _balance_delays(inputs, parts, output)
    return Netlist(inputs, tuple(balanced), output, kind)


def output_latency(net: Netlist) -> int:
    """Total accumulated delay, in samples, from the inputs to the output of
    a delay-balanced netlist."""
    arrival = {name: 0 for name in net.inputs}
    arrival[GROUND] = 0
    for comp in net.components:
        live = [arrival[n] for n in comp.inputs if n != GROUND]
        arrival[comp.output] = max(live, default=0) + comp.params.delay_samples
    return arrival[net.output]
