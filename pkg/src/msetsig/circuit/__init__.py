"""Behavioral simulation of analog realizations of the signal operations."""

from .analysis import (
    compare_to_math,
    delay_sweep,
    math_reference,
    quiet_copy,
    switching_noise_rms,
)
from .builders import NETLIST_KINDS, build_netlist, output_latency
from .netlist import (
    GROUND,
    COMPONENT_KINDS,
    Component,
    ComponentParams,
    Netlist,
    format_netlist,
    parse_netlist,
)
from .sim import SimTrace, simulate

__all__ = [
    "GROUND",
    "COMPONENT_KINDS",
    "NETLIST_KINDS",
    "Component",
    "ComponentParams",
    "Netlist",
    "SimTrace",
    "build_netlist",
    "compare_to_math",
    "delay_sweep",
    "format_netlist",
    "math_reference",
    "output_latency",
    "parse_netlist",
    "quiet_copy",
    "simulate",
    "switching_noise_rms",
]
