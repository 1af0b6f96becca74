"""Signal containers, waveform generators, and time manipulation.

A Signal is a uniformly sampled real-valued function of time: a sample
interval ``dt``, a start time ``t0``, and a finite 1-D array of finite
float64 samples. A SignSeries carries the same timing metadata but its
values are restricted to exactly +1 or -1.

Both containers are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .errors import BadParam, NonFiniteSample, NonPositiveDt, ShapeMismatch

GEN_KINDS = ("sine", "cosine", "square", "gaussian_pulse", "triangle_pulse", "white_noise")


def _own_array(values) -> np.ndarray:
    arr = np.array(values, dtype=np.float64, copy=True)
    if arr.ndim != 1:
        raise BadParam(f"samples must be one-dimensional, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Signal:
    """A uniformly sampled real-valued signal.

    Attributes:
        dt: Sample interval in seconds, > 0 and finite.
        t0: Time of the first sample in seconds.
        samples: Read-only float64 array, every value finite, length >= 1.
    """

    dt: float
    t0: float
    samples: np.ndarray = field(repr=False)

    def __post_init__(self):
        dt = float(self.dt)
        if not (dt > 0.0 and np.isfinite(dt)):
            raise NonPositiveDt(f"dt must be positive and finite, got {self.dt!r}")
        arr = _own_array(self.samples)
        if arr.size < 1:
            raise BadParam("signal must contain at least one sample")
        bad = np.flatnonzero(~np.isfinite(arr))
        if bad.size:
            raise NonFiniteSample(int(bad[0]))
        object.__setattr__(self, "dt", dt)
        object.__setattr__(self, "t0", float(self.t0))
        object.__setattr__(self, "samples", arr)

    def __len__(self) -> int:
        return self.samples.size

    def __repr__(self) -> str:
        return f"Signal(dt={self.dt}, t0={self.t0}, n={len(self)})"

    def times(self) -> np.ndarray:
        """Time axis: t0 + k*dt for each sample index k."""
        return self.t0 + self.dt * np.arange(self.samples.size)

    def with_samples(self, samples) -> "Signal":
        """A new Signal with the same timing metadata and different samples."""
        return Signal(self.dt, self.t0, samples)


@dataclass(frozen=True, eq=False)
class SignSeries:
    """A +1/-1 valued series with Signal timing metadata."""

    dt: float
    t0: float
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        dt = float(self.dt)
        if not (dt > 0.0 and np.isfinite(dt)):
            raise NonPositiveDt(f"dt must be positive and finite, got {self.dt!r}")
        arr = _own_array(self.values)
        if arr.size < 1:
            raise BadParam("sign series must contain at least one value")
        if not np.all(np.abs(arr) == 1.0):
            bad = int(np.flatnonzero(np.abs(arr) != 1.0)[0])
            raise BadParam(f"sign series value at index {bad} is not +1 or -1")
        object.__setattr__(self, "dt", dt)
        object.__setattr__(self, "t0", float(self.t0))
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return self.values.size

    def __repr__(self) -> str:
        return f"SignSeries(dt={self.dt}, t0={self.t0}, n={len(self)})"


def make_signal(dt: float, t0: float, samples: Sequence[float]) -> Signal:
    """Construct a validated Signal from a sample sequence."""
    return Signal(dt, t0, samples)


def check_same_shape(a: Union[Signal, SignSeries], b: Union[Signal, SignSeries]) -> None:
    """Raise ShapeMismatch unless a and b agree exactly in length, dt, and t0.

    No implicit resampling or alignment is ever performed; callers align first.
    """
    if len(a) != len(b):
        raise ShapeMismatch(f"length mismatch: {len(a)} vs {len(b)}")
    if a.dt != b.dt:
        raise ShapeMismatch(f"dt mismatch: {a.dt} vs {b.dt}")
    if a.t0 != b.t0:
        raise ShapeMismatch(f"t0 mismatch: {a.t0} vs {b.t0}")


def gen(
    kind: str,
    dt: float,
    n: int,
    *,
    amplitude: float = 1.0,
    frequency: float = 1.0,
    phase: float = 0.0,
    t0: float = 0.0,
    center: Optional[float] = None,
    width: Optional[float] = None,
    seed: Optional[int] = None,
) -> Signal:
    """Generate n samples of a named waveform on the grid t0 + k*dt.

    Kinds:
        sine            amplitude * sin(2*pi*frequency*t + phase)
        cosine          amplitude * cos(2*pi*frequency*t + phase)
        square          +amplitude where the sine phase is >= 0, else -amplitude
        gaussian_pulse  amplitude * exp(-(t-center)^2 / (2*width^2))
        triangle_pulse  amplitude * max(0, 1 - |t-center|/width)
        white_noise     amplitude * standard normal draws (explicit seed required)

    ``center`` defaults to the middle of the window and ``width`` to an eighth
    of the window. Generation is pure: identical arguments give identical
    samples; there is no global RNG state.

    Raises:
        BadParam: negative amplitude or frequency, non-positive width, n < 1,
            unknown kind, or white_noise without a seed.
    """
    if kind not in GEN_KINDS:
        raise BadParam(f"unknown generator kind {kind!r}; expected one of {', '.join(GEN_KINDS)}")
    if n < 1:
        raise BadParam(f"n must be >= 1, got {n}")
    if amplitude < 0:
        raise BadParam(f"amplitude must be >= 0, got {amplitude}")
    if frequency < 0:
        raise BadParam(f"frequency must be >= 0, got {frequency}")

    t = t0 + dt * np.arange(n)
    if kind in ("sine", "cosine", "square"):
        arg = 2.0 * np.pi * frequency * t + phase
        if kind == "sine":
            samples = amplitude * np.sin(arg)
        elif kind == "cosine":
            samples = amplitude * np.cos(arg)
        else:
            samples = np.where(np.sin(arg) >= 0.0, amplitude, -amplitude)
    elif kind in ("gaussian_pulse", "triangle_pulse"):
        span = n * dt
        c = t0 + span / 2.0 if center is None else center
        w = span / 8.0 if width is None else width
        if w <= 0:
            raise BadParam(f"width must be > 0, got {w}")
        if kind == "gaussian_pulse":
            samples = amplitude * np.exp(-((t - c) ** 2) / (2.0 * w * w))
        else:
            samples = amplitude * np.maximum(0.0, 1.0 - np.abs(t - c) / w)
    else:  # white_noise
        if seed is None:
            raise BadParam("white_noise requires an explicit seed")
        rng = np.random.default_rng(seed)
        samples = amplitude * rng.standard_normal(n)
    return Signal(dt, t0, samples)


def shift(f: Signal, k: int) -> Signal:
    """Move samples right by k positions (left for negative k), zero-filling.

    The output has the same length and metadata; values shifted past either
    end are discarded. Boundary handling is zero-padding, not circular.
    """
    n = len(f)
    out = np.zeros(n, dtype=np.float64)
    if k >= 0:
        if k < n:
            out[k:] = f.samples[: n - k]
    else:
        if -k < n:
            out[: n + k] = f.samples[-k:]
    return Signal(f.dt, f.t0, out)
