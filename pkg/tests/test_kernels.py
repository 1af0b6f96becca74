"""Both kernel backends must agree with each other and with a naive oracle."""

import numpy as np
import pytest

from msetsig import _kernels
from msetsig._kernels import _fallback

try:
    from msetsig._kernels import _core
except ImportError:
    _core = None

BACKENDS = [_fallback] if _core is None else [_fallback, _core]


def naive_xcorr(f, g, lag_lo, lag_hi, common):
    out = []
    for k in range(lag_lo, lag_hi + 1):
        acc = 0.0
        for i in range(len(f)):
            j = i - k
            if 0 <= j < len(g):
                a, b = float(f[i]), float(g[j])
                if common:
                    sgn = (1.0 if a >= 0 else -1.0) * (1.0 if b >= 0 else -1.0)
                    acc += sgn * min(abs(a), abs(b))
                else:
                    acc += a * b
        out.append(acc)
    return np.array(out)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@pytest.mark.parametrize("common", [True, False])
def test_xcorr_matches_naive_oracle(impl, common):
    rng = np.random.default_rng(11)
    for _ in range(25):
        nf = int(rng.integers(1, 20))
        ng = int(rng.integers(1, 20))
        f = rng.standard_normal(nf)
        g = rng.standard_normal(ng)
        lag_lo, lag_hi = -(ng - 1), nf - 1
        got = impl.xcorr(f, g, lag_lo, lag_hi, common)
        want = naive_xcorr(f, g, lag_lo, lag_hi, common)
        assert np.allclose(got, want, atol=1e-12, rtol=0)


@pytest.mark.skipif(_core is None, reason="compiled backend not built")
@pytest.mark.parametrize("common", [True, False])
def test_backends_agree(common):
    rng = np.random.default_rng(5)
    f = rng.standard_normal(200)
    g = rng.standard_normal(150)
    lo, hi = -149, 199
    a = _core.xcorr(f, g, lo, hi, common)
    b = _fallback.xcorr(f, g, lo, hi, common)
    assert np.allclose(a, b, atol=1e-10, rtol=0)


@pytest.mark.skipif(_core is None, reason="compiled backend not built")
def test_lowpass_backends_identical():
    rng = np.random.default_rng(6)
    x = rng.standard_normal(500)
    a = _core.lowpass(x, 0.3)
    b = _fallback.lowpass(x, 0.3)
    assert np.array_equal(a, b)


def test_lowpass_steps_toward_input():
    x = np.ones(50)
    y = _kernels.lowpass(x, 0.25)
    assert y[0] == 0.25
    assert np.all(np.diff(y) > 0)
    assert y[-1] < 1.0
    assert y[-1] == pytest.approx(1.0, abs=1e-5)


def test_xcorr_no_overlap_is_zero():
    f = np.array([1.0, 2.0])
    g = np.array([3.0])
    out = _kernels.xcorr(f, g, -5, 5, True)
    assert out[0] == 0.0 and out[-1] == 0.0


def test_backend_name_reported():
    assert _kernels.backend_name() in ("compiled", "python")
