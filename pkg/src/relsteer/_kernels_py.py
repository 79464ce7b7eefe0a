"""Pure numpy fallback for the compiled grid kernel (same outputs, same layout)."""

import numpy as np


def _xlogx(x):
    safe = np.where(x > 0.0, x, 1.0)
    return np.where(x > 0.0, x * np.log2(safe), 0.0)


def _pair(x):
    return _xlogx(1.0 + x) + _xlogx(1.0 - x)


def _terms(c1, c2, c3, r, s):
    common = _pair(c1) + _pair(c2) + 0.5 * (
        _xlogx(1.0 + c3 + r + s)
        + _xlogx(1.0 + c3 - r - s)
        + _xlogx(1.0 - c3 - r + s)
        + _xlogx(1.0 - c3 + r - s)
    )
    f = np.abs(c1 - c2) / 4.0
    g = np.abs(c1 + c2) / 4.0
    return np.stack(
        [common - _pair(r), common - _pair(s), 4.0 * (f + g) ** 2, 4.0 * (f - g) ** 2, c3 * c3],
        axis=-1,
    )


def grid_terms(alphas, betas):
    """Return an (n_alpha, n_beta, 3, 5) array of (si_ab, si_ba, mu1, mu2, mu3)."""
    a = np.asarray(alphas, dtype=np.float64)[:, None]
    b = np.asarray(betas, dtype=np.float64)[None, :]
    ca2 = np.cos(a) * np.cos(a)
    sa2 = np.sin(a) * np.sin(a)
    s2a, c2a = np.sin(2.0 * a), np.cos(2.0 * a)
    s2b, c2b = np.sin(2.0 * b), np.cos(2.0 * b)
    cb, sb = np.cos(b), np.sin(b)
    ab1 = _terms(s2a * cb, -s2a * cb, c2b * ca2 + sa2, c2a + 0.0 * b, c2b * ca2 - sa2)
    ab2 = _terms(s2a * sb, s2a * sb, c2b * ca2 - sa2, c2a + 0.0 * b, c2b * ca2 + sa2)
    b1b2 = _terms(s2b * ca2, -s2b * ca2, c2a + 0.0 * b, c2b * ca2 - sa2, c2b * ca2 + sa2)
    return np.stack([ab1, ab2, b1b2], axis=2)
