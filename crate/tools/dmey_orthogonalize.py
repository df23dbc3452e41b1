"""Regenerate the embedded discrete Meyer low-pass filter.

The widely distributed 62-tap dmey table is only approximately orthogonal
(round-trip error around 1e-2 under periodization). This script projects it
onto the nearest exactly paraunitary filter with a Gauss-Newton iteration on
the double-shift orthogonality constraints plus a zero at z = -1, then prints
the taps with 17 significant digits for pasting into tables.rs.

Requires numpy and PyWavelets.
"""
import numpy as np
import pywt


def constraints(g):
    n = len(g)
    rows = []
    for k in range(n // 2):
        rows.append(np.dot(g[: n - 2 * k], g[2 * k :]) - (1.0 if k == 0 else 0.0))
    rows.append(np.sum(g * (-1.0) ** np.arange(n)))
    return np.array(rows)


def jacobian(g):
    n = len(g)
    jac = np.zeros((n // 2 + 1, n))
    for k in range(n // 2):
        s = 2 * k
        jac[k, : n - s] += g[s:]
        jac[k, s:] += g[: n - s]
    jac[n // 2] = (-1.0) ** np.arange(n)
    return jac


def main():
    g = np.array(pywt.Wavelet("dmey").dec_lo, dtype=float)
    start = g.copy()
    for _ in range(50):
        c = constraints(g)
        if np.max(np.abs(c)) < 1e-16:
            break
        step, *_ = np.linalg.lstsq(jacobian(g), c, rcond=None)
        g = g - step
    print("# max constraint residual", np.max(np.abs(constraints(g))))
    print("# max deviation from source table", np.max(np.abs(g - start)))
    print("# sum", g.sum() - np.sqrt(2.0))
    for v in g:
        print(f"{v:.17e},")


if __name__ == "__main__":
    main()
