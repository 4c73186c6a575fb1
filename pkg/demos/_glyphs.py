"""Tiny synthetic character set shared by the demos."""
import numpy as np


def glyphs(n, seed=0, side=20):
    """Bright strokes on a dark field: vertical bar, horizontal bar, box."""
    rng = np.random.default_rng(seed)
    x = np.zeros((n, side, side))
    y = rng.integers(0, 3, n)
    for i in range(n):
        r, c = rng.integers(3, 7, 2)
        if y[i] == 0:
            x[i, r : r + 10, c + 3 : c + 6] = 1.0
        elif y[i] == 1:
            x[i, r + 3 : r + 6, c : c + 10] = 1.0
        else:
            x[i, r : r + 9, c : c + 9] = 1.0
            x[i, r + 2 : r + 7, c + 2 : c + 7] = 0.0
    return x, y
