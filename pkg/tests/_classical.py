"""Independent classical Bernstein implementations.

Written from the textbook definitions with exact integer binomials; used as
the reduction reference when alpha = beta = 0.
"""

import math

import numpy as np


def bernstein_row(n, t):
    return np.array(
        [math.comb(n, k) * t**k * (1.0 - t) ** (n - k) for k in range(n + 1)]
    )


def eval_curve(control, t):
    return bernstein_row(len(control) - 1, t) @ control


def decasteljau(control, t):
    work = np.array(control, dtype=float)
    while work.shape[0] > 1:
        work = (1.0 - t) * work[:-1] + t * work[1:]
    return work[0]


def matrix_pyramid(control, t):
    vec = np.array(control, dtype=float)
    while vec.shape[0] > 1:
        rows = vec.shape[0] - 1
        mat = np.zeros((rows, rows + 1))
        idx = np.arange(rows)
        mat[idx, idx] = 1.0 - t
        mat[idx, idx + 1] = t
        vec = mat @ vec
    return vec[0]


def elevate(control):
    control = np.asarray(control, dtype=float)
    n = control.shape[0] - 1
    out = np.empty((n + 2, control.shape[1]))
    out[0] = control[0]
    out[n + 1] = control[n]
    for j in range(1, n + 1):
        w = j / (n + 1)
        out[j] = w * control[j - 1] + (1.0 - w) * control[j]
    return out


def eval_patch(net, u, v):
    m = net.shape[0] - 1
    n = net.shape[1] - 1
    return np.einsum("i,ijc,j->c", bernstein_row(m, u), net, bernstein_row(n, v))
