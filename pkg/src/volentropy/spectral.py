"""Spectral radius estimation and exact characteristic polynomials.

Power iteration runs in floating point (the only numerical code in the
package) and smooths its estimates over a sliding window so that
permutation-like matrices, whose raw Collatz-Wielandt quotients oscillate,
still terminate.  Characteristic polynomials are computed exactly over the
integers, so downstream root work can reason about signs with no rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import IntMatrix, IntPolynomial

__all__ = [
    "SpectralEstimate",
    "power_iteration",
    "char_poly_exact",
    "is_irreducible",
]

# Window length for smoothing the spectral-radius estimates.  Eight steps is
# enough to average out oscillation of any period dividing 8 (the common
# permutation-like cases) while barely delaying convergence.
_WINDOW = 8


@dataclass(frozen=True, slots=True)
class SpectralEstimate:
    """Result of power iteration.

    value      -- estimate of the spectral radius
    iterations -- matrix-vector products performed
    residual   -- last movement of the smoothed estimate
    converged  -- True iff the residual dropped below the tolerance
    """

    value: float
    iterations: int
    residual: float
    converged: bool


def power_iteration(
    m: IntMatrix, tol: float = 1e-10, max_iter: int | None = None
) -> SpectralEstimate:
    """Spectral radius of a nonnegative matrix by smoothed power iteration.

    Starts from the all-ones vector, renormalizes in the sup norm, and tracks
    the geometric mean of the last few growth factors; iteration stops when
    that smoothed estimate moves less than `tol`.  The zero (or nilpotent)
    matrix yields 0.  Non-convergence within the iteration budget is reported
    via converged=False, never silently.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if not m.is_nonnegative():
        raise ValueError("power iteration requires a nonnegative matrix")
    if max_iter is None:
        max_iter = 100 * m.size + 1000
    if max_iter < 1:
        raise ValueError(f"iteration budget must be >= 1, got {max_iter}")

    a = np.array(m.rows, dtype=np.float64)
    v = np.ones(m.size, dtype=np.float64)
    window: list[float] = []
    smoothed = 0.0
    smoothed_prev: float | None = None
    residual = math.inf
    for it in range(1, max_iter + 1):
        w = a @ v
        growth = float(np.max(w))
        if growth == 0.0:
            # Reached the kernel: every eigenvalue on this orbit is 0.
            return SpectralEstimate(0.0, it, 0.0, True)
        if np.array_equal(w, growth * v):
            # Genuine fixed point of the normalized iteration (e.g. a flip,
            # or any matrix with the current v as eigenvector): growth is the
            # spectral radius on the support of v.
            return SpectralEstimate(growth, it, 0.0, True)
        v = w / growth
        window.append(growth)
        if len(window) > _WINDOW:
            window.pop(0)
        smoothed = math.exp(math.fsum(math.log(g) for g in window) / len(window))
        if smoothed_prev is not None and len(window) == _WINDOW:
            residual = abs(smoothed - smoothed_prev)
            if residual <= tol:
                return SpectralEstimate(smoothed, it, residual, True)
        smoothed_prev = smoothed
    return SpectralEstimate(smoothed, max_iter, residual, False)


def char_poly_exact(m: IntMatrix) -> IntPolynomial:
    """Characteristic polynomial det(xI - m), monic, exact over the integers.

    Faddeev-LeVerrier recurrence; every division is exact for integer input,
    and Python integers keep the intermediate traces exact at any size.
    """
    k = m.size
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    ident = IntMatrix.identity(k)
    acc = ident
    for step in range(1, k + 1):
        prod = m * acc
        trace = sum(prod.rows[i][i] for i in range(k))
        q, r = divmod(trace, step)
        assert r == 0, "Faddeev-LeVerrier trace must divide exactly"
        coeffs[k - step] = -q
        acc = prod + (-q) * ident
    return IntPolynomial(coeffs)


def is_irreducible(m: IntMatrix) -> bool:
    """True iff the digraph on {1..k} with an edge i->j whenever m[i][j] != 0
    is strongly connected (every state reaches every other)."""
    k = m.size
    adj = [[j for j, v in enumerate(row) if v != 0] for row in m.rows]
    radj: list[list[int]] = [[] for _ in range(k)]
    for i, outs in enumerate(adj):
        for j in outs:
            radj[j].append(i)

    def reaches_all(start: int, edges: list[list[int]]) -> bool:
        seen = [False] * k
        seen[start] = True
        stack = [start]
        count = 1
        while stack:
            u = stack.pop()
            for w in edges[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == k

    return reaches_all(0, adj) and reaches_all(0, radj)
