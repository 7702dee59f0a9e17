"""Quadrature rules at working precision."""

from __future__ import annotations

from functools import lru_cache
from typing import Tuple

from ..numerics.extended import wp


@lru_cache(maxsize=None)
def gauss_legendre(n: int) -> Tuple[tuple, tuple]:
    """Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1] (n even)."""
    if n < 2 or n % 2:
        raise ValueError("Gauss-Legendre order must be even and positive")
    nodes, weights = [], []
    for i in range(1, n // 2 + 1):
        x = wp.cos(wp.pi * (i - wp.mpf(1) / 4) / (n + wp.mpf(1) / 2))
        for _ in range(100):
            p0, p1 = wp.mpf(1), x
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = n * (x * p1 - p0) / (x * x - 1)
            dx = p1 / dp
            x -= dx
            if abs(dx) < wp.mpf(2) ** -118:
                break
        p0, p1 = wp.mpf(1), x
        for k in range(2, n + 1):
            p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
        dp = n * (x * p1 - p0) / (x * x - 1)
        w = 2 / ((1 - x * x) * dp * dp)
        nodes.append(x)
        weights.append(w)
    full_x, full_w = [], []
    for x, w in zip(nodes, weights):
        full_x += [-x, x]
        full_w += [w, w]
    return tuple(full_x), tuple(full_w)


def tanh_sinh_node(tau):
    """(position in (-1, 1), distance to the nearer endpoint, weight) at tau."""
    u = wp.pi / 2 * wp.sinh(tau)
    cu = wp.cosh(u)
    x = wp.tanh(u)
    dist = wp.exp(-abs(u)) / cu
    w = wp.pi / 2 * wp.cosh(tau) / (cu * cu)
    return x, dist, w


def exp_sinh_node(tau):
    """(offset from the finite endpoint, weight) of the exp-sinh map at tau."""
    v = wp.exp(wp.pi / 2 * wp.sinh(tau))
    w = wp.pi / 2 * wp.cosh(tau) * v
    return v, w
