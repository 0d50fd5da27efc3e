"""Orthogonal-polynomial kernels with analytic derivatives, and log-gamma.

Every polynomial is evaluated by its forward three-term recurrence in double
precision, and the derivative comes from the matching index-shift identity
rather than finite differences, so value and derivative are consistent to
machine precision at any argument.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "PolyEval",
    "hermite",
    "assoc_laguerre",
    "gegenbauer",
    "ln_gamma",
]


@dataclass(frozen=True)
class PolyEval:
    """Polynomial value and first derivative at a single point."""

    value: float
    derivative: float


def _check_degree(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"polynomial degree must be a non-negative integer, got {n!r}")


def hermite(n: int, x: float) -> PolyEval:
    """Physicists' Hermite polynomial H_n(x) with derivative 2*n*H_{n-1}(x).

    Recurrence: H_{k+1} = 2*x*H_k - 2*k*H_{k-1}, H_0 = 1, H_1 = 2*x.
    """
    _check_degree(n)
    if n == 0:
        return PolyEval(1.0, 0.0)
    prev = 1.0
    cur = 2.0 * x
    for k in range(1, n):
        prev, cur = cur, 2.0 * x * cur - 2.0 * k * prev
    return PolyEval(cur, 2.0 * n * prev)


def _laguerre_value(n: int, alpha: float, x: float) -> float:
    if n == 0:
        return 1.0
    prev = 1.0
    cur = 1.0 + alpha - x
    for k in range(1, n):
        prev, cur = cur, ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0)
    return cur


def assoc_laguerre(n: int, alpha: float, x: float) -> PolyEval:
    """Generalized Laguerre polynomial L_n^alpha(x), alpha > -1.

    Recurrence: (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1};
    derivative identity: d/dx L_n^alpha = -L_{n-1}^{alpha+1}.
    """
    _check_degree(n)
    if alpha <= -1.0:
        raise ValueError(f"assoc_laguerre requires alpha > -1, got {alpha}")
    value = _laguerre_value(n, alpha, x)
    derivative = -_laguerre_value(n - 1, alpha + 1.0, x) if n >= 1 else 0.0
    return PolyEval(value, derivative)


def _gegenbauer_value(n: int, alpha: float, x: float) -> float:
    if n == 0:
        return 1.0
    prev = 1.0
    cur = 2.0 * alpha * x
    for k in range(1, n):
        prev, cur = cur, (2.0 * x * (k + alpha) * cur - (k + 2.0 * alpha - 1.0) * prev) / (k + 1.0)
    return cur


def gegenbauer(n: int, alpha: float, x: float) -> PolyEval:
    """Gegenbauer (ultraspherical) polynomial C_n^alpha(x), alpha > 0.

    Recurrence: (k+1) C_{k+1} = 2x(k+alpha) C_k - (k+2*alpha-1) C_{k-1};
    derivative identity: d/dx C_n^alpha = 2*alpha*C_{n-1}^{alpha+1}.
    """
    _check_degree(n)
    if alpha <= 0.0:
        raise ValueError(f"gegenbauer requires alpha > 0, got {alpha}")
    value = _gegenbauer_value(n, alpha, x)
    derivative = 2.0 * alpha * _gegenbauer_value(n - 1, alpha + 1.0, x) if n >= 1 else 0.0
    return PolyEval(value, derivative)


def ln_gamma(x: float) -> float:
    """Natural log of the gamma function for x > 0."""
    if not x > 0.0:
        raise ValueError(f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(x)
