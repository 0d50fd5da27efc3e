"""Normalized wavefunction evaluation with analytic first derivatives.

Position- and momentum-space forms for the 1D oscillator, the 3D isotropic
oscillator, the hydrogen-like atom, and the pseudoharmonic potential. All
normalization prefactors are assembled in log space and exponentiated once,
which keeps the pseudoharmonic family (effective angular exponents up to a
few hundred for real molecules) inside double range. Derivatives are analytic
throughout: prefactor product rule plus the polynomial derivative identities;
nothing in the production path differentiates numerically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .quadrature import HALF_LINE, FULL_LINE, NonConvergedError, QuadratureSpec, integrate
from .specfun import assoc_laguerre, gegenbauer, hermite, ln_gamma
from .systems import (
    MOMENTUM,
    POSITION,
    SPACES,
    Hydrogenic,
    Oscillator1D,
    Oscillator3D,
    Pseudoharmonic,
    QuantumState,
    php_derived,
)

__all__ = [
    "WaveSample",
    "eval_1d_qho",
    "eval_radial",
    "evaluate",
    "natural_scale",
    "default_quadrature_spec",
    "normalization_defect",
]

# exp(_LN_TINY) is far below every tolerance in use; beyond it the evaluators
# return exact zeros instead of risking underflow-times-overflow products.
_LN_TINY = -700.0

_LN_PI = math.log(math.pi)
_QUARTER_LN_2 = 0.25 * math.log(2.0)


@dataclass(frozen=True)
class WaveSample:
    """Wavefunction value and its first derivative at one point."""

    value: float
    derivative: float


_ZERO_SAMPLE = WaveSample(0.0, 0.0)


def _qho1d_argument_scale(omega: float, space: str) -> float:
    """Scale c in the dimensionless argument y = c*x (or c*p)."""
    if space == POSITION:
        return math.exp(0.5 * math.log(omega) - _QUARTER_LN_2)
    return math.exp(_QUARTER_LN_2 - 0.5 * math.log(omega))


def eval_1d_qho(n: int, omega: float, space: str, arg: float) -> WaveSample:
    """Normalized 1D oscillator eigenfunction at a point of the full line.

    In both spaces the function is N*H_n(y)*exp(-y^2/2) with y = c*arg; the
    two spaces differ only in the scale c, which swaps omega for its
    reciprocal relative to the special frequency sqrt(2).
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    if not omega > 0.0:
        raise ValueError(f"omega must be positive, got {omega!r}")
    if space not in SPACES:
        raise ValueError(f"space must be one of {SPACES}, got {space!r}")
    c = _qho1d_argument_scale(omega, space)
    y = c * arg
    ln_norm = 0.5 * (math.log(c) - n * math.log(2.0) - ln_gamma(n + 1.0) - 0.5 * _LN_PI)
    ln_env = ln_norm - 0.5 * y * y
    if ln_env < _LN_TINY:
        return _ZERO_SAMPLE
    env = math.exp(ln_env)
    h = hermite(n, y)
    return WaveSample(env * h.value, c * env * (h.derivative - y * h.value))


def _radial_oscillator(n_r: int, kappa: float, b: float, s: float) -> WaveSample:
    """Common radial family A * s^kappa * exp(-b s^2/2) * L_{n_r}^{kappa+1/2}(b s^2).

    Covers the 3D oscillator (kappa = l, b = omega or 1/omega) and the
    pseudoharmonic potential (kappa = gamma_l, b = 2*lambda or 1/(2*lambda)).
    """
    u = b * s * s
    ln_norm = 0.5 * (
        math.log(2.0)
        + (kappa + 1.5) * math.log(b)
        + ln_gamma(n_r + 1.0)
        - ln_gamma(n_r + kappa + 1.5)
    )
    ln_env = ln_norm - 0.5 * u
    if kappa != 0.0:
        ln_env += kappa * math.log(s)
    if ln_env < _LN_TINY:
        return _ZERO_SAMPLE
    env = math.exp(ln_env)
    lag = assoc_laguerre(n_r, kappa + 0.5, u)
    value = env * lag.value
    derivative = env * ((kappa / s - b * s) * lag.value + 2.0 * b * s * lag.derivative)
    return WaveSample(value, derivative)


def _hydrogen_position(n: int, l: int, Z: float, r: float) -> WaveSample:
    xi = 2.0 * Z * r / n
    ln_env = (
        math.log(2.0)
        + 1.5 * math.log(Z)
        - 2.0 * math.log(n)
        + 0.5 * (ln_gamma(n - l) - ln_gamma(n + l + 1.0))
        - 0.5 * xi
    )
    if l:
        ln_env += l * math.log(xi)
    if ln_env < _LN_TINY:
        return _ZERO_SAMPLE
    env = math.exp(ln_env)
    lag = assoc_laguerre(n - l - 1, 2.0 * l + 1.0, xi)
    value = env * lag.value
    derivative = (2.0 * Z / n) * env * ((l / xi - 0.5) * lag.value + lag.derivative)
    return WaveSample(value, derivative)


def _hydrogen_momentum(n: int, l: int, Z: float, p: float) -> WaveSample:
    # Evaluated through t = n p / Z and q = (t^2-1)/(t^2+1); the t > 1 branch
    # works in 1/t^2 so t^2 never overflows and q stays fully accurate.
    t = n * p / Z
    ln_norm = (
        2.0 * math.log(n)
        + (2.0 * l + 2.0) * math.log(2.0)
        + ln_gamma(l + 1.0)
        + 0.5 * (math.log(2.0) - _LN_PI + ln_gamma(n - l) - ln_gamma(n + l + 1.0))
        - 1.5 * math.log(Z)
    )
    if t <= 1.0:
        t2p1 = t * t + 1.0
        q = (t * t - 1.0) / t2p1
        ln_t2p1 = math.log1p(t * t)
        dq_dt = 4.0 * t / (t2p1 * t2p1)
        rational_decay = 2.0 * (l + 2.0) * t / t2p1
    else:
        inv = 1.0 / (t * t)
        one_plus = 1.0 + inv
        q = (1.0 - inv) / one_plus
        ln_t2p1 = 2.0 * math.log(t) + math.log1p(inv)
        dq_dt = 4.0 / (t * t * t * one_plus * one_plus)
        rational_decay = 2.0 * (l + 2.0) / (t * one_plus)
    ln_env = ln_norm - (l + 2.0) * ln_t2p1
    if l:
        ln_env += l * math.log(t)
    if ln_env < _LN_TINY:
        return _ZERO_SAMPLE
    env = math.exp(ln_env)
    geg = gegenbauer(n - l - 1, l + 1.0, q)
    power_growth = l / t if l else 0.0
    value = env * geg.value
    d_dt = env * ((power_growth - rational_decay) * geg.value + geg.derivative * dq_dt)
    return WaveSample(value, (n / Z) * d_dt)


def eval_radial(state: QuantumState, s: float) -> WaveSample:
    """Normalized radial function R(s) and dR/ds at s > 0.

    s is a radius in position space and a momentum magnitude in momentum
    space. The 1D oscillator is not a radial system; see eval_1d_qho.
    """
    if not s > 0.0:
        raise ValueError(f"radial argument must be > 0, got {s!r}")
    sys = state.system
    if isinstance(sys, Oscillator3D):
        b = sys.omega if state.space == POSITION else 1.0 / sys.omega
        return _radial_oscillator(state.n_r, float(state.l), b, s)
    if isinstance(sys, Pseudoharmonic):
        derived = php_derived(sys, state.l)
        b = 2.0 * derived.lam if state.space == POSITION else 0.5 / derived.lam
        return _radial_oscillator(state.n_r, derived.gamma_l, b, s)
    if isinstance(sys, Hydrogenic):
        if state.space == POSITION:
            return _hydrogen_position(state.n, state.l, sys.Z, s)
        return _hydrogen_momentum(state.n, state.l, sys.Z, s)
    raise ValueError("eval_radial applies to radial systems; use eval_1d_qho for the 1D oscillator")


def evaluate(state: QuantumState, s: float) -> WaveSample:
    """Evaluate any state's wavefunction: full-line for 1D, radial otherwise."""
    if isinstance(state.system, Oscillator1D):
        return eval_1d_qho(state.n, state.system.omega, state.space, s)
    return eval_radial(state, s)


def natural_scale(state: QuantumState) -> float:
    """Characteristic length of the state's density, used as quadrature scale."""
    sys = state.system
    if isinstance(sys, Oscillator1D):
        return 1.0 / _qho1d_argument_scale(sys.omega, state.space)
    if isinstance(sys, Oscillator3D):
        root = math.sqrt(sys.omega)
        return 1.0 / root if state.space == POSITION else root
    if isinstance(sys, Pseudoharmonic):
        root = math.sqrt(php_derived(sys, state.l).lam)
        return 1.0 / root if state.space == POSITION else root
    return sys.Z / state.n if state.space == MOMENTUM else state.n / sys.Z


def default_quadrature_spec(state: QuantumState, rel_tol: float = 1e-10) -> QuadratureSpec:
    """Quadrature configuration adapted to one state's domain and scale."""
    domain = FULL_LINE if isinstance(state.system, Oscillator1D) else HALF_LINE
    return QuadratureSpec(domain=domain, rel_tol=rel_tol, scale=natural_scale(state))


def normalization_defect(state: QuantumState, spec: QuadratureSpec | None = None) -> float:
    """|integral of the density - 1|, by quadrature.

    The density is s^2 R(s)^2 on the half line for radial systems and psi^2
    on the full line for the 1D oscillator. Raises NonConvergedError if the
    quadrature does not reach its tolerance.
    """
    if spec is None:
        spec = default_quadrature_spec(state)
    if isinstance(state.system, Oscillator1D):
        def density(x: float) -> float:
            value = evaluate(state, x).value
            return value * value
    else:
        def density(s: float) -> float:
            value = evaluate(state, s).value
            return s * s * value * value
    result = integrate(density, spec)
    if not result.converged:
        raise NonConvergedError(
            f"normalization quadrature did not converge for {state!r}: "
            f"error estimate {result.error_estimate:.3e} after {result.evaluations} evaluations"
        )
    return abs(result.value - 1.0)
