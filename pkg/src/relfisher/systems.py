"""Physical-system model: parameter records, quantum-number validation,
reference-state selection, derived pseudoharmonic parameters, and bound-state
energies.

Four solvable systems are supported: the one-dimensional harmonic oscillator,
the three-dimensional isotropic oscillator, the hydrogen-like atom, and the
pseudoharmonic diatomic potential. States carry no magnetic quantum number:
the information measure computed downstream is invariant to it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

__all__ = [
    "POSITION",
    "MOMENTUM",
    "SPACES",
    "Oscillator1D",
    "Oscillator3D",
    "Hydrogenic",
    "Pseudoharmonic",
    "SystemParams",
    "QuantumState",
    "PhpDerived",
    "reference_state",
    "php_derived",
    "hydrogen_energy",
]

POSITION = "position"
MOMENTUM = "momentum"
SPACES = (POSITION, MOMENTUM)


def _require_positive(name: str, value: float) -> None:
    if not (isinstance(value, (int, float)) and not isinstance(value, bool)):
        raise ValueError(f"{name} must be a real number, got {value!r}")
    if not (math.isfinite(value) and value > 0.0):
        raise ValueError(f"{name} must be positive and finite, got {value!r}")


def _require_quantum_number(name: str, value: int, minimum: int = 0) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")


@dataclass(frozen=True)
class Oscillator1D:
    """Harmonic oscillator on the full line; omega in atomic units."""

    omega: float

    def __post_init__(self) -> None:
        _require_positive("omega", self.omega)


@dataclass(frozen=True)
class Oscillator3D:
    """Isotropic three-dimensional harmonic oscillator; omega in atomic units."""

    omega: float

    def __post_init__(self) -> None:
        _require_positive("omega", self.omega)


@dataclass(frozen=True)
class Hydrogenic:
    """One-electron atom with nuclear charge Z.

    Z is real, not integer: nothing in the formulas needs integrality, and
    screened-charge experiments are legitimate inputs.
    """

    Z: float

    def __post_init__(self) -> None:
        _require_positive("Z", self.Z)


@dataclass(frozen=True)
class Pseudoharmonic:
    """Diatomic pseudoharmonic potential De*(r/re - re/r)^2, all in atomic units.

    mu is the reduced mass, De the dissociation energy, re the equilibrium
    separation.
    """

    mu: float
    De: float
    re: float

    def __post_init__(self) -> None:
        _require_positive("mu", self.mu)
        _require_positive("De", self.De)
        _require_positive("re", self.re)


SystemParams = Oscillator1D | Oscillator3D | Hydrogenic | Pseudoharmonic


@dataclass(frozen=True)
class PhpDerived:
    """Derived pseudoharmonic parameters.

    gamma_l is the effective angular exponent (>= l always), lam the Gaussian
    width parameter in inverse squared length.
    """

    gamma_l: float
    lam: float


@dataclass(frozen=True)
class QuantumState:
    """A bound state of one system in one space.

    Quantum-number conventions:
      Oscillator1D    n >= 0                (field n)
      Oscillator3D    n_r >= 0, l >= 0      (fields n_r, l)
      Pseudoharmonic  n_r >= 0, l >= 0      (fields n_r, l)
      Hydrogenic      n >= 1, 0 <= l <= n-1 (fields n, l)

    Fields that do not apply to the system must be left at None.
    """

    system: SystemParams
    space: str
    n: int | None = None
    l: int | None = None
    n_r: int | None = None

    def __post_init__(self) -> None:
        if self.space not in SPACES:
            raise ValueError(f"space must be one of {SPACES}, got {self.space!r}")
        sys = self.system
        if isinstance(sys, Oscillator1D):
            if self.n is None or self.l is not None or self.n_r is not None:
                raise ValueError("1D oscillator states take exactly the quantum number n")
            _require_quantum_number("n", self.n)
        elif isinstance(sys, (Oscillator3D, Pseudoharmonic)):
            if self.n_r is None or self.l is None or self.n is not None:
                raise ValueError("radial oscillator states take exactly (n_r, l)")
            _require_quantum_number("n_r", self.n_r)
            _require_quantum_number("l", self.l)
        elif isinstance(sys, Hydrogenic):
            if self.n is None or self.l is None or self.n_r is not None:
                raise ValueError("hydrogen-like states take exactly (n, l)")
            _require_quantum_number("n", self.n, minimum=1)
            _require_quantum_number("l", self.l)
            if self.l > self.n - 1:
                raise ValueError(f"l must satisfy l <= n-1, got n={self.n}, l={self.l}")
        else:
            raise ValueError(f"unknown system parameters: {sys!r}")

    @property
    def radial_nodes(self) -> int:
        """Interior nodes of the radial (or full-line) wavefunction."""
        if isinstance(self.system, Oscillator1D):
            return self.n  # type: ignore[return-value]
        if isinstance(self.system, Hydrogenic):
            return self.n - self.l - 1  # type: ignore[operator]
        return self.n_r  # type: ignore[return-value]


def reference_state(target: QuantumState) -> QuantumState:
    """Node-less comparison state for a target: same system, same space.

    1D oscillator: the n = 0 state. Radial oscillators and the pseudoharmonic
    potential: n_r = 0 at the target's l. Hydrogen-like: the circular state
    n = l + 1 at the target's l. Idempotent by construction.
    """
    sys = target.system
    if isinstance(sys, Oscillator1D):
        return replace(target, n=0)
    if isinstance(sys, (Oscillator3D, Pseudoharmonic)):
        return replace(target, n_r=0)
    return replace(target, n=target.l + 1)


def php_derived(params: Pseudoharmonic, l: int) -> PhpDerived:
    """Effective angular exponent gamma_l and width parameter lambda.

    gamma_l = (-1 + sqrt((2l+1)^2 + 8*mu*De*re^2)) / 2, lambda = sqrt(mu*De/2)/re.
    """
    _require_quantum_number("l", l)
    two_l_plus_1 = 2 * l + 1
    gamma_l = 0.5 * (-1.0 + math.sqrt(two_l_plus_1 * two_l_plus_1 + 8.0 * params.mu * params.De * params.re * params.re))
    lam = math.sqrt(0.5 * params.mu * params.De) / params.re
    return PhpDerived(gamma_l=gamma_l, lam=lam)


def hydrogen_energy(Z: float, n: int) -> float:
    """Bound-state energy -Z^2/(2 n^2) in atomic units."""
    _require_positive("Z", Z)
    _require_quantum_number("n", n, minimum=1)
    return -Z * Z / (2.0 * n * n)
