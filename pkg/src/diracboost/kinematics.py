"""Single-particle kinematics: four-momenta, helicity spinors, bispinors, boosts.

Conventions frozen here and relied on everywhere else:

* natural units, metric signature (+, -, -, -); rapidity ``w`` with
  ``cosh(w) = gamma``, so a particle of mass ``m`` at rapidity ``w0`` has
  ``E = m*cosh(w0)`` and ``|p| = m*sinh(w0)``.
* bispinors are 4-vectors ordered as parity qubit (x) spin qubit, with
  parity bit 0 = |+> and spin bit 0 = |z+>.
* :func:`boost_four_vector` implements the frame transformation
  ``E' = cosh(w)*E - sinh(w)*(n.p)``,
  ``p' = p + [(cosh(w) - 1)*(n.p) - sinh(w)*E]*n``.
  With this sign a particle moving at rapidity ``w0`` along ``+z`` is brought
  to rest by the boost ``(w0, +e_z)``; boosting a rest particle along ``n``
  yields momentum ``-m*sinh(w)*n``.  The spinor-space operator returned by
  :func:`bispinor_boost` is paired with exactly this map (see the rest-frame
  tests for the label bookkeeping it induces on helicity spinors).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .tensor import ID2, PAULI, PAULI_X, kron

#: Helicity labels: 1 means spin along the momentum, 2 means opposite.
HELICITY_LABELS = (1, 2)

E_Z = np.array([0.0, 0.0, 1.0])

ONSHELL_RTOL = 1e-10
UNIT_NORM_TOL = 1e-12

#: Chirality operator in the parity (x) spin ordering.
GAMMA5 = kron(PAULI_X, ID2)


def _check_helicity(s: int) -> int:
    if s not in HELICITY_LABELS:
        raise ValueError(f"helicity label must be 1 or 2, got {s!r}")
    return int(s)


def sigma_dot(v: np.ndarray) -> np.ndarray:
    """2x2 matrix v . sigma for a real 3-vector v."""
    v = np.asarray(v, dtype=float)
    return v[0] * PAULI[0] + v[1] * PAULI[1] + v[2] * PAULI[2]


@dataclass(frozen=True, eq=False)
class FourMomentum:
    """An on-shell four-momentum (E, p) of a massive particle."""

    mass: float
    energy: float
    p3: np.ndarray

    def __post_init__(self) -> None:
        p3 = np.asarray(self.p3, dtype=float).reshape(-1)
        if p3.shape != (3,):
            raise ValueError(f"p3 must be a 3-vector, got shape {p3.shape}")
        object.__setattr__(self, "p3", p3)
        if not (self.mass > 0.0 and math.isfinite(self.mass)):
            raise ValueError(f"mass must be positive and finite, got {self.mass!r}")
        if self.energy < self.mass * (1.0 - 1e-12):
            raise ValueError(
                f"energy {self.energy!r} below mass {self.mass!r}"
            )
        m2 = self.mass**2
        residue = abs(self.energy**2 - float(p3 @ p3) - m2)
        if residue > ONSHELL_RTOL * m2:
            raise ValueError(
                f"four-momentum off shell: |E^2 - p^2 - m^2| = {residue:.3e} "
                f"exceeds {ONSHELL_RTOL:.0e} relative"
            )

    @classmethod
    def at_rest(cls, mass: float) -> "FourMomentum":
        return cls(mass, mass, np.zeros(3))

    @classmethod
    def from_rapidity(
        cls, mass: float, rapidity: float, direction: np.ndarray
    ) -> "FourMomentum":
        """Momentum of a particle moving at the given rapidity along a unit direction."""
        n = _unit_direction(direction)
        return cls(mass, mass * math.cosh(rapidity), mass * math.sinh(rapidity) * n)

    @classmethod
    def from_three_momentum(cls, mass: float, p3: np.ndarray) -> "FourMomentum":
        p3 = np.asarray(p3, dtype=float)
        return cls(mass, math.sqrt(mass**2 + float(p3 @ p3)), p3)

    @property
    def p_norm(self) -> float:
        return float(np.linalg.norm(self.p3))

    def minkowski_norm_sq(self) -> float:
        return float(self.energy**2 - self.p3 @ self.p3)


def _unit_direction(direction: np.ndarray) -> np.ndarray:
    n = np.asarray(direction, dtype=float).reshape(-1)
    if n.shape != (3,):
        raise ValueError(f"direction must be a 3-vector, got shape {n.shape}")
    if abs(np.linalg.norm(n) - 1.0) > UNIT_NORM_TOL:
        raise ValueError(f"direction must be a unit vector, |n| = {np.linalg.norm(n)!r}")
    return n


@dataclass(frozen=True, eq=False)
class BoostSpec:
    """A pure boost: rapidity (sign allowed) and unit direction."""

    rapidity: float
    direction: np.ndarray

    def __post_init__(self) -> None:
        if not math.isfinite(self.rapidity):
            raise ValueError(f"rapidity must be finite, got {self.rapidity!r}")
        object.__setattr__(self, "direction", _unit_direction(self.direction))

    @classmethod
    def from_polar_angle(cls, rapidity: float, theta: float) -> "BoostSpec":
        """Boost in the x-z plane: n = (sin(theta), 0, cos(theta))."""
        return cls(rapidity, np.array([math.sin(theta), 0.0, math.cos(theta)]))

    def reversed(self) -> "BoostSpec":
        return BoostSpec(-self.rapidity, self.direction)


@dataclass(frozen=True, eq=False)
class Bispinor:
    """A unit-norm four-component bispinor tagged with its momentum and helicity."""

    amplitudes: np.ndarray
    momentum: FourMomentum
    helicity: int

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (4,):
            raise ValueError(f"bispinor amplitudes must have length 4, got {amps.shape}")
        object.__setattr__(self, "amplitudes", amps)
        _check_helicity(self.helicity)
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > 1e-10:
            raise ValueError(f"bispinor must have unit norm, got {norm!r}")


def _fix_phase(v: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Make the first component with magnitude above tol real and positive."""
    for c in v:
        if abs(c) > tol:
            return v * (abs(c) / c)
    return v


def helicity_spinor(p: FourMomentum, s: int) -> np.ndarray:
    """Two-spinor with (e_p . sigma) chi = +chi for s=1 and -chi for s=2.

    At rest the convention is the continuous limit from the +z direction:
    s=1 gives |z+>, s=2 gives |z->.  The global phase is fixed by making the
    first nonzero component real positive.
    """
    _check_helicity(s)
    k = p.p3
    kn = float(np.linalg.norm(k))
    if kn == 0.0:
        return (
            np.array([1.0, 0.0], dtype=complex)
            if s == 1
            else np.array([0.0, 1.0], dtype=complex)
        )
    nx, ny, nz = k / kn
    # Two algebraically equivalent closed forms; the branch keeps the large
    # component in the numerator so nothing cancels near the poles.
    if nz >= 0.0:
        plus = np.array([1.0 + nz, nx + 1j * ny], dtype=complex)
        minus = np.array([-(nx - 1j * ny), 1.0 + nz], dtype=complex)
    else:
        plus = np.array([nx - 1j * ny, 1.0 - nz], dtype=complex)
        minus = np.array([1.0 - nz, -(nx + 1j * ny)], dtype=complex)
    chi = plus if s == 1 else minus
    chi = chi / np.linalg.norm(chi)
    return _fix_phase(chi)


def _bispinor_blocks(p: FourMomentum, s: int) -> tuple[np.ndarray, np.ndarray, float]:
    chi = helicity_spinor(p, s)
    big = (p.energy + p.mass) * chi
    small = sigma_dot(p.p3) @ chi
    norm = math.sqrt(2.0 * p.energy * (p.energy + p.mass))
    return big, small, norm


def bispinor_u(p: FourMomentum, s: int) -> Bispinor:
    """Positive-energy bispinor: (E+m)|+> block over the (p.sigma)|-> block.

    The sign of the |-> block comes from applying p.sigma to the helicity
    spinor directly, so it is +|p| for s=1 and -|p| for s=2 by construction.
    """
    big, small, norm = _bispinor_blocks(p, s)
    return Bispinor(np.concatenate([big, small]) / norm, p, s)


def bispinor_v(p: FourMomentum, s: int) -> Bispinor:
    """Negative-energy bispinor: parity blocks of :func:`bispinor_u` swapped."""
    big, small, norm = _bispinor_blocks(p, s)
    return Bispinor(np.concatenate([small, big]) / norm, p, s)


def boost_four_vector(p: FourMomentum, b: BoostSpec) -> FourMomentum:
    """Apply the frame transformation described in the module docstring."""
    ch = math.cosh(b.rapidity)
    sh = math.sinh(b.rapidity)
    n = b.direction
    ndotp = float(n @ p.p3)
    energy = ch * p.energy - sh * ndotp
    p3 = p.p3 + ((ch - 1.0) * ndotp - sh * p.energy) * n
    return FourMomentum(p.mass, energy, p3)


def bispinor_boost(b: BoostSpec) -> np.ndarray:
    """The 4x4 spinor-space boost cosh(w/2) I - sinh(w/2) (sigma_x (x) n.sigma).

    Hermitian with determinant 1, but not unitary for w != 0.
    """
    half = b.rapidity / 2.0
    return math.cosh(half) * np.eye(4, dtype=complex) - math.sinh(half) * kron(
        PAULI_X, sigma_dot(b.direction)
    )


def chiral_projector(f: int) -> np.ndarray:
    """Projector onto the chirality-(-1)^f eigenspace: (I + (-1)^f gamma5)/2."""
    if f not in (0, 1):
        raise ValueError(f"chiral label must be 0 or 1, got {f!r}")
    return (np.eye(4, dtype=complex) + (-1.0) ** f * GAMMA5) / 2.0
