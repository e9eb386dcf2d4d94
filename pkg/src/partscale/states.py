"""Factories for the state families used throughout: GHZ-type, W, and their
isotropic mixtures with the maximally mixed state (Werner-type blends)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .linalg import ATOL, DensityMatrix


def ghz(d: int, n: int) -> np.ndarray:
    """Maximally entangled n-party qudit vector: equal weight on |ii...i>.

    Normalization is 1/sqrt(d) regardless of the number of parties.
    """
    if d < 2 or n < 2:
        raise ValueError(f"need d >= 2 and n >= 2, got d={d}, n={n}")
    v = np.zeros(d**n, dtype=complex)
    step = sum(d**k for k in range(n))
    v[np.arange(d) * step] = 1.0 / math.sqrt(d)
    return v


def w_state() -> np.ndarray:
    """Three-qubit W vector: equal weight on |001>, |010>, |100>."""
    v = np.zeros(8, dtype=complex)
    v[[1, 2, 4]] = 1.0 / math.sqrt(3)
    return v


def psi_theta(theta: float) -> np.ndarray:
    """Three-qubit family (|000> + cos(theta)|111> + sin(theta)|110>)/sqrt(2).

    Interpolates between the GHZ state (theta=0) and a state that is a
    product across the first-two-versus-third split (theta=pi/2).
    """
    if not 0.0 <= theta <= math.pi / 2:
        raise ValueError(f"theta={theta} outside [0, pi/2]")
    v = np.zeros(8, dtype=complex)
    v[0] = 1.0
    v[7] = math.cos(theta)
    v[6] = math.sin(theta)
    return v / math.sqrt(2)


def positivity_range(total_dim: int, pure: np.ndarray | None = None) -> tuple[float, float]:
    """The p interval on which p|psi><psi| + (1-p) I/D is positive: [-1/(D-1), 1]."""
    if total_dim < 2:
        raise ValueError("total dimension must be at least 2")
    if pure is not None and abs(np.linalg.norm(pure) - 1.0) > ATOL:
        raise ValueError("pure state vector is not normalized")
    return (-1.0 / (total_dim - 1), 1.0)


def werner_family(pure: np.ndarray, p: float, dims) -> DensityMatrix:
    """Isotropic blend p |psi><psi| + (1-p) I/D over factors of dimension ``dims``.

    Raises ``ValueError`` when p leaves the positivity range, since the result
    would not be a state.
    """
    pure = np.asarray(pure, dtype=complex).reshape(-1)
    dims = tuple(int(d) for d in dims)
    total = int(np.prod(dims))
    if pure.size != total:
        raise ValueError(f"vector of length {pure.size} does not match dims {dims}")
    if abs(np.linalg.norm(pure) - 1.0) > ATOL:
        raise ValueError("pure state vector is not normalized")
    lo, hi = positivity_range(total)
    if not lo <= p <= hi:
        raise ValueError(f"p={p} outside positivity range [{lo}, {hi}]")
    matrix = p * np.outer(pure, pure.conj()) + ((1.0 - p) / total) * np.eye(total)
    return DensityMatrix(matrix, dims)


def p_ent(d: int, n: int) -> float:
    """Separability threshold of the GHZ-type isotropic blend: 1/(d^(n-1) + 1)."""
    if d < 2 or n < 2:
        raise ValueError(f"need d >= 2 and n >= 2, got d={d}, n={n}")
    return 1.0 / (d ** (n - 1) + 1)


FAMILIES = ("ghz_werner", "theta_werner", "w_werner", "custom_pure_werner")


@dataclass(frozen=True)
class StateFamilyParams:
    """Selector for one member of the supported state families.

    ``ghz_werner`` takes d and n; ``theta_werner`` takes theta (three qubits);
    ``w_werner`` has no extra knobs (three qubits); ``custom_pure_werner``
    blends a caller-supplied amplitude vector over the given dims.
    """

    family: str
    d: int = 2
    n: int = 2
    p: float = 1.0
    theta: float = 0.0
    amplitudes: tuple[complex, ...] | None = None
    custom_dims: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}, expected one of {FAMILIES}")
        if self.family == "theta_werner" and not 0.0 <= self.theta <= math.pi / 2:
            raise ValueError(f"theta={self.theta} outside [0, pi/2]")
        if self.family == "custom_pure_werner":
            if self.amplitudes is None or self.custom_dims is None:
                raise ValueError("custom_pure_werner needs amplitudes and custom_dims")

    @property
    def dims(self) -> tuple[int, ...]:
        if self.family == "ghz_werner":
            return (self.d,) * self.n
        if self.family == "custom_pure_werner":
            return tuple(self.custom_dims)
        return (2, 2, 2)

    def pure_vector(self) -> np.ndarray:
        if self.family == "ghz_werner":
            return ghz(self.d, self.n)
        if self.family == "theta_werner":
            return psi_theta(self.theta)
        if self.family == "w_werner":
            return w_state()
        v = np.asarray(self.amplitudes, dtype=complex)
        return v / np.linalg.norm(v)

    def build(self) -> DensityMatrix:
        return werner_family(self.pure_vector(), self.p, self.dims)

    def with_p(self, p: float) -> "StateFamilyParams":
        return replace(self, p=float(p))

    def state_columns(self) -> list[tuple[str, float]]:
        """State-parameter (name, value) pairs in report/CSV column order."""
        cols = [("p", self.p)]
        if self.family == "theta_werner":
            cols.append(("theta", self.theta))
        return cols
