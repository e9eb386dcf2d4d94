"""Scaling transforms for qudits, their factor-wise application, and CP tests.

The single-factor scaling transform with parameter ``lam`` is the convex
blend ((1+lam)/2) * A + ((1-lam)/2) * A^T: the identity at lam=1, the
transpose (time reversal) at lam=-1.  It is positive but not completely
positive for every lam < 1, which is what makes it useful as an
entanglement witness.  Factor-wise application with one parameter per
tensor factor is the multi-parameter witness family; the anisotropic qubit
map contracts the three Bloch components independently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .linalg import (
    ATOL,
    DensityMatrix,
    eig_hermitian,
    is_hermitian,
    partial_transpose_subset,
)

_PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@dataclass(frozen=True)
class PartialScalingSpec:
    """One scaling parameter per tensor factor; 1 means identity on that factor.

    Values outside [-1, 1] are accepted (useful for exploration) but flagged
    through :attr:`in_range`, which witness reports carry forward.
    """

    lambdas: tuple[float, ...]

    def __init__(self, lambdas):
        vals = tuple(float(v) for v in lambdas)
        if not vals:
            raise ValueError("spec needs at least one factor")
        if not all(np.isfinite(vals)):
            raise ValueError(f"non-finite scaling parameters: {vals}")
        object.__setattr__(self, "lambdas", vals)

    @property
    def in_range(self) -> bool:
        return all(-1.0 <= v <= 1.0 for v in self.lambdas)

    def __len__(self) -> int:
        return len(self.lambdas)

    def __iter__(self):
        return iter(self.lambdas)


@dataclass(frozen=True)
class ScalingMap:
    """Closed descriptor of the single-factor scaling transform."""

    lam: float

    def apply(self, a: np.ndarray) -> np.ndarray:
        return apply_scaling(a, self.lam)


@dataclass(frozen=True)
class QubitAnisotropy:
    """Independent contraction factors for the three Bloch components."""

    mu1: float
    mu2: float
    mu3: float

    def __post_init__(self):
        for name in ("mu1", "mu2", "mu3"):
            v = getattr(self, name)
            if not -1.0 <= v <= 1.0:
                raise ValueError(f"{name}={v} outside [-1, 1]")

    def pauli_weights(self) -> np.ndarray:
        """Weights w_k of the equivalent mixture sum_k w_k sigma_k rho sigma_k.

        All four weights are nonnegative exactly when (mu1, mu2, mu3) lies in
        the tetrahedron with vertices (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1),
        which is also the complete-positivity region.
        """
        m1, m2, m3 = self.mu1, self.mu2, self.mu3
        return np.array(
            [1 + m1 + m2 + m3, 1 + m1 - m2 - m3, 1 - m1 + m2 - m3, 1 - m1 - m2 + m3]
        ) / 4.0

    def apply(self, a: np.ndarray) -> np.ndarray:
        return _anisotropic_linear(a, self)


def apply_scaling(a: np.ndarray, lam: float) -> np.ndarray:
    """Blend a matrix with its transpose: ((1+lam)/2) A + ((1-lam)/2) A^T."""
    a = np.asarray(a, dtype=complex)
    return ((1.0 + lam) / 2.0) * a + ((1.0 - lam) / 2.0) * a.T


def partial_scaling(rho: DensityMatrix, spec: PartialScalingSpec) -> np.ndarray:
    """Apply the scaling transform factor-wise with one parameter per factor.

    Expands the product of per-factor blends into a sum over subsets of
    transposed factors, with weight prod_i (1+lam_i)/2 or (1-lam_i)/2 per
    factor.  Zero-weight subsets are skipped, so lam_i = +/-1 contributes a
    single exact term (identity or transposition on that factor).
    """
    if not isinstance(spec, PartialScalingSpec):
        spec = PartialScalingSpec(spec)
    dims = rho.dims
    if len(spec) != len(dims):
        raise ValueError(f"spec has {len(spec)} parameters for {len(dims)} factors")
    keep = [(1.0 + lam) / 2.0 for lam in spec]
    swap = [(1.0 - lam) / 2.0 for lam in spec]
    out = np.zeros_like(rho.matrix)
    for choice in itertools.product((0, 1), repeat=len(dims)):
        w = 1.0
        for i, c in enumerate(choice):
            w *= swap[i] if c else keep[i]
        if w == 0.0:
            continue
        subset = [i for i, c in enumerate(choice) if c]
        term = partial_transpose_subset(rho.matrix, dims, subset)
        if w == 1.0:
            out += term
        else:
            out += w * term
    return out


def choi_matrix(d: int, map_desc) -> np.ndarray:
    """Block matrix of a single-factor map's action on the matrix units.

    Entry block (i, j) of the d^2 x d^2 result is map(|i><j|).  The map is
    completely positive exactly when this matrix is positive semidefinite.
    ``map_desc`` is a :class:`ScalingMap` (any d) or :class:`QubitAnisotropy`
    (d = 2 only).
    """
    d = int(d)
    if d < 2:
        raise ValueError("local dimension must be at least 2")
    if isinstance(map_desc, QubitAnisotropy) and d != 2:
        raise ValueError("anisotropic map is defined for qubits only")
    if not hasattr(map_desc, "apply"):
        raise TypeError(f"not a map descriptor: {map_desc!r}")
    out = np.zeros((d * d, d * d), dtype=complex)
    unit = np.zeros((d, d), dtype=complex)
    for i in range(d):
        for j in range(d):
            unit[:] = 0.0
            unit[i, j] = 1.0
            out[i * d : (i + 1) * d, j * d : (j + 1) * d] = map_desc.apply(unit)
    return out


class CPVerdict(NamedTuple):
    is_cp: bool
    min_eigenvalue: float


def is_completely_positive(choi: np.ndarray, tol: float = ATOL) -> CPVerdict:
    """Positivity test on a Choi matrix, with the minimum eigenvalue attached."""
    if not is_hermitian(choi, tol):
        raise ValueError("Choi matrix is not Hermitian within tolerance")
    low = float(eig_hermitian(choi, tol=tol)[0])
    return CPVerdict(low >= -tol, low)


def _anisotropic_linear(a: np.ndarray, mu: QubitAnisotropy) -> np.ndarray:
    """Linear extension of the Bloch contraction to arbitrary 2x2 matrices."""
    a = np.asarray(a, dtype=complex)
    t = (a[0, 0] + a[1, 1]) / 2.0
    zp = (a[0, 0] - a[1, 1]) / 2.0
    xp = (a[0, 1] + a[1, 0]) / 2.0
    yp = (a[1, 0] - a[0, 1]) / 2j
    return np.array(
        [
            [t + mu.mu3 * zp, mu.mu1 * xp - 1j * mu.mu2 * yp],
            [mu.mu1 * xp + 1j * mu.mu2 * yp, t - mu.mu3 * zp],
        ]
    )


def anisotropic_pauli_map(rho_qubit: np.ndarray, mu: QubitAnisotropy) -> np.ndarray:
    """Contract a qubit state's Bloch vector (x, y, z) to (mu1 x, mu2 y, mu3 z).

    Maps the Bloch ball into itself for all parameters in [-1, 1], so the
    output is again a valid qubit state; the map is nevertheless not
    completely positive outside the tetrahedron of :meth:`QubitAnisotropy.pauli_weights`.
    """
    a = np.asarray(rho_qubit, dtype=complex)
    if a.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {a.shape}")
    if not is_hermitian(a):
        raise ValueError("qubit state is not Hermitian within tolerance")
    if abs(np.trace(a) - 1.0) > ATOL:
        raise ValueError("qubit state does not have unit trace")
    return _anisotropic_linear(a, mu)


def partial_anisotropic(rho: DensityMatrix, factor: int, mu: QubitAnisotropy) -> np.ndarray:
    """Apply the anisotropic qubit map on one factor of a composite state.

    Implemented as the weighted Pauli mixture sum_k w_k S_k rho S_k with S_k
    the Pauli operator embedded on the chosen factor; weights may be negative
    outside the complete-positivity tetrahedron, which is the point.
    """
    dims = rho.dims
    if not (0 <= factor < len(dims)):
        raise ValueError(f"factor {factor} out of range for dims {dims}")
    if dims[factor] != 2:
        raise ValueError(f"factor {factor} has dimension {dims[factor]}, expected 2")
    left = int(np.prod(dims[:factor], dtype=int)) if factor else 1
    right = int(np.prod(dims[factor + 1 :], dtype=int)) if factor + 1 < len(dims) else 1
    out = np.zeros_like(rho.matrix)
    for w, sigma in zip(mu.pauli_weights(), _PAULI):
        if w == 0.0:
            continue
        op = np.kron(np.kron(np.eye(left, dtype=complex), sigma), np.eye(right, dtype=complex))
        out += w * (op @ rho.matrix @ op.conj().T)
    return out
