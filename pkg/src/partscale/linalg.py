"""Dense complex linear algebra for small multi-qudit density matrices.

Matrices are plain ``numpy.ndarray`` objects of dtype complex128, stored
row-major with the first tensor factor owning the most significant index.
Eigenvalues come from a self-contained cyclic Jacobi solver; an independent
characteristic-polynomial solver is provided for cross-checking it.
"""

from __future__ import annotations

import math

import numpy as np

# Absolute tolerance for Hermiticity / trace / positivity checks.
ATOL = 1e-9
# Jacobi convergence: off-diagonal Frobenius norm below this value.
JACOBI_OFF_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product; the first factor owns the most significant index."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a).conj().T


def transpose(a: np.ndarray) -> np.ndarray:
    """Plain transpose (no conjugation)."""
    return np.asarray(a).T


def trace(a: np.ndarray) -> complex:
    """Sum of diagonal entries."""
    return complex(np.trace(np.asarray(a)))


def allclose(a: np.ndarray, b: np.ndarray, tol: float = ATOL) -> bool:
    """Entrywise comparison with an absolute tolerance."""
    return bool(np.all(np.abs(np.asarray(a) - np.asarray(b)) <= tol))


def is_hermitian(a: np.ndarray, tol: float = ATOL) -> bool:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    if not np.all(np.isfinite(a.view(float))):
        return False
    return bool(np.max(np.abs(a - a.conj().T)) <= tol)


def partial_transpose_subset(
    matrix: np.ndarray, dims: tuple[int, ...] | list[int], factors
) -> np.ndarray:
    """Transpose the index pairs of the given tensor factors only.

    ``dims`` lists the local dimension of every factor; ``factors`` is an
    iterable of factor indices to transpose.  Transposing every factor equals
    the full transpose; transposing none returns a copy.
    """
    dims = tuple(int(d) for d in dims)
    a = np.asarray(matrix, dtype=complex)
    n = len(dims)
    side = int(np.prod(dims))
    if a.shape != (side, side):
        raise ValueError(f"matrix of side {a.shape[0]} does not match dims {dims}")
    factors = sorted(set(int(f) for f in factors))
    if factors and not (0 <= factors[0] and factors[-1] < n):
        raise ValueError(f"factor out of range for {n} factors: {factors}")
    axes = list(range(2 * n))
    for f in factors:
        axes[f], axes[n + f] = axes[n + f], axes[f]
    return a.reshape(dims + dims).transpose(axes).reshape(side, side).copy()


def _offdiag_sq(a: np.ndarray) -> float:
    m = np.abs(a) ** 2
    np.fill_diagonal(m, 0.0)
    return float(np.sum(m))


def eig_hermitian(
    h: np.ndarray,
    tol: float = ATOL,
    off_tol: float = JACOBI_OFF_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, ascending, by cyclic Jacobi rotations.

    Each rotation is a unitary acting in a coordinate plane, chosen to zero
    one off-diagonal pair.  Sweeps repeat until the off-diagonal Frobenius
    norm drops below ``off_tol``.  Raises ``ValueError`` for input that is not
    Hermitian within ``tol`` and ``ArithmeticError`` if the sweep cap is hit.
    """
    a = np.array(h, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.all(np.isfinite(a.view(float))):
        raise ValueError("matrix has non-finite entries")
    if np.max(np.abs(a - a.conj().T)) > tol:
        raise ValueError("matrix is not Hermitian within tolerance")
    a += a.conj().T
    a *= 0.5
    n = a.shape[0]
    if n == 1:
        return np.array([a[0, 0].real])
    off_sq_tol = off_tol * off_tol
    for _ in range(max_sweeps):
        if _offdiag_sq(a) < off_sq_tol:
            return np.sort(np.diag(a).real)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = complex(a[p, q])
                mag = abs(apq)
                if mag == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                # Negligible next to the diagonal: rotating would be pure
                # round-off, and a huge tau would overflow below.
                if mag <= 1e-18 * (abs(app) + abs(aqq)) or mag < 1e-300:
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                phase = apq / mag
                tau = (aqq - app) / (2.0 * mag)
                if abs(tau) > 1e12:
                    t = 1.0 / (2.0 * tau)
                elif tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                sp = (t * c) * phase
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - sp * row_q
                a[q, :] = np.conj(sp) * row_p + c * row_q
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - np.conj(sp) * col_q
                a[:, q] = sp * col_p + c * col_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    if _offdiag_sq(a) < off_sq_tol:
        return np.sort(np.diag(a).real)
    raise ArithmeticError(f"Jacobi sweep cap ({max_sweeps}) hit before convergence")


def charpoly_coefficients(h: np.ndarray) -> np.ndarray:
    """Coefficients of det(xI - A), leading term first, via Faddeev-LeVerrier."""
    a = np.asarray(h, dtype=complex)
    n = a.shape[0]
    coeffs = np.zeros(n + 1)
    coeffs[0] = 1.0
    m = np.eye(n, dtype=complex)
    for k in range(1, n + 1):
        am = a @ m
        c = -np.trace(am).real / k
        coeffs[k] = c
        m = am + c * np.eye(n)
    return coeffs


def eig_hermitian_charpoly(h: np.ndarray, tol: float = ATOL) -> np.ndarray:
    """Independent eigenvalue solver: characteristic-polynomial companion roots.

    Shares no code path with :func:`eig_hermitian`; used to cross-check it.
    Near-degenerate spectra may split at the usual multiple-root sensitivity,
    so spectral sums stay accurate while individual values may not.
    """
    a = np.asarray(h, dtype=complex)
    if not is_hermitian(a, tol):
        raise ValueError("matrix is not Hermitian within tolerance")
    roots = np.roots(charpoly_coefficients(a))
    return np.sort(roots.real)


class DensityMatrix:
    """A Hermitian unit-trace matrix together with its tensor-factor dimensions.

    The default constructor enforces positive semidefiniteness; use
    :meth:`relaxed` to wrap Hermitian unit-trace matrices with negative
    eigenvalues, such as the outputs of non-completely-positive maps.
    Instances are immutable.
    """

    __slots__ = ("_matrix", "_dims")

    def __init__(self, matrix: np.ndarray, dims, *, tol: float = ATOL, _check_psd: bool = True):
        m = np.array(matrix, dtype=complex)
        dims = tuple(int(d) for d in dims)
        if any(d < 1 for d in dims):
            raise ValueError(f"dims must be positive, got {dims}")
        side = int(np.prod(dims))
        if m.ndim != 2 or m.shape != (side, side):
            raise ValueError(f"matrix shape {m.shape} does not match dims {dims}")
        if not is_hermitian(m, tol):
            raise ValueError("matrix is not Hermitian within tolerance")
        if abs(np.trace(m) - 1.0) > tol:
            raise ValueError(f"trace is {np.trace(m)}, expected 1")
        if _check_psd:
            low = float(eig_hermitian(m, tol=tol)[0])
            if low < -tol:
                raise ValueError(f"matrix is not positive semidefinite (min eigenvalue {low})")
        m.setflags(write=False)
        self._matrix = m
        self._dims = dims

    @classmethod
    def relaxed(cls, matrix: np.ndarray, dims, *, tol: float = ATOL) -> "DensityMatrix":
        """Wrap a Hermitian unit-trace matrix without checking positivity."""
        return cls(matrix, dims, tol=tol, _check_psd=False)

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dims(self) -> tuple[int, ...]:
        return self._dims

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    def __repr__(self) -> str:
        return f"DensityMatrix(dim={self.dim}, dims={self._dims})"


def partial_transpose(rho: DensityMatrix, factor: int) -> np.ndarray:
    """Transpose the chosen factor's index pair; Hermiticity and trace survive."""
    if not (0 <= factor < len(rho.dims)):
        raise ValueError(f"factor {factor} out of range for dims {rho.dims}")
    return partial_transpose_subset(rho.matrix, rho.dims, [factor])
