"""Entanglement witnessing: spectra of partially scaled states, the negativity
style measure sum|eps| - 1, its maximization over scaling parameters, and
closed-form spectra for the two reference families.

A negative eigenvalue after partial scaling certifies entanglement; its
absence certifies nothing, since the criterion is necessary only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .linalg import DensityMatrix, eig_hermitian
from .maps import PartialScalingSpec, partial_scaling

# Minimum eigenvalue below -WITNESS_TOL counts as a detection; anything
# closer to zero is treated as round-off at a threshold.
WITNESS_TOL = 1e-9


@dataclass(frozen=True)
class WitnessReport:
    """Spectrum of one partially scaled state and the verdict drawn from it.

    ``negativity_m`` is sum|eps| - 1, zeroed whenever no eigenvalue clears the
    detection tolerance so that it is exactly 0 on undetected states.
    ``spec_in_range`` flags scaling parameters outside [-1, 1].
    """

    spec: PartialScalingSpec
    eigenvalues: np.ndarray
    min_eigenvalue: float
    negativity_m: float
    entangled_witnessed: bool
    spec_in_range: bool


class MeasureResult(NamedTuple):
    M: float
    argmax_spec: PartialScalingSpec
    grid_resolution: int


class WernerThreshold(NamedTuple):
    p_threshold: float
    detects: bool


class BipartitionVerdict(NamedTuple):
    witnessed: bool
    min_eigenvalue: float
    spec: PartialScalingSpec


def witness(rho: DensityMatrix, spec, tol: float = WITNESS_TOL) -> WitnessReport:
    """Eigenvalues of the partially scaled state, with detection verdict."""
    if not isinstance(spec, PartialScalingSpec):
        spec = PartialScalingSpec(spec)
    eigs = eig_hermitian(partial_scaling(rho, spec))
    min_eig = float(eigs[0])
    detected = min_eig < -tol
    m = max(0.0, float(np.sum(np.abs(eigs)) - 1.0)) if detected else 0.0
    return WitnessReport(
        spec=spec,
        eigenvalues=eigs,
        min_eigenvalue=min_eig,
        negativity_m=m,
        entangled_witnessed=detected,
        spec_in_range=spec.in_range,
    )


def _measure_specs(n_factors: int, grid: int) -> list[tuple[float, ...]]:
    """Candidate specs: identity on factor 1, grid plus vertices on the rest."""
    k = n_factors - 1
    values = set()
    for combo in itertools.product(np.linspace(-1.0, 1.0, grid), repeat=k):
        values.add((1.0,) + tuple(float(v) for v in combo))
    for combo in itertools.product((-1.0, 1.0), repeat=k):
        values.add((1.0,) + combo)
    return sorted(values)


def measure_M(rho: DensityMatrix, grid_points_per_axis: int = 21, tol: float = WITNESS_TOL) -> MeasureResult:
    """Maximum of the negativity over scaling parameters on the last n-1 factors.

    The first factor keeps the identity map; the remaining parameters run over
    a uniform grid on [-1, 1] per axis, always augmented with every vertex
    combination.  The negativity is piecewise linear in each parameter, so the
    maximum sits at a vertex and the vertices alone already achieve it; the
    grid exists to expose the interior landscape.  Ties keep the
    lexicographically smallest spec, making the result independent of
    evaluation order.
    """
    if grid_points_per_axis < 2:
        raise ValueError("grid_points_per_axis must be at least 2")
    if len(rho.dims) < 2:
        raise ValueError("need at least two tensor factors")
    best_m = -1.0
    best_spec: tuple[float, ...] | None = None
    for lambdas in _measure_specs(len(rho.dims), grid_points_per_axis):
        m = witness(rho, lambdas, tol=tol).negativity_m
        if m > best_m:
            best_m = m
            best_spec = lambdas
    return MeasureResult(best_m, PartialScalingSpec(best_spec), grid_points_per_axis)


def analytic_werner_eigs(p: float, lam: float) -> np.ndarray:
    """Closed-form spectrum of the scaled two-qubit isotropic blend, ascending.

    The four values are (1 - p lam)/4 twice, (1 - 2p + p lam)/4 and
    (1 + 2p + p lam)/4.
    """
    return np.sort(
        [
            (1.0 - p * lam) / 4.0,
            (1.0 - p * lam) / 4.0,
            (1.0 - 2.0 * p + p * lam) / 4.0,
            (1.0 + 2.0 * p + p * lam) / 4.0,
        ]
    )


def analytic_ghz3_eigs(p: float, lam: float, mu: float) -> np.ndarray:
    """Closed-form spectrum of the scaled three-qubit GHZ blend, ascending."""
    base = (1.0 - p) / 8.0
    cross = [
        (1.0 + lam) * (1.0 + mu),
        (1.0 + lam) * (1.0 - mu),
        (1.0 - lam) * (1.0 + mu),
        (1.0 - lam) * (1.0 - mu),
    ]
    eigs = [p / 2.0 + base + p / 8.0 * cross[0], p / 2.0 + base - p / 8.0 * cross[0]]
    for c in cross[1:]:
        eigs.append(base + p / 8.0 * c)
        eigs.append(base - p / 8.0 * c)
    return np.sort(eigs)


def detection_threshold_werner(lam: float) -> WernerThreshold:
    """Smallest p at which scaling parameter lam detects the two-qubit blend.

    Returns 1/(2 - lam) with ``detects``; at lam = 1 the threshold degenerates
    to the boundary p = 1 and nothing inside the family is detected, which the
    flag records instead of raising.
    """
    if not -1.0 <= lam <= 1.0:
        raise ValueError(f"lam={lam} outside [-1, 1]")
    if lam == 1.0:
        return WernerThreshold(1.0, False)
    return WernerThreshold(1.0 / (2.0 - lam), True)


def _scan_specs(rho: DensityMatrix, specs, tol: float):
    best: tuple[float, tuple[float, ...]] | None = None
    for lambdas in specs:
        min_eig = float(eig_hermitian(partial_scaling(rho, PartialScalingSpec(lambdas)))[0])
        if best is None or min_eig < best[0]:
            best = (min_eig, lambdas)
    min_eig, lambdas = best
    return BipartitionVerdict(min_eig < -tol, min_eig, PartialScalingSpec(lambdas))


def classify_bipartitions(
    rho: DensityMatrix, grid: int = 11, tol: float = WITNESS_TOL
) -> dict[str, BipartitionVerdict]:
    """Witness verdicts per bipartition of a three-factor state.

    The scans and what a detection on each means:

    - ``S3|S12``: specs (1, 1, lam), scaling on the third factor only.
    - ``S2|S31``: specs (1, lam, 1), scaling on the second factor only.
    - ``S1|S23``: the single spec (1, -1, -1), joint transposition of the
      last two factors.
    - ``tripartite``: the full grid over all three parameters plus every
      vertex.  The all-(-1) vertex is still evaluated but never grounds a
      claim, since it is the full transpose and preserves the spectrum.

    A ``witnessed`` verdict certifies entanglement across that split;
    not-witnessed never asserts separability.
    """
    if len(rho.dims) != 3:
        raise ValueError(f"expected a three-factor state, got dims {rho.dims}")
    if grid < 2:
        raise ValueError("grid must be at least 2")
    line = [float(v) for v in np.linspace(-1.0, 1.0, grid)]
    out = {
        "S1|S23": _scan_specs(rho, [(1.0, -1.0, -1.0)], tol),
        "S2|S31": _scan_specs(rho, sorted((1.0, v, 1.0) for v in line), tol),
        "S3|S12": _scan_specs(rho, sorted((1.0, 1.0, v) for v in line), tol),
    }
    tri = set(itertools.product(line, repeat=3))
    tri.update(itertools.product((-1.0, 1.0), repeat=3))
    tri.discard((-1.0, -1.0, -1.0))
    out["tripartite"] = _scan_specs(rho, sorted(tri), tol)
    return out
