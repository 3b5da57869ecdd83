"""Weighted discrete least squares in tensor polynomial bases.

The solver factors the row-scaled design matrix sqrt(w_i) * Phi_{n_j}(y_i)
with an SVD and never forms the normal equations; the Gram matrix
A = D^T diag(w) D is built only as a diagnostic object.  Conditioning is
reported both for the scaled design matrix (cond_D) and for the Gram matrix
(cond_A = cond_D**2), the latter being the quantity usually plotted in
stability studies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .indexsets import as_indices
from .pointgen import point_array
from .polybasis import BasisSpec, basis_matrix

WEIGHT_KINDS = ("unit", "density_ratio")
TARGET_DENSITIES = ("uniform", "chebyshev")

# Relative singular-value cutoff below which the system is reported singular.
RANK_TOL = 1e-12


@dataclass(frozen=True)
class WeightScheme:
    """Row weights for the discrete least-squares functional.

    kind = "unit" uses w_i = 1.  kind = "density_ratio" uses
    w_i = rho(y_i) / rho_c(y_i), the target sampling density over the product
    arcsine density the deterministic grids equidistribute to:

        uniform:   w_i = (pi/2)^d * prod_k sqrt(1 - (y_i^k)^2)
        chebyshev: w_i = 1  (the ratio of the arcsine density to itself)

    Points on the boundary |y^k| = 1 receive weight 0 under the uniform
    target (the ratio's limit), which is permitted.
    """

    kind: str = "unit"
    target_density: str | None = None

    def __post_init__(self):
        if self.kind not in WEIGHT_KINDS:
            raise ValueError(f"unknown weight kind {self.kind!r}; expected one of {WEIGHT_KINDS}")
        if self.kind == "unit":
            if self.target_density is not None:
                raise ValueError("target_density is only meaningful for kind='density_ratio'")
        else:
            if self.target_density is None:
                object.__setattr__(self, "target_density", "uniform")
            if self.target_density not in TARGET_DENSITIES:
                raise ValueError(
                    f"unknown target density {self.target_density!r}; "
                    f"expected one of {TARGET_DENSITIES}"
                )


UNIT_WEIGHTS = WeightScheme("unit")


class SingularSystemError(RuntimeError):
    """Raised when the scaled design matrix is numerically rank deficient.

    Carries the condition report of the offending system (cond_D, cond_A).
    """

    def __init__(self, message, condition_report):
        super().__init__(message)
        self.condition_report = condition_report


@dataclass(frozen=True)
class ConditionReport:
    cond_D: float
    cond_A: float


@dataclass(frozen=True)
class FitResult:
    """Least-squares coefficients plus the provenance needed to reuse them."""

    coefficients: np.ndarray
    index_set: object          # as passed: IndexSet or sequence of tuples
    basis: BasisSpec
    weights: WeightScheme
    residual_norm: float       # sqrt(sum_i w_i (f_i - fit_i)^2)
    condition_report: ConditionReport
    grid: object               # as passed: WeilGrid, SampleSet, or array


def compute_weights(scheme: WeightScheme, pts) -> np.ndarray:
    """Evaluate the weight vector on a point set (all |y| <= 1 required)."""
    arr = point_array(pts)
    if np.any(np.abs(arr) > 1.0):
        raise ValueError("density-ratio weights are defined only on [-1,1]^d")
    n, d = arr.shape
    if scheme.kind == "unit" or scheme.target_density == "chebyshev":
        return np.ones(n)
    return (math.pi / 2.0) ** d * np.prod(np.sqrt(1.0 - arr * arr), axis=1)


def _scaled_design(pts, index_set, basis, weights):
    D = basis_matrix(basis, index_set, pts)
    w = compute_weights(weights, pts)
    return D, w, D * np.sqrt(w)[:, None]


def solve(pts, fvals, index_set, basis: BasisSpec,
          weights: WeightScheme = UNIT_WEIGHTS) -> FitResult:
    """Solve the weighted discrete least-squares problem

        min_c sum_i w_i (f(y_i) - sum_j c_j Phi_{n_j}(y_i))^2 .

    Parameters
    ----------
    pts : WeilGrid, SampleSet, or (npts, d) array
    fvals : length-npts values of the target at the points
    index_set : IndexSet or sequence of multi-index tuples (column order)
    basis, weights : basis convention and row-weight scheme

    Returns
    -------
    FitResult.  Raises ValueError if npts < N (under-determined) and
    SingularSystemError if the scaled design matrix has relative singular
    values below 1e-12.
    """
    arr = point_array(pts)
    indices = as_indices(index_set)
    f = np.asarray(fvals, dtype=float).reshape(-1)
    if f.shape[0] != arr.shape[0]:
        raise ValueError(
            f"got {arr.shape[0]} points but {f.shape[0]} function values"
        )
    N = len(indices)
    if arr.shape[0] < N:
        raise ValueError(
            f"under-determined system: {arr.shape[0]} points for {N} basis functions"
        )
    D, w, Dw = _scaled_design(arr, indices, basis, weights)
    bw = f * np.sqrt(w)
    U, s, Vt = np.linalg.svd(Dw, full_matrices=False)
    if s[-1] > 0.0:
        cond_D = float(s[0] / s[-1])
    else:
        cond_D = float("inf")
    report = ConditionReport(cond_D, cond_D * cond_D)
    if not np.isfinite(cond_D) or s[-1] <= RANK_TOL * s[0]:
        raise SingularSystemError(
            f"rank-deficient least-squares system (cond_D = {cond_D:.3e})",
            report,
        )
    coeffs = Vt.T @ ((U.T @ bw) / s)
    residual = float(np.linalg.norm(bw - Dw @ coeffs))
    return FitResult(coeffs, index_set, basis, weights, residual, report, pts)


def evaluate_fit(fit: FitResult, pts) -> np.ndarray:
    """Evaluate the fitted polynomial at new points."""
    D = basis_matrix(fit.basis, fit.index_set, pts)
    return D @ fit.coefficients


def gram(pts, index_set, basis: BasisSpec,
         weights: WeightScheme = UNIT_WEIGHTS) -> np.ndarray:
    """Weighted Gram matrix A[n,k] = sum_i w_i Phi_n(y_i) Phi_k(y_i).

    Built from the scaled design matrix as B^T B with B = diag(sqrt(w)) D and
    symmetrized exactly; positive semidefinite by construction.
    """
    _, _, Dw = _scaled_design(pts, index_set, basis, weights)
    A = Dw.T @ Dw
    return (A + A.T) / 2.0
