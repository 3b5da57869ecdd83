"""Quantitative checks for least squares on the deterministic grids.

The checks quantify three facts that make the grids work:

* Gram entry bounds.  With the classical Chebyshev basis and unit weights on
  a grid with prime modulus M > 2q+1, every off-diagonal Gram entry obeys
  |A[n,k]| <= ((d-1)*sqrt(M) + 1)/2, a direct consequence of Weil's
  exponential-sum bound.  Diagonal entries concentrate near M/2^{z+1} where z
  counts the nonzero components of the index; the printed two-sided target
  M/2^{d+1} +- (d-1)*sqrt(M)/2 applies to indices with all components
  nonzero.  (Halving the full-period sum contributes an exact +1/2 from the
  j=0 row, so for d=1, where the slack is zero, each diagonal entry equals
  M/4 + 1/2 and the two-sided target fails by exactly 1/2; reports say so
  honestly.)

* Spectral gap.  For index sets whose components are all nonzero,
  ||(2^{d+1}/M) A - I||_2 stays below 1/2 once M is large enough, which makes
  the discrete problem uniquely solvable and well conditioned.

* Reference projections and error metrics for convergence studies.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .indexsets import as_indices
from .lstsq import UNIT_WEIGHTS, FitResult, evaluate_fit, gram
from .pointgen import is_prime, mc_sample, point_array, weil_grid
from .polybasis import CHEBYSHEV_CLASSICAL, BasisSpec, basis_matrix

# Floating-point slack on the analytic bounds.
FP_TOL = 1e-9


def _nonzero_count(n) -> int:
    return sum(1 for c in n if c != 0)


@dataclass(frozen=True)
class GramBoundReport:
    """Observed Gram extremes against the analytic bounds for one (M, set)."""

    M: int
    d: int
    q: int
    max_offdiag_abs: float
    offdiag_bound: float
    diag_min: float                 # over the checked index subset; nan if empty
    diag_max: float
    diag_bounds: tuple              # printed all-nonzero target (lo, hi)
    offdiag_pass: bool
    diag_pass: bool
    passed: bool
    restricted_to_nonzero_indices: bool
    n_diag_checked: int
    normalized_offdiag_radius: float  # 2^d ((d-1) sqrt(M) + 1) / M


def check_gram_bounds(M: int, index_set, restrict_nonzero: bool = True) -> GramBoundReport:
    """Build the unit-weight classical-Chebyshev Gram matrix on the grid with
    modulus M and compare its entries against the analytic bounds.

    Requires prime M > 2q+1 where q is the largest index component.  With
    restrict_nonzero=True the diagonal check covers only indices whose
    components are all nonzero, against the printed target
    [M/2^{d+1} - (d-1)sqrt(M)/2, M/2^{d+1} + (d-1)sqrt(M)/2] (vacuous pass if
    no such index exists).  With restrict_nonzero=False every index is
    checked against its own generalized target M/2^{z+1} +- (d-1)sqrt(M)/2,
    z = number of nonzero components.
    """
    indices = as_indices(index_set)
    d = len(indices[0])
    q = max(max(n) for n in indices)
    M = int(M)
    if M <= 2 * q + 1:
        raise ValueError(
            f"modulus M={M} violates the bound hypothesis M > 2q+1 = {2 * q + 1}"
        )
    grid = weil_grid(M, d)
    A = gram(grid, indices, CHEBYSHEV_CLASSICAL, UNIT_WEIGHTS)
    N = len(indices)

    off_bound = ((d - 1) * math.sqrt(M) + 1.0) / 2.0
    if N > 1:
        off = A[~np.eye(N, dtype=bool)]
        max_off = float(np.max(np.abs(off)))
    else:
        max_off = 0.0
    offdiag_pass = max_off <= off_bound + FP_TOL

    radius = (d - 1) * math.sqrt(M) / 2.0
    center = M / 2.0 ** (d + 1)
    diag_bounds = (center - radius, center + radius)

    diag = np.diag(A)
    if restrict_nonzero:
        checked = [i for i, n in enumerate(indices) if _nonzero_count(n) == d]
        vals = diag[checked]
        if len(checked) == 0:
            diag_pass = True
            diag_min = diag_max = float("nan")
        else:
            diag_min, diag_max = float(vals.min()), float(vals.max())
            diag_pass = (diag_min >= diag_bounds[0] - FP_TOL
                         and diag_max <= diag_bounds[1] + FP_TOL)
        n_checked = len(checked)
    else:
        ok = True
        for i, n in enumerate(indices):
            z = _nonzero_count(n)
            c_z = M / 2.0 ** (z + 1)
            if not (c_z - radius - FP_TOL <= diag[i] <= c_z + radius + FP_TOL):
                ok = False
        diag_pass = ok
        diag_min, diag_max = float(diag.min()), float(diag.max())
        n_checked = N

    return GramBoundReport(
        M=M, d=d, q=q,
        max_offdiag_abs=max_off,
        offdiag_bound=off_bound,
        diag_min=diag_min, diag_max=diag_max,
        diag_bounds=diag_bounds,
        offdiag_pass=offdiag_pass,
        diag_pass=diag_pass,
        passed=offdiag_pass and diag_pass,
        restricted_to_nonzero_indices=restrict_nonzero,
        n_diag_checked=n_checked,
        normalized_offdiag_radius=2.0 ** d * ((d - 1) * math.sqrt(M) + 1.0) / M,
    )


def spectral_gap(M: int, index_set) -> float:
    """||(2^{d+1}/M) A - I||_2 for the unit-weight classical-Chebyshev Gram
    matrix on the grid with prime modulus M.

    Every index must have all components nonzero (the normalization 2^{d+1}
    is only consistent there); otherwise ValueError.
    """
    indices = as_indices(index_set)
    d = len(indices[0])
    for n in indices:
        if _nonzero_count(n) != d:
            raise ValueError(
                f"index {n} has a zero component; the 2^(d+1)/M normalization "
                f"requires all components nonzero"
            )
    grid = weil_grid(M, d)
    A = gram(grid, indices, CHEBYSHEV_CLASSICAL, UNIT_WEIGHTS)
    G = (2.0 ** (d + 1) / M) * A - np.eye(len(indices))
    return float(np.linalg.norm(G, 2))


def _quad_rule_1d(family: str, level: int):
    """Level-point Gauss rule for the family's natural probability density."""
    if family == "chebyshev":
        # Gauss-Chebyshev: exact for degree <= 2*level-1 against the arcsine
        # probability density; all weights equal 1/level.
        k = np.arange(1, level + 1)
        nodes = np.cos((2 * k - 1) * np.pi / (2 * level))
        weights = np.full(level, 1.0 / level)
    else:
        nodes, weights = np.polynomial.legendre.leggauss(level)
        weights = weights / 2.0  # uniform probability density on [-1,1]
    return nodes, weights


def reference_projection(target, index_set, basis: BasisSpec, level: int) -> np.ndarray:
    """Coefficients of the continuous orthogonal projection of `target` onto
    span{Phi_n : n in the index set}, via tensor Gauss quadrature under the
    basis family's natural density (arcsine for Chebyshev, uniform for
    Legendre).

    `level` is the number of 1-d quadrature nodes per coordinate and must be
    at least q+1 (q = largest index component) so products of two basis
    polynomials are integrated exactly.
    """
    indices = as_indices(index_set)
    d = len(indices[0])
    q = max(max(n) for n in indices)
    if level < q + 1:
        raise ValueError(
            f"quadrature level {level} too small for order {q}; need >= {q + 1}"
        )
    nodes, weights = _quad_rule_1d(basis.family, level)
    grids = np.meshgrid(*([nodes] * d), indexing="ij")
    pts = np.column_stack([g.ravel() for g in grids])
    wgrids = np.meshgrid(*([weights] * d), indexing="ij")
    w = np.ones(pts.shape[0])
    for g in wgrids:
        w = w * g.ravel()
    fvals = np.asarray(target(pts), dtype=float).reshape(-1)
    B = basis_matrix(basis, indices, pts)
    inner = B.T @ (w * fvals)
    if basis.normalization == "orthonormal":
        norms = np.ones(len(indices))
    else:
        norms = np.array([2.0 ** (-_nonzero_count(n)) for n in indices])
    return inner / norms


@dataclass(frozen=True)
class ErrorReport:
    """Discrete L2 error of a fit on a seeded uniform test sample."""

    d: int
    q: int
    scaling: str | None
    c: float | None
    m: int              # number of collocation points used by the fit
    M: int | None       # grid modulus when the fit used a deterministic grid
    l2_error: float
    n_test: int
    test_measure: str
    seed: int


def l2_error(fit: FitResult, target, n_test: int = 2000, seed: int = 0,
             scaling: str | None = None, c: float | None = None) -> ErrorReport:
    """Root-mean-square error sqrt(sum_i (f - fit)^2 / n_test) on n_test
    uniform test points in [-1,1]^d drawn with the given seed."""
    indices = as_indices(fit.index_set)
    d = len(indices[0])
    test = mc_sample("uniform", n_test, d, seed)
    resid = np.asarray(target(test.points), dtype=float) - evaluate_fit(fit, test)
    err = float(np.sqrt(np.mean(resid * resid)))
    grid = fit.grid
    m = point_array(grid).shape[0]
    M = getattr(grid, "M", None)
    q = getattr(fit.index_set, "q", max(sum(n) for n in indices))
    return ErrorReport(
        d=d, q=int(q), scaling=scaling, c=c, m=m,
        M=int(M) if M is not None else None,
        l2_error=err, n_test=n_test, test_measure="uniform", seed=seed,
    )


def write_gram_reports_csv(reports, path, header_comments=()) -> None:
    """Schema: M,d,q,max_offdiag,offdiag_bound,diag_min,diag_max,pass"""
    with open(path, "w", newline="") as fh:
        for line in header_comments:
            fh.write(f"# {line}\n")
        writer = csv.writer(fh)
        writer.writerow(["M", "d", "q", "max_offdiag", "offdiag_bound",
                         "diag_min", "diag_max", "pass"])
        for r in reports:
            writer.writerow([
                r.M, r.d, r.q,
                repr(r.max_offdiag_abs), repr(r.offdiag_bound),
                repr(r.diag_min), repr(r.diag_max),
                "true" if r.passed else "false",
            ])


def write_error_reports_csv(reports, path, header_comments=()) -> None:
    """Schema: d,q,rule,c,m,M,l2_error"""
    with open(path, "w", newline="") as fh:
        for line in header_comments:
            fh.write(f"# {line}\n")
        writer = csv.writer(fh)
        writer.writerow(["d", "q", "rule", "c", "m", "M", "l2_error"])
        for r in reports:
            writer.writerow([
                r.d, r.q,
                "" if r.scaling is None else r.scaling,
                "" if r.c is None else repr(float(r.c)),
                r.m,
                "" if r.M is None else r.M,
                repr(r.l2_error),
            ])
