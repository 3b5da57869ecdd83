"""Tensor-product Chebyshev and Legendre polynomial bases.

Two normalizations are supported:

* "classical"   -- Chebyshev only: T_n(y) = cos(n*arccos(y)), so T_n(1) = 1.
* "orthonormal" -- unit norm under the family's natural probability density
                   (arcsine for Chebyshev, uniform on [-1,1] for Legendre):
                   Chebyshev: 1 for n=0, sqrt(2)*cos(n*arccos(y)) for n>=1;
                   Legendre:  sqrt(2n+1)*P_n(y).

Chebyshev values are always evaluated through the cosine representation, not
a recurrence, so the classical values are exact cosines of exact multiples of
arccos(y).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .indexsets import as_indices
from .pointgen import point_array

FAMILIES = ("chebyshev", "legendre")
NORMALIZATIONS = ("classical", "orthonormal")


@dataclass(frozen=True)
class BasisSpec:
    """A (family, normalization) pair; legendre+classical is rejected because
    the classical convention here is specific to the cosine form of Chebyshev."""

    family: str
    normalization: str

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.normalization not in NORMALIZATIONS:
            raise ValueError(
                f"unknown normalization {self.normalization!r}; "
                f"expected one of {NORMALIZATIONS}"
            )
        if self.family == "legendre" and self.normalization == "classical":
            raise ValueError(
                "legendre supports only the 'orthonormal' normalization"
            )


CHEBYSHEV_CLASSICAL = BasisSpec("chebyshev", "classical")
CHEBYSHEV_ORTHONORMAL = BasisSpec("chebyshev", "orthonormal")
LEGENDRE_ORTHONORMAL = BasisSpec("legendre", "orthonormal")


def _domain_check(y):
    if np.any(np.abs(y) > 1.0):
        bad = float(np.max(np.abs(y)))
        raise ValueError(f"evaluation point outside [-1,1]: max |y| = {bad}")


def _legendre_column(y, n):
    # Three-term recurrence (k+1) P_{k+1} = (2k+1) y P_k - k P_{k-1}.
    p_prev = np.ones_like(y)
    if n == 0:
        return p_prev
    p = y.copy()
    for k in range(1, n):
        p, p_prev = ((2 * k + 1) * y * p - k * p_prev) / (k + 1), p
    return p


def eval_1d(family: str, normalization: str, n: int, y):
    """Evaluate the 1-d basis function of order n at y (scalar or array).

    Raises ValueError for |y| > 1, n < 0, or an invalid (family,
    normalization) pair.
    """
    spec = BasisSpec(family, normalization)  # validates the pair
    if n < 0:
        raise ValueError(f"order n must be >= 0, got {n}")
    arr = np.asarray(y, dtype=float)
    _domain_check(arr)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if spec.family == "chebyshev":
        vals = np.cos(n * np.arccos(arr))
        if spec.normalization == "orthonormal" and n >= 1:
            vals = np.sqrt(2.0) * vals
    else:
        vals = np.sqrt(2.0 * n + 1.0) * _legendre_column(arr, n)
    return float(vals[0]) if scalar else vals


def eval_tensor(spec: BasisSpec, n, y):
    """Evaluate the tensor basis function prod_i phi_{n_i}(y^i).

    y is a single point (length-d) or an (npts, d) array.  The result is the
    coordinatewise product of eval_1d values, multiplied left to right.
    """
    n = tuple(int(c) for c in n)
    arr = np.asarray(y, dtype=float)
    single = arr.ndim == 1
    pts = arr[None, :] if single else point_array(arr)
    if pts.shape[1] != len(n):
        raise ValueError(f"point dimension {pts.shape[1]} != index dimension {len(n)}")
    acc = eval_1d(spec.family, spec.normalization, n[0], pts[:, 0])
    for i in range(1, len(n)):
        acc = acc * eval_1d(spec.family, spec.normalization, n[i], pts[:, i])
    return float(acc[0]) if single else acc


def _table_1d(spec, y, qmax):
    """(npts, qmax+1) table of 1-d values; column n reproduces eval_1d exactly."""
    npts = y.shape[0]
    table = np.empty((npts, qmax + 1))
    if spec.family == "chebyshev":
        theta = np.arccos(y)
        for n in range(qmax + 1):
            col = np.cos(n * theta)
            if spec.normalization == "orthonormal" and n >= 1:
                col = np.sqrt(2.0) * col
            table[:, n] = col
    else:
        for n in range(qmax + 1):
            table[:, n] = np.sqrt(2.0 * n + 1.0) * _legendre_column(y, n)
    return table


def basis_matrix(spec: BasisSpec, index_set, pts) -> np.ndarray:
    """Design matrix D with D[i, j] = Phi_{n_j}(y_i).

    Columns follow the order of `index_set` (an IndexSet or a sequence of
    multi-index tuples).  Each entry equals eval_tensor(spec, n_j, y_i) to the
    last bit: the same 1-d values are multiplied in the same coordinate order.
    """
    indices = as_indices(index_set)
    arr = point_array(pts)
    if arr.shape[0] == 0:
        raise ValueError("empty point set")
    d = len(indices[0])
    if arr.shape[1] != d:
        raise ValueError(f"point dimension {arr.shape[1]} != index dimension {d}")
    _domain_check(arr)
    qmax = max(max(n) for n in indices)
    tables = [_table_1d(spec, arr[:, i], qmax) for i in range(d)]
    D = np.empty((arr.shape[0], len(indices)))
    for j, n in enumerate(indices):
        col = tables[0][:, n[0]].copy()
        for i in range(1, d):
            col *= tables[i][:, n[i]]
        D[:, j] = col
    return D
