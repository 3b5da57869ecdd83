"""Spectral convergence of least-squares fits on the deterministic grid.

Fit f(y) = exp(-(c1*y1 + c2*y2)) in total-degree Chebyshev spaces of growing
order.  The collocation grid is deterministic (no sampling luck involved),
its size scales quadratically in the space dimension N, and the error is
measured as an RMS over 2000 seeded uniform test points.
"""

from weilfit import (CHEBYSHEV_ORTHONORMAL, UNIT_WEIGHTS, StudyConfig,
                     l2_error, realize_cell, solve, weil_grid)
from weilfit.targets import coefficients, make

cfg = StudyConfig(d=2, scaling="quadratic", c=0.5)
coeffs = coefficients("expsum", 2)  # frozen draw, reproducible run to run
f = make("expsum", coeffs)
print(f"target: exp(-(c . y)) with c = {coeffs}\n")

print(f"{'q':>3} {'N':>5} {'m':>7} {'M':>7} {'cond(A)':>12} {'rms error':>12}")
prev = None
for q in range(2, 11):
    index_set, N, m, M = realize_cell(cfg, q)
    grid = weil_grid(M, cfg.d)
    fit = solve(grid, f(grid.points), index_set, CHEBYSHEV_ORTHONORMAL,
                UNIT_WEIGHTS)
    err = l2_error(fit, f).l2_error
    ratio = "" if prev is None else f"  (x {err / prev:.3f})"
    print(f"{q:>3} {N:>5} {m:>7} {M:>7} {fit.condition_report.cond_A:>12.4f} "
          f"{err:>12.4e}{ratio}")
    prev = err

print("\nEach extra order multiplies the error by roughly a constant factor")
print("below one -- geometric (spectral) convergence, while cond(A) stays")
print("flat because the quadratically-scaled grid keeps the normal equations")
print("close to a multiple of the identity.")
