# Multi-index sets and tensor polynomial bases.
#
# Approximation spaces are spanned by products
#     Phi_n(y) = phi_{n_1}(y^1) * ... * phi_{n_d}(y^d)
# over a finite set of multi-indices n.  Two stock sets are built in:
# tensor-product TP(q) (every component <= q) and total-degree TD(q)
# (component sum <= q).

import numpy as np

from weilfit import (CHEBYSHEV_ORTHONORMAL, LEGENDRE_ORTHONORMAL,
                     basis_matrix, build_index_set, eval_tensor,
                     td_cardinality, tp_cardinality)

print("How fast do the spaces grow?")
print(f"  {'q':>3} {'TP d=2':>8} {'TD d=2':>8} {'TP d=4':>10} {'TD d=4':>8}")
for q in (1, 2, 4, 8, 16):
    print(f"  {q:>3} {tp_cardinality(q, 2):>8} {td_cardinality(q, 2):>8} "
          f"{tp_cardinality(q, 4):>10} {td_cardinality(q, 4):>8}")
print("TD grows polynomially where TP explodes -- the reason total-degree")
print("spaces are the default for d > 1.\n")

idx = build_index_set("TD", 3, 2)
print(f"TD(q=3, d=2) holds {idx.N} indices, ordered by total order first:")
print(" ", " ".join(str(n) for n in idx))

# Indices are plain tuples; the basis evaluator takes one index and a batch
# of points.
pts = np.array([[0.5, -0.25], [0.0, 1.0]])
print("\nT_2(y1) * T_1(y2) at two points (orthonormal scaling):")
print(" ", eval_tensor(CHEBYSHEV_ORTHONORMAL, (2, 1), pts))

# ---------------------------------------------------------------------------
# Orthonormality under the matching measure
#
# The orthonormal Chebyshev family integrates to the identity against the
# arcsine measure; orthonormal Legendre against the uniform measure.  A
# tensor Gauss rule makes that visible to machine precision.

L = 20
cheb_nodes = np.cos((2 * np.arange(1, L + 1) - 1) * np.pi / (2 * L))
xx, yy = np.meshgrid(cheb_nodes, cheb_nodes, indexing="ij")
quad_pts = np.column_stack([xx.ravel(), yy.ravel()])
D = basis_matrix(CHEBYSHEV_ORTHONORMAL, idx, quad_pts)
G = D.T @ D / quad_pts.shape[0]
print("\nChebyshev Gram under tensor Gauss-Chebyshev quadrature:")
print(f"  max |G - I| = {np.max(np.abs(G - np.eye(idx.N))):.2e}")

leg_nodes, leg_w = np.polynomial.legendre.leggauss(L)
xx, yy = np.meshgrid(leg_nodes, leg_nodes, indexing="ij")
quad_pts = np.column_stack([xx.ravel(), yy.ravel()])
w2 = np.outer(leg_w, leg_w).ravel() / 4.0
D = basis_matrix(LEGENDRE_ORTHONORMAL, idx, quad_pts)
G = (D * w2[:, None]).T @ D
print("Legendre Gram under tensor Gauss-Legendre quadrature:")
print(f"  max |G - I| = {np.max(np.abs(G - np.eye(idx.N))):.2e}")
