#!/usr/bin/env python3
"""Walk through the building blocks: weights, orthonormal bases, samples.

The sampling measure on [-1, 1] is c (1-x)^alpha (1+x)^beta.  Its
orthonormal polynomials L_0..L_m drive everything else: the Gram matrix
collects their empirical inner products, and the Christoffel-type bound
K = sup_x sum_j L_j(x)^2 tells how many samples make that matrix safe.
"""

import numpy as np

from lsq_stability import (
    christoffel_k,
    equidistributed,
    eval_basis,
    gauss_jacobi_nodes,
    make_params,
    orthonormal_basis,
    sample_iid,
    weight,
)

for alpha, beta, label in [(0.0, 0.0, "uniform"),
                           (-0.5, -0.5, "Chebyshev"),
                           (0.5, 0.5, "repelled from the endpoints")]:
    p = make_params(alpha, beta)
    print(f"{label}: alpha={alpha}, beta={beta}, c={p.c:.6f}, "
          f"weight at 0 = {weight(p, 0.0):.6f}")

print()
print("Orthonormality under the uniform measure, checked by quadrature:")
p = make_params(0, 0)
basis = orthonormal_basis(p, 4)
nodes, w = gauss_jacobi_nodes(p, 6)
phi = eval_basis(basis, nodes)
gram = (phi * w[:, None]).T @ phi
print(np.round(gram, 12))

print()
print("K(m+1) growth dictates the stable sampling rate n ~ K log n:")
for alpha, beta, label in [(0.0, 0.0, "uniform   "),
                           (-0.5, -0.5, "Chebyshev "),
                           (0.5, 0.5, "(1/2,1/2) ")]:
    p = make_params(alpha, beta)
    ks = [christoffel_k(orthonormal_basis(p, m)) for m in (5, 10, 20, 40)]
    print(f"  {label} K at m=5,10,20,40: " + ", ".join(f"{k:9.1f}" for k in ks))
print("  uniform grows like m^2, Chebyshev like m, (1/2,1/2) like m^3.")

print()
print("Three point families on [-1, 1] (n = 7):")
print("  iid draws:      ", np.round(sample_iid(p, 7, 42).points, 4))
print("  equidistributed:", np.round(equidistributed(p, 7).points, 4))
print("  (uniform measure makes the equidistributed family equispaced)")
