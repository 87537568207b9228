"""
Attaching matrices and plumbing graphs
======================================

Over a fold circle the preimage is a solid torus glued to a boundary torus
of S^1 x F by a matrix with determinant -1. Writing that matrix as an
alternating product of J and H(e) turns the gluing into a chain of
weighted vertices.
"""

from foldchi import AttachingMatrix, Mat2Z, build_plumbing_graph, compose_factors, factor_attaching
from foldchi.dot import emit_dot

A = Mat2Z(3, 7, 1, 2)
es = factor_attaching(AttachingMatrix(A))
print("A =", A, " factors:", es)
print("recomposed:", compose_factors(es))

# The factorization follows the Euclidean algorithm on the first column, so
# its length grows like the number of division steps. Consecutive Fibonacci
# numbers are the slow case.
big = Mat2Z(832040, 514229, 1346269, 832040)
print("det:", big.det(), " factors:", factor_attaching(big))

# A genus-1 base with three boundary circles, two of them filled by solid tori.
pg = build_plumbing_graph(1, 3, [A, Mat2Z(1, -2, 0, -1)])
print("chains:", pg.chains, " open boundary:", pg.boundary_arrows)
print(emit_dot(pg))
