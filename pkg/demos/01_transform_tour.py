"""
A tour of the principal pivot transform
=======================================

The transform partially inverts a matrix: coordinates named by an index
set swap their roles between input and output of the linear map.
"""
import numpy as np

from pivotkit import pivot
from pivotkit.indexing import IndexSet

np.set_printoptions(precision=4, suppress=True)

a = np.array([[1.0, 2.0, 1.0],
              [1.0, 1.0, 0.0],
              [2.0, 8.0, 1.0]])
print("A =")
print(a)

# Pivot on rows/columns 1 and 3 (1-based).  The block A[{1,3}] gets
# inverted in place, the other blocks update around it.
alpha = IndexSet((1, 3), 3)
b = pivot.ppt(a, alpha)
print("\nppt(A, {1,3}) =")
print(b)

# Applying the same transform again gives A back: the operation is an
# involution.
print("\nppt(ppt(A, {1,3}), {1,3}) - A =")
print(pivot.ppt(b, alpha) - a)

# What "exchanging coordinates" means concretely: pick any x and let
# y = A x.  Mix the two vectors according to alpha and the transform
# maps one mixture to the other.
x = np.ones(3)
u, v = pivot.exchange_vectors(a, alpha, x)
print("\nfor x = (1,1,1):  u =", u, " v =", v)
print("B @ u =", b @ u, " == v")

# Pivoting on everything is plain inversion ...
print("\nppt(A, all) @ A =")
print(pivot.ppt(a, IndexSet((1, 2, 3), 3)) @ a)

# ... and the inverse can also be assembled step by step, one block of a
# partition at a time.
inv = pivot.sequential_inverse(a, [IndexSet((1, 3), 3), IndexSet((2,), 3)])
print("\nsequential inverse over {1,3} then {2}:")
print(inv)

# The transform can exist, and be invertible, even when A is singular.
s = np.array([[1.0, 2.0], [1.0, 2.0]])
ts = pivot.ppt(s, IndexSet((1,), 2))
print("\nsingular A:")
print(s)
print("ppt(A, {1}) =")
print(ts)
print("det of the transform:", np.linalg.det(ts))
