# Matrix classes and what pivoting does to them
# ---------------------------------------------

import numpy as np

from pivotkit import classify, pivot
from pivotkit.indexing import IndexSet

np.set_printoptions(precision=4, suppress=True)

# A P-matrix has every principal minor positive.  The check returns a
# certificate: on failure, the first index set whose minor is not.
a = np.array([[1.0, 2.0, 1.0],
              [1.0, 1.0, 0.0],
              [2.0, 8.0, 1.0]])
cert = classify.is_p_matrix(a)
print("is A a P-matrix?", cert.verdict, "- failing minor at", cert.witness)

p = classify.random_p_matrix(4, seed=2)
print("\nrandom P-matrix verdict:", classify.is_p_matrix(p).verdict)

# The P property survives every principal pivot transform.
for bits in range(16):
    alpha = IndexSet(tuple(i + 1 for i in range(4) if bits >> i & 1), 4)
    assert classify.is_p_matrix(pivot.ppt(p, alpha)).verdict
print("all 16 transforms of the P-matrix are P-matrices")

# Z-matrices (nonpositive off-diagonal) are NOT preserved: pivoting an
# M-matrix can flip an off-diagonal entry positive.
m = np.array([[3.0, -1.0, -1.0],
              [-1.0, 3.0, -1.0],
              [-1.0, -1.0, 3.0]])
print("\nM-matrix: Z?", classify.is_z_matrix(m),
      " P?", classify.is_p_matrix(m).verdict)
t = pivot.ppt(m, IndexSet((1,), 3))
print("after pivoting on {1}: Z?", classify.is_z_matrix(t))
print("offending entry (1,2):", t[0, 1])

# Semipositivity (some x > 0 with Ax > 0) is preserved, and the witness
# transfers constructively through the coordinate exchange.
cert = classify.is_semipositive(a)
print("\nA semipositive?", cert.verdict, " witness x =", cert.witness)
u, v = pivot.exchange_vectors(a, IndexSet((1, 3), 3), cert.witness)
b = pivot.ppt(a, IndexSet((1, 3), 3))
print("transferred witness u =", u, "-> B @ u =", b @ u, "> 0")

# Signature-orthogonal matrices: Q^T S Q = S for a +-1 diagonal S.
# Built by pivoting an ordinary orthogonal matrix on the '+' positions.
signs = np.array([1.0, 1.0, -1.0, -1.0])
r = classify.random_orthogonal(4, seed=7)
q = classify.make_s_orthogonal(signs, r)
s = np.diag(signs)
print("\ncongruence residual ||Q^T S Q - S||:", np.abs(q.T @ s @ q - s).max())
