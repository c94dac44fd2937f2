"""
Exterior algebra with exact entries
===================================

Antisymmetric tensors on Minkowski space with the metric diag(+1, -1, -1, -1).
Every number below is an exact Gaussian rational.
"""

from tensordirac import AntisymTensor, basis, dot, hodge, wedge
from tensordirac.algebra import hodge_square_sign

# components are stored on increasing index tuples; any other order is
# read back with the permutation sign
e01 = wedge(basis(0), basis(1))
print("e0^e1 at (0,1):", e01[0, 1], " at (1,0):", e01[1, 0], " at (0,0):", e01[0, 0])

# the scalar product raises the indices of the second argument
print("e0.e0 =", dot(basis(0), basis(0)), "  e1.e1 =", dot(basis(1), basis(1)), "  e01.e01 =", dot(e01, e01))

# Hodge star, with eps_0123 = +1
print("*e0     =", {k: str(v) for k, v in hodge(basis(0)).items()})
print("*e0^e1  =", {k: str(v) for k, v in hodge(e01).items()})
print("*e0123  =", hodge(basis(0, 1, 2, 3)).value())

# applying the star twice gives back the tensor up to a rank-dependent sign
for q in range(5):
    print(f"rank {q}: ** = {hodge_square_sign(q):+d}")

# a mixed example: (1/2 e0 + i e3) ^ (e1 - e2)
a = AntisymTensor(1, {(0,): "1/2", (3,): "i"})
b = AntisymTensor(1, {(1,): 1, (2,): -1})
for idx, value in wedge(a, b).items():
    print(idx, value)
