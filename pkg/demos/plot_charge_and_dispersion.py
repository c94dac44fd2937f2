"""
Charge and the frequency shift in an electric potential
=======================================================

The sign of i*(du ^ conj(R du)) separates the two photon families. In a weak
constant potential (A0, 0, 0, 0) the electron frequency goes up by A0 and the
positron frequency goes down.
"""

from fractions import Fraction

from tensordirac.dirac import SignPair, charge, dispersion_solve, make_photon
from tensordirac.lorentz import build_map, transform_field

for beta in (1, -1):
    u = make_photon(SignPair(1, beta), C=0)
    value = charge(u)
    print(f"beta={beta:+d}: witness {value.witness}, charge {value.c:+d}, conjugate {charge(u.conjugate()).c:+d}")

# the charge does not change under boosts, rotations or x3 reversal
u = make_photon(SignPair(1, 1), C="i")
for lmap in (build_map("boost-x1", ("5/4", "3/4")), build_map("rotation-x1x2", ("3/5", "4/5")), build_map("reverse-x3")):
    print(f"{lmap.label:<24} charge {charge(transform_field(lmap, u)).c:+d}")

for A0 in (Fraction(1, 10), Fraction(-1, 4), Fraction(3, 7)):
    for beta in (1, -1):
        res = dispersion_solve(A0, SignPair(1, beta))
        print(f"A0={str(A0):>5} beta={beta:+d}: eps={res.epsilon}  ({res.branch})")
