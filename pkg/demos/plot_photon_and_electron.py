"""
Photons, electrons and the 2D Dirac equation
============================================

A photon is a plane wave u with *du = i beta du. An electron candidate v is
built from a pair of scalar functions (phi, chi) of (x0, x1, x2); it is
orthogonal to u and to u's wave covector by construction. In a torsion
connection generated by a potential A, the equation *d_A v = i beta d_A v
holds exactly when (phi, chi) solves the 2D Dirac system.
"""

import random
from fractions import Fraction

from tensordirac import generators as gen
from tensordirac.algebra import covector
from tensordirac.dirac import (
    SignPair,
    SpinorPair2D,
    dirac_residual_2d,
    make_electron_candidate,
    make_photon,
    perturbed_residual,
    polarised_residual,
    theorem1_check,
)
from tensordirac.fields import constant_field, scalar_wave

signs = SignPair(alpha=1, beta=1)
u = make_photon(signs, C=0)
print("photon modes:", u.modes())
print("photon residual is zero:", polarised_residual(u, signs.beta).is_zero())

# a plane wave on the mass shell shifted by the potential, q = p - A
a = [Fraction(1, 3), Fraction(-1, 2), Fraction(1, 5)]
q = [Fraction(13, 12), Fraction(1, 4), Fraction(1, 3)]  # q0^2 - q1^2 - q2^2 = 1
p = [q[mu] + a[mu] for mu in range(3)] + [0]
A = constant_field(covector(a + [0]))
s = SpinorPair2D(scalar_wave(p, f"{q[1]}+{q[2]}*i"), scalar_wave(p, -(q[0] - 1)))

v = make_electron_candidate(signs, s)
print("Maxwell residual is zero:", perturbed_residual(v, A, signs.beta).is_zero())
print("Dirac residual is zero:  ", all(r.is_zero() for r in dirac_residual_2d(s, A, signs)))

# the same check on random data, where neither side vanishes but the two
# residuals agree component by component
rng = random.Random(0)
report = theorem1_check(gen.spinor_pair(rng), gen.potential_2d(rng), SignPair(-1, 1))
print(report.summary_line())
print("details:", report.details)
