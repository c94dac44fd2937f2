"""The ten acceptance criteria, each checked with exact (zero tolerance) equality.

Every test records a PASS/FAIL line that is printed in the terminal summary
and also prints it directly (visible with ``-s``).
"""

import random
from contextlib import contextmanager
from fractions import Fraction
from itertools import product

import pytest

import oracle
from conftest import ACCEPTANCE_RESULTS
from tensordirac import generators as gen
from tensordirac.algebra import AntisymTensor, covector, wedge
from tensordirac.dirac import (
    SignPair,
    SpinorPair2D,
    assembled_dirac_2d,
    charge,
    conjugation_symmetry_check,
    dirac_residual_2d,
    dirac_residual_3d,
    dispersion_solve,
    free_catalogue,
    make_electron_candidate,
    make_photon,
    nabla,
    perturbed_residual,
    polarised_residual,
    theorem1_check,
)
from tensordirac.fields import (
    codiff,
    connection_coeffs,
    constant_field,
    ext_d,
    ext_dA,
    perp,
    scalar_wave,
    torsion_tensor,
    zero_field,
)
from tensordirac.lorentz import build_map, transform_field
from tensordirac.scalars import I, ComplexRational

G = (1, -1, -1, -1)
SIGNS = SignPair.all()


@contextmanager
def criterion(n, title):
    try:
        yield
    except BaseException:
        ACCEPTANCE_RESULTS[n] = ("FAIL", title)
        print(f"criterion {n}: FAIL  {title}")
        raise
    ACCEPTANCE_RESULTS[n] = ("PASS", title)
    print(f"criterion {n}: PASS  {title}")


def test_criterion_01_algebra_identities():
    rng = random.Random(101)
    with criterion(1, "wedge anticommutativity, d^2 = 0, delta^2 = 0, delta*d = 0 on 50 inputs per rank"):
        for rank in range(5):
            for _ in range(50):
                q = gen.tensor(rng, rank)
                r_rank = rng.randint(0, 4 - rank)
                r = gen.tensor(rng, r_rank)
                assert wedge(q, r) == wedge(r, q) * (-1) ** (rank * r_rank)
                f = gen.field(rng, rank)
                if rank <= 2:
                    # *d f needs rank >= 1 for delta to act on it
                    assert ext_d(ext_d(f)).is_zero()
                    assert codiff(ext_d(f).hodge()).is_zero()
                if rank >= 2:
                    assert codiff(codiff(f)).is_zero()


def test_criterion_02_photon_validity():
    with criterion(2, "make_photon solves *du = i beta du for 4 sign pairs x 2 gauge constants; u_3 = 0 at C = 0"):
        for signs in SIGNS:
            for C in (0, ComplexRational(Fraction(2, 3), Fraction(-1, 5))):
                u = make_photon(signs, C)
                assert polarised_residual(u, signs.beta).is_zero()
                if C == 0:
                    assert u.component(3).is_zero()
                else:
                    assert not u.component(3).is_zero()


def test_criterion_03_connection():
    rng = random.Random(303)
    potentials = [[Fraction(1), Fraction(0), Fraction(0), Fraction(0)]]
    potentials += [[gen.rational(rng) for _ in range(4)] for _ in range(10)]
    with criterion(3, "metric compatibility and T = *A for 11 constant A; d_A d_A s = -*(A^ds) on 20 scalars"):
        for a in potentials:
            gamma = connection_coeffs(constant_field(covector(a)))
            brute = oracle.connection(a)
            star_a = oracle.hodge(covector(a))
            torsion = torsion_tensor(gamma)
            for lam, mu, nu in product(range(4), repeat=3):
                assert gamma[lam, mu, nu] == brute[lam, mu, nu]
                assert gamma[nu, lam, mu] * G[nu] + gamma[mu, lam, nu] * G[mu] == 0
                assert torsion[lam, mu, nu] == star_a[lam, mu, nu] * G[lam]
        for _ in range(20):
            s = gen.field(rng, 0)
            a = gen.potential_2d(rng, "constant")
            assert ext_dA(ext_dA(s, a), a) == -a.wedge(ext_d(s)).hodge()


def theorem1_instances():
    rng = random.Random(404)
    for n in range(104):
        signs = SIGNS[n % 4]
        kind = "constant" if (n // 4) % 2 == 0 else "wave"
        yield gen.spinor_pair(rng, max_modes=3), gen.potential_2d(rng, kind), signs


def corrupted_residual(s, A, signs):
    row1, row2 = dirac_residual_2d(s, A, signs)
    return row1 - nabla(s.chi, 2, A, signs.beta).scale(2 * signs.ab), row2


def test_criterion_04_theorem1():
    with criterion(4, "Maxwell/Dirac component identity and equivalence on 104 random instances; corrupted matrix fails"):
        count = 0
        kinds = set()
        for s, a, signs in theorem1_instances():
            rep = theorem1_check(s, a, signs)
            assert rep.passed, (rep.name, rep.residuals)
            assert max(len(s.phi), len(s.chi)) <= 3
            kinds.add((signs, a.constant_value() is not None))
            count += 1
        assert count >= 100 and len(kinds) == 8
        s, a, signs = next(theorem1_instances())
        bad = theorem1_check(s, a, signs, residual_2d=corrupted_residual)
        assert not bad.passed and bad.residuals


def test_criterion_05_anti_self_duality():
    with criterion(5, "*R = -i beta R for every perturbed residual of criterion 4"):
        for s, a, signs in theorem1_instances():
            r = perturbed_residual(make_electron_candidate(signs, s), a, signs.beta)
            assert r.hodge() == r.scale(ComplexRational(0, -signs.beta))


def test_criterion_06_free_particles():
    with criterion(6, "free electron/positron: zero residual, v perp u, v perp k, v = d(i e^{-ik.x})"):
        for signs in SIGNS:
            for C in (0, 1, I):
                u, v = free_catalogue(signs, C)
                k = (1, 0, 0, signs.alpha)
                assert not v.is_zero()
                assert perturbed_residual(v, zero_field(1), signs.beta).is_zero()
                assert perp(v, u)
                assert perp(v, constant_field(covector(k)))
                assert v == ext_d(scalar_wave(k, I))


def brute_force_witness(u):
    ((k, c),) = u.modes()
    f = oracle.wedge(covector([ComplexRational(0, -x) for x in k]), c)
    g = AntisymTensor(2, {idx: z.conjugate() * (-1 if 3 in idx else 1) for idx, z in f.items()})
    return oracle.hodge(oracle.wedge(f, g)).value() * I


ORTHOCHRONOUS = [
    build_map("boost-x1", ("5/4", "3/4")),
    build_map("rotation-x1x2", ("3/5", "4/5")),
    build_map("reverse-x3"),
    build_map("reverse-x1"),
    build_map("boost-x1", ("13/12", "-5/12")),
]


def test_criterion_07_charge():
    with criterion(7, "charge -1 (electron) / +1 (positron), witness 4, invariant under 5 maps and C; flips under conjugation"):
        electron0 = make_photon(SignPair(1, 1), 0)
        assert brute_force_witness(electron0) == 4
        assert charge(electron0).witness == 4 and charge(electron0).c == -1
        assert all(m.orthochronous for m in ORTHOCHRONOUS)
        assert any(m.orientation == -1 for m in ORTHOCHRONOUS)
        for alpha in (1, -1):
            for beta, expected in ((1, -1), (-1, 1)):
                for C in (0, 1, I):
                    u = make_photon(SignPair(alpha, beta), C)
                    value = charge(u)
                    assert value.c == expected
                    assert value.witness == brute_force_witness(u)
                    for m in ORTHOCHRONOUS:
                        assert charge(transform_field(m, u)) == value
                    assert charge(u.conjugate()).c == -expected


def test_criterion_08_dispersion():
    with criterion(8, "eps = 1 + A0 (electron) and 1 - A0 (positron) for A0 in {1/10, -1/4, 3/7}, labels match charge"):
        labels = {"electron": -1, "positron": 1}
        for A0 in (Fraction(1, 10), Fraction(-1, 4), Fraction(3, 7)):
            for signs in SIGNS:
                res = dispersion_solve(A0, signs)
                assert res.epsilon == 1 + signs.beta * A0
                assert res.branch == ("electron" if signs.beta == 1 else "positron")
                assert labels[res.branch] == charge(make_photon(signs, 0)).c


def test_criterion_09_conjugation_symmetry():
    rng = random.Random(909)
    with criterion(9, "conj maps (alpha, beta) residuals to (-alpha, -beta) residuals on 50 random triples"):
        for n in range(50):
            signs = SIGNS[n % 4]
            u = gen.field(rng, 1)
            v = make_electron_candidate(signs, gen.spinor_pair(rng, 2))
            a = gen.potential_2d(rng)
            assert conjugation_symmetry_check(u, v, a, signs).passed
            flipped = signs.flipped()
            assert polarised_residual(u.conjugate(), flipped.beta) == polarised_residual(u, signs.beta).conjugate()
            assert perturbed_residual(v.conjugate(), a, flipped.beta) == perturbed_residual(v, a, signs.beta).conjugate()
            assert all(k[3] == flipped.alpha for k in v.conjugate().wave_covectors())


def test_criterion_10_3d_specialisation():
    rng = random.Random(1010)
    with criterion(10, "3D Dirac residual equals the assembled 2D residual on 50 x^3-independent bispinors"):
        for _ in range(50):
            psi = gen.bispinor_2d(rng)
            a = gen.potential_2d(rng)
            assert dirac_residual_3d(psi, a) == assembled_dirac_2d(psi, a, 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_zz_every_criterion_recorded(n):
    # runs last in the module; guards against a criterion silently not running
    assert n in ACCEPTANCE_RESULTS
