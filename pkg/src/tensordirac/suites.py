"""Verification suites driven by the command line.

Each suite returns a list of :class:`VerificationReport` sorted by name.
Randomised suites draw everything from ``random.Random(seed)`` so a seed
reproduces a run exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from . import algebra
from . import generators as gen
from .algebra import DIM, METRIC, AntisymTensor, covector, hodge_square_sign
from .dirac import (
    SignPair,
    charge,
    charge_witness,
    dispersion_solve,
    make_electron_candidate,
    make_photon,
    perturbed_residual,
    theorem1_check,
)
from .errors import TensorDiracError
from .fields import (
    ExpField,
    codiff,
    connection_coeffs,
    constant_field,
    ext_d,
    ext_dA,
    torsion_tensor,
)
from .lorentz import transform_field
from .report import VerificationReport, timed
from .scalars import ZERO
from .scenario import Scenario
from .serialize import map_to_json

__all__ = ["identity_suite", "theorem1_suite", "charge_suite", "dispersion_suite", "FAULTS"]

MAX_RECORDED = 3

WedgeFn = Callable[[AntisymTensor, AntisymTensor], AntisymTensor]


def _wedge_unsigned(q: AntisymTensor, r: AntisymTensor) -> AntisymTensor:
    # deliberate fault: shuffle signs dropped, so the product is symmetric
    out = {}
    for kq, vq in q.items():
        for kr, vr in r.items():
            key = tuple(sorted(kq + kr))
            if len(set(key)) == len(key):
                out[key] = out.get(key, ZERO) + vq * vr
    return AntisymTensor(q.rank + r.rank, out)


FAULTS: dict[str, WedgeFn] = {"wedge-sign": _wedge_unsigned}


class _Collector:
    """Accumulates per-instance residuals into a report, keeping the first few."""

    def __init__(self, report: VerificationReport):
        self.report = report
        self.failures = 0
        self.checked = 0

    def check(self, label: str, residual) -> None:
        self.checked += 1
        zero = residual.is_zero() if hasattr(residual, "is_zero") else not residual
        if zero:
            return
        self.failures += 1
        if self.failures <= MAX_RECORDED:
            self.report.add_residual(label, residual)

    def finish(self) -> None:
        self.report.details["instances"] = self.checked
        self.report.details["failures"] = self.failures


def _run(name: str, anchor: str, body: Callable[[_Collector], None], **details) -> VerificationReport:
    report = VerificationReport(name=name, anchor=anchor, details=dict(details))
    with timed(report):
        col = _Collector(report)
        try:
            body(col)
        except TensorDiracError as exc:
            report.error = f"{type(exc).__name__}: {exc}"
        col.finish()
    return report


# -- identities ---------------------------------------------------------------


def _gamma_expansion(v: ExpField, gamma_t) -> ExpField:
    """``(dv)_{mu nu} - T^lam_{mu nu} v_lam`` on every mode."""
    dv = ext_d(v)
    out = []
    for k, c in v.modes():
        comps = {}
        for mu in range(DIM):
            for nu in range(mu + 1, DIM):
                s = sum((c[(lam,)] * gamma_t[lam, mu, nu] for lam in range(DIM)), ZERO)
                comps[(mu, nu)] = -s
        out.append((k, AntisymTensor(2, comps)))
    return dv + ExpField(2, out, v.orientation)


def identity_suite(seed: int, count: int, fault: str | None = None) -> list[VerificationReport]:
    """Exterior algebra, differential and connection identities on random data."""
    if count < 1:
        raise ValueError("count must be at least 1")
    wedge: WedgeFn = FAULTS[fault] if fault else algebra.wedge
    rng = random.Random(seed)
    reports = []

    def anticommute(col):
        for n in range(count):
            for q in range(DIM + 1):
                for r in range(DIM + 1 - q):
                    a, b = gen.tensor(rng, q), gen.tensor(rng, r)
                    sign = -1 if (q * r) % 2 else 1
                    col.check(f"instance[{n}] ranks ({q},{r})", wedge(a, b) - wedge(b, a) * sign)

    reports.append(_run("algebra.wedge-graded-anticommutativity", "Q^R = (-1)^{qr} R^Q", anticommute, seed=seed))

    def double_hodge(col):
        for n in range(count):
            for q in range(DIM + 1):
                a = gen.tensor(rng, q)
                col.check(f"instance[{n}] rank {q}", algebra.hodge(algebra.hodge(a)) - a * hodge_square_sign(q))

    reports.append(_run("algebra.double-hodge", "**Q = s(q) Q", double_hodge, seed=seed))

    def orientation(col):
        for n in range(count):
            for q in range(DIM + 1):
                a = gen.tensor(rng, q)
                col.check(f"instance[{n}] rank {q}", algebra.hodge(a, -1) + algebra.hodge(a, 1))

    reports.append(_run("algebra.hodge-orientation", "*_(-1) Q = -*_(+1) Q", orientation, seed=seed))

    def d_squared(col):
        for n in range(count):
            for q in range(DIM - 1):
                f = gen.field(rng, q)
                col.check(f"instance[{n}] rank {q}", ext_d(ext_d(f)))

    reports.append(_run("fields.d-squared", "dd = 0", d_squared, seed=seed))

    def codiff_squared(col):
        for n in range(count):
            for q in range(2, DIM + 1):
                f = gen.field(rng, q)
                col.check(f"instance[{n}] rank {q}", codiff(codiff(f)))

    reports.append(_run("fields.codiff-squared", "delta delta = 0", codiff_squared, seed=seed))

    def codiff_star_d(col):
        for n in range(count):
            for q in range(DIM - 1):
                f = gen.field(rng, q)
                col.check(f"instance[{n}] rank {q}", codiff(ext_d(f).hodge()))

    reports.append(_run("fields.codiff-star-d", "delta * d = 0", codiff_star_d, seed=seed))

    def linearity(col):
        for n in range(count):
            q = rng.randint(0, DIM - 1)
            f, g = gen.field(rng, q), gen.field(rng, q)
            z = gen.complex_rational(rng)
            col.check(f"instance[{n}]", ext_d(f.scale(z) + g) - (ext_d(f).scale(z) + ext_d(g)))

    reports.append(_run("fields.d-linearity", "d(z f + g) = z df + dg", linearity, seed=seed))

    def conj_d(col):
        for n in range(count):
            f = gen.field(rng, rng.randint(0, DIM - 1))
            col.check(f"instance[{n}]", ext_d(f.conjugate()) - ext_d(f).conjugate())

    reports.append(_run("fields.d-commutes-with-conjugation", "conj(df) = d conj(f)", conj_d, seed=seed))

    def mass_closure(col):
        for n in range(count):
            alpha = rng.choice((1, -1))
            v = gen.field(rng, 1, k3=alpha)
            a = gen.potential_2d(rng)
            bad = [k for k in ext_dA(v, a).wave_covectors() if k[3] != alpha]
            if bad:
                col.check(f"instance[{n}]", f"modes with k_3 != {alpha}: {[list(map(str, k)) for k in bad]}")
            else:
                col.check(f"instance[{n}]", "")

    reports.append(_run("fields.mass-ansatz-closure", "k_3(d_A v) = k_3(v)", mass_closure, seed=seed))

    def potentials():
        yield constant_field(covector([1, 0, 0, 0]))
        for _ in range(count):
            yield gen.real_field(rng, 1, max_pairs=0)

    def metric_compat(col):
        for n, a in enumerate(potentials()):
            gamma = connection_coeffs(a)
            for lam in range(DIM):
                for mu in range(DIM):
                    for nu in range(DIM):
                        s = gamma[nu, lam, mu] * METRIC[nu] + gamma[mu, lam, nu] * METRIC[mu]
                        if s:
                            col.check(f"A[{n}] ({lam},{mu},{nu})", algebra.AntisymTensor.scalar(s))
            col.check(f"A[{n}]", "")

    reports.append(
        _run("connection.metric-compatibility", "G^k_{lm} g_{kn} + G^k_{ln} g_{km} = 0", metric_compat, seed=seed)
    )

    def torsion(col):
        for n, a in enumerate(potentials()):
            t = torsion_tensor(connection_coeffs(a))
            star_a = a.hodge().constant_value()
            diff = {}
            for lam in range(DIM):
                for mu in range(DIM):
                    for nu in range(DIM):
                        expected = star_a[(lam, mu, nu)] * METRIC[lam]
                        if expected != t[lam, mu, nu]:
                            diff[(lam, mu, nu)] = str(expected - t[lam, mu, nu])
            col.check(f"A[{n}]", diff)

    reports.append(_run("connection.torsion-is-hodge-A", "T^l_{mn} = g^{ll} (*A)_{lmn}", torsion, seed=seed))

    def gamma_expansion(col):
        for n, a in enumerate(potentials()):
            t = torsion_tensor(connection_coeffs(a))
            v = gen.field(rng, 1)
            col.check(f"A[{n}]", ext_dA(v, a) - _gamma_expansion(v, t))

    reports.append(
        _run("connection.d_A-matches-torsion-expansion", "d_A v = dv - T^l v_l = dv - *(A^v)", gamma_expansion, seed=seed)
    )

    def da_da(col):
        for n in range(count):
            s = gen.field(rng, 0, k3=rng.choice((0, 1, -1)))
            a = gen.potential_2d(rng)
            lhs = ext_dA(ext_dA(s, a), a)
            col.check(f"instance[{n}]", lhs + a.wedge(ext_d(s)).hodge())

    reports.append(_run("connection.d_A-d_A-scalar", "d_A d_A s = -*(A^ds)", da_da, seed=seed))

    for r in reports:
        r.details["count"] = count
        if fault:
            r.details["fault"] = fault
    return sorted(reports, key=lambda r: r.name)


# -- theorem -----------------------------------------------------------------


def theorem1_suite(scenario: Scenario) -> list[VerificationReport]:
    """Equivalence check on the scenario data, its Lorentz images and seeded extras."""
    reports = []
    main = theorem1_check(scenario.spinor, scenario.potential, scenario.signs, C_values=tuple(scenario.C_values))
    main.name = f"theorem1.{scenario.name}"
    reports.append(main)

    def covariance(col):
        v = make_electron_candidate(scenario.signs, scenario.spinor)
        a = scenario.potential
        r = perturbed_residual(v, a, scenario.signs.beta)
        for lmap in scenario.maps:
            moved = perturbed_residual(transform_field(lmap, v), transform_field(lmap, a), scenario.signs.beta)
            col.check(lmap.label, moved - transform_field(lmap, r))

    if scenario.maps:
        reports.append(
            _run(
                f"theorem1.{scenario.name}.frame-covariance",
                "L(*d_A v - i b d_A v) = *d_(LA) Lv - i b d_(LA) Lv",
                covariance,
                maps=[m.label for m in scenario.maps],
            )
        )

    if scenario.random_instances:

        def extras(col):
            rng = random.Random(scenario.seed)
            for n in range(scenario.random_instances):
                signs = SignPair.all()[n % 4]
                rep = theorem1_check(gen.spinor_pair(rng), gen.potential_2d(rng), signs)
                col.check(f"instance[{n}]", rep.residuals)

        reports.append(
            _run(
                f"theorem1.{scenario.name}.random",
                "2D Dirac <=> perturbed polarised Maxwell, random instances",
                extras,
                seed=scenario.seed,
            )
        )
    return sorted(reports, key=lambda r: r.name)


# -- charge ------------------------------------------------------------------


def charge_suite(scenario: Scenario) -> list[VerificationReport]:
    """Charge value, gauge independence, frame invariance and conjugation flip."""
    signs = scenario.signs
    photons = {str(C): make_photon(signs, C) for C in scenario.C_values}
    base = photons[str(scenario.C_values[0])]
    ref = charge(base)
    reports = []

    def value(col):
        for label, u in photons.items():
            c = charge(u)
            col.report.details.setdefault("charges", {})[label] = c.c
            col.report.details.setdefault("witnesses", {})[label] = str(c.witness)
            if scenario.expected_charge is not None and c.c != scenario.expected_charge:
                col.check(f"C={label}", f"charge {c.c}, expected {scenario.expected_charge}")
            else:
                col.check(f"C={label}", "")

    reports.append(_run(f"charge.{scenario.name}.value", "c = -sgn(i*(du ^ conj(R du)))", value))

    def gauge(col):
        w0 = charge_witness(base)
        for label, u in photons.items():
            col.check(f"C={label}", charge_witness(u) - w0)

    reports.append(_run(f"charge.{scenario.name}.gauge-independence", "witness independent of C", gauge))

    def frames(col):
        observed = {}
        for lmap in scenario.maps:
            for label, u in photons.items():
                c = charge(transform_field(lmap, u)).c
                key = f"{lmap.label} C={label}"
                observed[key] = c
                if lmap.orthochronous:
                    col.check(key, "" if c == ref.c else f"charge {c} != {ref.c}")
        col.report.details["observed"] = observed
        col.report.details["maps"] = [map_to_json(m) for m in scenario.maps]
        col.report.details["asserted_maps"] = [m.label for m in scenario.maps if m.orthochronous]

    reports.append(_run(f"charge.{scenario.name}.lorentz-invariance", "c(Lu) = c(u), L orthochronous", frames))

    def conj(col):
        for label, u in photons.items():
            c, cbar = charge(u).c, charge(u.conjugate()).c
            col.report.details.setdefault("conjugate_charges", {})[label] = cbar
            col.check(f"C={label}", "" if cbar == -c else f"charge(conj u) = {cbar}, charge(u) = {c}")

    reports.append(_run(f"charge.{scenario.name}.conjugation-flip", "c(conj u) = -c(u)", conj))
    for r in reports:
        r.details.update(alpha=signs.alpha, beta=signs.beta)
    return sorted(reports, key=lambda r: r.name)


# -- dispersion ----------------------------------------------------------------


def dispersion_suite(A0: Fraction) -> list[VerificationReport]:
    """Solve both beta branches and cross-check the labels against the charge sign."""
    reports = []
    for beta in (1, -1):

        def body(col, beta=beta):
            signs = SignPair(1, beta)
            res = dispersion_solve(A0, signs)
            c = charge(make_photon(signs)).c
            expected_eps = 1 + A0 if res.branch == "electron" else 1 - A0
            col.check("epsilon", "" if res.epsilon == expected_eps else f"epsilon {res.epsilon} != {expected_eps}")
            label_from_charge = "electron" if c == -1 else "positron"
            col.check(
                "label",
                "" if label_from_charge == res.branch else f"dispersion says {res.branch}, charge says {label_from_charge}",
            )
            col.report.details.update(epsilon=str(res.epsilon), branch=res.branch, charge=c)

        reports.append(
            _run(
                f"dispersion.beta={beta:+d}",
                "eps = 1 + A0 (electron), eps = 1 - A0 (positron)",
                body,
                A0=str(A0),
                beta=beta,
            )
        )
    return sorted(reports, key=lambda r: r.name)
