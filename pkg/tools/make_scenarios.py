"""Regenerate the scenario files bundled under src/tensordirac/scenarios/.

Run from the repository root:  python tools/make_scenarios.py
"""

import json
import random
from fractions import Fraction
from pathlib import Path

from tensordirac import generators as gen
from tensordirac.algebra import covector
from tensordirac.fields import constant_field, scalar_wave, zero_field
from tensordirac.scalars import ComplexRational
from tensordirac.serialize import field_to_json

OUT = Path(__file__).resolve().parents[1] / "src" / "tensordirac" / "scenarios"

MAPS = [
    {"kind": "boost-x1", "param": ["5/4", "3/4"]},
    {"kind": "rotation-x1x2", "param": ["3/5", "4/5"]},
    {"kind": "reverse-x3"},
    {"kind": "reverse-x1"},
    {"kind": "boost-x1", "param": ["13/12", "-5/12"]},
]


def strip(field_json):
    field_json.pop("orientation", None)
    return field_json


def write(name, data):
    (OUT / name).write_text(json.dumps(data, indent=2) + "\n")


def free_electron():
    write(
        "free_electron.json",
        {
            "name": "free_electron",
            "signs": {"alpha": 1, "beta": 1},
            "C_values": ["0", "1", "i"],
            "potential": strip(field_to_json(zero_field(1))),
            "spinor": {
                "phi": strip(field_to_json(scalar_wave((1, 0, 0, 0)))),
                "chi": strip(field_to_json(zero_field(0))),
            },
            "maps": MAPS[:3],
        },
    )


def random_constant():
    rng = random.Random(20240601)
    s = gen.spinor_pair(rng)
    a = gen.potential_2d(rng, "constant")
    write(
        "random_A_constant.json",
        {
            "name": "random_A_constant",
            "signs": {"alpha": -1, "beta": 1},
            "C_values": ["0", "1/2-3*i"],
            "potential": strip(field_to_json(a)),
            "spinor": {"phi": strip(field_to_json(s.phi)), "chi": strip(field_to_json(s.chi))},
            "maps": MAPS[:2],
            "seed": 7,
            "random_instances": 20,
        },
    )


def random_plane_wave():
    rng = random.Random(31337)
    s = gen.spinor_pair(rng)
    a = gen.potential_2d(rng, "wave")
    write(
        "random_A_plane_wave.json",
        {
            "name": "random_A_plane_wave",
            "signs": {"alpha": 1, "beta": -1},
            "potential": strip(field_to_json(a)),
            "spinor": {"phi": strip(field_to_json(s.phi)), "chi": strip(field_to_json(s.chi))},
            "maps": [MAPS[0], MAPS[2]],
        },
    )


def constant_A_solution():
    # plane wave (phi, chi) = (a, b) exp(-i p.x) with q = p - beta A on the unit mass shell
    alpha, beta = 1, 1
    A = [Fraction(1, 3), Fraction(-1, 2), Fraction(1, 5), Fraction(0)]
    q = [Fraction(13, 12), Fraction(1, 4), Fraction(1, 3)]
    assert q[0] ** 2 - q[1] ** 2 - q[2] ** 2 == 1
    p = [q[mu] + beta * A[mu] for mu in range(3)] + [Fraction(0)]
    a = ComplexRational(q[1], alpha * beta * q[2])
    b = ComplexRational(-(q[0] - 1))
    write(
        "constant_A_solution.json",
        {
            "name": "constant_A_solution",
            "signs": {"alpha": alpha, "beta": beta},
            "potential": strip(field_to_json(constant_field(covector(A)))),
            "spinor": {
                "phi": strip(field_to_json(scalar_wave(p, a))),
                "chi": strip(field_to_json(scalar_wave(p, b))),
            },
            "maps": [MAPS[0], MAPS[1]],
        },
    )


def charge(name, beta, expected):
    write(
        name,
        {
            "name": name.removesuffix(".json"),
            "signs": {"alpha": 1, "beta": beta},
            "C_values": ["0", "1", "i"],
            "maps": MAPS + [{"kind": "reverse-x0"}],
            "expected_charge": expected,
        },
    )


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    free_electron()
    random_constant()
    random_plane_wave()
    constant_A_solution()
    charge("charge_electron.json", 1, -1)
    charge("charge_positron.json", -1, 1)
