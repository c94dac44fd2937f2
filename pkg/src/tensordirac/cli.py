"""``verify`` command line: run verification suites and emit JSON reports.

Exit status is 0 when every report passes, 1 when any fails or errors, and
2 on usage or scenario validation errors.  If ``TENSORDIRAC_REPORT_DIR`` is
set, each command also writes its JSON document to ``<dir>/<command>.json``.
"""

from __future__ import annotations

import json
import os
import sys
from fractions import Fraction
from pathlib import Path

import click

from .errors import ScenarioError
from .report import VerificationReport
from .scalars import parse_rational
from .scenario import bundled_path, load_scenario
from .suites import FAULTS, charge_suite, dispersion_suite, identity_suite, theorem1_suite

REPORT_DIR_ENV = "TENSORDIRAC_REPORT_DIR"

THEOREM_SCENARIOS = (
    "free_electron.json",
    "constant_A_solution.json",
    "random_A_constant.json",
    "random_A_plane_wave.json",
)
CHARGE_SCENARIOS = ("charge_electron.json", "charge_positron.json")
DISPERSION_A0 = ("1/10", "-1/4", "3/7")


class RationalParam(click.ParamType):
    name = "p/q"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(value)
        except ValueError:
            self.fail(f"{value!r} is not a rational number of the form p/q", param, ctx)


def _emit(command: str, reports: list[VerificationReport], **meta) -> None:
    reports = sorted(reports, key=lambda r: r.name)
    ok = all(r.passed for r in reports)
    doc = {
        "command": command,
        **meta,
        "status": "pass" if ok else "fail",
        "reports": [r.to_dict() for r in reports],
    }
    text = json.dumps(doc, indent=2, sort_keys=True)
    click.echo(text)
    for r in reports:
        click.echo(r.summary_line(), err=True)
    out_dir = os.environ.get(REPORT_DIR_ENV)
    if out_dir:
        path = Path(out_dir)
        path.mkdir(parents=True, exist_ok=True)
        (path / f"{command}.json").write_text(text + "\n")
    sys.exit(0 if ok else 1)


def _load(path: str):
    try:
        return load_scenario(path)
    except ScenarioError as exc:
        raise click.UsageError(str(exc)) from exc


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli():
    """Exact verification of the torsion/Dirac tensor model."""


@cli.command()
@click.option("--seed", type=int, default=1, show_default=True, help="Seed for the random inputs.")
@click.option("--count", type=click.IntRange(min=1), default=50, show_default=True, help="Random inputs per identity.")
@click.option("--fault", type=click.Choice(sorted(FAULTS)), default=None, hidden=True)
def identities(seed, count, fault):
    """Algebraic and differential identities on seeded random data."""
    _emit("identities", identity_suite(seed, count, fault), seed=seed, count=count)


@cli.command()
@click.argument("scenario", type=click.Path(dir_okay=False))
def theorem1(scenario):
    """Equivalence of the perturbed Maxwell system and the 2D Dirac equation."""
    sc = _load(scenario)
    _emit("theorem1", theorem1_suite(sc), scenario=sc.name, seed=sc.seed)


@cli.command()
@click.argument("scenario", type=click.Path(dir_okay=False))
def charge(scenario):
    """Charge of the scenario's photon, with gauge, frame and conjugation sweeps."""
    sc = _load(scenario)
    _emit("charge", charge_suite(sc), scenario=sc.name)


@cli.command()
@click.option("--A0", "a0", type=RationalParam(), required=True, help="Constant electric potential A_0.")
def dispersion(a0):
    """Frequency shift in a weak constant electric potential, both branches."""
    _emit("dispersion", dispersion_suite(a0), A0=str(a0))


@cli.command(name="all")
@click.option("--seed", type=int, default=1, show_default=True)
@click.option("--count", type=click.IntRange(min=1), default=50, show_default=True)
def run_all(seed, count):
    """Every suite on the bundled scenarios."""
    reports = list(identity_suite(seed, count))
    for name in THEOREM_SCENARIOS:
        reports += theorem1_suite(load_scenario(bundled_path(name)))
    for name in CHARGE_SCENARIOS:
        reports += charge_suite(load_scenario(bundled_path(name)))
    for a0 in DISPERSION_A0:
        for r in dispersion_suite(parse_rational(a0)):
            r.name = f"{r.name}[A0={a0}]"
            reports.append(r)
    _emit("all", reports, seed=seed, count=count)


def main(argv=None):
    cli.main(args=argv, prog_name="verify")


if __name__ == "__main__":
    main()
