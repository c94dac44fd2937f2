"""Scenario files: JSON descriptions of a verification run.

A scenario looks like::

    {
      "name": "free electron",
      "signs": {"alpha": 1, "beta": 1},
      "C": "0",                       # or "C_values": ["0", "1", "i"]
      "potential": {"rank": 1, "modes": [...]},
      "spinor": {"phi": {...}, "chi": {...}},
      "maps": [{"kind": "boost-x1", "param": ["5/4", "3/4"]}],
      "seed": 1,
      "random_instances": 0,
      "expected_charge": -1
    }

Every embedded invariant is revalidated on load.  Failures raise
:class:`~tensordirac.errors.ScenarioError` naming the file, the line of the
offending top-level key and the JSON path.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .dirac import SignPair, SpinorPair2D
from .errors import PreconditionError, ScenarioError
from .fields import ExpField, zero_field
from .lorentz import LorentzMap
from .scalars import ComplexRational
from .serialize import field_from_json, map_from_json, scalar_from_json

__all__ = ["Scenario", "load_scenario", "parse_scenario", "bundled_scenarios", "bundled_path"]


@dataclass
class Scenario:
    name: str
    signs: SignPair
    C_values: list[ComplexRational]
    potential: ExpField
    spinor: SpinorPair2D
    maps: list[LorentzMap] = field(default_factory=list)
    seed: int = 0
    random_instances: int = 0
    expected_charge: int | None = None
    source: str = "<memory>"


def _line_of(text: str, key: str) -> int | None:
    m = re.search(r'"' + re.escape(key) + r'"\s*:', text)
    return text.count("\n", 0, m.start()) + 1 if m else None


class _Ctx:
    def __init__(self, source: str, text: str):
        self.source, self.text = source, text

    def error(self, path: str, message: str) -> ScenarioError:
        line = _line_of(self.text, path.split(".")[0].split("[")[0]) if path else None
        where = f"{self.source}:{line}" if line else self.source
        return ScenarioError(f"{where}: {path or '<root>'}: {message}")


def parse_scenario(text: str, source: str = "<memory>") -> Scenario:
    ctx = _Ctx(source, text)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{source}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise ctx.error("", "a scenario must be a JSON object")

    def guarded(path, fn, *args):
        try:
            return fn(*args)
        except (ValueError, TypeError, PreconditionError) as exc:
            raise ctx.error(path, str(exc)) from exc

    signs_raw = data.get("signs", {"alpha": 1, "beta": 1})
    if not isinstance(signs_raw, dict):
        raise ctx.error("signs", "expected {\"alpha\": +-1, \"beta\": +-1}")
    signs = guarded("signs", lambda: SignPair(signs_raw.get("alpha"), signs_raw.get("beta")))

    if "C_values" in data:
        if not isinstance(data["C_values"], list) or not data["C_values"]:
            raise ctx.error("C_values", "expected a non-empty list of complex rational strings")
        C_values = [guarded(f"C_values[{n}]", scalar_from_json, c) for n, c in enumerate(data["C_values"])]
    else:
        C_values = [guarded("C", scalar_from_json, data.get("C", "0"))]

    if "potential" in data:
        potential = guarded("potential", field_from_json, data["potential"])
    else:
        potential = zero_field(1)
    _validate_potential(ctx, potential)

    spinor_raw = data.get("spinor", {})
    if not isinstance(spinor_raw, dict):
        raise ctx.error("spinor", "expected {\"phi\": field, \"chi\": field}")
    phi = guarded("spinor.phi", field_from_json, spinor_raw["phi"]) if "phi" in spinor_raw else zero_field(0)
    chi = guarded("spinor.chi", field_from_json, spinor_raw["chi"]) if "chi" in spinor_raw else zero_field(0)
    spinor = guarded("spinor", SpinorPair2D, phi, chi)

    maps_raw = data.get("maps", [])
    if not isinstance(maps_raw, list):
        raise ctx.error("maps", "expected a list of map objects")
    maps = [guarded(f"maps[{n}]", map_from_json, m) for n, m in enumerate(maps_raw)]

    ints = {}
    for key in ("seed", "random_instances"):
        val = data.get(key, 0)
        if isinstance(val, bool) or not isinstance(val, int) or val < 0:
            raise ctx.error(key, "expected a non-negative integer")
        ints[key] = val
    expected = data.get("expected_charge")
    if expected not in (None, 1, -1):
        raise ctx.error("expected_charge", "expected +1 or -1")

    return Scenario(
        name=str(data.get("name", Path(source).stem)),
        signs=signs,
        C_values=C_values,
        potential=potential,
        spinor=spinor,
        maps=maps,
        seed=ints["seed"],
        random_instances=ints["random_instances"],
        expected_charge=expected,
        source=source,
    )


def _validate_potential(ctx: _Ctx, a: ExpField) -> None:
    if a.rank != 1:
        raise ctx.error("potential", f"the potential must have rank 1, got {a.rank}")
    if not a.is_real():
        raise ctx.error("potential", "the potential A must be real (modes in conjugate pairs)")
    if any(k[3] for k in a.wave_covectors()):
        raise ctx.error("potential", "precondition k_3 = 0 violated: A must not depend on x^3")
    if not a.component(3).is_zero():
        raise ctx.error("potential", "precondition A_3 = 0 violated")


def load_scenario(path: str | Path) -> Scenario:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ScenarioError(f"{path}: cannot read scenario: {exc.strerror}") from exc
    return parse_scenario(text, str(path))


def bundled_path(name: str) -> Path:
    """Filesystem path of a scenario shipped with the package."""
    p = resources.files("tensordirac") / "scenarios" / name
    return Path(str(p))


def bundled_scenarios() -> list[str]:
    root = resources.files("tensordirac") / "scenarios"
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".json"))

