"""Config loading, validation, and default materialization for the CLI.

One JSON document with nested sections (superfluid, superconductor,
lattice, couplings, run, cavitation, sweep) drives every subcommand; each
subcommand reads the sections it needs. Unknown sections or keys are hard
errors (typo protection) reported with the line they appear on. A run
manifest can be passed back in as the config: its `resolved` section is a
complete, default-free config.
"""

import copy
import json
from pathlib import Path

from .constants import CODATA
from .errors import ConfigError
from .physics import SuperconductorSpec, SuperfluidSpec

# numpy-backed modules (lattice, ising) are imported inside the builders
# that need them: the pure-formula subcommand must start in well under a
# second and touches neither

DEFAULTS = {
    "superfluid": {
        "m_s": CODATA.m_he3,
        "r0": 1e-10,
        "q_s": 2.0 * CODATA.e_charge,
    },
    "superconductor": {
        "e_c": 2.0 * CODATA.e_charge,
        "lambda": 1e-7,
        "xi": 1e-8,
    },
    "lattice": {
        "lx": 3,
        "ly": 3,
        "bc": "periodic",
        "init": "all-up",
        "init_seed": 0,
        "field": {"kind": "uniform", "b": 0.0, "p": 1.0, "seed": 0, "values": None},
    },
    "couplings": {"K": 1.0, "T_red": 1.0},
    "run": {"seed": 0, "n_therm": 1000, "n_measure": 1000, "measure_every": 1},
    "cavitation": {
        "J0": 1.0,
        "delta_omega_max": 0.0,
        "T_star": 1.0,
        "source": "exact",
        "mode": "thermal",
    },
    # axes left null here default to single-point grids at the base values
    "sweep": {"K": None, "T_red": None, "b": None, "L": None, "chains": 1},
}

_TYPES = {
    "superfluid.m_s": "float",
    "superfluid.r0": "float",
    "superfluid.q_s": "float",
    "superconductor.e_c": "float",
    "superconductor.lambda": "float",
    "superconductor.xi": "float",
    "lattice.lx": "int",
    "lattice.ly": "int",
    "lattice.bc": "str",
    "lattice.init": "str",
    "lattice.init_seed": "int",
    "lattice.field.kind": "str",
    "lattice.field.b": "float",
    "lattice.field.p": "float",
    "lattice.field.seed": "int",
    "lattice.field.values": "float_list",
    "couplings.K": "float",
    "couplings.T_red": "float",
    "run.seed": "int",
    "run.n_therm": "int",
    "run.n_measure": "int",
    "run.measure_every": "int",
    "cavitation.J0": "float",
    "cavitation.delta_omega_max": "float",
    "cavitation.T_star": "float",
    "cavitation.source": "str",
    "cavitation.mode": "str",
    "sweep.K": "float_list",
    "sweep.T_red": "float_list",
    "sweep.b": "float_list",
    "sweep.L": "int_list",
    "sweep.chains": "int",
}


def _anchor(text: str, key: str) -> str:
    """Best-effort '<line>:' prefix locating a key in the raw document."""
    needle = f'"{key}"'
    for lineno, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return f"{lineno}: "
    return ""


def _coerce(dotted: str, value, text: str, path: str):
    kind = _TYPES[dotted]
    where = f"{path}:{_anchor(text, dotted.rsplit('.', 1)[-1])}"
    if kind == "int":
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f"{where}key '{dotted}' must be an integer, got {value!r}")
        return value
    if kind == "float":
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{where}key '{dotted}' must be a number, got {value!r}")
        return float(value)
    if kind == "str":
        if not isinstance(value, str):
            raise ConfigError(f"{where}key '{dotted}' must be a string, got {value!r}")
        return value
    # list kinds; null is allowed and means "use the default"
    if value is None:
        return None
    if not isinstance(value, list):
        raise ConfigError(f"{where}key '{dotted}' must be a list, got {value!r}")
    element = int if kind == "int_list" else float
    out = []
    for v in value:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ConfigError(f"{where}key '{dotted}' must hold numbers, got {v!r}")
        if element is int and not isinstance(v, int):
            raise ConfigError(f"{where}key '{dotted}' must hold integers, got {v!r}")
        out.append(element(v))
    return out


def load_config(path: str | Path) -> tuple[dict, str]:
    """Read a config (or a run manifest) document; returns (raw dict, text)."""
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}: invalid JSON: {exc.msg}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}:1: config must be a JSON object")
    if "resolved" in raw and "command" in raw:
        # a run manifest: replay from its materialized parameters
        raw = raw["resolved"]
        if not isinstance(raw, dict):
            raise ConfigError(f"{path}:1: manifest 'resolved' section must be an object")
    return raw, text


def resolve_config(raw: dict, text: str = "", path: str = "config") -> dict:
    """Validate a raw config against the schema and materialize all defaults."""
    resolved = copy.deepcopy(DEFAULTS)
    for section, content in raw.items():
        if section not in DEFAULTS:
            raise ConfigError(
                f"{path}:{_anchor(text, section)}unknown section '{section}'"
            )
        if not isinstance(content, dict):
            raise ConfigError(f"{path}: section '{section}' must be an object")
        for key, value in content.items():
            if key == "field" and section == "lattice":
                if not isinstance(value, dict):
                    raise ConfigError(f"{path}: 'lattice.field' must be an object")
                for fkey, fvalue in value.items():
                    dotted = f"lattice.field.{fkey}"
                    if dotted not in _TYPES:
                        raise ConfigError(
                            f"{path}:{_anchor(text, fkey)}unknown key '{fkey}' in section 'lattice.field'"
                        )
                    resolved["lattice"]["field"][fkey] = _coerce(dotted, fvalue, text, path)
                continue
            dotted = f"{section}.{key}"
            if dotted not in _TYPES:
                raise ConfigError(
                    f"{path}:{_anchor(text, key)}unknown key '{key}' in section '{section}'"
                )
            resolved[section][key] = _coerce(dotted, value, text, path)

    sweep = resolved["sweep"]
    if sweep["K"] is None:
        sweep["K"] = [resolved["couplings"]["K"]]
    if sweep["T_red"] is None:
        sweep["T_red"] = [resolved["couplings"]["T_red"]]
    if sweep["b"] is None:
        sweep["b"] = [resolved["lattice"]["field"]["b"]]
    if sweep["L"] is None:
        sweep["L"] = [resolved["lattice"]["lx"]]
    for axis in ("K", "T_red", "b", "L"):
        if len(sweep[axis]) == 0:
            raise ConfigError(f"{path}: sweep axis '{axis}' is empty: the grid has no points")
    if sweep["chains"] < 1:
        raise ConfigError(f"{path}: sweep.chains must be >= 1")
    return resolved


def superfluid_spec(resolved: dict) -> SuperfluidSpec:
    sf = resolved["superfluid"]
    return SuperfluidSpec(m_s=sf["m_s"], r0=sf["r0"], q_s=sf["q_s"])


def superconductor_spec(resolved: dict) -> SuperconductorSpec:
    sc = resolved["superconductor"]
    return SuperconductorSpec(e_c=sc["e_c"], lam=sc["lambda"], xi=sc["xi"])


def field_pattern(resolved: dict):
    from .lattice import FieldPattern

    f = resolved["lattice"]["field"]
    return FieldPattern(kind=f["kind"], b=f["b"], p=f["p"], seed=f["seed"], values=f["values"])


def lattice_from_config(resolved: dict):
    from .lattice import build_lattice

    lat = resolved["lattice"]
    return build_lattice(
        lat["lx"],
        lat["ly"],
        bc=lat["bc"],
        initial=lat["init"],
        init_seed=lat["init_seed"],
        pattern=field_pattern(resolved),
    )


def couplings_from_config(resolved: dict):
    from .ising import CouplingSet

    c = resolved["couplings"]
    return CouplingSet(K=c["K"], T_red=c["T_red"])


def run_config(resolved: dict):
    from .ising import RunConfig

    r = resolved["run"]
    return RunConfig(
        seed=r["seed"],
        n_therm=r["n_therm"],
        n_measure=r["n_measure"],
        measure_every=r["measure_every"],
    )
