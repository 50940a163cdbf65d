"""Flat key-value config files for the solver and the bench suite.

Solver configs are sectionless ``key = value`` lines mirroring
:class:`~swarmclique.solver.SolverConfig` field names. Suite configs add
``[dataset NAME]`` sections; inside one, ``path``/``format`` locate the
file and any other key becomes a per-dataset solver override.
"""

from __future__ import annotations

import dataclasses
from pathlib import Path
from typing import Union

from .bench import DatasetSpec, SuiteConfig
from .solver import SolverConfig


class ConfigError(ValueError):
    pass


def parse_sections(text: str) -> tuple[dict, list[tuple[str, dict]]]:
    """Split into (top-level mapping, ordered [(section name, mapping)]).

    Lines are ``key = value`` (or ``key: value``); '#' and ';' start
    comments; section headers sit in brackets.
    """
    top: dict[str, str] = {}
    sections: list[tuple[str, dict]] = []
    current = top
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "#;":
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ConfigError(f"line {lineno}: unterminated section header")
            name = line[1:-1].strip()
            current = {}
            sections.append((name, current))
            continue
        for sep in ("=", ":"):
            if sep in line:
                key, _, value = line.partition(sep)
                break
        else:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        current[key.strip()] = value.split("#")[0].strip()
    return top, sections


_BOOL = {"true": True, "1": True, "yes": True, "on": True,
         "false": False, "0": False, "no": False, "off": False}


def _coerce(name: str, value: str, target: type):
    try:
        if target is bool:
            return _BOOL[value.lower()]
        return target(value)
    except (KeyError, ValueError):
        raise ConfigError(f"bad value for {name!r}: {value!r} "
                          f"(expected {target.__name__})") from None


_SOLVER_FIELDS = {f.name: f.type for f in dataclasses.fields(SolverConfig)}
_SOLVER_TYPES = {"int": int, "float": float, "bool": bool, "str": str}


def coerce_solver_fields(mapping: dict) -> dict:
    """Type-check a raw string mapping against SolverConfig's fields."""
    out = {}
    for key, value in mapping.items():
        if key not in _SOLVER_FIELDS:
            raise ConfigError(f"unknown solver option {key!r}; valid: "
                              f"{sorted(_SOLVER_FIELDS)}")
        out[key] = _coerce(key, value, _SOLVER_TYPES[_SOLVER_FIELDS[key]])
    return out


def load_solver_config(path: Union[str, Path]) -> dict:
    """Read a flat solver config file into a field patch dict."""
    top, sections = parse_sections(Path(path).read_text())
    if sections:
        raise ConfigError("solver config must be flat (no sections); "
                          f"found [{sections[0][0]}]")
    return coerce_solver_fields(top)


_SUITE_KEYS = {
    "runs": int,
    "iterations": int,
    "base_seed": int,
    "oracle_check": bool,
    "oracle_time_limit": float,
    "workers": int,
    "collect_traces": bool,
}


def load_suite_config(path: Union[str, Path]) -> SuiteConfig:
    """Read a bench suite config file."""
    base = Path(path).resolve().parent
    top, sections = parse_sections(Path(path).read_text())

    suite_kwargs = {}
    if "algorithms" in top:
        suite_kwargs["algorithms"] = tuple(
            a.strip() for a in top.pop("algorithms").split(",") if a.strip())
    for key, target in _SUITE_KEYS.items():
        if key in top:
            suite_kwargs[key] = _coerce(key, top.pop(key), target)
    solver_defaults = coerce_solver_fields(top)

    datasets = []
    overrides = {}
    for name, mapping in sections:
        if not name.lower().startswith("dataset"):
            raise ConfigError(f"unknown section [{name}]; expected [dataset NAME]")
        ds_name = name.split(None, 1)[1].strip() if " " in name else name
        mapping = dict(mapping)
        if "path" not in mapping:
            raise ConfigError(f"[{name}] is missing 'path'")
        raw_path = Path(mapping.pop("path"))
        ds_path = raw_path if raw_path.is_absolute() else base / raw_path
        fmt = mapping.pop("format", None)
        datasets.append(DatasetSpec(ds_name, ds_path, fmt))
        if mapping:
            overrides[ds_name] = coerce_solver_fields(mapping)

    return SuiteConfig(datasets=datasets, solver_defaults=solver_defaults,
                       overrides=overrides, **suite_kwargs)
