"""JSON state files and CSV/JSON time-series output.

A state file is a JSON object in one of two forms:

* raw entries, row-major in the fixed basis, each complex number as a
  ``[re, im]`` pair::

      {"entries": [[re11, im11], [re12, im12], ..., [re44, im44]]}

* a named family with keyword parameters::

      {"family": "werner", "params": {"p": 0.5}}

Supported families: ``product`` (params ``psi``, ``phi``: 2-vectors of
``[re, im]`` pairs), ``bell`` (``which``: phi_plus | phi_minus | psi_plus |
psi_minus), ``mes`` (``a``, ``theta1``, ``theta2``), ``bell_diagonal``
(``p``: 4 weights), ``werner`` (``p``), ``mems`` (``delta``), ``basis``
(``a``, ``b``: each "excited" or "ground").

Floats are serialized with Python's shortest round-trip repr, so a state
written and re-read is bit-identical.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field

import numpy as np

from . import qmat, states


class StateFileError(ValueError):
    """Malformed state file content."""


_KET = {"excited": qmat.EXCITED, "ground": qmat.GROUND}


def _vector(pairs, name: str) -> np.ndarray:
    try:
        v = np.array([complex(re, im) for re, im in pairs])
    except (TypeError, ValueError) as exc:
        raise StateFileError(f"{name} must be a list of [re, im] pairs") from exc
    if v.shape != (2,):
        raise StateFileError(f"{name} must have exactly 2 components")
    return v


def _from_family(family: str, params: dict) -> np.ndarray:
    try:
        if family == "product":
            return states.product_state(
                _vector(params["psi"], "psi"), _vector(params["phi"], "phi")
            )
        if family == "bell":
            return states.bell(params["which"])
        if family == "mes":
            return states.mes(params["a"], params["theta1"], params["theta2"])
        if family == "bell_diagonal":
            return states.bell_diagonal(*params["p"])
        if family == "werner":
            return states.werner(params["p"])
        if family == "mems":
            return states.mems(params["delta"])
        if family == "basis":
            try:
                ka, kb = _KET[params["a"]], _KET[params["b"]]
            except KeyError as exc:
                raise StateFileError(
                    "basis params 'a' and 'b' must be 'excited' or 'ground'"
                ) from exc
            return states.product_state(ka, kb)
    except KeyError as exc:
        raise StateFileError(f"family {family!r} is missing parameter {exc}") from exc
    except (ValueError, TypeError) as exc:
        if isinstance(exc, StateFileError):
            raise
        raise StateFileError(f"bad parameters for family {family!r}: {exc}") from exc
    raise StateFileError(f"unknown state family {family!r}")


def parse_state(obj: dict) -> np.ndarray:
    """Build and validate a density matrix from decoded state-file JSON."""
    if not isinstance(obj, dict):
        raise StateFileError("state file must be a JSON object")
    if "entries" in obj:
        entries = obj["entries"]
        if not isinstance(entries, list) or len(entries) != 16:
            raise StateFileError("'entries' must list 16 [re, im] pairs, row-major")
        try:
            flat = [complex(re, im) for re, im in entries]
        except (TypeError, ValueError) as exc:
            raise StateFileError("'entries' must list 16 [re, im] pairs") from exc
        rho = np.array(flat, dtype=complex).reshape(4, 4)
    elif "family" in obj:
        rho = _from_family(obj["family"], obj.get("params", {}))
    else:
        raise StateFileError("state file needs either 'entries' or 'family'")
    return qmat.validate_state(rho)


def load_state(fp) -> np.ndarray:
    """Parse a state file from an open text stream."""
    try:
        obj = json.load(fp)
    except json.JSONDecodeError as exc:
        raise StateFileError(f"not valid JSON: {exc}") from exc
    return parse_state(obj)


def state_to_entries(rho: np.ndarray) -> list[list[float]]:
    """Row-major [re, im] pairs; floats round-trip exactly through JSON."""
    rho = np.asarray(rho, dtype=complex)
    return [[float(z.real), float(z.imag)] for z in rho.reshape(16)]


def dump_state(rho: np.ndarray, fp) -> None:
    json.dump({"entries": state_to_entries(rho)}, fp, indent=1)
    fp.write("\n")


_RHO_LABELS = [f"{j}{k}" for j in range(1, 5) for k in range(1, 5)]


@dataclass
class TimeSeries:
    """Sampled (t, concurrence, optional rho(t)) records plus run metadata."""

    times: np.ndarray
    concurrences: np.ndarray
    states: list[np.ndarray] | None = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        self.concurrences = np.asarray(self.concurrences, dtype=float)
        if np.any(np.diff(self.times) <= 0):
            raise ValueError("times must be strictly ascending")
        if np.any(self.concurrences < 0) or np.any(self.concurrences > 1):
            raise ValueError("concurrences must lie in [0, 1]")


def write_timeseries_csv(ts: TimeSeries, fp) -> None:
    writer = csv.writer(fp, lineterminator="\n")
    header = ["t", "concurrence"]
    if ts.states is not None:
        for lbl in _RHO_LABELS:
            header += [f"rho_re_{lbl}", f"rho_im_{lbl}"]
    writer.writerow(header)
    for i, (t, c) in enumerate(zip(ts.times, ts.concurrences)):
        row = [repr(float(t)), repr(float(c))]
        if ts.states is not None:
            flat = np.asarray(ts.states[i], dtype=complex).reshape(16)
            for z in flat:
                row += [repr(float(z.real)), repr(float(z.imag))]
        writer.writerow(row)


def write_timeseries_json(ts: TimeSeries, fp) -> None:
    records = []
    for i, (t, c) in enumerate(zip(ts.times, ts.concurrences)):
        rec: dict = {"t": float(t), "concurrence": float(c)}
        if ts.states is not None:
            rec["rho"] = state_to_entries(ts.states[i])
        records.append(rec)
    json.dump({"metadata": ts.metadata, "records": records}, fp, indent=1)
    fp.write("\n")


def write_curves_csv(columns: dict[str, np.ndarray], fp) -> None:
    """Generic multi-column curve file (used for the figure outputs)."""
    writer = csv.writer(fp, lineterminator="\n")
    names = list(columns)
    writer.writerow(names)
    for row in zip(*(columns[n] for n in names)):
        writer.writerow([repr(float(x)) for x in row])


def write_curves_json(columns: dict[str, np.ndarray], metadata: dict, fp) -> None:
    names = list(columns)
    records = [
        {n: float(x) for n, x in zip(names, row)}
        for row in zip(*(columns[n] for n in names))
    ]
    json.dump({"metadata": metadata, "records": records}, fp, indent=1)
    fp.write("\n")
