"""JSON configuration: dimension, pairing matrix, scheme values, Fock split.

All scalars are strings in ``p/q`` or ``p/q+r/s i`` form so nothing is ever
rounded; scheme keys are comma-joined sorted index lists like ``"1,1,2"``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .algebra import Monomial
from .fock import FockStructure
from .laplace import PairingMatrix
from .renorm import Scheme
from .scalars import Scalar


class ConfigError(ValueError):
    """Invalid configuration file."""


_ZETA_KEY_RE = re.compile(r"^\d+(,\d+)*$")


@dataclass
class Config:
    dimension: int
    pairing: PairingMatrix
    scheme: Scheme
    fock: FockStructure | None
    seed: int
    max_grade: int
    trials: int


def load_config(path: str) -> Config:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return parse_config(data)


def parse_config(data: dict) -> Config:
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")

    try:
        dimension = int(data["dimension"])
    except KeyError:
        raise ConfigError("config needs a 'dimension'") from None
    except (TypeError, ValueError):
        raise ConfigError("'dimension' must be an integer") from None
    if dimension < 1:
        raise ConfigError("'dimension' must be >= 1")

    rows = data.get("pairing")
    if not isinstance(rows, list) or len(rows) != dimension:
        raise ConfigError(f"'pairing' must be a {dimension}x{dimension} matrix of scalar strings")
    symmetric = bool(data.get("symmetric", False))
    parsed_rows = []
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dimension:
            raise ConfigError(f"pairing row {r + 1} does not have {dimension} entries")
        try:
            parsed_rows.append([Scalar.parse(x) for x in row])
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"pairing row {r + 1}: {exc}") from exc
    try:
        pairing = PairingMatrix(parsed_rows, symmetric=symmetric)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    zeta = data.get("zeta", {})
    if not isinstance(zeta, dict):
        raise ConfigError("'zeta' must be an object mapping monomial keys to scalars")
    values = {}
    for key, text in zeta.items():
        if not _ZETA_KEY_RE.match(key):
            raise ConfigError(f"zeta key {key!r} is not a comma-joined index list")
        indices = [int(p) for p in key.split(",")]
        if indices != sorted(indices):
            raise ConfigError(f"zeta key {key!r} must list indices in ascending order")
        if len(indices) < 2:
            raise ConfigError(f"zeta key {key!r} has grading < 2 (those values are structural)")
        if any(not (1 <= i <= dimension) for i in indices):
            raise ConfigError(f"zeta key {key!r} has an index outside 1..{dimension}")
        try:
            values[Monomial.from_indices(indices)] = Scalar.parse(text)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"zeta value for {key!r}: {exc}") from exc
    scheme = Scheme(values)

    fock = None
    fock_data = data.get("fock")
    if fock_data is not None:
        if not isinstance(fock_data, dict):
            raise ConfigError("'fock' must be an object")
        try:
            creation = [int(x) for x in fock_data.get("creation", [])]
            annihilation = [int(x) for x in fock_data.get("annihilation", [])]
            involution = {
                int(k): int(v) for k, v in fock_data.get("involution", {}).items()
            }
            fock = FockStructure(creation, annihilation, involution)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"fock block: {exc}") from exc
        if not fock.covers(dimension):
            raise ConfigError("fock creation+annihilation sets must cover 1..dimension")

    def _int_field(name, default, minimum):
        raw = data.get(name, default)
        try:
            value = int(raw)
        except (TypeError, ValueError):
            raise ConfigError(f"'{name}' must be an integer") from None
        if value < minimum:
            raise ConfigError(f"'{name}' must be >= {minimum}")
        return value

    seed = _int_field("seed", 0, 0)
    max_grade = _int_field("max_grade", 4, 1)
    trials = _int_field("trials", 100, 1)

    return Config(
        dimension=dimension,
        pairing=pairing,
        scheme=scheme,
        fock=fock,
        seed=seed,
        max_grade=max_grade,
        trials=trials,
    )
