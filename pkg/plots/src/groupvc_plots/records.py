"""Reader for the groupvc experiment record CSV schema.

This package deliberately has no import coupling with the producer; the CSV
schema is the only contract.  Error rows (empty vcdim, "error:<kind>" in the
in_band column) are parsed but carry vcdim None.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

EXPECTED_HEADER = "model,group,N,p,r,seed,trial,vcdim,log_r_N,band,in_band"
_COLUMNS = EXPECTED_HEADER.split(",")


class SchemaError(ValueError):
    """The input does not match the experiment CSV schema."""


@dataclass(frozen=True)
class Row:
    model: str
    group: str
    N: int
    p: float
    r: float
    seed: int
    trial: int
    vcdim: Optional[int]
    log_r_N: float
    band: Optional[float]
    in_band: Optional[bool]
    error: Optional[str]


def _parse_value(column: str, raw: str):
    try:
        if column in ("N", "seed", "trial"):
            return int(raw)
        if column in ("p", "log_r_N"):
            return float(raw)
        if column == "r":
            return math.inf if raw == "inf" else float(raw)
        if column == "band":
            return None if raw == "n/a" else float(raw)
        return raw
    except ValueError as exc:
        raise SchemaError(f"bad value {raw!r} in column {column!r}") from exc


def load_rows(path) -> list[Row]:
    """Parse a record CSV; raises SchemaError naming the offending column."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.rstrip("\n") for ln in fh if not ln.startswith("#")]
    if not lines:
        raise SchemaError("empty file, expected a header row")
    header = lines[0].split(",")
    if header != _COLUMNS:
        for i, (got, want) in enumerate(zip(header, _COLUMNS)):
            if got != want:
                raise SchemaError(f"header column {i} is {got!r}, expected {want!r}")
        raise SchemaError(
            f"header has {len(header)} columns, expected {len(_COLUMNS)}"
        )
    rows = []
    for ln in lines[1:]:
        if not ln:
            continue
        parts = ln.split(",")
        if len(parts) != len(_COLUMNS):
            raise SchemaError(f"row has {len(parts)} fields, expected {len(_COLUMNS)}: {ln!r}")
        rec = dict(zip(_COLUMNS, parts))
        in_band_raw = rec["in_band"]
        if in_band_raw.startswith("error:"):
            error = in_band_raw[len("error:"):]
            vcdim = None
            in_band = None
        else:
            error = None
            vcdim = _parse_value("vcdim", rec["vcdim"]) if rec["vcdim"] else None
            if vcdim is not None:
                vcdim = int(vcdim)
            in_band = None if in_band_raw == "n/a" else in_band_raw == "true"
        rows.append(
            Row(
                rec["model"],
                rec["group"],
                _parse_value("N", rec["N"]),
                _parse_value("p", rec["p"]),
                _parse_value("r", rec["r"]),
                _parse_value("seed", rec["seed"]),
                _parse_value("trial", rec["trial"]),
                vcdim,
                _parse_value("log_r_N", rec["log_r_N"]),
                _parse_value("band", rec["band"]),
                in_band,
                error,
            )
        )
    if not rows:
        raise SchemaError("no data rows")
    return rows


def mean_sd(values) -> tuple[float, float]:
    """Mean and population standard deviation, matching the producer exactly."""
    values = list(values)
    mean = sum(values) / len(values)
    sd = math.sqrt(sum((v - mean) ** 2 for v in values) / len(values))
    return mean, sd
