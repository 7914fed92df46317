"""
Serialization of run results.

A run produces a payload {version, config, records}. Every record is a flat
mapping with a "type" (the report class or table name), a "violation" flag
and the report fields. Floats keep full double precision; non-finite floats
become the strings "inf", "-inf" and "nan" so the JSON stays standard.
"""

import json
import math
from enum import Enum
from typing import Any, BinaryIO, Dict, List, Mapping

import numpy as np
import pandas as pd
from pydantic import BaseModel

from uncertframes.schemas.run_schema import OutputFormat


def to_plain(value: Any) -> Any:
    """Reduce models, arrays and numpy scalars to JSON-compatible Python values."""
    if isinstance(value, BaseModel):
        return to_plain(value.model_dump())
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Mapping):
        return {_key(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, np.ndarray):
        return to_plain(value.tolist())
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [to_plain(float(value.real)), to_plain(float(value.imag))]
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isfinite(value):
            return value
        return "nan" if math.isnan(value) else ("inf" if value > 0 else "-inf")
    return value


def _key(key: Any) -> str:
    if isinstance(key, Enum):
        return str(key.value)
    if isinstance(key, float):
        return repr(key)
    return str(key)


def make_record(report: Any, violation: bool = False, record_type: str = None) -> Dict[str, Any]:
    body = to_plain(report)
    if not isinstance(body, dict):
        body = {"value": body}
    name = record_type or type(report).__name__
    return {"type": name, "violation": bool(violation), **body}


def table_records(table: pd.DataFrame, record_type: str, violation_column: str = None) -> List[Dict[str, Any]]:
    """One record per DataFrame row. violation_column, if given, holds the per-row verdict."""
    records = []
    for row in table.to_dict(orient="records"):
        violation = bool(row.pop(violation_column)) if violation_column else False
        records.append(make_record(row, violation, record_type))
    return records


class ReportWriter:
    """Writes a payload to a byte sink in one of the supported formats."""

    def __init__(self, output_format: OutputFormat = OutputFormat.JSON) -> None:
        self.output_format = OutputFormat(output_format)

    def render(self, payload: Dict[str, Any]) -> str:
        if self.output_format is OutputFormat.JSON:
            return json.dumps(to_plain(payload), sort_keys=True, indent=2) + "\n"

        records = payload.get("records", [])
        if self.output_format is OutputFormat.CSV:
            table = pd.json_normalize(records) if records else pd.DataFrame()
            return table.to_csv(index=False)

        lines = [
            f"{payload['config'].get('command', '')} "
            f"(version {payload['version']}, seed {payload['config'].get('seed')})"
        ]
        for record in records:
            series = pd.Series({k: _human(v) for k, v in record.items()}, dtype=object)
            lines.append("")
            lines.append(series.to_string())
        return "\n".join(lines) + "\n"

    def write(self, payload: Dict[str, Any], out: BinaryIO) -> None:
        out.write(self.render(payload).encode("utf-8"))
        out.flush()


def _human(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, list) and len(value) > 8:
        return f"[{len(value)} entries]"
    return str(value)
