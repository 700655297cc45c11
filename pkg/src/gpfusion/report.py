"""Report objects and their canonical JSON / text renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .partitions import Partition, format_partition
from .qpoly import QPoly, QSeries


def canonical(obj: Any) -> Any:
    """Turn results into JSON-ready data: integers become decimal strings, partitions become "a,b,c"."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float):
        return f"{obj:.3f}"
    if isinstance(obj, str):
        return obj
    if isinstance(obj, (QPoly, QSeries)):
        return obj.to_json()
    if isinstance(obj, dict):
        return {_key(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)) and not isinstance(obj, Partition):
        return [canonical(v) for v in obj]
    if isinstance(obj, Partition):
        return format_partition(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _key(k: Any) -> str:
    if isinstance(k, Partition):
        return format_partition(k)
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return str(k)


def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


@dataclass
class Report:
    command: str
    inputs: dict[str, Any]
    results: dict[str, Any] = field(default_factory=dict)
    checks: dict[str, bool] = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_data(self) -> dict:
        return {
            "command": self.command,
            "inputs": canonical(self.inputs),
            "results": canonical(self.results),
            "checks": {k: bool(v) for k, v in self.checks.items()},
            "timing": {"seconds": f"{self.seconds:.3f}"},
        }

    def to_json(self) -> str:
        return dumps(self.to_data())

    def to_text(self) -> str:
        lines = [f"== {self.command} " + " ".join(f"{k}={_text(v)}" for k, v in self.inputs.items())]
        for k, v in self.results.items():
            if isinstance(v, dict) and v and all(isinstance(x, (QPoly, QSeries, int, str, bool, Fraction)) for x in v.values()):
                lines.append(f"{k}:")
                width = max(len(_key(x)) for x in v)
                for kk, vv in v.items():
                    lines.append(f"  {_key(kk):>{width}}  {_text(vv)}")
            else:
                lines.append(f"{k}: {_text(v)}")
        for k, v in self.checks.items():
            lines.append(f"[{'PASS' if v else 'FAIL'}] {k}")
        lines.append(f"({self.seconds:.2f}s)")
        return "\n".join(lines) + "\n"


def _text(v: Any) -> str:
    if isinstance(v, Partition):
        return "(" + format_partition(v) + ")"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_text(x) for x in v) + "]"
    return str(v)
