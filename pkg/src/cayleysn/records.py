"""Serialization helpers shared by reports and the CLI."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .partitions import CycleType, Partition, format_cycle_type, format_partition


def q(x: Fraction | int) -> str:
    """Exact rational as ``"p/q"`` (always with a denominator)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def f17(x: float) -> str:
    return format(float(x), ".17g")


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return q(obj)
    if isinstance(obj, Partition):
        return format_partition(obj)
    if isinstance(obj, CycleType):
        return format_cycle_type(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return f17(obj)
    if isinstance(obj, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "to_record"):
        return to_jsonable(obj.to_record())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def json_line(record: dict) -> str:
    return json.dumps(to_jsonable(record), separators=(",", ":"))
