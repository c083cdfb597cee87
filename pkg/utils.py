import dataclasses
import math
from enum import Enum
from fractions import Fraction
from typing import List


def make_json_serializable(obj):
    """Convert values to a JSON-friendly form (exact numbers stay exact as strings)"""
    if obj is None:
        return None
    elif isinstance(obj, Enum):
        return obj.value
    elif isinstance(obj, bool):
        return obj
    elif isinstance(obj, Fraction):
        return str(obj)
    elif isinstance(obj, float):
        return format_extended(obj) if math.isinf(obj) else obj
    elif isinstance(obj, int):
        return obj
    elif isinstance(obj, str):
        return obj
    elif isinstance(obj, (list, tuple)):
        return [make_json_serializable(item) for item in obj]
    elif isinstance(obj, dict):
        return {str(key): make_json_serializable(value) for key, value in obj.items()}
    elif hasattr(obj, 'to_dict'):
        return make_json_serializable(obj.to_dict())
    elif dataclasses.is_dataclass(obj):
        return {
            field.name: make_json_serializable(getattr(obj, field.name))
            for field in dataclasses.fields(obj)
        }
    else:
        # Polynomials and other algebra values print canonically
        return str(obj)


def deep_serialize(data):
    """Recursively serialize nested data structures ensuring proper JSON key-value format"""
    if isinstance(data, dict):
        return {str(key): deep_serialize(value) for key, value in data.items()}
    elif isinstance(data, (list, tuple)):
        return [deep_serialize(item) for item in data]
    else:
        return make_json_serializable(data)


def format_extended(value) -> str:
    """Render a value of N u {inf} as a decimal string or 'inf'"""
    if isinstance(value, float) and math.isinf(value):
        return 'inf'
    return str(int(value))


def parse_extended(text: str):
    """Inverse of format_extended"""
    if text == 'inf':
        return math.inf
    return int(text)


def parse_int_list(text: str) -> List[int]:
    """Parse '9,12,17' (spaces allowed) into a list of integers"""
    parts = [part.strip() for part in text.split(',')]
    if not parts or any(not part for part in parts):
        raise ValueError(f"expected a comma separated list of integers, got {text!r}")
    return [int(part) for part in parts]


def elapsed_ms(start: float, end: float) -> float:
    return round((end - start) * 1000, 2)
