"""JSON round-tripping for the file formats the CLI speaks.

Rationals travel as "p/q" strings (plain integers allowed on input);
families as {"sets": [[1,2],[3]], "hereditary": true|false|null};
partition measures as {"pieces": [...], "weights": [["1/2", ...], ...]};
vectors as {"coords": [[3, "1/2"], [5, "-2/3"]]}; family parameters as
{"lambda": "1/2", "window_max": 7, "seed": 12345} with an optional
"radices" override table.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .families import Family, PartitionMeasure
from .tfamily import TParams
from .vectors import SparseVector


def parse_rational(text: Any) -> Fraction:
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {text!r}") from exc
    raise ValueError(f"not a rational: {text!r}")


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def family_to_obj(family: Family) -> dict:
    return {
        "sets": [list(s) for s in family],
        "hereditary": family.hereditary_flag,
    }


def family_from_obj(obj: dict) -> Family:
    if not isinstance(obj, dict) or "sets" not in obj:
        raise ValueError('family JSON must be an object with a "sets" array')
    hereditary = obj.get("hereditary")
    if hereditary not in (True, False, None):
        raise ValueError('"hereditary" must be true, false or null')
    sets = obj["sets"]
    for s in sets:
        if list(s) != sorted(set(s)):
            raise ValueError(f"set {s} is not strictly increasing")
    return Family(sets, hereditary=hereditary)


def measure_to_obj(measure: PartitionMeasure) -> dict:
    return {
        "pieces": [list(p) for p in measure.pieces],
        "weights": [
            [format_rational(w[e]) for e in p]
            for p, w in zip(measure.pieces, measure.weights)
        ],
    }


def measure_from_obj(obj: dict) -> PartitionMeasure:
    if not isinstance(obj, dict) or "pieces" not in obj:
        raise ValueError('measure JSON must be an object with a "pieces" array')
    pieces = [tuple(p) for p in obj["pieces"]]
    weights_raw = obj.get("weights")
    if weights_raw is None:
        return PartitionMeasure.uniform(pieces)
    weights = []
    for p, row in zip(pieces, weights_raw):
        if len(row) != len(p):
            raise ValueError(f"piece {list(p)} needs {len(p)} weights")
        weights.append({e: parse_rational(v) for e, v in zip(p, row)})
    return PartitionMeasure(pieces, weights)


def vector_to_obj(x: SparseVector) -> dict:
    return {"coords": [[k, format_rational(v)] for k, v in x.items()]}


def vector_from_obj(obj: dict) -> SparseVector:
    if not isinstance(obj, dict) or "coords" not in obj:
        raise ValueError('vector JSON must be an object with a "coords" array')
    return SparseVector([(k, parse_rational(v)) for k, v in obj["coords"]])


def tparams_from_obj(obj: dict) -> tuple[TParams, Optional[int]]:
    """Build family parameters from a config object; returns (params, seed)."""
    if not isinstance(obj, dict):
        raise ValueError("config must be a JSON object")
    lam = parse_rational(obj.get("lambda", "1/2"))
    window_max = obj.get("window_max", 7)
    if not isinstance(window_max, int) or window_max < 1:
        raise ValueError(f'bad "window_max": {window_max!r}')
    radices = None
    if "radices" in obj and obj["radices"] is not None:
        radices = {int(m): int(r) for m, r in obj["radices"].items()}
    seed = obj.get("seed")
    if seed is not None and not isinstance(seed, int):
        raise ValueError(f'bad "seed": {seed!r}')
    return TParams.build(lam, window_max, radices), seed


def tparams_to_obj(params: TParams, seed: Optional[int] = None) -> dict:
    obj: dict = {
        "lambda": format_rational(params.lam),
        "window_max": params.window_max,
        "radices": {str(m): r for m, r in sorted(params.radices.items())},
    }
    if seed is not None:
        obj["seed"] = seed
    return obj


def load_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(obj: Any, path: Optional[str]) -> str:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return text
