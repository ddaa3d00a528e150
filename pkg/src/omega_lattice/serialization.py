"""Canonical JSON form of relations.

Canonical form: ``{"n": n, "pairs": [[x, y], ...]}`` with every pair (the
diagonal included) sorted lexicographically. The alternative form
``{"n": n, "hex": "..."}`` carries the row-major bit string (pair (x, y) at
position ``x*n + y``, most significant first), right-padded with zeros to a
whole number of hex digits.
"""

from __future__ import annotations

import json
from typing import Any

from .relation import OmegaError, Relation


def to_hex(r: Relation) -> str:
    bits = r.bitstring()
    if not bits:
        return ""
    bits += "0" * (-len(bits) % 4)
    return f"{int(bits, 2):0{len(bits) // 4}x}"


def from_hex(n: int, text: str) -> Relation:
    width = n * n
    digits = -(-width // 4)
    text = text.strip().lower()
    if text.startswith("0x"):
        text = text[2:]
    if len(text) != digits:
        raise OmegaError(f"hex form for n={n} needs {digits} digits, got {len(text)}")
    try:
        value = int(text, 16) if text else 0
    except ValueError as exc:
        raise OmegaError(f"invalid hex digits: {text!r}") from exc
    pad = digits * 4 - width
    if value & ((1 << pad) - 1):
        raise OmegaError("hex padding bits must be zero")
    bits = format(value >> pad, f"0{width}b") if width else ""
    return Relation.from_pairs(n, [(i // n, i % n) for i, c in enumerate(bits) if c == "1"])


def to_json_obj(r: Relation) -> dict[str, Any]:
    return {"n": r.n, "pairs": [[x, y] for x, y in sorted(r.pairs())]}


def dumps(r: Relation) -> str:
    return json.dumps(to_json_obj(r))


def from_json_obj(obj: Any) -> Relation:
    if not isinstance(obj, dict) or "n" not in obj:
        raise OmegaError('relation JSON must be an object with an "n" field')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise OmegaError('"n" must be an integer')
    if "pairs" in obj:
        pairs = obj["pairs"]
        if not isinstance(pairs, list):
            raise OmegaError('"pairs" must be a list')
        checked = []
        for p in pairs:
            if (
                not isinstance(p, list)
                or len(p) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in p)
            ):
                raise OmegaError(f"malformed pair {p!r}")
            checked.append((p[0], p[1]))
        return Relation.from_pairs(n, checked)
    if "hex" in obj:
        if not isinstance(obj["hex"], str):
            raise OmegaError('"hex" must be a string')
        return from_hex(n, obj["hex"])
    raise OmegaError('relation JSON needs "pairs" or "hex"')


def loads(text: str) -> Relation:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise OmegaError(f"invalid JSON: {exc}") from exc
    return from_json_obj(obj)
