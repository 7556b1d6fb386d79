"""JSON file formats for knots and patterns.

Matrices are row-major integer arrays; no binary format, so fixtures stay
hand-auditable.  Loading checks the schema (FormatError) and then every
matrix invariant plus any declared trivial block (ValidationError naming
the violated invariant).  save(load(path)) is the identity on canonical
form.
"""

import json
from dataclasses import dataclass

from .errors import (
    CorankMismatch,
    FormatError,
    NonSquare,
    NotUnimodularSkew,
    SatGenusError,
    ValidationError,
)
from .satellite import Pattern
from .seifert import SeifertMatrix, TrivialBlockCertificate, is_alexander_trivial, validate


@dataclass(frozen=True)
class KnotFile:
    name: str
    components: int
    seifert_matrix: SeifertMatrix
    trivial_block_size: int = None
    g3_hint: int = None

    def certificate(self):
        if self.trivial_block_size is None:
            return None
        return TrivialBlockCertificate.identity(self.seifert_matrix.size, self.trivial_block_size)


@dataclass(frozen=True)
class PatternFile:
    name: str
    winding: int
    components: int
    pattern_matrix: SeifertMatrix
    trivial_block_size: int = None

    def certificate(self):
        if self.trivial_block_size is None:
            return None
        return TrivialBlockCertificate.identity(self.pattern_matrix.size, self.trivial_block_size)

    def to_pattern(self):
        """Pattern with nonnegative winding; reversal notes are returned.

        A negative winding is reduced to |w|: the reversed pattern has the
        same closure matrix and every genus agrees on the two satellites.
        """
        notes = []
        w = self.winding
        if w < 0:
            notes.append(f"winding {w} reduced to {abs(w)} (pattern reversal)")
            w = abs(w)
        return Pattern(self.pattern_matrix, w, self.certificate()), notes


def _require(cond, message):
    if not cond:
        raise FormatError(message)


def _parse_matrix(raw, field):
    _require(isinstance(raw, list), f"{field} must be an array of arrays")
    for row in raw:
        _require(isinstance(row, list), f"{field} rows must be arrays")
        for x in row:
            _require(isinstance(x, int) and not isinstance(x, bool), f"{field} entries must be integers")
    _require(all(len(row) == len(raw) for row in raw), f"{field} must be square")
    return raw


def _validated_matrix(raw, components, field, name):
    try:
        v = SeifertMatrix(raw, components, name)
    except NonSquare as e:
        raise FormatError(str(e)) from e
    try:
        validate(v)
    except (CorankMismatch, NotUnimodularSkew) as e:
        raise ValidationError(f"{type(e).__name__}: {e}") from e
    return v


def _check_declared_block(v, size):
    if size is None:
        return
    if not isinstance(size, int) or size < 0 or size % 2 or size > v.size:
        raise ValidationError(f"trivial_block_size {size} is not an even integer within the matrix")
    block = [row[:size] for row in v.rows()[:size]]
    if not is_alexander_trivial(block):
        raise ValidationError("NotAlexanderTrivial: declared leading block fails det(tB - B^T) = t^n")


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise FormatError(f"{path}: {e}") from e
    _require(isinstance(data, dict), "top level must be an object")
    return data


def load_knot(path):
    data = _load_json(path)
    for key in ("name", "components", "seifert_matrix"):
        _require(key in data, f"missing field {key!r}")
    _require(isinstance(data["name"], str), "name must be a string")
    _require(isinstance(data["components"], int) and data["components"] >= 1, "components must be a positive integer")
    raw = _parse_matrix(data["seifert_matrix"], "seifert_matrix")
    v = _validated_matrix(raw, data["components"], "seifert_matrix", data["name"])
    block = data.get("trivial_block_size")
    _check_declared_block(v, block)
    hint = data.get("g3_hint")
    if hint is not None:
        _require(isinstance(hint, int) and hint >= 0, "g3_hint must be a nonnegative integer")
    return KnotFile(
        name=data["name"], components=data["components"], seifert_matrix=v,
        trivial_block_size=block, g3_hint=hint,
    )


def load_pattern(path):
    data = _load_json(path)
    for key in ("name", "winding", "components", "pattern_matrix"):
        _require(key in data, f"missing field {key!r}")
    _require(isinstance(data["name"], str), "name must be a string")
    _require(isinstance(data["winding"], int), "winding must be an integer")
    _require(isinstance(data["components"], int) and data["components"] >= 1, "components must be a positive integer")
    raw = _parse_matrix(data["pattern_matrix"], "pattern_matrix")
    v = _validated_matrix(raw, data["components"], "pattern_matrix", data["name"])
    block = data.get("trivial_block_size")
    _check_declared_block(v, block)
    return PatternFile(
        name=data["name"], winding=data["winding"], components=data["components"],
        pattern_matrix=v, trivial_block_size=block,
    )


def knot_to_dict(kf):
    out = {
        "name": kf.name,
        "components": kf.components,
        "seifert_matrix": [list(r) for r in kf.seifert_matrix.entries],
    }
    if kf.trivial_block_size is not None:
        out["trivial_block_size"] = kf.trivial_block_size
    if kf.g3_hint is not None:
        out["g3_hint"] = kf.g3_hint
    return out


def pattern_to_dict(pf):
    out = {
        "name": pf.name,
        "winding": pf.winding,
        "components": pf.components,
        "pattern_matrix": [list(r) for r in pf.pattern_matrix.entries],
    }
    if pf.trivial_block_size is not None:
        out["trivial_block_size"] = pf.trivial_block_size
    return out


def save_knot(kf, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(knot_to_dict(kf), fh, indent=2)
        fh.write("\n")


def save_pattern(pf, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(pattern_to_dict(pf), fh, indent=2)
        fh.write("\n")
