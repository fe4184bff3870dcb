"""JSON documents for matrices and channel descriptions.

A matrix document looks like::

    {"rows": 2, "cols": 2, "data": [[[1.0, 0.0], [0.0, 0.0]],
                                    [[0.0, 0.0], [1.0, 0.0]]]}

with every entry a ``[re, im]`` pair (bare real numbers are accepted on
input).  Floats are written with ``repr``, which round-trips doubles exactly.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import channels as ch
from .errors import ContractViolation, QReorderError


class ParseError(QReorderError):
    """A document could not be read or does not follow the expected layout."""


# --- matrices ----------------------------------------------------------------


def _clean(x: float) -> float:
    # drop the sign of zero so output does not depend on rounding direction
    return float(x) + 0.0


def matrix_to_doc(a) -> dict[str, Any]:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    return {
        "rows": int(a.shape[0]),
        "cols": int(a.shape[1]),
        "data": [[[_clean(z.real), _clean(z.imag)] for z in row] for row in a],
    }


def _entry(value) -> complex:
    if isinstance(value, bool):
        raise ParseError("booleans are not matrix entries")
    if isinstance(value, (int, float)):
        z = complex(value)
    elif isinstance(value, list) and len(value) == 2 and all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in value
    ):
        z = complex(value[0], value[1])
    else:
        raise ParseError(f"matrix entry must be [re, im], got {value!r}")
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ParseError("matrix entries must be finite")
    return z


def matrix_from_doc(doc) -> np.ndarray:
    if not isinstance(doc, dict):
        raise ParseError("matrix document must be an object")
    try:
        rows, cols, data = doc["rows"], doc["cols"], doc["data"]
    except KeyError as exc:
        raise ParseError(f"matrix document lacks field {exc.args[0]!r}") from None
    if not (isinstance(rows, int) and isinstance(cols, int) and rows > 0 and cols > 0):
        raise ParseError("rows and cols must be positive integers")
    if not isinstance(data, list) or len(data) != rows:
        raise ParseError(f"data must hold {rows} rows")
    out = np.empty((rows, cols), dtype=np.complex128)
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"row {i + 1} must hold {cols} entries")
        for j, value in enumerate(row):
            out[i, j] = _entry(value)
    return out


def load_json(path: str) -> Any:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def read_matrix(path: str) -> np.ndarray:
    return matrix_from_doc(load_json(path))


def _flat(obj) -> bool:
    # a list of scalars, or a list of lists of scalars (one matrix row)
    scalar = (int, float, str, bool, type(None))
    return isinstance(obj, list) and all(
        isinstance(x, scalar) or (isinstance(x, list) and all(isinstance(y, scalar) for y in x))
        for x in obj
    )


def _format(obj, level: int) -> str:
    pad, inner = "  " * level, "  " * (level + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_format(v, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list) and obj and not _flat(obj):
        items = [inner + _format(v, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj, allow_nan=False)


def dumps(doc) -> str:
    """Serialize `doc` as JSON with one matrix row per line."""
    return _format(doc, 0) + "\n"


# --- channel specs -----------------------------------------------------------

KINDS = ("depolarizing", "generalized_pauli", "random_unitary", "explicit_kraus", "explicit_superoperator")


@dataclass(frozen=True)
class ChannelSpec:
    """Serializable description of a square channel on ``dim``-level systems."""

    kind: str
    dim: int
    params: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_doc(cls, doc) -> "ChannelSpec":
        if not isinstance(doc, dict):
            raise ParseError("channel spec must be an object")
        kind = doc.get("kind")
        if kind not in KINDS:
            raise ParseError(f"unknown channel kind {kind!r}; expected one of {', '.join(KINDS)}")
        dim = doc.get("dim")
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise ParseError("channel spec needs a positive integer 'dim'")
        params = {k: v for k, v in doc.items() if k not in ("kind", "dim")}
        spec = cls(kind, dim, params)
        spec.build()  # validates payload
        return spec

    def _param(self, name: str):
        try:
            return self.params[name]
        except KeyError:
            raise ParseError(f"{self.kind} spec lacks field {name!r}") from None

    def build(self) -> ch.ChannelRep:
        try:
            rep = self._build()
        except (ContractViolation, TypeError, ValueError) as exc:
            raise ParseError(f"invalid {self.kind} spec: {exc}") from None
        if rep.dim_in != self.dim or rep.dim_out != self.dim:
            raise ParseError(
                f"{self.kind} payload acts on dimension {rep.dim_in}->{rep.dim_out}, spec says {self.dim}"
            )
        return rep

    def _build(self) -> ch.ChannelRep:
        if self.kind == "depolarizing":
            p = self._param("p")
            if not isinstance(p, (int, float)) or isinstance(p, bool):
                raise ParseError("depolarizing 'p' must be a number")
            return ch.depolarizing_channel(self.dim, float(p))
        if self.kind == "generalized_pauli":
            probs = np.array(self._param("probs"), dtype=float)
            return ch.generalized_pauli_channel(self.dim, probs)
        if self.kind == "random_unitary":
            us = [matrix_from_doc(u) for u in self._param("unitaries")]
            return ch.random_unitary_channel(us, np.array(self._param("probs"), dtype=float))
        if self.kind == "explicit_kraus":
            ops = self._param("operators")
            if not isinstance(ops, list):
                raise ParseError("'operators' must be a list of matrices")
            return ch.KrausSet(tuple(matrix_from_doc(k) for k in ops))
        return ch.Superoperator(matrix_from_doc(self._param("matrix")), self.dim, self.dim)


def read_channel(path: str) -> tuple[ChannelSpec, ch.ChannelRep]:
    """Load a channel spec; a bare matrix document is read as a superoperator."""
    doc = load_json(path)
    if isinstance(doc, dict) and "kind" not in doc and "rows" in doc:
        mat = matrix_from_doc(doc)
        try:
            rep = ch.Superoperator.square(mat)
        except ContractViolation as exc:
            raise ParseError(str(exc)) from None
        return ChannelSpec("explicit_superoperator", rep.dim_in, {"matrix": doc}), rep
    spec = ChannelSpec.from_doc(doc)
    return spec, spec.build()
