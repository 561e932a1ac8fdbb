"""
Code description files.

One JSON document per code, with ``"format": "doobcodes/1"`` and a ``family``
of ``linear``, ``additive``, ``special-d77`` or ``product``.  Matrix columns are
written one per line so the files diff well.  See docs/formats.md.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Union

from .additive import CheckMatrixZ, special_d77
from .linear import CheckMatrixE
from .product import PHI, ProductCodeSpec
from .rings import GF4, GR16

FORMAT = "doobcodes/1"
ISOMORPHISM_NOTE = ("vertex = sh coordinates of doob13 blocks (row-major) | K coordinates "
                    "block by block (doob13: 1, hamming5: 3), then u (k), then v (r); "
                    "this is a point of D(m, 3kr-2m+k+r)")

Code = Union[CheckMatrixE, CheckMatrixZ, ProductCodeSpec]


class FormatError(ValueError):
    pass


def _dump(doc: dict) -> str:
    lines = []
    items = list(doc.items())
    for n, (key, value) in enumerate(items):
        comma = "," if n < len(items) - 1 else ""
        if isinstance(value, list) and value and isinstance(value[0], list):
            body = ",\n".join("    " + json.dumps(col, separators=(",", ":")) for col in value)
            lines.append(f'  {json.dumps(key)}: [\n{body}\n  ]{comma}')
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value, separators=(',', ':'))}{comma}")
    return "{\n" + "\n".join(lines) + "\n}\n"


def to_document(code: Code) -> dict:
    if isinstance(code, CheckMatrixE):
        return {
            "format": FORMAT, "family": "linear",
            "gamma": code.gamma, "delta": code.delta,
            "m": code.m, "n": code.n,
            "a_star": [[str(x) for x in col] for col in code.a_star],
            "a_prime": [[str(y) for y in col] for col in code.a_prime],
        }
    if isinstance(code, CheckMatrixZ):
        ds, dp, ddp = code.columns()
        doc = {"format": FORMAT,
               "family": "special-d77" if code.name == "d77" else "additive",
               "rows": code.rows, "m": code.m, "n_prime": code.n_prime, "n_dprime": code.n_dprime}
        if code.meta:
            doc["source"] = {k: code.meta[k] for k in ("gamma", "delta", "lambdas") if k in code.meta}
        doc["d_star"] = [list(c) for c in ds]
        doc["d_prime"] = [list(c) for c in dp]
        doc["d_dprime"] = [list(c) for c in ddp]
        return doc
    if isinstance(code, ProductCodeSpec):
        return {
            "format": FORMAT, "family": "product",
            "k": code.k, "r": code.r, "m": code.m, "n": code.n,
            "doob_cells": [list(c) for c in code.doob_cells],
            "phi": [str(y) for y in PHI],
            "component_codes": [code.c1.name, code.c2.name],
            "layout": ISOMORPHISM_NOTE,
        }
    raise TypeError(f"cannot serialize {type(code).__name__}")


def dumps(code: Code) -> str:
    return _dump(to_document(code))


def from_document(doc: dict) -> Code:
    if doc.get("format") != FORMAT:
        raise FormatError(f"unknown format {doc.get('format')!r}")
    family = doc.get("family")
    try:
        if family == "linear":
            M = CheckMatrixE(doc["gamma"], doc["delta"],
                             [[GR16.parse(t) for t in col] for col in doc["a_star"]],
                             [[GF4.parse(t) for t in col] for col in doc["a_prime"]])
            if any(len(c) != M.rows for c in M.a_star + M.a_prime):
                raise FormatError("column length differs from gamma+delta")
            return M
        if family in ("additive", "special-d77"):
            src = doc.get("source", {})
            M = CheckMatrixZ.from_columns(doc["rows"], doc["d_star"], doc["d_prime"], doc["d_dprime"],
                                          name="d77" if family == "special-d77" else None,
                                          meta=dict(src))
            if M.shape != (doc["m"], doc["n_prime"], doc["n_dprime"]):
                raise FormatError(f"declared shape does not match columns {M.shape}")
            return M
        if family == "product":
            if doc.get("phi", [str(y) for y in PHI]) != [str(y) for y in PHI]:
                raise FormatError("only the fixed phi table 00,01,10,11 is supported")
            spec = ProductCodeSpec(doc["k"], doc["r"], tuple(tuple(c) for c in doc["doob_cells"]))
            if spec.m != doc.get("m", spec.m):
                raise FormatError("m does not match doob_cells")
            return spec
    except KeyError as exc:
        raise FormatError(f"missing field {exc}") from None
    raise FormatError(f"unknown family {family!r}")


def loads(text: str) -> Code:
    return from_document(json.loads(text))


def save(code: Code, path) -> None:
    Path(path).write_text(dumps(code))


def load(path) -> Code:
    return loads(Path(path).read_text())


def d77_data_file() -> str:
    """Text of the shipped d77 data file."""
    return resources.files("doobcodes").joinpath("data/d77.json").read_text()


def builtin(name: str) -> Code:
    if name == "d77":
        return special_d77()
    raise KeyError(name)
