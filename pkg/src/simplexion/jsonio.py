"""JSON formats: complexes (facet lists, closure implied), graphs, vertex
functions, exact matrices (decimal-string entries), and canonical dumping
so identical inputs produce byte-identical files.
"""

from __future__ import annotations

import json

import numpy as np

from .core import Complex, close


def complex_to_dict(G: Complex, name: str | None = None) -> dict:
    out = {"facets": sorted([list(x) for x in G.facets()])}
    if name:
        out["name"] = name
    return out


def complex_from_dict(d: dict) -> Complex:
    facets = d.get("facets", [])
    if not facets:
        return Complex()
    return close(facets)


def graph_to_dict(n: int, edges) -> dict:
    return {"n": n, "edges": [sorted(map(int, e)) for e in sorted(map(tuple, edges))]}


def graph_from_dict(d: dict) -> tuple:
    return int(d["n"]), [tuple(e) for e in d.get("edges", [])]


def function_from_dict(d: dict) -> dict:
    """{"values": {"3": 1.5, ...}} -> {3: 1.5, ...}"""
    return {int(k): v for k, v in d["values"].items()}


def matrix_to_dict(M) -> dict:
    A = np.asarray(M)
    return {
        "rows": int(A.shape[0]),
        "cols": int(A.shape[1]) if A.ndim > 1 else 1,
        "entries": [[str(int(v)) for v in row] for row in A],
    }


def matrix_from_dict(d: dict) -> list:
    return [[int(v) for v in row] for row in d["entries"]]


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def write_canonical(obj, path: str):
    with open(path, "w") as fh:
        fh.write(dumps_canonical(obj))


def read_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def load_complex(path: str) -> Complex:
    return complex_from_dict(read_json(path))
