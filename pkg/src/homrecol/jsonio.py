"""Instance and result files.

An instance file is a JSON object with graphs "G" and "H" (num_vertices,
edges, optional "reflexive" flag that expands to loops on every vertex),
arrays "phi" and "psi", and an optional "mode" ("reflexive" by default).
Result files carry "answer" plus either a move-list witness or a typed
obstruction.  All output is deterministic and newline-terminated.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import InvalidInputError
from .graphs import Graph
from .solver import GIRTH5, REFLEXIVE, Instance, Obstruction, Verdict


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidInputError(msg)


def _parse_graph(obj: Any, name: str) -> Graph:
    _require(isinstance(obj, dict), f"{name} must be an object")
    _require("num_vertices" in obj, f"{name}.num_vertices is required")
    n = obj["num_vertices"]
    _require(isinstance(n, int) and not isinstance(n, bool) and n >= 0,
             f"{name}.num_vertices must be a nonnegative integer")
    raw_edges = obj.get("edges", [])
    _require(isinstance(raw_edges, list), f"{name}.edges must be a list")
    edges = []
    for i, e in enumerate(raw_edges):
        _require(
            isinstance(e, list) and len(e) == 2
            and all(isinstance(x, int) and not isinstance(x, bool) for x in e),
            f"{name}.edges[{i}] must be a pair of integers",
        )
        _require(0 <= e[0] < n and 0 <= e[1] < n, f"{name}.edges[{i}] out of range")
        edges.append((e[0], e[1]))
    reflexive = obj.get("reflexive", False)
    _require(isinstance(reflexive, bool), f"{name}.reflexive must be a boolean")
    unknown = set(obj) - {"num_vertices", "edges", "reflexive"}
    _require(not unknown, f"{name} has unknown keys: {sorted(unknown)}")
    return Graph(n, edges, reflexive=reflexive)


def _parse_map(obj: Any, name: str, gn: int, hn: int) -> tuple[int, ...]:
    _require(isinstance(obj, list), f"{name} must be a list")
    _require(len(obj) == gn, f"{name} must have length {gn}")
    for i, c in enumerate(obj):
        _require(isinstance(c, int) and not isinstance(c, bool), f"{name}[{i}] must be an integer")
        _require(0 <= c < hn, f"{name}[{i}] out of range")
    return tuple(obj)


def graph_from_dict(obj: Any, name: str = "graph") -> Graph:
    return _parse_graph(obj, name)


def instance_from_dict(doc: Any) -> Instance:
    _require(isinstance(doc, dict), "instance file must be a JSON object")
    for key in ("G", "H", "phi", "psi"):
        _require(key in doc, f"missing key {key!r}")
    unknown = set(doc) - {"G", "H", "phi", "psi", "mode"}
    _require(not unknown, f"unknown keys: {sorted(unknown)}")
    g = _parse_graph(doc["G"], "G")
    h = _parse_graph(doc["H"], "H")
    phi = _parse_map(doc["phi"], "phi", g.n, h.n)
    psi = _parse_map(doc["psi"], "psi", g.n, h.n)
    mode = doc.get("mode", REFLEXIVE)
    _require(mode in (REFLEXIVE, GIRTH5), 'mode must be "reflexive" or "girth5"')
    return Instance(g=g, h=h, phi=phi, psi=psi, mode=mode)


def parse_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return instance_from_dict(doc)


def _graph_to_dict(g: Graph) -> dict:
    if g.is_reflexive():
        non_loops = [[u, v] for u, v in g.edge_list() if u != v]
        return {"num_vertices": g.n, "edges": non_loops, "reflexive": True}
    return {"num_vertices": g.n, "edges": [[u, v] for u, v in g.edge_list()]}


def instance_to_dict(inst: Instance) -> dict:
    return {
        "G": _graph_to_dict(inst.g),
        "H": _graph_to_dict(inst.h),
        "phi": list(inst.phi),
        "psi": list(inst.psi),
        "mode": inst.mode,
    }


def _obstruction_to_dict(o: Obstruction) -> dict:
    out: dict[str, Any] = {"type": o.kind, "cycle": list(o.cycle)}
    if o.vertex is not None:
        out["vertex"] = o.vertex
    if o.cores is not None:
        out["cores"] = [list(o.cores[0]), list(o.cores[1])]
    return out


def verdict_to_dict(v: Verdict) -> dict:
    if v.yes:
        return {"answer": "yes", "witness": {"moves": [list(m) for m in v.moves]}}
    return {"answer": "no", "obstruction": _obstruction_to_dict(v.obstruction)}


def obstruction_from_dict(doc: Any) -> Obstruction:
    _require(isinstance(doc, dict), "obstruction must be an object")
    _require(isinstance(doc.get("type"), str), "obstruction.type must be a string")
    _require(isinstance(doc.get("cycle"), list), "obstruction.cycle must be a list")
    cores = None
    if "cores" in doc:
        cores = (tuple(doc["cores"][0]), tuple(doc["cores"][1]))
    return Obstruction(
        kind=doc["type"],
        cycle=tuple(doc["cycle"]),
        vertex=doc.get("vertex"),
        cores=cores,
    )


def moves_from_dict(doc: Any) -> list[tuple[int, int]]:
    _require(isinstance(doc, dict), "result file must be a JSON object")
    witness = doc.get("witness")
    _require(isinstance(witness, dict), "result file has no witness")
    moves = witness.get("moves")
    _require(isinstance(moves, list), "witness.moves must be a list")
    out = []
    for i, m in enumerate(moves):
        _require(
            isinstance(m, list) and len(m) == 2
            and all(isinstance(x, int) and not isinstance(x, bool) for x in m),
            f"witness.moves[{i}] must be a [vertex, colour] pair",
        )
        out.append((m[0], m[1]))
    return out


def dumps(doc: dict) -> str:
    return json.dumps(doc, separators=(",", ":")) + "\n"
