"""Topologically valid walk systems.

A system assigns each vertex v a reduced walk from phi(v) to psi(v); it is
valid when every edge of the instance graph is preserved, i.e. prepending the
phi-image of the edge and appending the reversed psi-image to one endpoint's
walk reduces to the other endpoint's walk.  Valid systems are generated down
a BFS spanning tree and checked on the non-tree edges; a failing edge yields
a closed-walk witness through the tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InternalError
from .graphs import Graph, bfs_tree, shortest_walk
from .walks import (
    Walk,
    closed_power,
    concat,
    free_decomposition,
    is_reduced,
    primitive_root,
    reduce_walk,
    reverse,
    shift_match,
)


@dataclass(frozen=True)
class WalkSystem:
    root: int
    walks: dict[int, Walk]


@dataclass(frozen=True)
class CycleWitness:
    """A closed walk of the instance graph on which the base walk fails."""

    cycle: Walk


def edge_preserved(
    phi: Sequence[int],
    psi: Sequence[int],
    u: int,
    v: int,
    w_u: Walk,
    w_v: Walk,
) -> bool:
    """True iff carrying v's walk across the edge uv reproduces u's walk."""
    return reduce_walk((phi[u],) + w_v + (psi[u],)) == w_u


def generate_system(
    g: Graph,
    h: Graph,
    phi: Sequence[int],
    psi: Sequence[int],
    root: int,
    w_root: Walk,
    tie_break: Sequence[int] | None = None,
) -> WalkSystem | CycleWitness:
    """Build the unique reduced system containing w_root, or a failing cycle.

    Walks propagate down a BFS tree of root's component; every non-tree,
    non-loop edge is then checked.  The witness for a failing edge uv is the
    closed walk tree-path(root, u) . uv . tree-path(v, root).
    """
    if w_root[0] != phi[root] or w_root[-1] != psi[root]:
        raise InternalError("base walk endpoints do not match the maps")
    if not is_reduced(w_root):
        raise InternalError("base walk must be reduced")
    order, parent = bfs_tree(g, root, tie_break)
    walks: dict[int, Walk] = {root: w_root}
    for v in order[1:]:
        u = parent[v]
        walks[v] = reduce_walk((phi[v],) + walks[u] + (psi[v],))

    comp = set(order)
    for u in sorted(comp):
        for v in g.adj[u]:
            if v <= u:  # each edge once; loops are always preserved
                continue
            if parent.get(v) == u or parent.get(u) == v:
                continue
            if not edge_preserved(phi, psi, u, v, walks[u], walks[v]):
                up_u = _chain_to_root(parent, u)
                up_v = _chain_to_root(parent, v)
                cycle = tuple(reversed(up_u)) + tuple(up_v)
                return CycleWitness(cycle=cycle)
    return WalkSystem(root=root, walks=walks)


def _chain_to_root(parent: dict[int, int], x: int) -> list[int]:
    chain = [x]
    while chain[-1] in parent:
        chain.append(parent[chain[-1]])
    return chain


@dataclass(frozen=True)
class BaseWalkSearch:
    """Outcome of the staged search for a topologically valid base walk."""

    walk: Walk | None = None
    system: WalkSystem | None = None
    failure: str | None = None  # "separated" | "class-mismatch" | "no-candidate"
    cycle: Walk | None = None
    cores: tuple[Walk, Walk] | None = None

    @property
    def found(self) -> bool:
        return self.walk is not None


def _candidate_family(
    phi: Sequence[int], psi: Sequence[int], cycle: Walk
) -> tuple[list[Walk] | None, tuple[Walk, Walk] | None]:
    """Candidate base walks that preserve the witness cycle.

    Returns (candidates, None), or (None, the two free cores) when the cycle's
    images are not freely homotopic, in which case no base walk exists.
    """
    img_phi = reduce_walk(tuple(phi[x] for x in cycle))
    img_psi = reduce_walk(tuple(psi[x] for x in cycle))
    da = free_decomposition(img_phi)
    db = free_decomposition(img_psi)
    if da.contractible and db.contractible:
        raise InternalError("witness cycle with both images contractible")
    if da.contractible or db.contractible:
        return None, (da.core, db.core)
    k = shift_match(da.core, db.core)
    if k is None:
        return None, (da.core, db.core)
    prefix = da.core[: k + 1]
    root = primitive_root(da.core)
    root_loop = root + (root[0],)
    out: list[Walk] = []
    for d in (-1, 0, 1):
        w = concat(concat(concat(da.tail, closed_power(root_loop, d)), prefix), reverse(db.tail))
        out.append(reduce_walk(w))
    return out, None


def find_valid_base_walk(
    g: Graph, h: Graph, phi: Sequence[int], psi: Sequence[int], root: int
) -> BaseWalkSearch:
    """Find a topologically valid (phi(root), psi(root))-walk if one exists.

    Stage 1 tries the shortest walk between the endpoint colours.  On
    failure, the witness cycle pins every preserving walk to a finite
    candidate family (tail . core-root-power . core-prefix . reversed tail);
    a second witness from the zero-power candidate pins it further.  Every
    candidate is validated by generating its system, so extra candidates can
    never cost soundness.
    """
    w0 = shortest_walk(h, phi[root], psi[root])
    if w0 is None:
        return BaseWalkSearch(failure="separated", cycle=(root,))
    out = generate_system(g, h, phi, psi, root, w0)
    if isinstance(out, WalkSystem):
        return BaseWalkSearch(walk=w0, system=out)
    first_cycle = out.cycle

    candidates, cores = _candidate_family(phi, psi, first_cycle)
    if candidates is None:
        return BaseWalkSearch(failure="class-mismatch", cycle=first_cycle, cores=cores)

    results: dict[Walk, WalkSystem | CycleWitness] = {}
    for cand in candidates:
        if cand not in results:
            results[cand] = generate_system(g, h, phi, psi, root, cand)
    valid = [
        (idx, cand, results[cand])
        for idx, cand in enumerate(candidates)
        if isinstance(results[cand], WalkSystem)
    ]
    if valid:
        _, cand, system = min(valid, key=lambda t: (len(t[1]), t[0]))
        return BaseWalkSearch(walk=cand, system=system)

    second = results[candidates[1]]  # the zero-power candidate's witness
    assert isinstance(second, CycleWitness)
    more, cores2 = _candidate_family(phi, psi, second.cycle)
    if more is None:
        return BaseWalkSearch(failure="class-mismatch", cycle=second.cycle, cores=cores2)
    for idx, cand in enumerate(more):
        if cand not in results:
            results[cand] = generate_system(g, h, phi, psi, root, cand)
        if isinstance(results[cand], WalkSystem):
            valid.append((len(candidates) + idx, cand, results[cand]))
    if valid:
        _, cand, system = min(valid, key=lambda t: (len(t[1]), t[0]))
        return BaseWalkSearch(walk=cand, system=system)
    return BaseWalkSearch(failure="no-candidate", cycle=first_cycle)
