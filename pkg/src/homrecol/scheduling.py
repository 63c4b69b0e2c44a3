"""Executes a topologically valid walk system as single-vertex moves.

Each vertex walks along its assigned walk; a vertex may advance when its next
colour is adjacent to every neighbour's current colour.  If no unfinished
vertex can advance, following "waits for" arcs from any unfinished vertex
closes a cycle whose current images form a cyclically reduced closed walk —
the tight-cycle certificate that the system is unrealizable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import InternalError, InvalidInputError
from .graphs import Graph
from .systems import WalkSystem
from .walks import Walk


def is_tight(g: Graph, h: Graph, colours, cycle: Walk) -> bool:
    """True iff the cycle's image under colours is cyclically reduced and nonempty.

    colours may be a full map (sequence) or a mapping defined on the cycle.
    Vertices of a tight cycle are frozen: no reconfiguration step may ever
    change them.
    """
    if cycle[0] != cycle[-1]:
        raise InvalidInputError("tightness is for closed walks")
    for a, b in zip(cycle, cycle[1:]):
        if b not in g.adj_sets[a]:
            raise InvalidInputError(f"cycle step {a} -> {b} is not an edge")
    body = tuple(colours[x] for x in cycle[:-1])
    m = len(body)
    if m == 0:
        return False
    return all(
        body[i] != body[(i + 1) % m] and body[i] != body[(i + 2) % m] for i in range(m)
    )


@dataclass(frozen=True)
class TightWalkWitness:
    cycle: Walk  # closed vertex sequence in the instance graph
    images: Walk  # the colours the cycle was frozen at (aligned with cycle)


class ScheduleState:
    """Per-vertex walk suffixes; the current colours always form a homomorphism."""

    def __init__(self, g: Graph, h: Graph, system: WalkSystem):
        self.g = g
        self.h = h
        self.walks = system.walks
        self.pos = {v: 0 for v in system.walks}
        self.moves: list[tuple[int, int]] = []

    def current(self, v: int) -> int:
        return self.walks[v][self.pos[v]]

    def next_colour(self, v: int) -> int | None:
        w, p = self.walks[v], self.pos[v]
        return w[p + 1] if p + 1 < len(w) else None

    def finished(self, v: int) -> bool:
        return self.pos[v] + 1 == len(self.walks[v])

    def movable(self, u: int) -> bool:
        nxt = self.next_colour(u)
        if nxt is None:
            raise InternalError("movable is for unfinished vertices")
        hs = self.h.adj_sets
        # u's own loop appears in its adjacency, covering the move rule
        return all(nxt in hs[self.current(x)] for x in self.g.adj[u])

    def blocking_arcs(self) -> list[tuple[int, int]]:
        """Arcs u -> v ("u waits for v"): v's next is u's current and v's
        current clashes with u's next.  Only unfinished vertices carry arcs."""
        arcs = []
        hs = self.h.adj_sets
        for u in sorted(self.walks):
            if self.finished(u):
                continue
            for v in self.g.adj[u]:
                if v == u or self.finished(v):
                    continue
                if self.walks[v][self.pos[v] + 1] == self.current(u) and self.next_colour(
                    u
                ) not in hs[self.current(v)]:
                    arcs.append((u, v))
        return arcs

    def move(self, u: int) -> None:
        self.pos[u] += 1
        self.moves.append((u, self.current(u)))


def schedule(
    g: Graph, h: Graph, system: WalkSystem, order: Sequence[int] | None = None
) -> list[tuple[int, int]] | TightWalkWitness:
    """Run the system to completion or extract a tight-cycle witness.

    Vertices are tried from a FIFO work list (seeded in ascending id order,
    or in the given order); moving a vertex re-queues its unfinished
    neighbours.  A drained queue with unfinished vertices is a deadlock.
    """
    state = ScheduleState(g, h, system)
    seed = sorted(system.walks) if order is None else list(order)
    queue = deque(v for v in seed if not state.finished(v))
    queued = set(queue)
    while queue:
        u = queue.popleft()
        queued.discard(u)
        if state.finished(u):
            continue
        if not state.movable(u):
            continue  # re-queued when a neighbour moves
        state.move(u)
        for x in (u, *g.adj[u]):
            if x not in queued and not state.finished(x):
                queue.append(x)
                queued.add(x)

    unfinished = sorted(v for v in system.walks if not state.finished(v))
    if not unfinished:
        return state.moves
    return _extract_tight_cycle(state, unfinished[0])


def _extract_tight_cycle(state: ScheduleState, start: int) -> TightWalkWitness:
    """Follow lowest-id blocking arcs until a vertex repeats."""
    g, hs = state.g, state.h.adj_sets

    def out_arc(u: int) -> int:
        cur_u = state.current(u)
        nxt_u = state.next_colour(u)
        for v in g.adj[u]:
            if v == u or state.finished(v):
                continue
            if state.walks[v][state.pos[v] + 1] == cur_u and nxt_u not in hs[state.current(v)]:
                return v
        raise InternalError("deadlocked vertex without a blocking arc (system not staggered)")

    chain = [start]
    seen_at = {start: 0}
    while True:
        v = out_arc(chain[-1])
        if v in seen_at:
            cycle = tuple(chain[seen_at[v] :]) + (v,)
            break
        seen_at[v] = len(chain)
        chain.append(v)

    images = tuple(state.current(x) for x in cycle)
    witness = TightWalkWitness(cycle=cycle, images=images)
    if not is_tight(state.g, state.h, {x: state.current(x) for x in cycle}, cycle):
        raise InternalError("deadlock cycle is not tight (system not staggered)")
    return witness
