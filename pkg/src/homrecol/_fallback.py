"""Pure-Python kernels. Mirrors homrecol._speedups move for move.

Both backends must visit states in the same order so that budget-limited
results agree bit for bit.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

BACKEND = "pure"

BFS_FOUND = 1
BFS_EXHAUSTED = 0
BFS_BUDGET = -1


def reduce_sequence(seq: Sequence[int]) -> tuple[int, ...]:
    """Collapse a walk to its unique reduced form with one stack pass.

    Removes immediate repeats (x, x) and backtracks (x, y, x); the stack is
    reduced after every push, so each input vertex costs O(1) amortized.
    """
    out: list[int] = []
    push = out.append
    for x in seq:
        push(x)
        m = len(out)
        if m >= 2 and out[-2] == x:
            out.pop()
        elif m >= 3 and out[-3] == x:
            del out[-2:]
    return tuple(out)


def hom_bfs(
    g_adj: Sequence[Sequence[int]],
    h_masks: Sequence[int],
    start: Sequence[int],
    target: Sequence[int],
    max_states: int,
) -> int:
    """BFS over single-vertex recolouring moves; exact within the state budget.

    g_adj lists each vertex's neighbours (a looped vertex lists itself, which
    encodes the move rule "stay adjacent to your own old colour").  h_masks[c]
    is the closed-neighbourhood bitmask of colour c in the host, so the legal
    new colours for vertex v are the AND of its neighbours' masks.

    Returns BFS_FOUND / BFS_EXHAUSTED / BFS_BUDGET.  The budget counts visited
    states; exceeding it means the component did not fit, never "no".
    """
    n = len(start)
    bits = 4 if len(h_masks) <= 16 else 8
    colour_mask = (1 << bits) - 1

    def pack(cols: Sequence[int]) -> int:
        s = 0
        for v in range(n - 1, -1, -1):
            s = (s << bits) | cols[v]
        return s

    s0 = pack(start)
    t0 = pack(target)
    if s0 == t0:
        return BFS_FOUND

    full = (1 << len(h_masks)) - 1
    visited = {s0}
    queue = deque([s0])
    while queue:
        state = queue.popleft()
        cols = [(state >> (bits * v)) & colour_mask for v in range(n)]
        for v in range(n):
            allowed = full
            for u in g_adj[v]:
                allowed &= h_masks[cols[u]]
            allowed &= ~(1 << cols[v])
            base = state & ~(colour_mask << (bits * v))
            while allowed:
                c = (allowed & -allowed).bit_length() - 1
                allowed &= allowed - 1
                nxt = base | (c << (bits * v))
                if nxt not in visited:
                    if nxt == t0:
                        return BFS_FOUND
                    if len(visited) >= max_states:
                        return BFS_BUDGET
                    visited.add(nxt)
                    queue.append(nxt)
    return BFS_EXHAUSTED
