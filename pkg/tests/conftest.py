"""Shared helpers: small hosts, random walks, brute-force counterparts."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from homrecol.families import (
    cycle_graph,
    cycle_with_pendant,
    host_catalogue,
    two_squares_shared,
)
from homrecol.graphs import Graph


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def pendant_c5():
    return cycle_with_pendant(5)


@pytest.fixture
def figure_eight_host():
    return two_squares_shared()


def small_hosts(max_n: int = 10) -> list[Graph]:
    hosts = list(host_catalogue(min(max_n, 6)))
    for n in (7, 8, 10):
        if n <= max_n:
            hosts.append(cycle_graph(n))
    seen, out = set(), []
    for h in hosts:
        key = (h.n, tuple(h.adj))
        if key not in seen:
            seen.add(key)
            out.append(h)
    return out


def random_walk(rng: random.Random, h: Graph, length: int, start: int | None = None):
    """Uniform random walk; loops make staying put a legal step."""
    v = rng.randrange(h.n) if start is None else start
    walk = [v]
    for _ in range(length):
        walk.append(rng.choice(h.adj[walk[-1]]))
    return tuple(walk)


def random_walk_between(rng, h, a, length):
    """Random walk from a, of roughly the requested length (ends wherever)."""
    return random_walk(rng, h, length, start=a)


def brute_has_triangle(g: Graph) -> bool:
    return any(
        g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(a, c)
        for a, b, c in combinations(range(g.n), 3)
    )


def brute_has_square(g: Graph) -> bool:
    for quad in combinations(range(g.n), 4):
        for a, b, c, d in set(
            (quad[0],) + p for p in _perms(quad[1:])
        ):
            if g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(c, d) and g.adjacent(d, a):
                return True
    return False


def _perms(items):
    a, b, c = items
    return [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)]


def simple_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All simple cycles (length >= 3) as closed tuples, each listed once."""
    cycles = []
    for s in range(g.n):
        stack = [(s, (s,))]
        while stack:
            v, path = stack.pop()
            for w in g.adj[v]:
                if w == v or w < s:
                    continue
                if w == s and len(path) >= 3:
                    if path[1] < path[-1]:  # one orientation only
                        cycles.append(path + (s,))
                elif w not in path:
                    stack.append((w, path + (w,)))
    return cycles


def tight_vertices(g: Graph, h: Graph, colours) -> set[int]:
    """Vertices on a tight simple cycle (the shape deadlock extraction emits)."""
    from homrecol.scheduling import is_tight

    out: set[int] = set()
    for cyc in simple_cycles(g):
        if is_tight(g, h, colours, cyc):
            out.update(cyc)
    return out
