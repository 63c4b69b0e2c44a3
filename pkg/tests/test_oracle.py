import random

import pytest

from conftest import random_walk, small_hosts
from homrecol import _fallback
from homrecol.errors import InvalidInputError
from homrecol.families import cycle_graph, random_graph, random_hom, two_squares_shared
from homrecol.kernels import BFS_BUDGET, BFS_EXHAUSTED, BFS_FOUND
from homrecol.oracle import (
    Answer,
    brute_homotopy,
    hom_graph_bfs,
    hom_graph_path,
    reduce_via_cover,
)
from homrecol.walks import reduce_walk

C5 = cycle_graph(5)


def test_cover_backtrack():
    assert reduce_via_cover(C5, (0, 1, 0)) == (0,)


def test_cover_reduced_walk_is_geodesic():
    assert reduce_via_cover(C5, (0, 1, 2)) == (0, 1, 2)


def test_cover_rejects_non_walk():
    with pytest.raises(InvalidInputError):
        reduce_via_cover(C5, (0, 2))


def test_cover_matches_reduce_on_random_walks():
    rng = random.Random(4)
    for _ in range(400):
        h = rng.choice(small_hosts())
        w = random_walk(rng, h, rng.randrange(0, 50))
        assert reduce_via_cover(h, w) == reduce_walk(w)


def test_brute_homotopy_one_move():
    assert brute_homotopy(C5, (0, 1, 2), (0, 1, 1, 2), max_len=4) is Answer.YES


def test_brute_homotopy_reflexivity():
    assert brute_homotopy(C5, (0, 1, 2, 3), (0, 1, 2, 3), max_len=3) is Answer.YES


def test_brute_homotopy_distinct_routes():
    assert brute_homotopy(C5, (0, 1, 2), (0, 4, 3, 2), max_len=12) is Answer.NO


def test_brute_homotopy_budget():
    big = cycle_graph(10)
    r = brute_homotopy(big, (0, 1, 2), (0, 9, 8, 7, 6, 5, 4, 3, 2), max_len=14, max_states=50)
    assert r is Answer.BUDGET_EXCEEDED


def test_hom_bfs_trivial():
    f = (0, 1, 2, 3, 4)
    assert hom_graph_bfs(C5, C5, f, f) is Answer.YES


def test_hom_bfs_rotation_is_separated():
    assert hom_graph_bfs(C5, C5, (0, 1, 2, 3, 4), (1, 2, 3, 4, 0)) is Answer.NO


def test_hom_bfs_figure_eight_wraps():
    h = two_squares_shared()
    assert hom_graph_bfs(C5, h, (0, 1, 2, 3, 0), (0, 4, 5, 6, 0), max_states=20_000) is Answer.NO


def test_hom_bfs_slack_shift_reachable_within_enumeration():
    # same wrap, slack moved one step: decided exactly inside the full 7^5 space
    h = two_squares_shared()
    phi = (0, 1, 2, 3, 0)
    psi = (0, 0, 1, 2, 3)
    assert hom_graph_bfs(C5, h, phi, psi, max_states=7**5) is Answer.YES
    from homrecol.solver import Instance, solve

    assert solve(Instance(g=C5, h=h, phi=phi, psi=psi)).yes


def test_hom_bfs_budget_is_distinct():
    h = two_squares_shared()
    r = hom_graph_bfs(C5, h, (0, 1, 2, 3, 0), (0, 4, 5, 6, 0), max_states=10)
    assert r is Answer.BUDGET_EXCEEDED


def test_hom_bfs_rejects_non_homomorphism():
    with pytest.raises(InvalidInputError):
        hom_graph_bfs(C5, C5, (0, 2, 3, 4, 0), (0, 1, 2, 3, 4))


def test_hom_path_returns_unit_moves():
    g = cycle_graph(4)
    h = cycle_graph(4)
    phi = (0, 1, 2, 3)
    path = hom_graph_path(g, h, phi, phi)
    assert path == [phi]
    # a reachable pair: wiggle one vertex of a slack wrap
    g13 = cycle_graph(13)
    wrap = tuple(i % 4 if i < 12 else 0 for i in range(13))
    target = tuple(wrap[(i - 1) % 13] for i in range(13))
    path = hom_graph_path(g13, h, wrap, target)
    assert isinstance(path, list) and path[0] == wrap and path[-1] == target
    for a, b in zip(path, path[1:]):
        diff = [v for v in range(13) if a[v] != b[v]]
        assert len(diff) == 1


def _mask_inputs(g, h, phi, psi):
    masks = [0] * h.n
    for v in range(h.n):
        for u in h.adj[v]:
            masks[v] |= 1 << u
    return g.adj, masks, tuple(phi), tuple(psi)


def test_backends_agree_on_random_instances():
    _speedups = pytest.importorskip("homrecol._speedups")

    rng = random.Random(21)
    for _ in range(150):
        h = rng.choice(small_hosts(8))
        g = random_graph(rng, rng.randrange(1, 6), 0.5)
        phi, psi = random_hom(rng, g, h), random_hom(rng, g, h)
        args = _mask_inputs(g, h, phi, psi)
        cap = rng.choice([3, 20, 10**6])
        assert _speedups.hom_bfs(*args, cap) == _fallback.hom_bfs(*args, cap)


def test_backends_agree_on_wide_hosts():
    # hosts beyond 16 vertices switch the state packing from nibbles to bytes
    _speedups = pytest.importorskip("homrecol._speedups")

    rng = random.Random(23)
    h = cycle_graph(20)
    for _ in range(60):
        g = random_graph(rng, rng.randrange(1, 5), 0.6)
        phi, psi = random_hom(rng, g, h), random_hom(rng, g, h)
        args = _mask_inputs(g, h, phi, psi)
        cap = rng.choice([5, 500, 10**6])
        assert _speedups.hom_bfs(*args, cap) == _fallback.hom_bfs(*args, cap)
    # a folded square slides all the way around, crossing byte values > 15
    g = cycle_graph(4)
    phi = (0, 1, 2, 1)
    psi = (16, 17, 18, 17)
    args = _mask_inputs(g, h, phi, psi)
    assert _speedups.hom_bfs(*args, 10**6) == BFS_FOUND
    assert _fallback.hom_bfs(*args, 10**6) == BFS_FOUND
    assert hom_graph_bfs(g, h, phi, psi) is Answer.YES


def test_backends_agree_on_reduction():
    _speedups = pytest.importorskip("homrecol._speedups")

    rng = random.Random(22)
    for _ in range(300):
        h = rng.choice(small_hosts())
        w = random_walk(rng, h, rng.randrange(0, 60))
        assert _speedups.reduce_sequence(w) == _fallback.reduce_sequence(w)


def test_fallback_codes():
    # exhausted vs found vs budget on a 2-vertex looped edge host
    h = cycle_graph(4)
    g = cycle_graph(4)
    args = _mask_inputs(g, h, (0, 1, 2, 3), (1, 2, 3, 0))
    assert _fallback.hom_bfs(*args, 10**6) == BFS_EXHAUSTED
    args = _mask_inputs(g, h, (0, 1, 2, 3), (0, 1, 2, 3))
    assert _fallback.hom_bfs(*args, 10**6) == BFS_FOUND
    g13 = cycle_graph(13)
    wrap = tuple(i % 4 if i < 12 else 0 for i in range(13))
    target = tuple(wrap[(i - 1) % 13] for i in range(13))
    args = _mask_inputs(g13, h, wrap, target)
    assert _fallback.hom_bfs(*args, 5) == BFS_BUDGET
