"""Top-level decision procedure.

Per component: find a topologically valid base walk (else NO), generate its
system and schedule it.  A deadlock yields a tight cycle; a colour mismatch
between the two maps on that cycle is a frozen-vertex obstruction, otherwise
the constant walk at a cycle vertex is the only possible base walk and the
procedure retries once from it — a second failure is definitive.

Girth-5 hosts admit arbitrary instance graphs: isolated vertices are
recoloured up front and all loops are added; the transformed reflexive
instance has the same answer.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import InternalError, InvalidInputError
from .graphs import Graph, connected_components, is_homomorphism, shortest_walk, validate_host
from .scheduling import TightWalkWitness, is_tight, schedule
from .systems import CycleWitness, find_valid_base_walk, generate_system
from .walks import Walk, free_decomposition, reduce_walk, shift_match

Move = tuple[int, int]

REFLEXIVE = "reflexive"
GIRTH5 = "girth5"

NO_VALID_WALK = "no-valid-walk"
CLASS_MISMATCH = "free-class-mismatch"
FROZEN_MISMATCH = "frozen-mismatch"
UNREALIZABLE = "unrealizable"


@dataclass(frozen=True)
class Instance:
    g: Graph
    h: Graph
    phi: tuple[int, ...]
    psi: tuple[int, ...]
    mode: str = REFLEXIVE


@dataclass(frozen=True)
class Obstruction:
    kind: str
    cycle: Walk
    vertex: int | None = None
    cores: tuple[Walk, Walk] | None = None


@dataclass(frozen=True)
class Verdict:
    answer: str  # "yes" | "no"
    moves: list[Move] | None = None
    obstruction: Obstruction | None = None

    @property
    def yes(self) -> bool:
        return self.answer == "yes"


class WitnessCheck(NamedTuple):
    ok: bool
    index: int | None  # first violating move, when not ok


def validate_instance(inst: Instance) -> None:
    """Check the structural hypotheses for the instance's mode."""
    if inst.mode not in (REFLEXIVE, GIRTH5):
        raise InvalidInputError(f"unknown mode {inst.mode!r}")
    if len(inst.phi) != inst.g.n or len(inst.psi) != inst.g.n:
        raise InvalidInputError("maps must assign every vertex a colour")
    if not is_homomorphism(inst.g, inst.h, inst.phi):
        raise InvalidInputError("phi is not a homomorphism")
    if not is_homomorphism(inst.g, inst.h, inst.psi):
        raise InvalidInputError("psi is not a homomorphism")
    report = validate_host(inst.h)
    if not report.is_reflexive:
        raise InvalidInputError("host must be reflexive")
    if inst.mode == REFLEXIVE:
        if not report.is_triangle_free:
            raise InvalidInputError("host must be triangle-free in reflexive mode")
        if not inst.g.is_reflexive():
            raise InvalidInputError("instance graph must be reflexive in reflexive mode")
    else:
        if not report.girth_at_least_5:
            raise InvalidInputError("host must have girth at least 5 in girth5 mode")


def preprocess_girth5(inst: Instance) -> tuple[Instance, list[Move], Obstruction | None]:
    """Recolour isolated vertices directly, then add all loops.

    Looped isolated vertices walk through the host (their two colours must
    share a component); loopless ones jump.  The reflexive instance returned
    has the same answer as the original.
    """
    if inst.mode != GIRTH5:
        raise InvalidInputError("preprocessing applies to girth5 mode")
    prefix: list[Move] = []
    phi = list(inst.phi)
    for v in range(inst.g.n):
        if any(u != v for u in inst.g.adj[v]):
            continue  # not isolated
        if phi[v] == inst.psi[v]:
            continue
        if v in inst.g.loops:
            walk = shortest_walk(inst.h, phi[v], inst.psi[v])
            if walk is None:
                return inst, [], Obstruction(kind=NO_VALID_WALK, cycle=(v,))
            prefix.extend((v, c) for c in walk[1:])
        else:
            prefix.append((v, inst.psi[v]))
        phi[v] = inst.psi[v]
    reflexive = Instance(
        g=inst.g.with_all_loops(), h=inst.h, phi=tuple(phi), psi=inst.psi, mode=REFLEXIVE
    )
    return reflexive, prefix, None


def _solve_component(
    g: Graph, h: Graph, phi: Sequence[int], psi: Sequence[int], comp: Sequence[int]
) -> tuple[list[Move] | None, Obstruction | None]:
    root = comp[0]
    search = find_valid_base_walk(g, h, phi, psi, root)
    if not search.found:
        if search.failure == "class-mismatch":
            return None, Obstruction(kind=CLASS_MISMATCH, cycle=search.cycle, cores=search.cores)
        return None, Obstruction(kind=NO_VALID_WALK, cycle=search.cycle)

    outcome = schedule(g, h, search.system)
    if isinstance(outcome, list):
        return outcome, None

    obstruction = _deadlock_obstruction(g, h, phi, psi, outcome)
    if obstruction is not None:
        return None, obstruction

    # Every cycle colour agrees, so a realizable system must be constant on the
    # cycle; the system generated from the constant walk is the only candidate.
    retry_root = min(outcome.cycle)
    unrealizable = Obstruction(kind=UNREALIZABLE, cycle=outcome.cycle, vertex=retry_root)
    retry = generate_system(g, h, phi, psi, retry_root, (phi[retry_root],))
    if isinstance(retry, CycleWitness):
        return None, unrealizable
    outcome2 = schedule(g, h, retry)
    if isinstance(outcome2, list):
        return outcome2, None
    obstruction = _deadlock_obstruction(g, h, phi, psi, outcome2)
    if obstruction is not None:
        return None, obstruction
    return None, unrealizable


def _deadlock_obstruction(
    g: Graph, h: Graph, phi: Sequence[int], psi: Sequence[int], witness: TightWalkWitness
) -> Obstruction | None:
    """Frozen-vertex obstruction from a deadlock, or None if the maps agree.

    Tightness pins the cycle's colours across the whole component of the
    homomorphism graph, so the frozen images must equal the original map's.
    """
    if witness.images != tuple(phi[x] for x in witness.cycle):
        raise InternalError("deadlock images drifted from the starting map")
    if not is_tight(g, h, phi, witness.cycle):
        raise InternalError("deadlock cycle not tight under the starting map")
    for v in sorted(set(witness.cycle)):
        if phi[v] != psi[v]:
            return Obstruction(kind=FROZEN_MISMATCH, cycle=witness.cycle, vertex=v)
    return None


def solve(inst: Instance, threads: int = 1) -> Verdict:
    """Decide the instance and return a verified witness or a typed obstruction."""
    validate_instance(inst)
    prefix: list[Move] = []
    work = inst
    if inst.mode == GIRTH5:
        work, prefix, early = preprocess_girth5(inst)
        if early is not None:
            return Verdict(answer="no", obstruction=early)

    comps = connected_components(work.g)

    def run(comp):
        return _solve_component(work.g, work.h, work.phi, work.psi, comp)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, comps))
    else:
        results = [run(comp) for comp in comps]

    moves = list(prefix)
    for comp_moves, obstruction in results:
        if obstruction is not None:
            return Verdict(answer="no", obstruction=obstruction)
        moves.extend(comp_moves)

    check = verify_witness(inst, moves)
    if not check.ok:
        raise InternalError(f"emitted witness fails to replay at move {check.index}")
    return Verdict(answer="yes", moves=moves)


def verify_witness(inst: Instance, moves: Sequence[Move]) -> WitnessCheck:
    """Replay moves from phi: one vertex per step, loop rule respected,
    homomorphism maintained, psi reached."""
    g, h = inst.g, inst.h
    cur = list(inst.phi)
    hs = h.adj_sets
    for i, move in enumerate(moves):
        if len(move) != 2:
            return WitnessCheck(False, i)
        v, c = move
        if not (0 <= v < g.n and 0 <= c < h.n) or c == cur[v]:
            return WitnessCheck(False, i)
        if v in g.loops and c not in hs[cur[v]]:
            return WitnessCheck(False, i)
        # the move keeps a homomorphism iff all of v's edges stay edges
        for u in g.adj[v]:
            if u != v and c not in hs[cur[u]]:
                return WitnessCheck(False, i)
        cur[v] = c
    if tuple(cur) != inst.psi:
        return WitnessCheck(False, len(moves))
    return WitnessCheck(True, None)


def recheck_obstruction(inst: Instance, obstruction: Obstruction) -> bool:
    """Independently re-verify a NO certificate against the instance."""
    work = inst
    if inst.mode == GIRTH5:
        if len(obstruction.cycle) == 1:
            v = obstruction.cycle[0]
            return shortest_walk(inst.h, inst.phi[v], inst.psi[v]) is None
        work, _, early = preprocess_girth5(inst)
        if early is not None:
            return early.kind == obstruction.kind and early.cycle == obstruction.cycle
    g, h, phi, psi = work.g, work.h, work.phi, work.psi

    cycle = obstruction.cycle
    if len(cycle) > 1:
        if cycle[0] != cycle[-1]:
            return False
        for a, b in zip(cycle, cycle[1:]):
            if b not in g.adj_sets[a]:
                return False

    if obstruction.kind == CLASS_MISMATCH:
        da = free_decomposition(reduce_walk(tuple(phi[x] for x in cycle)))
        db = free_decomposition(reduce_walk(tuple(psi[x] for x in cycle)))
        if (da.core, db.core) != obstruction.cores:
            return False
        if da.contractible != db.contractible:
            return True
        if da.contractible:
            return False
        return shift_match(da.core, db.core) is None

    if obstruction.kind == FROZEN_MISMATCH:
        v = obstruction.vertex
        return (
            v is not None
            and v in set(cycle)
            and phi[v] != psi[v]
            and is_tight(g, h, phi, cycle)
        )

    if obstruction.kind == UNREALIZABLE:
        v = obstruction.vertex
        if v is None or v not in set(cycle):
            return False
        if not is_tight(g, h, phi, cycle):
            return False
        if any(phi[x] != psi[x] for x in cycle):
            return False
        # v is frozen, so the constant walk is the only admissible base walk;
        # the obstruction claims the system it generates (if any) deadlocks.
        retry = generate_system(g, h, phi, psi, v, (phi[v],))
        if isinstance(retry, CycleWitness):
            return True
        return isinstance(schedule(g, h, retry), TightWalkWitness)

    if obstruction.kind == NO_VALID_WALK:
        if len(cycle) == 1:
            return shortest_walk(h, phi[cycle[0]], psi[cycle[0]]) is None
        root = min(_component_of(g, cycle[0]))
        return not find_valid_base_walk(g, h, phi, psi, root).found

    return False


def _component_of(g: Graph, v: int) -> tuple[int, ...]:
    for comp in connected_components(g):
        if v in comp:
            return comp
    raise InternalError("vertex outside every component")
