"""Minimum grounding sets, solved as minimum feedback vertex sets.

A seed set grounds the whole graph exactly when it meets every cycle, so the
search decomposes over strongly connected components.  Components up to
``MgsConfig.exact_limit`` vertices are solved exactly by branch and bound on
bitmasks; larger ones fall back to a greedy heuristic and report a lower
bound from a packing of vertex-disjoint cycles.
"""

from __future__ import annotations

import heapq
import itertools
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from groundkernel.digraph import DefGraph, induced_subgraph, is_acyclic, scc
from groundkernel.errors import TooLarge
from groundkernel.kernel import grounding_kernel
from groundkernel.reachability import is_grounding_set

BRUTE_FORCE_LIMIT = 15
HEURISTICS = ("greedy-degree-product",)


@dataclass(frozen=True)
class MgsConfig:
    exact_limit: int = 25
    heuristic: str = "greedy-degree-product"
    # >1 solves exact components in a process pool; output is identical either way
    workers: int = 1

    def __post_init__(self):
        if self.exact_limit < 1:
            raise ValueError(f"exact_limit must be >= 1, got {self.exact_limit}")
        if self.heuristic not in HEURISTICS:
            raise ValueError(f"unknown heuristic {self.heuristic!r}; choose from {HEURISTICS}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True)
class ComponentChoice:
    vertices: frozenset[str]
    chosen: frozenset[str]
    exact: bool
    lower_bound: int


@dataclass(frozen=True)
class MgsResult:
    chosen: frozenset[str]
    exact: bool
    per_component: tuple[ComponentChoice, ...] = field(default=())
    grounding_number_lower_bound: int = 0

    @property
    def grounding_number_upper_bound(self) -> int:
        return len(self.chosen)


def is_feedback_vertex_set(g: DefGraph, u: Iterable[str]) -> bool:
    u = g.check_vertices(u)
    return is_acyclic(induced_subgraph(g, [v for v in g.vertices if v not in u]))


def brute_force_min_fvs(g: DefGraph) -> set[frozenset[str]]:
    """All minimum feedback vertex sets, by enumerating subsets in order of size."""
    if len(g) > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"brute force is limited to {BRUTE_FORCE_LIMIT} vertices, got {len(g)}")
    for size in range(len(g) + 1):
        found = {
            frozenset(c)
            for c in itertools.combinations(g.vertices, size)
            if is_feedback_vertex_set(g, c)
        }
        if found:
            return found
    raise AssertionError("the full vertex set is always a feedback vertex set")


# -- exact search on bitmask graphs -------------------------------------------


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _MaskGraph:
    """A small digraph with vertex ``i`` = ``names[i]`` and adjacency as int bitmasks."""

    def __init__(self, g: DefGraph):
        self.names = g.vertices
        index = {v: i for i, v in enumerate(self.names)}
        self.succ = [0] * len(self.names)
        self.pred = [0] * len(self.names)
        for u, v in g.iter_arcs():
            self.succ[index[u]] |= 1 << index[v]
            self.pred[index[v]] |= 1 << index[u]
        self.full = (1 << len(self.names)) - 1

    def trim(self, alive: int) -> int:
        """Drop vertices without an in- or out-neighbour inside ``alive`` until stable."""
        changed = True
        while changed:
            changed = False
            for i in _bits(alive):
                if not (self.succ[i] & alive) or not (self.pred[i] & alive):
                    alive &= ~(1 << i)
                    changed = True
        return alive

    def self_loops(self, alive: int) -> int:
        return sum(1 << i for i in _bits(alive) if self.succ[i] >> i & 1)

    def shortest_cycle(self, alive: int) -> list[int] | None:
        best = None
        for s in _bits(alive):
            parent = {s: -1}
            frontier = [s]
            found = None
            while frontier and found is None:
                nxt = []
                for v in frontier:
                    out = self.succ[v] & alive
                    if out >> s & 1:
                        found = v
                        break
                    for w in _bits(out):
                        if w not in parent:
                            parent[w] = v
                            nxt.append(w)
                frontier = nxt
            if found is None:
                continue
            cycle = []
            v = found
            while v != -1:
                cycle.append(v)
                v = parent[v]
            if best is None or len(cycle) < len(best):
                best = cycle[::-1]
                if len(best) <= 2:
                    break
        return best

    def packing_bound(self, alive: int) -> int:
        """Number of vertex-disjoint cycles found greedily, shortest first."""
        count = 0
        alive = self.trim(alive)
        while alive:
            cycle = self.shortest_cycle(alive)
            count += 1
            for i in cycle:
                alive &= ~(1 << i)
            alive = self.trim(alive)
        return count

    def branch(self, alive: int, forbidden: int, bound: int) -> int | None:
        """Smallest FVS of ``alive`` avoiding ``forbidden`` with fewer than ``bound`` vertices."""
        alive = self.trim(alive)
        if not alive:
            return 0 if bound > 0 else None
        if bound <= 1:
            return None
        loops = self.self_loops(alive)
        if loops:
            if loops & forbidden:
                return None
            k = bin(loops).count("1")
            sub = self.branch(alive & ~loops, forbidden, bound - k)
            return None if sub is None else sub | loops
        if self.trim(alive & forbidden):
            return None
        if self.packing_bound(alive) >= bound:
            return None
        cycle = self.shortest_cycle(alive)
        free = [i for i in cycle if not forbidden >> i & 1]
        best = None
        excluded = forbidden
        for i in free:
            sub = self.branch(alive & ~(1 << i), excluded, bound - 1)
            if sub is not None:
                best = sub | (1 << i)
                bound = bin(best).count("1")
            excluded |= 1 << i
        return best


def exact_min_fvs_scc(component: DefGraph, exact_limit: int = 25) -> frozenset[str]:
    """Minimum feedback vertex set by branch and bound; the lexicographically smallest among ties.

    The optimum size comes from branching on a shortest cycle, seeded with the
    greedy solution as incumbent and pruned by a disjoint-cycle packing bound.
    A second pass walks the vertices in token order and keeps each one whose
    inclusion still admits a solution of optimum size.  Written for a single
    strongly connected component but correct on any digraph.
    """
    n = len(component)
    if n > exact_limit:
        raise TooLarge(f"component has {n} vertices, exact_limit is {exact_limit}")
    mg = _MaskGraph(component)
    incumbent = greedy_fvs_scc(component)
    better = mg.branch(mg.full, 0, len(incumbent))
    k = len(incumbent) if better is None else bin(better).count("1")

    chosen = 0
    excluded = 0
    for i in range(n):
        size = bin(chosen).count("1")
        if size == k:
            break
        bit = 1 << i
        if not (mg.trim(mg.full & ~chosen) & bit):
            excluded |= bit
            continue
        if mg.branch(mg.full & ~(chosen | bit), excluded, k - size) is not None:
            chosen |= bit
        else:
            excluded |= bit
    assert not mg.trim(mg.full & ~chosen) and bin(chosen).count("1") == k
    return frozenset(mg.names[i] for i in _bits(chosen))


# -- heuristic ------------------------------------------------------------------


def _trimmed_copy(g: DefGraph):
    pred = {v: set(g.predecessors(v)) for v in g.vertices}
    succ = {v: set(g.successors(v)) for v in g.vertices}
    return pred, succ


def _remove(v, pred, succ, pending):
    for p in pred.pop(v):
        if p != v:
            succ[p].discard(v)
            if not succ[p]:
                pending.append(p)
    for s in succ.pop(v):
        if s != v:
            pred[s].discard(v)
            if not pred[s]:
                pending.append(s)


def _trim(pred, succ, pending, on_remove=None):
    while pending:
        v = pending.pop()
        if v in pred and (not pred[v] or not succ[v]):
            _remove(v, pred, succ, pending)
            if on_remove is not None:
                on_remove(v)


def greedy_fvs_scc(component: DefGraph) -> frozenset[str]:
    """Greedy feedback vertex set.

    Self-loop vertices are taken first since every solution contains them.
    Then, on the part of the graph that can still carry a cycle (vertices
    with both an in- and an out-neighbour, recomputed after every removal),
    the vertex with the largest ``indegree * outdegree`` is taken, smallest
    token first on ties, until nothing is left.
    """
    pred, succ = _trimmed_copy(component)
    chosen = []
    pending = []
    for v in component.vertices:
        if v in pred[v]:
            chosen.append(v)
    for v in chosen:
        _remove(v, pred, succ, pending)
    pending.extend(pred)
    _trim(pred, succ, pending)

    heap = [(-len(pred[v]) * len(succ[v]), v) for v in pred]
    heapq.heapify(heap)
    while pred:
        neg, v = heapq.heappop(heap)
        if v not in pred:
            continue
        score = len(pred[v]) * len(succ[v])
        if -neg != score:
            # scores only decrease, so a stale key is an upper bound
            heapq.heappush(heap, (-score, v))
            continue
        chosen.append(v)
        _remove(v, pred, succ, pending)
        _trim(pred, succ, pending)
    return frozenset(chosen)


def cycle_packing_bound(component: DefGraph) -> int:
    """Lower bound on the FVS size: number of vertex-disjoint cycles found by walking.

    Disjoint 2-cycles are packed first.  After that, and after trimming,
    every live vertex has a live successor, so following
    successors from any vertex must revisit the current walk.  The repeated
    stretch is a cycle; it is deleted, the graph re-trimmed, and the walk
    resumes from what is left of it.
    """
    pred, succ = _trimmed_copy(component)
    pending = list(pred)
    path: list[str] = []
    pos: dict[str, int] = {}

    def cut(v):
        j = pos.get(v)
        if j is not None:
            for w in path[j:]:
                del pos[w]
            del path[j:]

    _trim(pred, succ, pending)
    count = 0
    # 2-cycles first: short cycles make the packing larger
    for u in component.vertices:
        if u not in pred:
            continue
        partner = next((v for v in sorted(succ[u]) if v != u and u in succ[v]), None)
        if partner is not None:
            count += 1
            _remove(u, pred, succ, pending)
            _remove(partner, pred, succ, pending)
            _trim(pred, succ, pending)
    order = component.vertices
    i = 0
    while pred:
        if not path:
            while order[i] not in pred:
                i += 1
            path.append(order[i])
            pos[order[i]] = 0
        w = min(succ[path[-1]])
        if w not in pos:
            pos[w] = len(path)
            path.append(w)
            continue
        count += 1
        cycle = path[pos[w]:]
        cut(w)
        for x in cycle:
            if x in pred:
                _remove(x, pred, succ, pending)
        _trim(pred, succ, pending, on_remove=cut)
    return count


# -- whole graph ----------------------------------------------------------------


def _solve_exact(args):
    sub, limit = args
    return exact_min_fvs_scc(sub, limit)


def minimum_grounding_set(g: DefGraph, cfg: MgsConfig | None = None) -> MgsResult:
    """Union of per-component minimum feedback vertex sets, over the kernel subgraph.

    Components are reported in topological order of the kernel's condensation.
    """
    cfg = cfg or MgsConfig()
    kernel = grounding_kernel(g).kernel
    core = induced_subgraph(g, kernel)
    dec = scc(core)

    slots: list = []
    exact_jobs = []
    for cid in dec.topo_order:
        comp = dec.components[cid]
        if len(comp) == 1:
            (v,) = comp
            picked = comp if core.has_self_loop(v) else frozenset()
            slots.append(ComponentChoice(comp, picked, True, len(picked)))
        elif len(comp) <= cfg.exact_limit:
            slots.append(comp)
            exact_jobs.append((induced_subgraph(core, comp), cfg.exact_limit))
        else:
            sub = induced_subgraph(core, comp)
            picked = greedy_fvs_scc(sub)
            slots.append(ComponentChoice(comp, picked, False, cycle_packing_bound(sub)))

    if cfg.workers > 1 and len(exact_jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            solved = list(pool.map(_solve_exact, exact_jobs, chunksize=8))
    else:
        solved = [_solve_exact(job) for job in exact_jobs]
    solved_iter = iter(solved)
    per_component = []
    for slot in slots:
        if isinstance(slot, ComponentChoice):
            per_component.append(slot)
        else:
            picked = next(solved_iter)
            per_component.append(ComponentChoice(slot, picked, True, len(picked)))

    chosen = frozenset().union(*(c.chosen for c in per_component))
    exact = all(c.exact for c in per_component)
    lower = sum(c.lower_bound for c in per_component)
    assert chosen <= kernel
    assert is_grounding_set(g, chosen)
    return MgsResult(chosen, exact, tuple(per_component), lower)


def grounding_number(g: DefGraph, cfg: MgsConfig | None = None) -> tuple[int, bool]:
    result = minimum_grounding_set(g, cfg)
    return len(result.chosen), result.exact
