"""The learning operator and its fixpoint.

One application of the operator adds every word whose definers are all
known.  The relaxed variant only asks for ``r`` percent of them.  Closures
are computed layer by layer so that ``step_of[w]`` is exactly the number of
operator applications after which ``w`` is first known.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral

from groundkernel.digraph import DefGraph
from groundkernel.errors import InvalidPercent


@dataclass(frozen=True)
class ReachabilityResult:
    reached: frozenset[str]
    step_of: Mapping[str, int]
    fixpoint_step: int

    def layers(self) -> list[list[str]]:
        """Words grouped by the step at which they were learned."""
        out: list[list[str]] = [[] for _ in range(self.fixpoint_step + 1)]
        for w, k in self.step_of.items():
            out[k].append(w)
        return [sorted(layer) for layer in out]


def _check_percent(r) -> int:
    if isinstance(r, bool) or not isinstance(r, Integral) or not 0 <= r <= 100:
        raise InvalidPercent(f"r must be an integer percentage in 0..100, got {r!r}")
    return int(r)


def _needed(indegree: int, r: int) -> int:
    # least c with 100*c >= r*indegree
    return -(-r * indegree // 100)


def relaxed_reach_step(g: DefGraph, u: Iterable[str], r: int) -> frozenset[str]:
    """``U`` plus every vertex with at least ``r`` percent of its in-neighbours in ``U``."""
    r = _check_percent(r)
    known = g.check_vertices(u)
    added = set()
    for v in g.vertices:
        if v in known:
            continue
        preds = g.predecessors(v)
        hits = sum(1 for p in preds if p in known)
        if 100 * hits >= r * len(preds):
            added.add(v)
    return known | added


def reach_step(g: DefGraph, u: Iterable[str]) -> frozenset[str]:
    """One application of the strict operator: ``U`` plus every ``v`` with ``N^-(v)`` inside ``U``."""
    return relaxed_reach_step(g, u, 100)


def relaxed_reachable_set(g: DefGraph, u: Iterable[str], r: int) -> ReachabilityResult:
    """Closure of ``U`` under the relaxed operator, in O(|V| + |E|).

    Each vertex keeps a count of known in-neighbours.  Only the words learned
    in the previous layer are propagated, so a vertex whose count reaches its
    threshold while layer ``k - 1`` is processed is learned at step ``k``.
    """
    r = _check_percent(r)
    seeds = g.check_vertices(u)
    step_of: dict[str, int] = {w: 0 for w in sorted(seeds)}
    needed = {v: _needed(len(g.predecessors(v)), r) for v in g.vertices if v not in step_of}
    count = dict.fromkeys(needed, 0)

    layer = sorted(seeds)
    upcoming = [v for v, c in needed.items() if c == 0]
    step = 0
    while layer or upcoming:
        for w in layer:
            for v in g.successors(w):
                if v in step_of:
                    continue
                count[v] += 1
                if count[v] == needed[v]:
                    upcoming.append(v)
        if not upcoming:
            break
        step += 1
        layer = upcoming
        upcoming = []
        for v in layer:
            step_of[v] = step
    return ReachabilityResult(frozenset(step_of), step_of, step)


def reachable_set(g: DefGraph, u: Iterable[str]) -> ReachabilityResult:
    return relaxed_reachable_set(g, u, 100)


def is_grounding_set(g: DefGraph, u: Iterable[str]) -> bool:
    return len(reachable_set(g, u).reached) == len(g.vertices)


def coverage_fraction(g: DefGraph, u: Iterable[str], r: int = 100) -> Fraction:
    """Share of the vertices reached from ``U`` under the ``r`` percent rule.

    An empty graph is fully covered by definition.
    """
    reached = relaxed_reachable_set(g, u, r).reached
    if not g.vertices:
        return Fraction(1)
    return Fraction(len(reached), len(g.vertices))
