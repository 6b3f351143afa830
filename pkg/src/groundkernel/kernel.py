"""Grounding kernel by iterated removal of unused words, and word levels."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from groundkernel.digraph import DefGraph
from groundkernel.reachability import reachable_set


@dataclass(frozen=True)
class KernelResult:
    kernel: frozenset[str]
    removal_rounds: tuple[frozenset[str], ...]
    level_of: Mapping[str, int]

    def levels(self) -> dict[int, list[str]]:
        grouped: dict[int, list[str]] = {}
        for w, k in self.level_of.items():
            grouped.setdefault(k, []).append(w)
        return {k: sorted(grouped[k]) for k in sorted(grouped)}

    @property
    def max_level(self) -> int:
        return max(self.level_of.values(), default=0)


def grounding_kernel(g: DefGraph) -> KernelResult:
    """Peel vertices of out-degree zero, round by round, until none is left to peel.

    The survivors form the kernel.  Word levels are the step indices of the
    closure of the kernel; with an empty kernel that is the closure of the
    empty set.
    """
    outdeg = {v: g.outdegree(v) for v in g.vertices}
    current = [v for v in g.vertices if outdeg[v] == 0]
    removed: set[str] = set()
    rounds = []
    while current:
        rounds.append(frozenset(current))
        removed.update(current)
        following = []
        for w in current:
            for p in g.predecessors(w):
                if p in removed:
                    continue
                outdeg[p] -= 1
                if outdeg[p] == 0:
                    following.append(p)
        current = following
    kernel = frozenset(v for v in g.vertices if v not in removed)
    closure = reachable_set(g, kernel)
    # every cycle survives peeling, so the kernel always grounds the graph
    assert len(closure.reached) == len(g.vertices)
    return KernelResult(kernel, tuple(rounds), closure.step_of)


def word_levels(g: DefGraph) -> dict[str, int]:
    return dict(grounding_kernel(g).level_of)
