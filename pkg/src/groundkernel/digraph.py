"""Definition graphs and their structural algorithms.

An arc ``(u, v)`` means that ``u`` occurs in the definition of ``v``.  Vertices
and adjacency lists are kept in lexicographic token order so that every
traversal, and therefore every output, is reproducible.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

from groundkernel.errors import UnknownWord
from groundkernel.lexicon import Dictionary


class DefGraph:
    """Immutable directed graph over word tokens.

    ``predecessors(v)`` is the in-neighbourhood (the words defining ``v``) and
    ``successors(v)`` the out-neighbourhood (the words ``v`` helps define),
    both as sorted tuples.
    """

    __slots__ = ("vertices", "_pred", "_succ", "__dict__")

    def __init__(self, vertices: Iterable[str], arcs: Iterable[tuple[str, str]]):
        verts = tuple(sorted(set(vertices)))
        pred: dict[str, set] = {v: set() for v in verts}
        succ: dict[str, set] = {v: set() for v in verts}
        for u, v in arcs:
            if u not in pred or v not in pred:
                raise UnknownWord({w for w in (u, v) if w not in pred})
            pred[v].add(u)
            succ[u].add(v)
        self.vertices = verts
        self._pred = {v: tuple(sorted(ns)) for v, ns in pred.items()}
        self._succ = {v: tuple(sorted(ns)) for v, ns in succ.items()}

    @classmethod
    def _from_adjacency(cls, vertices, pred, succ):
        g = cls.__new__(cls)
        g.vertices = vertices
        g._pred = pred
        g._succ = succ
        return g

    @classmethod
    def from_predecessors(cls, pred: Mapping[str, Iterable[str]]) -> "DefGraph":
        """Build from a mapping ``v -> words defining v``; every referenced word becomes a vertex."""
        verts = set(pred)
        for ns in pred.values():
            verts.update(ns)
        return cls(verts, ((u, v) for v, ns in pred.items() for u in ns))

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, word):
        return word in self._pred

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, DefGraph):
            return NotImplemented
        return self.vertices == other.vertices and self._pred == other._pred

    def __hash__(self):
        return hash((self.vertices, tuple(self._pred.items())))

    def __repr__(self):
        return f"DefGraph({len(self.vertices)} vertices, {self.arc_count} arcs)"

    def predecessors(self, v: str) -> tuple[str, ...]:
        return self._pred[v]

    def successors(self, v: str) -> tuple[str, ...]:
        return self._succ[v]

    def indegree(self, v: str) -> int:
        return len(self._pred[v])

    def outdegree(self, v: str) -> int:
        return len(self._succ[v])

    def has_self_loop(self, v: str) -> bool:
        return v in self.in_adjacency[v]

    def has_arc(self, u: str, v: str) -> bool:
        return v in self._pred and u in self.in_adjacency[v]

    @cached_property
    def arc_count(self) -> int:
        return sum(len(ns) for ns in self._pred.values())

    @cached_property
    def in_adjacency(self) -> Mapping[str, frozenset[str]]:
        return {v: frozenset(ns) for v, ns in self._pred.items()}

    @cached_property
    def out_adjacency(self) -> Mapping[str, frozenset[str]]:
        return {v: frozenset(ns) for v, ns in self._succ.items()}

    @property
    def arcs(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.iter_arcs())

    def iter_arcs(self):
        """Yield arcs ordered by tail, then head."""
        for u in self.vertices:
            for v in self._succ[u]:
                yield u, v

    def check_vertices(self, words: Iterable[str]) -> frozenset[str]:
        words = frozenset(words)
        unknown = {w for w in words if w not in self._pred}
        if unknown:
            raise UnknownWord(unknown)
        return words


def build_graph(d: Dictionary) -> DefGraph:
    """Associated graph of ``d``.

    Open words of a non-closed dictionary become vertices without in-arcs.
    """
    verts = tuple(sorted(set(d) | d.open_words))
    pred = {v: () for v in verts}
    succ: dict[str, list] = {v: [] for v in verts}
    for v in verts:
        if v in d:
            ds = tuple(sorted(d[v]))
            pred[v] = ds
            for u in ds:
                succ[u].append(v)
    # heads are appended in sorted order because the outer loop is sorted
    return DefGraph._from_adjacency(verts, pred, {u: tuple(vs) for u, vs in succ.items()})


def induced_subgraph(g: DefGraph, keep: Iterable[str]) -> DefGraph:
    keep = g.check_vertices(keep)
    verts = tuple(sorted(keep))
    pred = {v: tuple(u for u in g.predecessors(v) if u in keep) for v in verts}
    succ = {v: tuple(u for u in g.successors(v) if u in keep) for v in verts}
    return DefGraph._from_adjacency(verts, pred, succ)


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components numbered in a topological order of the condensation.

    Component ``i`` precedes component ``j`` in :attr:`topo_order` whenever an
    arc leads from ``i`` to ``j``.  Ids are assigned in that order, so
    ``topo_order == list(range(len(components)))``.
    """

    component_of: Mapping[str, int]
    components: tuple[frozenset[str], ...]
    topo_order: tuple[int, ...]

    def __len__(self):
        return len(self.components)

    def members(self, cid: int) -> list[str]:
        return sorted(self.components[cid])

    def sizes(self) -> list[int]:
        return [len(c) for c in self.components]


def scc(g: DefGraph) -> SccDecomposition:
    """Tarjan's algorithm with an explicit call stack."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    found: list[frozenset[str]] = []
    counter = 0
    succ = g._succ

    for root in g.vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(succ[root]))]
        while work:
            v, it = work[-1]
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    break
                if w in on_stack and index[w] < low[v]:
                    low[v] = index[w]
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                if low[v] == index[v]:
                    members = []
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        members.append(w)
                        if w == v:
                            break
                    found.append(frozenset(members))

    # Tarjan emits sink components first
    found.reverse()
    component_of = {v: cid for cid, comp in enumerate(found) for v in comp}
    return SccDecomposition(component_of, tuple(found), tuple(range(len(found))))


def is_acyclic(g: DefGraph) -> bool:
    """Kahn's algorithm; a self-loop keeps its vertex's in-degree positive forever."""
    remaining = {v: len(g._pred[v]) for v in g.vertices}
    queue = deque(v for v, n in remaining.items() if n == 0)
    seen = 0
    while queue:
        u = queue.popleft()
        seen += 1
        for v in g._succ[u]:
            remaining[v] -= 1
            if remaining[v] == 0:
                queue.append(v)
    return seen == len(g.vertices)


def is_trivial_component(g: DefGraph, comp: frozenset[str]) -> bool:
    """True for a singleton component without a self-loop, i.e. one that lies on no cycle."""
    if len(comp) != 1:
        return False
    (v,) = comp
    return not g.has_self_loop(v)
