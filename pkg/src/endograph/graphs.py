"""Directed and undirected simple graphs on at most a few hundred vertices.

Adjacency is stored as one int bitmask per vertex.  ``labels`` carry the
group element each vertex came from and survive vertex deletion.
"""

from __future__ import annotations

import json
import math
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

INF = math.inf
ISO_CAP = 32
HAMILTON_CAP = 32
CLIQUE_LIMIT = 10 ** 5


class GraphSizeError(ValueError):
    """Graph too large for an exact exponential-time search."""


class CliqueOverflow(RuntimeError):
    """More maximal cliques than the configured limit."""


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _labels(n: int, labels) -> tuple[int, ...]:
    if labels is None:
        return tuple(range(n))
    labels = tuple(int(x) for x in labels)
    if len(labels) != n:
        raise ValueError("one label per vertex required")
    return labels


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[int, ...]

    directed = False

    def __post_init__(self):
        for v, m in enumerate(self.adj):
            if m >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in bits(m):
                if not self.adj[u] >> v & 1:
                    raise ValueError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> "SimpleGraph":
        adj = [0] * n
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(n, tuple(adj), _labels(n, labels))

    @classmethod
    def from_matrix(cls, matrix, labels=None) -> "SimpleGraph":
        """Undirected graph with an edge wherever either direction is set."""
        n = len(matrix)
        edges = [(a, b) for a in range(n) for b in range(n)
                 if a != b and (matrix[a][b] or matrix[b][a])]
        return cls.from_edges(n, edges, labels)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)), tuple(range(n)))

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in bits(self.adj[a] >> (a + 1) << (a + 1))]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def label_edges(self) -> set[frozenset[int]]:
        return {frozenset((self.labels[a], self.labels[b])) for a, b in self.edges()}


@dataclass(frozen=True)
class Digraph:
    n: int
    out: tuple[int, ...]
    labels: tuple[int, ...]

    directed = True

    def __post_init__(self):
        inn = [0] * self.n
        for v, m in enumerate(self.out):
            if m >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in bits(m):
                inn[u] |= 1 << v
        object.__setattr__(self, "inn", tuple(inn))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]], labels=None) -> "Digraph":
        out = [0] * n
        for a, b in arcs:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            out[a] |= 1 << b
        return cls(n, tuple(out), _labels(n, labels))

    @classmethod
    def from_matrix(cls, matrix, labels=None) -> "Digraph":
        n = len(matrix)
        return cls.from_arcs(n, [(a, b) for a in range(n) for b in range(n)
                                 if a != b and matrix[a][b]], labels)

    @classmethod
    def complete(cls, n: int) -> "Digraph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)), tuple(range(n)))

    def has_arc(self, a: int, b: int) -> bool:
        return bool(self.out[a] >> b & 1)

    def successors(self, v: int) -> list[int]:
        return list(bits(self.out[v]))

    def predecessors(self, v: int) -> list[int]:
        return list(bits(self.inn[v]))

    def arcs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in bits(self.out[a])]

    @property
    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self.out)

    def label_arcs(self) -> set[tuple[int, int]]:
        return {(self.labels[a], self.labels[b]) for a, b in self.arcs()}


Graph = SimpleGraph | Digraph


def underlying_simple_graph(d: Digraph) -> SimpleGraph:
    adj = [d.out[v] | d.inn[v] for v in range(d.n)]
    return SimpleGraph(d.n, tuple(adj), d.labels)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Induced subgraph without ``v``; surviving vertices keep their labels."""
    if not 0 <= v < g.n:
        raise IndexError(v)
    keep = [u for u in range(g.n) if u != v]
    pos = {u: i for i, u in enumerate(keep)}
    labels = tuple(g.labels[u] for u in keep)
    if g.directed:
        return Digraph.from_arcs(g.n - 1, [(pos[a], pos[b]) for a, b in g.arcs()
                                           if v not in (a, b)], labels)
    return SimpleGraph.from_edges(g.n - 1, [(pos[a], pos[b]) for a, b in g.edges()
                                            if v not in (a, b)], labels)


# -- undirected properties ----------------------------------------------------


def girth(g: SimpleGraph) -> float:
    """Length of a shortest cycle, ``INF`` for forests."""
    best = INF
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for v in bits(g.adj[u]):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def components(g: SimpleGraph) -> list[list[int]]:
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp, frontier = 1 << s, 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(bits(comp)))
    return out


def is_connected(g: SimpleGraph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_bipartite(g: SimpleGraph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in bits(g.adj[u]):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def is_tree(g: SimpleGraph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g)


def is_complete(g: SimpleGraph) -> bool:
    full = (1 << g.n) - 1
    return all(m == full & ~(1 << v) for v, m in enumerate(g.adj))


def maximal_cliques(g: SimpleGraph, limit: int = CLIQUE_LIMIT) -> list[tuple[int, ...]]:
    """All maximal cliques (Bron-Kerbosch with Tomita pivoting), sorted."""
    adj = g.adj
    out: list[tuple[int, ...]] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            if len(out) >= limit:
                raise CliqueOverflow(f"more than {limit} maximal cliques")
            out.append(tuple(bits(r)))
            return
        pivot = max(bits(p | x), key=lambda u: (p & adj[u]).bit_count())
        for v in bits(p & ~adj[pivot]):
            expand(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    return sorted(out)


# -- directed properties ------------------------------------------------------


def strongly_connected_components(d: Digraph) -> list[tuple[int, ...]]:
    """Tarjan's algorithm (iterative); components sorted by smallest vertex."""
    index = [-1] * d.n
    low = [0] * d.n
    on_stack = [False] * d.n
    stack: list[int] = []
    comps = []
    counter = 0
    for root in range(d.n):
        if index[root] >= 0:
            continue
        work = [(root, iter(d.successors(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(d.successors(w))))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(tuple(sorted(comp)))
    return sorted(comps)


def condensation(d: Digraph) -> tuple[Digraph, list[tuple[int, ...]]]:
    """Acyclic quotient by SCCs; node ``i`` is ``comps[i]``."""
    comps = strongly_connected_components(d)
    which = [0] * d.n
    for i, comp in enumerate(comps):
        for v in comp:
            which[v] = i
    arcs = {(which[a], which[b]) for a, b in d.arcs() if which[a] != which[b]}
    return Digraph.from_arcs(len(comps), sorted(arcs)), comps


def minimum_point_basis(d: Digraph) -> list[int]:
    """Smallest vertex of each source component of the condensation."""
    cond, comps = condensation(d)
    return sorted(min(comps[i]) for i in range(cond.n) if cond.inn[i] == 0)


def has_single_point_basis(d: Digraph) -> bool:
    return len(minimum_point_basis(d)) == 1


def reachable_from(d: Digraph, sources: Iterable[int]) -> int:
    seen = 0
    for s in sources:
        seen |= 1 << s
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= d.out[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_strongly_connected(d: Digraph) -> bool:
    return d.n > 0 and len(strongly_connected_components(d)) == 1


def is_complete_digraph(d: Digraph) -> bool:
    full = (1 << d.n) - 1
    return all(m == full & ~(1 << v) for v, m in enumerate(d.out))


def has_hamiltonian_cycle(d: Digraph, cap: int = HAMILTON_CAP) -> bool:
    """Backtracking from vertex 0; fewer than two vertices never qualify."""
    n = d.n
    if n > cap:
        raise GraphSizeError(f"Hamiltonicity search capped at {cap} vertices")
    if n < 2 or any(m == 0 for m in d.out) or any(m == 0 for m in d.inn):
        return False
    out = d.out

    def closes(cur: int, left: int) -> bool:
        # every unvisited vertex reachable from cur through unvisited ones,
        # and some unvisited vertex leads back to 0
        seen, frontier = 0, out[cur] & left
        while frontier:
            seen |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= out[v]
            frontier = nxt & left & ~seen
        return seen == left and bool(d.inn[0] & left)

    def extend(cur: int, left: int) -> bool:
        if not left:
            return bool(out[cur] & 1)
        if not closes(cur, left):
            return False
        for v in bits(out[cur] & left):
            if extend(v, left & ~(1 << v)):
                return True
        return False

    return extend(0, ((1 << n) - 1) & ~1)


# -- isomorphism --------------------------------------------------------------


def _refine(outs: list[tuple[int, ...]], inns: list[tuple[int, ...]]) -> list[list[int]] | None:
    """Joint colour refinement of several graphs; ``None`` if histograms diverge."""
    colors = [[(o[v].bit_count(), i[v].bit_count()) for v in range(len(o))]
              for o, i in zip(outs, inns)]
    classes = -1
    while True:
        names = {c: k for k, c in enumerate(sorted({c for cs in colors for c in cs}))}
        colors = [[names[c] for c in cs] for cs in colors]
        hist = [Counter(cs) for cs in colors]
        if any(h != hist[0] for h in hist):
            return None
        if len(names) == classes:
            return colors
        classes = len(names)
        colors = [[(cs[v], tuple(sorted(cs[u] for u in bits(o[v]))),
                    tuple(sorted(cs[u] for u in bits(i[v])))) for v in range(len(o))]
                  for cs, o, i in zip(colors, outs, inns)]


def _find_iso(out1, in1, out2, in2, cap: int) -> list[int] | None:
    n = len(out1)
    if n != len(out2):
        return None
    if n > cap:
        raise GraphSizeError(f"isomorphism search capped at {cap} vertices")
    if sum(m.bit_count() for m in out1) != sum(m.bit_count() for m in out2):
        return None
    colors = _refine([out1, out2], [in1, in2])
    if colors is None:
        return None
    c1, c2 = colors
    size = Counter(c1)
    order = sorted(range(n), key=lambda v: (size[c1[v]], v))
    mapping = [-1] * n
    used = [False] * n

    def place(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or c2[w] != c1[v]:
                continue
            ok = True
            for u in order[:k]:
                mu = mapping[u]
                if (out1[u] >> v & 1) != (out2[mu] >> w & 1) or (out1[v] >> u & 1) != (out2[w] >> mu & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if place(k + 1):
                    return True
                used[w] = False
        mapping[v] = -1
        return False

    return mapping if place(0) else None


def graph_isomorphism(g1: SimpleGraph, g2: SimpleGraph, cap: int = ISO_CAP) -> list[int] | None:
    return _find_iso(g1.adj, g1.adj, g2.adj, g2.adj, cap)


def digraph_isomorphism(d1: Digraph, d2: Digraph, cap: int = ISO_CAP) -> list[int] | None:
    return _find_iso(d1.out, d1.inn, d2.out, d2.inn, cap)


def graphs_isomorphic(g1: SimpleGraph, g2: SimpleGraph, cap: int = ISO_CAP) -> bool:
    return graph_isomorphism(g1, g2, cap) is not None


def digraphs_isomorphic(d1: Digraph, d2: Digraph, cap: int = ISO_CAP) -> bool:
    return digraph_isomorphism(d1, d2, cap) is not None


# -- export / import ----------------------------------------------------------


def to_dot(g: Graph) -> str:
    kind, sep = ("digraph", "->") if g.directed else ("graph", "--")
    lines = [f"{kind} {{"]
    lines += [f"  {lab};" for lab in g.labels]
    pairs = g.arcs() if g.directed else g.edges()
    lines += [f"  {g.labels[a]} {sep} {g.labels[b]};" for a, b in pairs]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_obj(g: Graph) -> dict:
    pairs = g.arcs() if g.directed else g.edges()
    return {"vertices": g.n, "directed": g.directed,
            "arcs": [[a, b] for a, b in pairs], "labels": list(g.labels)}


def to_json(g: Graph) -> str:
    return json.dumps(to_json_obj(g))


def from_json(data) -> Graph:
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    n = int(data["vertices"])
    arcs = [tuple(p) for p in data["arcs"]]
    labels = data.get("labels")
    if data["directed"]:
        return Digraph.from_arcs(n, arcs, labels)
    return SimpleGraph.from_edges(n, arcs, labels)


from .planarity import is_planar  # noqa: E402  (re-export)
