"""Exact planarity test by path addition (Demoucron, Malgrange, Pertuiset).

A graph is planar iff each of its biconnected blocks is.  A block is embedded
starting from one cycle; each round collects the fragments of the block
relative to the embedded part, fails if some fragment fits in no face, and
otherwise routes one path of a forced (or any) fragment through a face,
splitting it in two.
"""

from __future__ import annotations

import sys
from collections import deque

from .graphs import SimpleGraph, bits


def is_planar(g: SimpleGraph) -> bool:
    m = g.edge_count
    if m < 9:  # K3,3 has 9 edges, K5 has 10
        return True
    if g.n >= 3 and m > 3 * g.n - 6:
        return False
    for block in biconnected_blocks(g):
        if len(block) >= 9 and not _block_planar(block):
            return False
    return True


def biconnected_blocks(g: SimpleGraph) -> list[list[tuple[int, int]]]:
    """Edge sets of the biconnected components (Hopcroft-Tarjan)."""
    disc = [-1] * g.n
    low = [0] * g.n
    stack: list[tuple[int, int]] = []
    blocks: list[list[tuple[int, int]]] = []
    clock = [0]

    def dfs(u: int, parent: int) -> None:
        disc[u] = low[u] = clock[0]
        clock[0] += 1
        for v in bits(g.adj[u]):
            if disc[v] < 0:
                stack.append((u, v))
                dfs(v, u)
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = stack.pop()
                        block.append(e)
                        if e == (u, v):
                            break
                    blocks.append(block)
            elif v != parent and disc[v] < disc[u]:
                stack.append((u, v))
                low[u] = min(low[u], disc[v])

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * g.n + 100))
    try:
        for s in range(g.n):
            if disc[s] < 0:
                dfs(s, -1)
    finally:
        sys.setrecursionlimit(limit)
    return blocks


def _find_cycle(adj: dict[int, set[int]]) -> list[int]:
    start = min(adj)
    parent = {start: None}
    depth = {start: 0}
    stack = [(start, iter(sorted(adj[start])))]
    while stack:
        u, it = stack[-1]
        for v in it:
            if v not in parent:
                parent[v] = u
                depth[v] = depth[u] + 1
                stack.append((v, iter(sorted(adj[v]))))
                break
            if v != parent[u] and depth[v] < depth[u]:
                cycle = [u]
                while cycle[-1] != v:
                    cycle.append(parent[cycle[-1]])
                return cycle
        else:
            stack.pop()
    raise ValueError("block has no cycle")


def _block_planar(edges: list[tuple[int, int]]) -> bool:
    adj: dict[int, set[int]] = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    nv, ne = len(adj), len(edges)
    if ne > 3 * nv - 6:
        return False

    cycle = _find_cycle(adj)
    placed_v = set(cycle)
    placed_e = {frozenset((cycle[i], cycle[i - 1])) for i in range(len(cycle))}
    faces = [list(cycle), list(cycle)]

    while len(placed_e) < ne:
        fragments = []
        for a, b in edges:
            if a in placed_v and b in placed_v and frozenset((a, b)) not in placed_e:
                fragments.append(({a, b}, None))
        seen: set[int] = set()
        for s in sorted(adj):
            if s in placed_v or s in seen:
                continue
            comp = {s}
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in placed_v and y not in comp:
                        comp.add(y)
                        queue.append(y)
            seen |= comp
            attach = {y for x in comp for y in adj[x] if y in placed_v}
            fragments.append((attach, comp))

        chosen = None
        for attach, comp in fragments:
            fits = [i for i, f in enumerate(faces) if attach <= set(f)]
            if not fits:
                return False
            if chosen is None or (len(fits) == 1 and len(chosen[2]) > 1):
                chosen = (attach, comp, fits)
        attach, comp, fits = chosen
        path = _fragment_path(adj, attach, comp)

        face = faces.pop(fits[0])
        i, j = face.index(path[0]), face.index(path[-1])
        k = len(face)
        walk_ij = [face[(i + t) % k] for t in range((j - i) % k + 1)]
        walk_ji = [face[(j + t) % k] for t in range((i - j) % k + 1)]
        inner = path[1:-1]
        faces.append(walk_ij + inner[::-1])
        faces.append(walk_ji + inner)
        placed_v.update(inner)
        placed_e.update(frozenset((path[t], path[t + 1])) for t in range(len(path) - 1))
    return True


def _fragment_path(adj, attach: set[int], comp: set[int] | None) -> list[int]:
    if comp is None:
        a, b = sorted(attach)
        return [a, b]
    u = min(attach)
    parent = {}
    queue = deque()
    for x in sorted(adj[u] & comp):
        parent[x] = u
        queue.append(x)
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y in comp:
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
            elif y in attach and y != u:
                path = [y, x]
                while path[-1] != u:
                    path.append(parent[path[-1]])
                return path[::-1]
    raise ValueError("fragment has a single attachment; block is not biconnected")
