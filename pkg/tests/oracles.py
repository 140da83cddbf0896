"""Slow, independent reference implementations used only by the tests.

Nothing here imports the search code under test: groups are plain
multiplication functions and graphs are edge sets.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import Counter


# -- groups -------------------------------------------------------------------


def cyclic_product(moduli):
    """Elements and operation of Z_{m1} x ... x Z_{mk}, in lexicographic order."""
    elems = list(itertools.product(*[range(m) for m in moduli]))

    def mul(a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, moduli))

    return elems, mul


def table_group(table):
    n = len(table)
    return list(range(n)), (lambda a, b: table[a][b])


def endomorphisms(elems, mul, gens):
    """All endomorphisms, found by trying every image tuple for ``gens``.

    Each candidate is extended along words in the generators and then
    checked on every pair, so nothing relies on a presentation.
    """
    identity = elems[0]
    out = []
    for imgs in itertools.product(elems, repeat=len(gens)):
        f = {identity: identity}
        todo = [identity]
        ok = True
        while todo and ok:
            x = todo.pop()
            for s, fs in zip(gens, imgs):
                y, fy = mul(x, s), mul(f[x], fs)
                if y in f:
                    ok = f[y] == fy
                    if not ok:
                        break
                else:
                    f[y] = fy
                    todo.append(y)
        if ok and len(f) == len(elems) and all(
                f[mul(a, b)] == mul(f[a], f[b]) for a in elems for b in elems):
            out.append(f)
    return out


def endo_arcs(elems, mul, gens):
    arcs = set()
    for f in endomorphisms(elems, mul, gens):
        arcs |= {(a, f[a]) for a in elems if f[a] != a}
    return arcs


def element_order(elems, mul, a):
    x, k = a, 1
    while x != elems[0]:
        x, k = mul(x, a), k + 1
    return k


@functools.lru_cache(maxsize=None)
def _parts(n, k):
    if n == 0:
        return 1
    return sum(_parts(n - j, j) for j in range(1, min(n, k) + 1))


def count_partitions(e):
    return _parts(e, e)


def abelian_class_count(n):
    count, m, p = 1, n, 2
    while m > 1:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            count *= count_partitions(e)
        p += 1
    return count


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def phi(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


# -- graphs -------------------------------------------------------------------


def adjacency(n, edges):
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def is_clique(adj, s):
    return all(b in adj[a] for a, b in itertools.combinations(s, 2))


def maximal_cliques(n, edges):
    """Every maximal clique by checking all vertex subsets."""
    adj = adjacency(n, edges)
    cliques = [frozenset(s) for k in range(1, n + 1)
               for s in itertools.combinations(range(n), k) if is_clique(adj, s)]
    cset = set(cliques)
    return {c for c in cliques if not any(c | {v} in cset for v in range(n) if v not in c)}


def girth(n, edges):
    """Shortest cycle length by trying vertex sequences (inf if acyclic)."""
    adj = adjacency(n, edges)
    for k in range(3, n + 1):
        for start in range(n):
            for rest in itertools.permutations([v for v in range(n) if v > start], k - 1):
                cyc = (start,) + rest
                if all(cyc[i + 1] in adj[cyc[i]] for i in range(k - 1)) and start in adj[cyc[-1]]:
                    return k
    return math.inf


def reach(n, arcs):
    """Reflexive-transitive closure as a set of pairs."""
    r = {(v, v) for v in range(n)} | set(arcs)
    for k in range(n):
        for i in range(n):
            if (i, k) in r:
                for j in range(n):
                    if (k, j) in r:
                        r.add((i, j))
    return r


def strongly_connected(n, arcs):
    r = reach(n, arcs)
    return n > 0 and all((i, j) in r for i in range(n) for j in range(n))


def point_basis_size(n, arcs):
    r = reach(n, arcs)
    for k in range(0 if n == 0 else 1, n + 1):
        for s in itertools.combinations(range(n), k):
            if all(any((u, v) in r for u in s) for v in range(n)):
                return k
    return 0


def hamiltonian_digraph(n, arcs):
    if n < 2:
        return False
    a = set(arcs)
    for perm in itertools.permutations(range(1, n)):
        cyc = (0,) + perm
        if all((cyc[i], cyc[(i + 1) % n]) in a for i in range(n)):
            return True
    return False


def isomorphic(n1, arcs1, n2, arcs2, directed):
    if n1 != n2 or len(arcs1) != len(arcs2):
        return False
    norm = (lambda e: e) if directed else (lambda e: frozenset(e))
    target = {norm(e) for e in arcs1}
    for perm in itertools.permutations(range(n2)):
        if {norm((perm[a], perm[b])) for a, b in arcs2} == target:
            return True
    return False


def is_bipartite(n, edges):
    adj = adjacency(n, edges)
    for mask in range(1 << max(n - 1, 0)):
        side = [(mask >> v) & 1 for v in range(n)]
        if all(side[a] != side[b] for a in adj for b in adj[a]):
            return True
    return n == 0


def degree_census(n, edges):
    return Counter(len(s) for s in adjacency(n, edges).values())
